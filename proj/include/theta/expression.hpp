#ifndef THETA_EXPRESSION_HPP
#define THETA_EXPRESSION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "theta/characteristic.hpp"
#include "theta/engine.hpp"
#include "theta/phase.hpp"

namespace theta {

/// Signals monomials of unequal homogeneity weight in one expression; every
/// correctly derived theta-derivative expression has weight 3 throughout.
class InhomogeneousExpression : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct ThetaFactor {
    Characteristic chi; // canonical in normal form
    int exponent = 0;

    friend bool operator==(const ThetaFactor& a, const ThetaFactor& b) {
        return a.exponent == b.exponent && a.chi == b.chi;
    }
};

/// scalar * e^{2 pi i r} * pi^pi_power * theta'[1/2;1/2]^dtheta_half_power *
/// prod theta[chi_i]^{k_i}, all coefficients exact.
struct ThetaMonomial {
    Rational scalar{1};
    Phase phase{};
    int pi_power = 0;
    int dtheta_half_power = 0;
    std::vector<ThetaFactor> factors;

    bool is_zero() const { return scalar.is_zero(); }
    /// sum of factor exponents + 3 * dtheta_half_power
    int weight() const;

    void mul(const Rational& s) { scalar *= s; }
    void mul(const Phase& p) { phase *= p; }
    /// Multiplies by theta[chi]^exponent for an arbitrary rational chi: the
    /// characteristic is reduced to canonical form and the TCRel phase folded
    /// into the coefficient.
    void mul_theta(const Characteristic& chi, int exponent);
    ThetaMonomial& operator*=(const ThetaMonomial& o);

    Complex evaluate(const ThetaEngine& engine, const TauPoint& tau) const;
};

/// A symbolic expression for theta'[target](0, tau) as a sum of monomials in
/// theta constants (against the defining numeric contract theta_d1).
struct ThetaExpression {
    Characteristic target;
    bool jacobi_applied = false;
    std::vector<ThetaMonomial> monomials;

    bool is_zero() const { return monomials.empty(); }
};

/// Normal form: every factor replaced by its mirror normal-form
/// representative, factors merged and sorted, coefficient folded so the phase
/// lies in [0, 1/2), like monomials collected, vanishing monomials dropped.
/// Two equal expressions normalize to identical structure.
ThetaMonomial normalize(const ThetaMonomial& m);
ThetaExpression normalize(const ThetaExpression& e);

Complex evaluate(const ThetaExpression& e, const ThetaEngine& engine, const TauPoint& tau);

/// Common homogeneity weight of all monomials; 3 by convention for the zero
/// expression. Throws InhomogeneousExpression on disagreement.
int homogeneity_degree(const ThetaExpression& e);

/// Substitutes theta'[1/2;1/2] = -pi theta[0;0] theta[1/2;0] theta[0;1/2];
/// the result carries dtheta_half_power = 0 everywhere.
ThetaExpression apply_jacobi(const ThetaExpression& e);

/// Structural equality of normal forms: equal target, and term-for-term equal
/// (scalar, phase, pi power, theta'-power, factor multiset).
bool equivalent(const ThetaExpression& a, const ThetaExpression& b);

std::string render_text(const ThetaMonomial& m);
std::string render_text(const ThetaExpression& e);
std::string render_latex(const ThetaExpression& e);

} // namespace theta

#endif
