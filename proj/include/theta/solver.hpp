#ifndef THETA_SOLVER_HPP
#define THETA_SOLVER_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "theta/expression.hpp"
#include "theta/orbit.hpp"

namespace theta {

/// The tripling identity cannot be solved for the requested derivative: the
/// coefficient 3 theta[T c] multiplying it vanishes because T c is congruent
/// to [1/2; 1/2].
class DegenerateIdentity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Orbit period exceeds the configured cap.
class PeriodTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The fundamental identity at a canonical characteristic c:
///
///   coeff_d_chi * theta'[chi] + coeff_d_chi3 * theta'[chi_tripled] = rhs
///
/// with all characteristics canonically reduced and every reduction phase
/// folded into the coefficients.
struct FundamentalIdentity {
    Characteristic chi;         // canonical input
    Characteristic chi_tripled; // canonical componentwise triple
    ThetaMonomial coeff_d_chi;  // 3 e^{..} theta^2[chi] theta[chi_tripled]
    ThetaMonomial coeff_d_chi3; // -e^{..} theta^3[chi]
    ThetaMonomial rhs;          // e^{..} theta'[1/2;1/2] theta^3[1/2-2eps'; 1/2-2eps]
};

/// Builds the identity for an arbitrary rational characteristic (canonicalized
/// first). Valid for every characteristic; degenerate cases are the caller's
/// concern.
FundamentalIdentity fundamental_identity(const Characteristic& c);

/// The linear system over a periodic core S = {c_0, ..., c_{t-1}}, one
/// equation per k:
///
///   3 a_{k+1} x_k - a_k x_{k+1} = b_k,   a_k = theta[c_k], x_k = theta'[c_k]
///
/// with indices mod t, so det A = (3^t - 1) prod a_k.
struct DerivSystem {
    std::vector<Characteristic> chars; // core in cycle order
    std::vector<ThetaMonomial> b;      // exact symbolic right-hand sides

    std::size_t period() const { return chars.size(); }

    /// Dense numeric instantiation of A (for determinant / elimination checks).
    std::vector<std::vector<Complex>> matrix(const ThetaEngine& engine, const TauPoint& tau) const;
    std::vector<Complex> rhs_values(const ThetaEngine& engine, const TauPoint& tau) const;
};

/// Throws DegenerateIdentity if the core contains the singular characteristic.
DerivSystem build_system(const CharacteristicChain& chain);

/// Cramer closed form: one expression per core characteristic, normalized,
/// each satisfying the numeric contract against theta_d1.
std::vector<ThetaExpression> solve_closed_form(const DerivSystem& sys);

struct SolveOptions {
    bool jacobi = false;          // substitute theta'[1/2;1/2] away
    std::size_t max_period = 64;  // refuse longer orbit cores
};

/// Full pipeline for an arbitrary rational characteristic: build the chain,
/// resolve the endpoint (known-zero stationary derivative or periodic-core
/// closed form), then back-substitute along the pre-periodic tail. Throws
/// DegenerateIdentity when the chain runs through [1/2; 1/2] and
/// PeriodTooLarge when the core period exceeds the cap.
ThetaExpression solve_chain(const Characteristic& c, const SolveOptions& opts = {});

} // namespace theta

#endif
