#include "theta/expression.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace theta {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Complex cpow(Complex base, int k) {
    if (k < 0) return 1.0 / cpow(base, -k);
    Complex r = 1.0;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

const Characteristic& singular_char() {
    static const Characteristic c{Rational(1, 2), Rational(1, 2)};
    return c;
}

bool factor_less(const ThetaFactor& a, const ThetaFactor& b) {
    if (a.chi != b.chi) return a.chi < b.chi;
    return a.exponent < b.exponent;
}

// total order on monomials for deterministic output; scalar excluded so that
// collectable terms compare equal
int mono_key_cmp(const ThetaMonomial& a, const ThetaMonomial& b) {
    if (a.dtheta_half_power != b.dtheta_half_power)
        return a.dtheta_half_power < b.dtheta_half_power ? -1 : 1;
    if (a.pi_power != b.pi_power) return a.pi_power < b.pi_power ? -1 : 1;
    if (a.factors.size() != b.factors.size())
        return a.factors.size() < b.factors.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (a.factors[i].chi != b.factors[i].chi)
            return a.factors[i].chi < b.factors[i].chi ? -1 : 1;
        if (a.factors[i].exponent != b.factors[i].exponent)
            return a.factors[i].exponent < b.factors[i].exponent ? -1 : 1;
    }
    if (a.phase != b.phase) return a.phase.r() < b.phase.r() ? -1 : 1;
    return 0;
}

} // namespace

int ThetaMonomial::weight() const {
    int w = 3 * dtheta_half_power;
    for (const auto& f : factors) w += f.exponent;
    return w;
}

void ThetaMonomial::mul_theta(const Characteristic& chi, int exponent) {
    if (exponent == 0) return;
    ReducedCharacteristic red = reduce(chi);
    phase *= red.phase.pow(exponent);
    factors.push_back({red.canonical, exponent});
}

ThetaMonomial& ThetaMonomial::operator*=(const ThetaMonomial& o) {
    scalar *= o.scalar;
    phase *= o.phase;
    pi_power += o.pi_power;
    dtheta_half_power += o.dtheta_half_power;
    factors.insert(factors.end(), o.factors.begin(), o.factors.end());
    return *this;
}

Complex ThetaMonomial::evaluate(const ThetaEngine& engine, const TauPoint& tau) const {
    Complex v = scalar.to_double() * phase.value() * cpow(Complex(kPi), pi_power);
    if (dtheta_half_power > 0) v *= cpow(engine.dtheta_half(tau), dtheta_half_power);
    for (const auto& f : factors) v *= cpow(engine.theta_const(f.chi, tau), f.exponent);
    return v;
}

ThetaMonomial normalize(const ThetaMonomial& m) {
    ThetaMonomial out;
    out.scalar = m.scalar;
    out.phase = m.phase;
    out.pi_power = m.pi_power;
    out.dtheta_half_power = m.dtheta_half_power;
    if (out.scalar.is_zero()) return out;

    std::map<Characteristic, int> merged;
    for (const auto& f : m.factors) {
        ReducedCharacteristic can = reduce(f.chi);
        out.phase *= can.phase.pow(f.exponent);
        ReducedCharacteristic rep = mirror_normal_form(can.canonical);
        out.phase *= rep.phase.pow(f.exponent);
        merged[rep.canonical] += f.exponent;
    }
    for (const auto& [chi, exp] : merged) {
        if (exp == 0) continue;
        if (chi == singular_char()) {
            if (exp < 0)
                throw std::domain_error("ThetaMonomial: division by the vanishing theta constant [1/2;1/2]");
            out.scalar = Rational(0); // a positive power of theta[1/2;1/2] kills the term
            out.factors.clear();
            return out;
        }
        out.factors.push_back({chi, exp});
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    if (out.phase.r() >= Rational(1, 2)) {
        out.phase = Phase::of(out.phase.r() - Rational(1, 2));
        out.scalar = -out.scalar;
    }
    return out;
}

ThetaExpression normalize(const ThetaExpression& e) {
    ThetaExpression out;
    out.target = e.target;
    out.jacobi_applied = e.jacobi_applied;
    std::vector<ThetaMonomial> ms;
    for (const auto& m : e.monomials) {
        ThetaMonomial n = normalize(m);
        if (!n.is_zero()) ms.push_back(std::move(n));
    }
    std::sort(ms.begin(), ms.end(),
              [](const ThetaMonomial& a, const ThetaMonomial& b) { return mono_key_cmp(a, b) < 0; });
    for (auto& m : ms) {
        if (!out.monomials.empty() && mono_key_cmp(out.monomials.back(), m) == 0) {
            out.monomials.back().scalar += m.scalar;
            if (out.monomials.back().scalar.is_zero()) out.monomials.pop_back();
        } else {
            out.monomials.push_back(std::move(m));
        }
    }
    return out;
}

Complex evaluate(const ThetaExpression& e, const ThetaEngine& engine, const TauPoint& tau) {
    Complex v = 0.0;
    for (const auto& m : e.monomials) v += m.evaluate(engine, tau);
    return v;
}

int homogeneity_degree(const ThetaExpression& e) {
    if (e.monomials.empty()) return 3;
    int w = e.monomials.front().weight();
    for (const auto& m : e.monomials)
        if (m.weight() != w)
            throw InhomogeneousExpression("theta expression for " + e.target.str() +
                                          " has monomials of unequal weight");
    return w;
}

ThetaExpression apply_jacobi(const ThetaExpression& e) {
    Rational zero(0), half(1, 2);
    ThetaExpression out;
    out.target = e.target;
    out.jacobi_applied = true;
    for (ThetaMonomial m : e.monomials) {
        int d = m.dtheta_half_power;
        if (d > 0) {
            if (d % 2 == 1) m.scalar = -m.scalar;
            m.pi_power += d;
            m.mul_theta({zero, zero}, d);
            m.mul_theta({half, zero}, d);
            m.mul_theta({zero, half}, d);
            m.dtheta_half_power = 0;
        }
        out.monomials.push_back(std::move(m));
    }
    return normalize(out);
}

bool equivalent(const ThetaExpression& a, const ThetaExpression& b) {
    ThetaExpression na = normalize(a), nb = normalize(b);
    if (!(na.target == nb.target)) return false;
    if (na.monomials.size() != nb.monomials.size()) return false;
    for (std::size_t i = 0; i < na.monomials.size(); ++i) {
        const auto& x = na.monomials[i];
        const auto& y = nb.monomials[i];
        if (mono_key_cmp(x, y) != 0 || x.scalar != y.scalar) return false;
    }
    return true;
}

namespace {

std::string chi_text(const Characteristic& c) {
    return "[" + c.eps_prime.str() + ";" + c.eps.str() + "]";
}

void coeff_text(std::ostringstream& os, const ThetaMonomial& m) {
    os << m.scalar.str();
    if (!m.phase.is_one()) os << "*e(" << m.phase.r().str() << ")";
    if (m.pi_power == 1)
        os << "*pi";
    else if (m.pi_power != 0)
        os << "*pi^" << m.pi_power;
}

} // namespace

std::string render_text(const ThetaMonomial& m) {
    std::ostringstream os;
    coeff_text(os, m);
    if (m.dtheta_half_power == 1)
        os << "*th'[1/2;1/2]";
    else if (m.dtheta_half_power > 1)
        os << "*th'^" << m.dtheta_half_power << "[1/2;1/2]";
    for (const auto& f : m.factors) {
        os << "*th";
        if (f.exponent != 1) os << "^" << f.exponent;
        os << chi_text(f.chi);
    }
    return os.str();
}

std::string render_text(const ThetaExpression& e) {
    std::ostringstream os;
    os << "th'" << chi_text(e.target) << " = ";
    if (e.monomials.empty()) {
        os << "0";
        return os.str();
    }
    for (std::size_t i = 0; i < e.monomials.size(); ++i) {
        if (i) os << "  +  ";
        os << render_text(e.monomials[i]);
    }
    return os.str();
}

namespace {

std::string chi_latex(const Characteristic& c) {
    return "\\big[{}^{" + c.eps_prime.str() + "}_{" + c.eps.str() + "}\\big]";
}

std::string rational_latex(const Rational& q) {
    if (q.is_integer()) return q.num().str();
    std::string sign = q.num() < 0 ? "-" : "";
    BigInt n = q.num() < 0 ? BigInt(-q.num()) : q.num();
    return sign + "\\frac{" + n.str() + "}{" + q.den().str() + "}";
}

} // namespace

std::string render_latex(const ThetaExpression& e) {
    std::ostringstream os;
    os << "\\theta'" << chi_latex(e.target) << " = ";
    if (e.monomials.empty()) {
        os << "0";
        return os.str();
    }
    bool first = true;
    for (const auto& m : e.monomials) {
        Rational s = m.scalar;
        if (!first) os << (s >= Rational(0) ? " + " : " ");
        first = false;
        os << rational_latex(s) << "\\,";
        if (!m.phase.is_one()) os << "\\mathrm{e}^{2\\pi\\imath\\cdot " << m.phase.r().str() << "}\\,";
        if (m.pi_power == 1)
            os << "\\pi\\,";
        else if (m.pi_power != 0)
            os << "\\pi^{" << m.pi_power << "}\\,";
        if (m.dtheta_half_power == 1)
            os << "\\theta'\\big[{}^{1/2}_{1/2}\\big]\\,";
        else if (m.dtheta_half_power > 1)
            os << "\\theta'^{" << m.dtheta_half_power << "}\\big[{}^{1/2}_{1/2}\\big]\\,";
        for (const auto& f : m.factors) {
            os << "\\theta";
            if (f.exponent != 1) os << "^{" << f.exponent << "}";
            os << chi_latex(f.chi);
        }
    }
    return os.str();
}

} // namespace theta
