#include "theta/solver.hpp"

namespace theta {

namespace {

const Rational kHalf(1, 2);

bool known_zero_derivative(const Characteristic& c) {
    // even theta functions: characteristics congruent to [0;0], [0;1/2], [1/2;0]
    Rational ep = c.eps_prime.frac(), e = c.eps.frac();
    bool ep_half_int = ep.is_zero() || ep == kHalf;
    bool e_half_int = e.is_zero() || e == kHalf;
    return ep_half_int && e_half_int && !(ep == kHalf && e == kHalf);
}

// rhs of the per-equation form divided by e^{..} theta^2[c]:
//   3 theta[Tc] theta'[c] - theta'[Tc] theta[c] = b(c)
ThetaMonomial divided_rhs(const Characteristic& canonical) {
    FundamentalIdentity id = fundamental_identity(canonical);
    ThetaMonomial b = id.rhs;
    // coeff_d_chi = 3 ph1 theta^2[c] theta[Tc]: strip the 3 theta^2[c] theta[Tc]
    // and move ph1 to the right-hand side.
    b.mul(id.coeff_d_chi.phase.inverse());
    b.mul_theta(canonical, -2);
    return b;
}

} // namespace

FundamentalIdentity fundamental_identity(const Characteristic& c) {
    FundamentalIdentity id;
    id.chi = reduce(c).canonical;
    const Rational& ep = id.chi.eps_prime;
    const Rational& e = id.chi.eps;

    Characteristic tripled{Rational(3) * ep, Rational(3) * e};
    ReducedCharacteristic red3 = reduce(tripled);
    id.chi_tripled = red3.canonical;

    id.coeff_d_chi.scalar = Rational(3);
    id.coeff_d_chi.mul(red3.phase);
    id.coeff_d_chi.mul_theta(id.chi, 2);
    id.coeff_d_chi.mul_theta(id.chi_tripled, 1);

    id.coeff_d_chi3.scalar = Rational(-1);
    id.coeff_d_chi3.mul(red3.phase);
    id.coeff_d_chi3.mul_theta(id.chi, 3);

    id.rhs.dtheta_half_power = 1;
    id.rhs.mul(Phase::of(Rational(3) * ep)); // e^{6 pi i eps'}
    id.rhs.mul_theta({kHalf - Rational(2) * ep, kHalf - Rational(2) * e}, 3);
    return id;
}

std::vector<std::vector<Complex>> DerivSystem::matrix(const ThetaEngine& engine,
                                                      const TauPoint& tau) const {
    std::size_t t = period();
    std::vector<Complex> a(t);
    for (std::size_t k = 0; k < t; ++k) a[k] = engine.theta_const(chars[k], tau);
    std::vector<std::vector<Complex>> A(t, std::vector<Complex>(t, Complex(0.0)));
    for (std::size_t k = 0; k < t; ++k) {
        A[k][k] += 3.0 * a[(k + 1) % t];
        A[k][(k + 1) % t] -= a[k];
    }
    return A;
}

std::vector<Complex> DerivSystem::rhs_values(const ThetaEngine& engine, const TauPoint& tau) const {
    std::vector<Complex> out(period());
    for (std::size_t k = 0; k < period(); ++k) out[k] = b[k].evaluate(engine, tau);
    return out;
}

DerivSystem build_system(const CharacteristicChain& chain) {
    DerivSystem sys;
    sys.chars = chain.core();
    for (const auto& c : sys.chars)
        if (is_singular(c))
            throw DegenerateIdentity("system over the core of " + sys.chars.front().str() +
                                     " is degenerate: theta[1/2;1/2] vanishes");
    for (const auto& c : sys.chars) sys.b.push_back(divided_rhs(c));
    return sys;
}

namespace {

// Cramer solution for the single unknown x_k = theta'[chars[k]].
ThetaExpression closed_form_expression(const DerivSystem& sys, std::size_t k) {
    std::size_t t = sys.period();
    ThetaExpression e;
    e.target = sys.chars[k];
    if (t == 1) {
        // single equation (3 - 1) a_0 x_0 = b_0
        ThetaMonomial m = sys.b[0];
        m.mul(Rational(1, 2));
        m.mul_theta(sys.chars[0], -1);
        e.monomials.push_back(std::move(m));
        return normalize(e);
    }
    Rational det_scalar = Rational(1) / Rational(pow3(static_cast<unsigned>(t)) - 1);
    for (std::size_t j = k; j < k + t; ++j) {
        std::size_t jm = j % t;
        ThetaMonomial m = sys.b[jm];
        m.mul(Rational(pow3(static_cast<unsigned>(t - 1 + k - j))));
        m.mul(det_scalar);
        m.mul_theta(sys.chars[k], 1);
        for (std::size_t l = 0; l < t; ++l) {
            m.mul_theta(sys.chars[l], -1);
            if (l != jm && l != (j + 1) % t) m.mul_theta(sys.chars[l], 1);
        }
        e.monomials.push_back(std::move(m));
    }
    return normalize(e);
}

} // namespace

std::vector<ThetaExpression> solve_closed_form(const DerivSystem& sys) {
    std::vector<ThetaExpression> out;
    for (std::size_t k = 0; k < sys.period(); ++k) out.push_back(closed_form_expression(sys, k));
    return out;
}

ThetaExpression solve_chain(const Characteristic& input, const SolveOptions& opts) {
    ReducedCharacteristic red = reduce(input);
    const Characteristic& c0 = red.canonical;
    if (is_singular(c0))
        throw DegenerateIdentity("theta'[" + input.str() +
                                 "] is not reachable from the tripling identity; "
                                 "it is given by the Jacobi identity instead");

    auto finish = [&](ThetaExpression e) {
        // theta'[input] = phase * theta'[canonical]
        for (auto& m : e.monomials) m.mul(red.phase);
        e.target = input;
        if (opts.jacobi) e = apply_jacobi(e);
        return normalize(e);
    };

    if (known_zero_derivative(c0)) return finish(ThetaExpression{c0, false, {}});

    CharacteristicChain chain = char_chain(c0);
    if (chain.period > opts.max_period)
        throw PeriodTooLarge("orbit period " + std::to_string(chain.period) +
                             " exceeds the cap of " + std::to_string(opts.max_period));
    for (std::size_t k = 1; k < chain.chain.size(); ++k)
        if (is_singular(chain.chain[k]))
            throw DegenerateIdentity("theta'[" + input.str() + "] cannot be obtained: the chain reaches " +
                                     chain.chain[k].str() + " and the coefficient theta[1/2;1/2] vanishes");

    // only the expression at the core seed chain[preperiod] is ever needed:
    // with preperiod 0 it is the target itself, otherwise back-substitution
    // starts there
    ThetaExpression cur;
    if (chain.endpoint == ChainEndpoint::stationary) {
        cur = ThetaExpression{chain.chain.back(), false, {}};
    } else {
        cur = closed_form_expression(build_system(chain), 0);
    }
    // back-substitution: theta'[c_k] = (b_k + theta[c_k] theta'[c_{k+1}]) / (3 theta[c_{k+1}])
    for (std::size_t k = chain.preperiod; k-- > 0;) {
        const Characteristic& here = chain.chain[k];
        const Characteristic& next = chain.chain[k + 1];
        ThetaExpression e;
        e.target = here;
        ThetaMonomial lead = divided_rhs(here);
        lead.mul(Rational(1, 3));
        lead.mul_theta(next, -1);
        e.monomials.push_back(std::move(lead));
        for (ThetaMonomial m : cur.monomials) {
            m.mul_theta(here, 1);
            m.mul(Rational(1, 3));
            m.mul_theta(next, -1);
            e.monomials.push_back(std::move(m));
        }
        cur = normalize(e);
    }
    return finish(std::move(cur));
}

} // namespace theta
