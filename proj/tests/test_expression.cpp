#include <doctest.h>

#include "theta/expression.hpp"
#include "theta/json_io.hpp"
#include "theta/verification.hpp"

using theta::Characteristic;
using theta::Phase;
using theta::Rational;
using theta::ThetaExpression;
using theta::ThetaMonomial;

namespace {
Rational q(long long n, long long d) { return Rational(n, d); }
Characteristic ch(long long a, long long b, long long c, long long d) {
    return {q(a, b), q(c, d)};
}

ThetaMonomial random_monomial(theta::Rng& rng) {
    ThetaMonomial m;
    m.scalar = q(rng.range(-6, 6), rng.range(1, 6));
    if (m.scalar.is_zero()) m.scalar = Rational(1);
    m.phase = Phase::of(rng.rational(12));
    m.pi_power = static_cast<int>(rng.range(0, 2));
    m.dtheta_half_power = static_cast<int>(rng.range(0, 1));
    int nfac = static_cast<int>(rng.range(1, 4));
    for (int i = 0; i < nfac; ++i) {
        Characteristic c{q(rng.range(-12, 12), rng.range(1, 8)), q(rng.range(-12, 12), rng.range(1, 8))};
        if (theta::is_singular(c)) continue;
        m.mul_theta(c, static_cast<int>(rng.range(-3, 3)));
    }
    return m;
}
} // namespace

TEST_CASE("mul_theta folds reduction phases") {
    ThetaMonomial m;
    m.mul_theta(ch(2, 5, 9, 5), 1); // theta[2/5;9/5] = e^{2 pi i 2/5} theta[2/5;4/5]
    CHECK(m.factors.size() == 1);
    CHECK(m.factors[0].chi == ch(2, 5, 4, 5));
    CHECK(m.phase.r() == q(2, 5));
}

TEST_CASE("normalization merges mirror-equivalent factors") {
    // theta[4/5;3/5] and theta[1/5;2/5] are the same constant up to e^{-2 pi i/5}
    ThetaMonomial a;
    a.mul_theta(ch(4, 5, 3, 5), 1);
    ThetaMonomial b;
    b.mul_theta(ch(1, 5, 2, 5), 1);
    ThetaMonomial na = normalize(a), nb = normalize(b);
    CHECK(na.factors == nb.factors);
    // a = e^{2 pi i 4/5} b, comparing the full coefficients
    auto coeff = [](const ThetaMonomial& m) { return m.scalar.to_double() * m.phase.value(); };
    CHECK(std::abs(coeff(na) / coeff(nb) - Phase::of(q(4, 5)).value()) < 1e-15);

    // exponents of a mirror pair cancel against each other
    ThetaMonomial c;
    c.mul_theta(ch(4, 5, 3, 5), 2);
    c.mul_theta(ch(1, 5, 2, 5), -2);
    ThetaMonomial nc = normalize(c);
    CHECK(nc.factors.empty());
    CHECK(std::abs(coeff(nc) - Phase::of(q(3, 5)).value()) < 1e-15);
}

TEST_CASE("normalization kills monomials with a positive singular power") {
    ThetaMonomial m;
    m.mul_theta(ch(1, 2, 1, 2), 3);
    m.mul_theta(ch(0, 1, 1, 2), 1);
    CHECK(normalize(m).is_zero());

    ThetaMonomial bad;
    bad.mul_theta(ch(1, 2, 1, 2), -1);
    CHECK_THROWS_AS(normalize(bad), std::domain_error);
}

TEST_CASE("coefficient canonical form keeps the phase in [0,1/2)") {
    ThetaMonomial m;
    m.scalar = q(3, 10);
    m.phase = Phase::of(q(7, 10)); // e^{2 pi i 7/10} = -e^{2 pi i 1/5}
    ThetaMonomial n = normalize(m);
    CHECK(n.scalar == q(-3, 10));
    CHECK(n.phase.r() == q(1, 5));
}

TEST_CASE("like terms collect, including antiparallel phases") {
    ThetaExpression e;
    ThetaMonomial m1;
    m1.scalar = Rational(27);
    m1.phase = Phase::of(q(9, 10)); // 27 e^{2 pi i 9/10}
    m1.mul_theta(ch(1, 10, 7, 10), 3);
    ThetaMonomial m2 = m1;
    m2.scalar = Rational(1);
    m2.phase = Phase::of(q(2, 5)); // e^{2 pi i 2/5} = -e^{2 pi i 9/10}
    e.monomials = {m1, m2};
    ThetaExpression n = normalize(e);
    REQUIRE(n.monomials.size() == 1);
    CHECK(n.monomials[0].scalar == Rational(-26)); // -27 + 1 on the folded branch
    CHECK(n.monomials[0].phase.r() == q(2, 5));

    // exact cancellation produces the zero expression
    m2.scalar = Rational(-27);
    m2.phase = m1.phase;
    e.monomials = {m1, m2};
    CHECK(normalize(e).is_zero());
}

TEST_CASE("normalization is idempotent and evaluation-invariant") {
    theta::ThetaEngine engine;
    theta::Rng rng(5150);
    theta::TauPoint tau(0.3, 1.2);
    for (int i = 0; i < 25; ++i) {
        ThetaExpression e;
        e.target = ch(1, 4, 1, 6);
        int terms = static_cast<int>(rng.range(1, 4));
        for (int t = 0; t < terms; ++t) e.monomials.push_back(random_monomial(rng));
        ThetaExpression n1 = normalize(e);
        ThetaExpression n2 = normalize(n1);
        CHECK(theta::equivalent(n1, n2));
        auto v0 = evaluate(e, engine, tau);
        auto v1 = evaluate(n1, engine, tau);
        CHECK(std::abs(v0 - v1) <= 1e-13 * std::max(1.0, std::abs(v0)));
    }
}

TEST_CASE("homogeneity degree") {
    // -pi/3 th[1/2;0] th[0;1/2] th^3[1/2;1/6] th^-2[0;1/3]: 1+1+3-2 = 3
    ThetaMonomial m;
    m.scalar = q(-1, 3);
    m.pi_power = 1;
    m.mul_theta(ch(1, 2, 0, 1), 1);
    m.mul_theta(ch(0, 1, 1, 2), 1);
    m.mul_theta(ch(1, 2, 1, 6), 3);
    m.mul_theta(ch(0, 1, 1, 3), -2);
    ThetaExpression e;
    e.target = ch(0, 1, 1, 3);
    e.monomials = {m};
    CHECK(homogeneity_degree(e) == 3);

    // 4+1+1-3 = 3
    ThetaMonomial m4;
    m4.mul_theta(ch(0, 1, 0, 1), 4);
    m4.mul_theta(ch(0, 1, 1, 2), 1);
    m4.mul_theta(ch(1, 2, 0, 1), 1);
    m4.mul_theta(ch(1, 4, 1, 4), -3);
    e.monomials = {m4};
    CHECK(homogeneity_degree(e) == 3);

    // theta'[1/2;1/2] counts with weight 3
    ThetaMonomial mj;
    mj.dtheta_half_power = 1;
    e.monomials = {mj};
    CHECK(homogeneity_degree(e) == 3);

    // zero expression: 3 by convention
    e.monomials.clear();
    CHECK(homogeneity_degree(e) == 3);

    // disagreement signals a solver bug
    e.monomials = {m, mj};
    ThetaMonomial flat;
    flat.mul_theta(ch(0, 1, 0, 1), 2);
    e.monomials = {m, flat};
    CHECK_THROWS_AS(homogeneity_degree(e), theta::InhomogeneousExpression);
}

TEST_CASE("apply_jacobi substitutes the triple product") {
    // (1/10) theta'[1/2;1/2] M -> -(pi/10) theta[0;0] theta[1/2;0] theta[0;1/2] M
    ThetaMonomial m;
    m.scalar = q(1, 10);
    m.dtheta_half_power = 1;
    m.mul_theta(ch(3, 10, 1, 10), 3);
    ThetaExpression e;
    e.target = ch(1, 5, 2, 5);
    e.monomials = {m};
    ThetaExpression j = apply_jacobi(e);
    CHECK(j.jacobi_applied);
    REQUIRE(j.monomials.size() == 1);
    const auto& jm = j.monomials[0];
    CHECK(jm.scalar == q(-1, 10));
    CHECK(jm.pi_power == 1);
    CHECK(jm.dtheta_half_power == 0);
    REQUIRE(jm.factors.size() == 4);

    // numeric invariance under the substitution
    theta::ThetaEngine engine;
    theta::TauPoint tau(0.1, 0.9);
    CHECK(std::abs(evaluate(e, engine, tau) - evaluate(j, engine, tau)) < 1e-13);

    // fixed points: no theta' power means nothing changes
    ThetaExpression none;
    none.target = ch(0, 1, 1, 3);
    none.monomials = {j.monomials[0]};
    ThetaExpression none2 = apply_jacobi(none);
    CHECK(theta::equivalent(none, none2));

    // zero expression stays zero
    ThetaExpression zero;
    zero.target = ch(0, 1, 0, 1);
    CHECK(apply_jacobi(zero).is_zero());
}

TEST_CASE("JSON round-trip preserves expressions exactly") {
    theta::Rng rng(777);
    for (int i = 0; i < 20; ++i) {
        ThetaExpression e;
        e.target = {rng.rational(9), rng.rational(9)};
        e.jacobi_applied = rng.range(0, 1) == 1;
        int terms = static_cast<int>(rng.range(0, 3));
        for (int t = 0; t < terms; ++t) e.monomials.push_back(random_monomial(rng));
        e = normalize(e);
        ThetaExpression back = theta::expression_from_json(theta::to_json(e));
        CHECK(theta::equivalent(e, back));
        CHECK(back.jacobi_applied == e.jacobi_applied);
        CHECK(theta::to_json(back) == theta::to_json(e));
    }
}

TEST_CASE("renderers") {
    ThetaMonomial m;
    m.scalar = q(-1, 3);
    m.pi_power = 1;
    m.mul_theta(ch(1, 2, 1, 6), 3);
    m.mul_theta(ch(0, 1, 1, 3), -2);
    ThetaExpression e;
    e.target = ch(0, 1, 1, 3);
    e.monomials = {normalize(m)};
    CHECK(render_text(e) == "th'[0;1/3] = -1/3*pi*th^-2[0;1/3]*th^3[1/2;1/6]");
    CHECK(render_latex(e) ==
          "\\theta'\\big[{}^{0}_{1/3}\\big] = "
          "-\\frac{1}{3}\\,\\pi\\,\\theta^{-2}\\big[{}^{0}_{1/3}\\big]"
          "\\theta^{3}\\big[{}^{1/2}_{1/6}\\big]");
    ThetaExpression zero;
    zero.target = ch(0, 1, 1, 2);
    CHECK(render_text(zero) == "th'[0;1/2] = 0");
}
