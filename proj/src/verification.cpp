#include "theta/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace theta {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kZeroFloor = 1e-30;
constexpr double kTrivialZero = 1e-12;

const Rational kHalf(1, 2);

ResidualReport make_report(std::string identity, std::string subject, const TauPoint& tau,
                           Complex lhs, Complex rhs, double tol) {
    ResidualReport r;
    r.identity = std::move(identity);
    r.subject = std::move(subject);
    r.tau = tau.value;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    double scale = std::max({std::abs(lhs), std::abs(rhs), kZeroFloor});
    if (std::max(std::abs(lhs), std::abs(rhs)) < kTrivialZero) {
        // trivially-zero identity: assert both sides vanish absolutely
        r.identity += " (trivial-zero)";
        r.residual = std::max(std::abs(lhs), std::abs(rhs));
        r.tolerance = kTrivialZero;
    } else {
        r.residual = std::abs(lhs - rhs) / scale;
    }
    r.pass = r.residual <= r.tolerance;
    return r;
}

Complex cpow3(Complex v) { return v * v * v; }

} // namespace

nlohmann::json ResidualReport::to_json() const {
    return nlohmann::json{{"identity", identity},
                          {"subject", subject},
                          {"tau", {tau.real(), tau.imag()}},
                          {"lhs", {lhs.real(), lhs.imag()}},
                          {"rhs", {rhs.real(), rhs.imag()}},
                          {"residual", residual},
                          {"tolerance", tolerance},
                          {"pass", pass}};
}

std::string ResidualReport::line() const {
    std::ostringstream os;
    os << (pass ? "PASS " : "FAIL ") << identity << "  [" << subject << "]  tau=(" << tau.real()
       << "," << tau.imag() << ")  residual=" << residual << "  tol=" << tolerance;
    return os.str();
}

const std::vector<TauPoint>& default_tau_samples() {
    static const std::vector<TauPoint> taus = {
        TauPoint(0.0, 1.0), TauPoint(0.0, 2.0), TauPoint(0.3, 1.7),
        TauPoint(-0.4, 0.9), TauPoint(0.1, 0.6)};
    return taus;
}

Complex fd_derivative(const ThetaEngine& engine, const Characteristic& c, const TauPoint& tau,
                      double h) {
    if (!(h >= 1e-6 && h <= 1e-2))
        throw std::invalid_argument("fd_derivative: h must lie in [1e-6, 1e-2]");
    auto d = [&](double step) {
        return (engine.theta(c, Complex(step), tau) - engine.theta(c, Complex(-step), tau)) /
               (2.0 * step);
    };
    return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

ResidualReport check_fundamental(const ThetaEngine& engine, const Characteristic& c,
                                 const TauPoint& tau, double tol) {
    const Rational& ep = c.eps_prime;
    const Rational& e = c.eps;
    Characteristic c3{Rational(3) * ep, Rational(3) * e};
    Characteristic cube{kHalf - Rational(2) * ep, kHalf - Rational(2) * e};
    Complex t0 = engine.theta_const(c, tau);
    Complex t3 = engine.theta_const(c3, tau);
    Complex lhs = t0 * t0 *
                  (3.0 * t3 * engine.theta_d1(c, Complex(0.0), tau) -
                   engine.theta_d1(c3, Complex(0.0), tau) * t0);
    Complex rhs = Phase::of(Rational(3) * ep).value() * engine.dtheta_half(tau) *
                  cpow3(engine.theta_const(cube, tau));
    std::string name = is_singular(c) ? "fundamental-identity (degenerate-trivial)"
                                      : "fundamental-identity";
    return make_report(name, c.str(), tau, lhs, rhs, tol);
}

ResidualReport check_expression(const ThetaEngine& engine, const ThetaExpression& e,
                                const TauPoint& tau, double tol) {
    Complex got = evaluate(e, engine, tau);
    Complex want = engine.theta_d1(e.target, Complex(0.0), tau);
    return make_report("expression-contract", e.target.str(), tau, got, want, tol);
}

std::vector<ResidualReport> cross_check_quoted_identities(const ThetaEngine& engine,
                                                          const TauPoint& tau, double tol) {
    std::vector<ResidualReport> out;
    Rational z(0), h = kHalf, sixth(1, 6), third(1, 3);
    auto tc = [&](Rational ep, Rational e) { return engine.theta_const({ep, e}, tau); };

    // sextuple-product identity for theta'[1/2;1/6]
    Complex lhs = 6.0 * engine.theta_d1({h, sixth}, Complex(0.0), tau) * tc(sixth, sixth) *
                  tc(sixth, h) * tc(sixth, Rational(5, 6));
    Complex rhs = engine.dtheta_half(tau) *
                  (cpow3(tc(sixth, h)) + Phase::of(Rational(-1, 6)).value() * cpow3(tc(sixth, Rational(5, 6))) +
                   Phase::of(Rational(1, 6)).value() * cpow3(tc(sixth, sixth)));
    out.push_back(make_report("cross-check-sextuple-product", "1/2,1/6", tau, lhs, rhs, tol));

    Complex fd = fd_derivative(engine, {h, sixth}, tau);

    // quartic-ratio form with a separate pi-term
    Complex m3 = kPi / 3.0 * tc(z, z) * tc(z, h) * std::pow(tc(h, sixth), 4) /
                     cpow3(tc(h, third)) -
                 kPi * tc(h, z) * tc(h, z) * tc(z, sixth) * tc(z, third) / tc(h, third);
    out.push_back(make_report("cross-check-quartic-ratio", "1/2,1/6", tau, m3, fd, tol));

    // two-term -pi/6 form
    Complex m2 = -kPi / 6.0 * tc(z, z) * tc(z, h) *
                 (std::pow(tc(h, sixth), 4) / cpow3(tc(h, third)) - 3.0 * tc(h, third));
    out.push_back(make_report("cross-check-two-term", "1/2,1/6", tau, m2, fd, tol));
    return out;
}

std::uint64_t Rng::next() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
}

Rational Rng::rational(unsigned max_den) {
    long long den = range(1, max_den);
    long long num = range(0, den - 1);
    return Rational(num, den);
}

namespace {

// One randomized property case; every report it emits is a pure function of
// the seed, so parallel scheduling cannot change the output.
void relation_case(const ThetaEngine& engine, std::uint64_t seed,
                   std::vector<ResidualReport>& out) {
    Rng rng(seed);
    Characteristic c{Rational(rng.range(-24, 24), rng.range(1, 12)),
                     Rational(rng.range(-24, 24), rng.range(1, 12))};
    Complex z(rng.uniform(-1.0, 1.0), rng.uniform(-0.5, 0.5));
    TauPoint tau(rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0));
    Complex i2pi(0.0, 2.0 * kPi);
    double epd = c.eps_prime.to_double(), ed = c.eps.to_double();
    std::string cs = c.str();

    // quasi-periodicity under z -> z + tau m + n
    {
        long long m = rng.range(-2, 2), n = rng.range(-2, 2);
        Complex zs = z + tau.value * static_cast<double>(m) + static_cast<double>(n);
        Complex factor = std::exp(Complex(0.0, -kPi) * static_cast<double>(m * m) * tau.value -
                                  i2pi * (static_cast<double>(m) * (z + ed) - static_cast<double>(n) * epd));
        out.push_back(make_report("Rel1-quasi-periodicity", cs, tau, engine.theta(c, zs, tau),
                                  factor * engine.theta(c, z, tau), 1e-11));
    }
    // parity
    out.push_back(make_report("Rel2-parity", cs, tau,
                              engine.theta({-c.eps_prime, -c.eps}, -z, tau),
                              engine.theta(c, z, tau), 1e-12));
    // integer characteristic shifts
    {
        long long n = rng.range(-2, 2), np = rng.range(-2, 2);
        Characteristic shifted{c.eps_prime + Rational(np), c.eps + Rational(n)};
        Complex factor = std::exp(i2pi * static_cast<double>(n) * epd);
        out.push_back(make_report("Rel3-integer-shift", cs, tau, engine.theta(shifted, z, tau),
                                  factor * engine.theta(c, z, tau), 1e-12));
    }
    // rational shift law and its differentiated forms
    {
        Rational s = rng.rational(12), sp = rng.rational(12);
        double sd = s.to_double(), spd = sp.to_double();
        Characteristic shifted{c.eps_prime + sp, c.eps + s};
        Complex zs = z + tau.value * spd + sd;
        Complex factor =
            std::exp(Complex(0.0, -kPi) * tau.value * spd * spd - i2pi * spd * (z + sd + ed));
        out.push_back(make_report("Rel4-shift-law", cs, tau, engine.theta(c, zs, tau),
                                  factor * engine.theta(shifted, z, tau), 1e-10));
        out.push_back(make_report("ThetaDerRel-d1", cs, tau, engine.theta_d1(c, zs, tau),
                                  factor * (engine.theta_d1(shifted, z, tau) -
                                            i2pi * spd * engine.theta(shifted, z, tau)),
                                  1e-10));
        out.push_back(make_report(
            "ThetaDerRel-d2", cs, tau, engine.theta_d2(c, zs, tau),
            factor * (engine.theta_d2(shifted, z, tau) -
                      2.0 * i2pi * spd * engine.theta_d1(shifted, z, tau) -
                      4.0 * kPi * kPi * spd * spd * engine.theta(shifted, z, tau)),
            1e-10));
    }
    // mirrored characteristic at -z
    {
        long long n = rng.range(-2, 2), np = rng.range(-2, 2);
        Characteristic mirrored{-c.eps_prime + Rational(np), -c.eps + Rational(n)};
        Complex factor = std::exp(-i2pi * static_cast<double>(n) * epd);
        out.push_back(make_report("Rel5-mirror-shift", cs, tau, engine.theta(mirrored, z, tau),
                                  factor * engine.theta(c, -z, tau), 1e-12));
    }
    // constant/derivative reduction round-trips, both branches
    {
        ReducedCharacteristic plus = reduce(c), mirror = reduce_mirror(c);
        out.push_back(make_report("TCRel-roundtrip-plus", cs, tau, engine.theta_const(c, tau),
                                  plus.phase.value() * engine.theta_const(plus.canonical, tau),
                                  1e-12));
        out.push_back(make_report("TCRel-roundtrip-mirror", cs, tau, engine.theta_const(c, tau),
                                  mirror.phase.value() * engine.theta_const(mirror.canonical, tau),
                                  1e-12));
        out.push_back(make_report(
            "TDRel-roundtrip-plus", cs, tau, engine.theta_d1(c, Complex(0.0), tau),
            static_cast<double>(plus.sign) * plus.phase.value() *
                engine.theta_d1(plus.canonical, Complex(0.0), tau),
            1e-12));
        out.push_back(make_report(
            "TDRel-roundtrip-mirror", cs, tau, engine.theta_d1(c, Complex(0.0), tau),
            static_cast<double>(mirror.sign) * mirror.phase.value() *
                engine.theta_d1(mirror.canonical, Complex(0.0), tau),
            1e-12));
    }
    // unique zero in the fundamental parallelogram, checked at the canonical
    // representative so the zero lies in the base cell; the residual is
    // relative to the summed term magnitudes (the cancellation scale)
    {
        Characteristic canon = reduce(c).canonical;
        Complex z0 = ThetaEngine::zero_location(canon, tau);
        double scale = engine.abs_term_sum(canon, z0, tau, 0);
        ResidualReport r;
        r.identity = "unique-zero";
        r.subject = cs;
        r.tau = tau.value;
        r.lhs = engine.theta(canon, z0, tau);
        r.rhs = Complex(0.0);
        r.residual = std::abs(r.lhs) / scale;
        r.tolerance = 1e-10;
        r.pass = r.residual <= r.tolerance;
        out.push_back(std::move(r));
    }
    // truncation: doubling the half-width must not move the value beyond the
    // tail budget plus double rounding
    {
        int n = engine.half_width(c, z, tau, 0);
        Complex v1 = theta_reference(c, z, tau, 0, n);
        Complex v2 = theta_reference(c, z, tau, 0, 2 * n);
        double tol = std::max(engine.params().abs_tol,
                              16.0 * std::numeric_limits<double>::epsilon() * std::abs(v2));
        ResidualReport r;
        r.identity = "truncation-doubling";
        r.subject = cs;
        r.tau = tau.value;
        r.lhs = v1;
        r.rhs = v2;
        r.residual = std::abs(v1 - v2);
        r.tolerance = tol;
        r.pass = r.residual <= tol;
        out.push_back(std::move(r));
    }
}

template <typename Fn>
std::vector<ResidualReport> run_cases(int count, RunMode mode, Fn&& one_case) {
    std::vector<std::vector<ResidualReport>> slots(static_cast<std::size_t>(count));
#ifdef _OPENMP
    if (mode == RunMode::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) one_case(i, slots[static_cast<std::size_t>(i)]);
    } else
#else
    (void)mode;
#endif
    {
        for (int i = 0; i < count; ++i) one_case(i, slots[static_cast<std::size_t>(i)]);
    }
    std::vector<ResidualReport> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

} // namespace

std::vector<ResidualReport> relation_suite(const ThetaEngine& engine, int samples,
                                           std::uint64_t seed, RunMode mode) {
    if (samples < 1) throw std::invalid_argument("relation_suite: samples must be >= 1");
    return run_cases(samples, mode, [&](int i, std::vector<ResidualReport>& slot) {
        relation_case(engine, seed + 0x51ed2701u * static_cast<std::uint64_t>(i) + 1, slot);
    });
}

std::vector<ResidualReport> fundamental_sweep(const ThetaEngine& engine, int count,
                                              std::uint64_t seed, unsigned den_max,
                                              const std::vector<TauPoint>& taus, double tol,
                                              RunMode mode) {
    return run_cases(count, mode, [&](int i, std::vector<ResidualReport>& slot) {
        Rng rng(seed + 0x9d2c5681u * static_cast<std::uint64_t>(i) + 1);
        Characteristic c{rng.rational(den_max), rng.rational(den_max)};
        while (is_singular(c)) c = {rng.rational(den_max), rng.rational(den_max)};
        for (const auto& tau : taus) slot.push_back(check_fundamental(engine, c, tau, tol));
    });
}

bool all_pass(const std::vector<ResidualReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const ResidualReport& r) { return r.pass; });
}

std::vector<Complex> gauss_solve(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
    std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) == 0.0) throw std::runtime_error("gauss_solve: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            Complex f = a[r][col] / a[col][col];
            if (f == Complex(0.0)) continue;
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<Complex> x(n);
    for (std::size_t r = n; r-- > 0;) {
        Complex acc = b[r];
        for (std::size_t k = r + 1; k < n; ++k) acc -= a[r][k] * x[k];
        x[r] = acc / a[r][r];
    }
    return x;
}

} // namespace theta
