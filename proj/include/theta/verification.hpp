#ifndef THETA_VERIFICATION_HPP
#define THETA_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "theta/expression.hpp"

namespace theta {

/// One identity checked at one (characteristic, tau) pair.
struct ResidualReport {
    std::string identity;
    std::string subject; // characteristic or expression target, string form
    Complex tau{};
    Complex lhs{};
    Complex rhs{};
    double residual = 0.0;  // relative to max(|lhs|, |rhs|, 1e-30)
    double tolerance = 0.0; // pass iff residual <= tolerance
    bool pass = false;

    nlohmann::json to_json() const;
    std::string line() const; // human-readable table row
};

enum class RunMode { serial, parallel };

/// {i, 2i, 0.3+1.7i, -0.4+0.9i, 0.1+0.6i}: spread in Re and Im, all well
/// inside the engine's convergence sweet spot.
const std::vector<TauPoint>& default_tau_samples();

/// Independent first-derivative oracle: central differences with one
/// Richardson step, (4 D(h/2) - D(h)) / 3. Never calls theta_d1.
Complex fd_derivative(const ThetaEngine& engine, const Characteristic& c, const TauPoint& tau,
                      double h = 1e-3);

/// Both sides of the fundamental identity straight from the series engine;
/// no solver involvement.
ResidualReport check_fundamental(const ThetaEngine& engine, const Characteristic& c,
                                 const TauPoint& tau, double tol = 1e-10);

/// evaluate(e, tau) against theta_d1(target, 0, tau).
ResidualReport check_expression(const ThetaEngine& engine, const ThetaExpression& e,
                                const TauPoint& tau, double tol = 1e-9);

/// The two-sided sextuple-product identity and the two quoted expressions for
/// theta'[1/2;1/6], the latter checked against fd_derivative.
std::vector<ResidualReport> cross_check_quoted_identities(const ThetaEngine& engine,
                                                          const TauPoint& tau, double tol = 1e-9);

/// Randomized property run over the argument-shift laws, reduction
/// round-trips, the unique-zero location and truncation stability.
/// Deterministic under a fixed seed, independent of the run mode.
std::vector<ResidualReport> relation_suite(const ThetaEngine& engine, int samples,
                                           std::uint64_t seed, RunMode mode = RunMode::parallel);

/// Fundamental-identity sweep over `count` seeded-random rational
/// characteristics (denominators <= den_max, singular ones skipped) at each
/// tau sample.
std::vector<ResidualReport> fundamental_sweep(const ThetaEngine& engine, int count,
                                              std::uint64_t seed, unsigned den_max,
                                              const std::vector<TauPoint>& taus,
                                              double tol = 1e-10,
                                              RunMode mode = RunMode::parallel);

bool all_pass(const std::vector<ResidualReport>& reports);

/// Dense complex Gaussian elimination with partial pivoting; the independent
/// route for checking the symbolic Cramer solution.
std::vector<Complex> gauss_solve(std::vector<std::vector<Complex>> a, std::vector<Complex> b);

/// Deterministic splitmix64-based generator used by all randomized suites so
/// reports are reproducible bit-for-bit across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi);
    double uniform(double lo, double hi);
    /// numerator/denominator with 1 <= denominator <= max_den, value in [0,1)
    Rational rational(unsigned max_den);

private:
    std::uint64_t state_;
};

} // namespace theta

#endif
