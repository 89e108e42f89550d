// Compares the serial and OpenMP-parallel verification sweeps and the
// compensated production series against the plain reference summation.

#include <chrono>
#include <cstdio>
#include <string>

#include "theta/verification.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int samples = argc > 1 ? std::stoi(argv[1]) : 400;
    theta::ThetaEngine engine;
    const auto& taus = theta::default_tau_samples();

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel mode falls back to serial\n");
#endif

    std::vector<theta::ResidualReport> serial, parallel;
    double t_serial = time_ms([&] {
        serial = theta::relation_suite(engine, samples, 42, theta::RunMode::serial);
    });
    double t_parallel = time_ms([&] {
        parallel = theta::relation_suite(engine, samples, 42, theta::RunMode::parallel);
    });
    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i)
        identical = serial[i].residual == parallel[i].residual &&
                    serial[i].identity == parallel[i].identity;
    std::printf("relation_suite x%d    serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n",
                samples, t_serial, t_parallel, t_serial / t_parallel,
                identical ? "results identical" : "RESULTS DIFFER");

    double t_sweep_s = time_ms([&] {
        theta::fundamental_sweep(engine, samples, 42, 30, taus, 1e-10, theta::RunMode::serial);
    });
    double t_sweep_p = time_ms([&] {
        theta::fundamental_sweep(engine, samples, 42, 30, taus, 1e-10, theta::RunMode::parallel);
    });
    std::printf("fundamental_sweep x%d serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
                samples, t_sweep_s, t_sweep_p, t_sweep_s / t_sweep_p);

    // production kernel vs plain reference summation at doubled window
    theta::Characteristic c{theta::Rational(1, 7), theta::Rational(3, 11)};
    theta::TauPoint tau(0.3, 0.8);
    int n = engine.half_width(c, {0.2, 0.1}, tau, 0);
    double worst = 0.0;
    double t_kernel = time_ms([&] {
        for (int i = 0; i < 20000; ++i) {
            auto v = engine.theta(c, {0.2, 0.1}, tau);
            auto r = theta::theta_reference(c, {0.2, 0.1}, tau, 0, 2 * n);
            worst = std::max(worst, std::abs(v - r));
        }
    });
    std::printf("kernel vs reference (2N window): 20000 evals in %.1f ms, worst |diff| %.3e\n",
                t_kernel, worst);
    return identical ? 0 : 1;
}
