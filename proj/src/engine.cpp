#include "theta/engine.hpp"

#include <cmath>

namespace theta {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Neumaier-compensated accumulator.
struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double total() const { return sum + comp; }
};

Complex ipow(Complex base, int k) {
    Complex r = 1.0;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

// ln of the tail majorant for the first omitted index pair at half-width n,
// with a' = frac(eps') in [0,1): exp(-pi y (n+a')^2 + 2 pi (|Im z| + a' y)(n+1)),
// times (2 pi (n+1+a'))^order for the differentiated series.
double log_majorant(int n, double a, double y, double abs_im_z, int order) {
    double lm = -kPi * y * (n + a) * (n + a) + 2.0 * kPi * (abs_im_z + a * y) * (n + 1.0);
    if (order > 0) lm += order * std::log(2.0 * kPi * (n + 1.0 + a));
    return lm;
}

} // namespace

int ThetaEngine::half_width(const Characteristic& c, Complex z, const TauPoint& tau, int order) const {
    double y = tau.value.imag();
    if (y < params_.min_im_tau)
        throw std::domain_error("ThetaEngine: Im tau below minimum (no modular reduction applied)");
    double a = c.eps_prime.frac().to_double();
    double v = std::abs(z.imag());
    double want = std::log(params_.abs_tol) - std::log(4.0);
    for (int n = 2; n <= params_.max_half_width; ++n) {
        // ratio of consecutive majorant terms must itself be <= 1/4 so the
        // geometric tail sum stays within a factor ~4/3 of the first term
        bool decaying = kPi * y * (2.0 * n - 1.0) - 2.0 * kPi * v >= std::log(4.0);
        if (decaying && log_majorant(n, a, y, v, order) <= want) return n;
    }
    throw std::domain_error("ThetaEngine: series half-width exceeds max_half_width");
}

Complex ThetaEngine::eval(const Characteristic& c, Complex z, const TauPoint& tau, int order) const {
    ReducedCharacteristic red = reduce(c);
    int n_max = half_width(red.canonical, z, tau, order);

    double a = red.canonical.eps_prime.to_double();
    double b = red.canonical.eps.to_double();
    Complex itau = Complex(0.0, 1.0) * tau.value;
    Complex zb = z + b;

    Kahan re, im;
    auto add_term = [&](int n) {
        double m = n + a;
        Complex expo = kPi * m * m * itau + 2.0 * kPi * Complex(0.0, 1.0) * m * zb;
        Complex t = std::exp(expo);
        if (order > 0) t *= ipow(Complex(0.0, 2.0 * kPi * m), order);
        re.add(t.real());
        im.add(t.imag());
    };
    add_term(0);
    for (int n = 1; n <= n_max; ++n) {
        add_term(n);
        add_term(-n);
    }
    Complex series(re.total(), im.total());
    return red.phase.value() * series; // + branch: derivative sign is +1 for every order
}

double ThetaEngine::abs_term_sum(const Characteristic& c, Complex z, const TauPoint& tau,
                                 int order) const {
    ReducedCharacteristic red = reduce(c);
    int n_max = half_width(red.canonical, z, tau, order);
    double a = red.canonical.eps_prime.to_double();
    double y = tau.value.imag(), v = z.imag();
    double sum = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        double m = n + a;
        double t = std::exp(-kPi * m * m * y - 2.0 * kPi * m * v);
        if (order > 0) t *= std::pow(2.0 * kPi * std::abs(m), order);
        sum += t;
    }
    return sum;
}

Complex ThetaEngine::jacobi_rhs(const TauPoint& tau) const {
    Rational zero(0), half(1, 2);
    return -kPi * theta_const({zero, zero}, tau) * theta_const({half, zero}, tau) *
           theta_const({zero, half}, tau);
}

Complex ThetaEngine::zero_location(const Characteristic& c, const TauPoint& tau) {
    Rational half(1, 2);
    return tau.value * (half - c.eps_prime).to_double() + (half - c.eps).to_double();
}

Complex theta_reference(const Characteristic& c, Complex z, const TauPoint& tau, int order, int half_width) {
    ReducedCharacteristic red = reduce(c);
    double a = red.canonical.eps_prime.to_double();
    double b = red.canonical.eps.to_double();
    Complex sum = 0.0;
    for (int n = -half_width; n <= half_width; ++n) {
        double m = n + a;
        Complex expo = Complex(0.0, kPi) * m * m * tau.value +
                       Complex(0.0, 2.0 * kPi) * m * (z + b);
        Complex t = std::exp(expo);
        if (order > 0) t *= ipow(Complex(0.0, 2.0 * kPi * m), order);
        sum += t;
    }
    return red.phase.value() * sum;
}

} // namespace theta
