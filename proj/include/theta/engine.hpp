#ifndef THETA_ENGINE_HPP
#define THETA_ENGINE_HPP

#include <complex>
#include <stdexcept>

#include "theta/characteristic.hpp"

namespace theta {

using Complex = std::complex<double>;

/// Point in the genus-1 Siegel upper half-space: Im tau > 0.
struct TauPoint {
    Complex value;

    TauPoint() : value(0.0, 1.0) {}
    explicit TauPoint(Complex v) : value(v) {
        if (!(v.imag() > 0.0)) throw std::domain_error("TauPoint: Im tau must be positive");
    }
    TauPoint(double re, double im) : TauPoint(Complex(re, im)) {}
};

/// Truncation control for the theta series. The half-width N is chosen so a
/// geometric majorant of the omitted tail falls below abs_tol.
struct SeriesParams {
    double abs_tol = 1e-18;
    int max_half_width = 10000;
    double min_im_tau = 0.05; // below this N explodes; no modular reduction is applied
};

/// Numerical evaluation of theta[eps'; eps](z, tau) and its first two
/// z-derivatives by direct summation. Stateless; safe for concurrent use.
///
///   theta[e'; e](z, tau) = sum_n exp(pi i (n+e')^2 tau + 2 pi i (n+e')(z+e))
///
/// The characteristic is reduced exactly to [0,1)^2 first (the integer part
/// of eps' re-indexes the sum, the integer part of eps contributes an exact
/// unit-root prefactor), so the floating-point series only ever sees small
/// arguments.
class ThetaEngine {
public:
    ThetaEngine() = default;
    explicit ThetaEngine(SeriesParams p) : params_(p) {}

    Complex theta(const Characteristic& c, Complex z, const TauPoint& tau) const {
        return eval(c, z, tau, 0);
    }
    Complex theta_d1(const Characteristic& c, Complex z, const TauPoint& tau) const {
        return eval(c, z, tau, 1);
    }
    Complex theta_d2(const Characteristic& c, Complex z, const TauPoint& tau) const {
        return eval(c, z, tau, 2);
    }

    /// theta constant theta[c](0, tau)
    Complex theta_const(const Characteristic& c, const TauPoint& tau) const {
        return eval(c, Complex(0.0), tau, 0);
    }
    /// theta'[1/2;1/2](0, tau)
    Complex dtheta_half(const TauPoint& tau) const {
        return eval({Rational(1, 2), Rational(1, 2)}, Complex(0.0), tau, 1);
    }
    /// -pi theta[0;0] theta[1/2;0] theta[0;1/2] at z = 0
    Complex jacobi_rhs(const TauPoint& tau) const;

    /// Location of the unique zero in the fundamental parallelogram:
    /// tau(1/2 - eps') + 1/2 - eps.
    static Complex zero_location(const Characteristic& c, const TauPoint& tau);

    /// Half-width the truncation rule would choose (exposed for tests).
    int half_width(const Characteristic& c, Complex z, const TauPoint& tau, int order) const;

    /// Sum of |term| over the chosen window: the natural scale against which
    /// cancellation (e.g. at a zero of theta) is measured.
    double abs_term_sum(const Characteristic& c, Complex z, const TauPoint& tau, int order) const;

    const SeriesParams& params() const { return params_; }

private:
    Complex eval(const Characteristic& c, Complex z, const TauPoint& tau, int order) const;
    SeriesParams params_{};
};

/// Plain uncompensated reference summation over a fixed window [-n, n],
/// kept as the serial reference kernel for truncation and accuracy tests.
Complex theta_reference(const Characteristic& c, Complex z, const TauPoint& tau, int order, int half_width);

} // namespace theta

#endif
