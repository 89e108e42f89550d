#ifndef THETA_PHASE_HPP
#define THETA_PHASE_HPP

#include <complex>

#include "theta/rational.hpp"

namespace theta {

/// A root of unity e^{2 pi i r} with r rational, stored exactly as r mod 1.
/// Multiplication of phases is addition of the r's mod 1; conversion to a
/// floating-point complex number happens only at evaluation time.
class Phase {
public:
    Phase() = default; // phase 1
    static Phase of(const Rational& r) {
        Phase p;
        p.r_ = r.frac();
        return p;
    }

    const Rational& r() const { return r_; }
    bool is_one() const { return r_.is_zero(); }

    Phase operator*(const Phase& o) const { return of(r_ + o.r_); }
    Phase& operator*=(const Phase& o) { return *this = *this * o; }
    Phase inverse() const { return of(-r_); }
    Phase conj() const { return inverse(); }
    Phase pow(long long k) const { return of(r_ * Rational(k)); }

    std::complex<double> value() const {
        double t = 2.0 * 3.14159265358979323846264338327950288 * r_.to_double();
        return {std::cos(t), std::sin(t)};
    }

    friend bool operator==(const Phase& a, const Phase& b) { return a.r_ == b.r_; }
    friend bool operator!=(const Phase& a, const Phase& b) { return a.r_ != b.r_; }

private:
    Rational r_; // in [0,1)
};

} // namespace theta

#endif
