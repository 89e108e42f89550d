#ifndef THETA_RATIONAL_HPP
#define THETA_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace theta {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// Arbitrary-precision: coefficients like 3^t - 1 stay exact for any period t.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) : v_(make(BigInt(num), BigInt(den))) {}
    Rational(BigInt num, BigInt den) : v_(make(std::move(num), std::move(den))) {}
    explicit Rational(BigInt n) : v_(std::move(n)) {}

    /// Accepts "a/b" or "a" with an optional leading sign on a.
    static Rational parse(std::string_view s);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }
    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return v_ == 0; }

    /// Largest integer <= *this.
    BigInt floor() const;
    /// *this - floor(*this), in [0,1).
    Rational frac() const;

    double to_double() const { return v_.convert_to<double>(); }
    std::string str() const;

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    using Impl = boost::multiprecision::cpp_rational;
    static Impl make(BigInt num, BigInt den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        return Impl(std::move(num), std::move(den));
    }
    Impl v_;
};

/// 3^k as an exact integer.
BigInt pow3(unsigned k);

/// Euler totient by trial-division factorization; inputs here are small
/// denominators, so nothing fancier is warranted.
std::uint64_t euler_phi(std::uint64_t n);

} // namespace theta

#endif
