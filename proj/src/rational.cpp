#include "theta/rational.hpp"

namespace theta {

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto parse_int = [&](std::string_view t) -> BigInt {
        if (t.empty()) throw bad();
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') { neg = t[0] == '-'; i = 1; }
        if (i == t.size()) throw bad();
        BigInt v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') throw bad();
            v = v * 10 + (t[i] - '0');
        }
        return neg ? BigInt(-v) : v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    std::string_view dens = s.substr(slash + 1);
    if (!dens.empty() && (dens[0] == '+' || dens[0] == '-')) throw bad();
    BigInt den = parse_int(dens);
    if (den == 0) throw bad();
    return Rational(std::move(num), std::move(den));
}

BigInt Rational::floor() const {
    BigInt n = num(), d = den();
    if (n >= 0) return n / d;
    BigInt q = (-n + d - 1) / d;
    return -q;
}

Rational Rational::frac() const {
    Rational f = *this - Rational(floor());
    return f;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    std::string out = num().str();
    if (!is_integer()) {
        out += '/';
        out += den().str();
    }
    return out;
}

BigInt pow3(unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 3;
    return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi(0)");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace theta
