#include "theta/characteristic.hpp"

namespace theta {

Characteristic Characteristic::parse(std::string_view s) {
    auto comma = s.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("Characteristic: expected \"a/b,c/d\", got '" + std::string(s) + "'");
    return {Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1))};
}

std::string Characteristic::str() const {
    return eps_prime.str() + "," + eps.str();
}

ReducedCharacteristic reduce(const Characteristic& c) {
    ReducedCharacteristic out;
    out.canonical = {c.eps_prime.frac(), c.eps.frac()};
    Rational n(c.eps.floor());
    out.phase = Phase::of(n * out.canonical.eps_prime);
    out.sign = +1;
    return out;
}

ReducedCharacteristic reduce_mirror(const Characteristic& c) {
    ReducedCharacteristic out;
    out.canonical = {(-c.eps_prime).frac(), (-c.eps).frac()};
    // c = [-a' + n'; -a + n] with [a'; a] canonical forces n = eps + a.
    Rational n = c.eps + out.canonical.eps;
    out.phase = Phase::of(-n * out.canonical.eps_prime);
    out.sign = -1;
    return out;
}

namespace {
bool in_half_box(const Characteristic& c) {
    Rational half(1, 2);
    return c.eps_prime <= half && c.eps <= half;
}
} // namespace

ReducedCharacteristic half_range(const Characteristic& c) {
    ReducedCharacteristic plus = reduce(c);
    if (in_half_box(plus.canonical)) return plus;
    ReducedCharacteristic mirror = reduce_mirror(c);
    if (in_half_box(mirror.canonical)) return mirror;
    return plus;
}

bool is_singular(const Characteristic& c) {
    Rational half(1, 2);
    return c.eps_prime.frac() == half && c.eps.frac() == half;
}

ReducedCharacteristic mirror_normal_form(const Characteristic& canonical_c) {
    ReducedCharacteristic keep;
    keep.canonical = canonical_c;
    ReducedCharacteristic flip = reduce_mirror(canonical_c);
    if (flip.canonical == canonical_c) return keep; // self-mirror
    bool k = in_half_box(canonical_c), f = in_half_box(flip.canonical);
    if (k != f) return k ? keep : flip;
    return canonical_c < flip.canonical ? keep : flip;
}

Characteristic t_step(const Characteristic& c) {
    return {(Rational(3) * c.eps_prime).frac(), (Rational(3) * c.eps).frac()};
}

} // namespace theta
