#ifndef THETA_CHARACTERISTIC_HPP
#define THETA_CHARACTERISTIC_HPP

#include <string>
#include <string_view>

#include "theta/phase.hpp"
#include "theta/rational.hpp"

namespace theta {

/// A theta characteristic [eps_prime; eps]: eps_prime is the top (tau-direction)
/// entry, eps the bottom one. Entries are arbitrary rationals.
struct Characteristic {
    Rational eps_prime;
    Rational eps;

    Characteristic() = default;
    Characteristic(Rational ep, Rational e) : eps_prime(std::move(ep)), eps(std::move(e)) {}

    bool is_canonical() const {
        return eps_prime.floor() == 0 && eps.floor() == 0 && eps_prime >= Rational(0) && eps >= Rational(0);
    }

    /// String form "a/b,c/d", eps_prime first.
    static Characteristic parse(std::string_view s);
    std::string str() const;

    friend bool operator==(const Characteristic& a, const Characteristic& b) {
        return a.eps_prime == b.eps_prime && a.eps == b.eps;
    }
    friend bool operator!=(const Characteristic& a, const Characteristic& b) { return !(a == b); }
    friend bool operator<(const Characteristic& a, const Characteristic& b) {
        if (a.eps_prime != b.eps_prime) return a.eps_prime < b.eps_prime;
        return a.eps < b.eps;
    }
};

/// Result of mapping a characteristic to its canonical representative in [0,1)^2.
/// Reconstruction: theta[original] = phase * theta[canonical] and
/// theta'[original] = sign * phase * theta'[canonical], both at z = 0.
struct ReducedCharacteristic {
    Characteristic canonical;
    Phase phase;
    int sign = +1;
};

/// Plus-branch reduction: subtract integer parts. The phase is
/// e^{2 pi i n eps_prime_can} with n the integer subtracted from eps; sign +1.
/// Valid for all z, not just theta constants.
ReducedCharacteristic reduce(const Characteristic& c);

/// Mirror-branch reduction through [-eps_prime + n'; -eps + n]; sign -1 for
/// derivative reconstruction. Valid only at z = 0.
ReducedCharacteristic reduce_mirror(const Characteristic& c);

/// Prefers whichever branch lands both entries in [0, 1/2] (plus branch wins
/// ties); falls back to the plus branch otherwise.
ReducedCharacteristic half_range(const Characteristic& c);

/// True iff the characteristic is congruent to [1/2; 1/2] mod 1, i.e. its
/// theta constant vanishes identically.
bool is_singular(const Characteristic& c);

/// Normal-form representative among {c, mirror(c)} for a canonical c: the
/// member with both entries <= 1/2 when exactly one qualifies, otherwise the
/// lexicographically smaller one. Used to merge mirror-equivalent theta
/// constants during expression normalization.
ReducedCharacteristic mirror_normal_form(const Characteristic& canonical_c);

/// Componentwise multiplication by 3 mod 1.
Characteristic t_step(const Characteristic& c);

} // namespace theta

#endif
