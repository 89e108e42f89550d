#ifndef THETA_ORBIT_HPP
#define THETA_ORBIT_HPP

#include <cstddef>
#include <vector>

#include "theta/characteristic.hpp"
#include "theta/rational.hpp"

namespace theta {

/// Multiplication by 3 on proper rationals: m/p -> (3m mod p)/p.
Rational t_step(const Rational& x);

enum class OrbitKind {
    periodic,              // T applied to the last element returns the first
    stationary_terminated, // ends at a fixed point (0 or 1/2)
    merges_into_periodic,  // pre-periodic tail, then a cycle of length >= 2
};

struct Orbit {
    std::vector<Rational> elements; // seed first; tail followed by one full cycle
    OrbitKind kind = OrbitKind::periodic;
    std::size_t tail_length = 0;

    std::size_t cardinality() const { return elements.size(); }
    std::size_t cycle_length() const { return elements.size() - tail_length; }
};

/// Iterates T from x until the first repeat or a stationary value.
/// For gcd(denominator, 3) = 1 the orbit is periodic and its cardinality
/// divides phi(denominator).
Orbit orbit_of(const Rational& x);

/// Splits P(p) = {m/p : 1 <= m <= p-1} into disjoint periodic orbits.
/// Requires gcd(p,3) = 1 and p >= 2; orbits are deduplicated by smallest
/// element and listed by ascending seed.
std::vector<Orbit> partition(unsigned p);

enum class ChainEndpoint {
    periodic_core, // terminal cycle of nonstationary characteristics
    stationary,    // terminal element is a fixed point of T (entries in {0, 1/2})
};

/// The ordered set generated by a characteristic under componentwise
/// multiplication by 3: a pre-periodic tail followed by one full cycle.
struct CharacteristicChain {
    std::vector<Characteristic> chain; // canonical entries; tail + one full cycle
    std::size_t preperiod = 0;         // tail length
    std::size_t period = 1;            // cycle length
    ChainEndpoint endpoint = ChainEndpoint::periodic_core;

    std::vector<Characteristic> core() const {
        return {chain.begin() + static_cast<std::ptrdiff_t>(preperiod), chain.end()};
    }
};

/// Canonicalizes c and iterates T until the chain closes. When both
/// denominators are coprime to 3 the chain is purely periodic with period
/// lcm of the component orbit sizes; otherwise it descends to a periodic
/// core or a stationary characteristic.
CharacteristicChain char_chain(const Characteristic& c);

} // namespace theta

#endif
