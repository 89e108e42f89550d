#include "theta/orbit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace theta {

namespace {
constexpr std::size_t kIterationCap = 10000;

bool is_stationary(const Rational& x) {
    return x.is_zero() || x == Rational(1, 2);
}
} // namespace

Rational t_step(const Rational& x) {
    return (Rational(3) * x).frac();
}

Orbit orbit_of(const Rational& x) {
    Orbit orbit;
    std::map<Rational, std::size_t> seen;
    Rational cur = x.frac();
    while (seen.find(cur) == seen.end()) {
        if (orbit.elements.size() > kIterationCap)
            throw std::runtime_error("orbit_of: iteration cap exceeded");
        seen.emplace(cur, orbit.elements.size());
        orbit.elements.push_back(cur);
        cur = t_step(cur);
    }
    std::size_t j = seen[cur];
    std::size_t cycle = orbit.elements.size() - j;
    orbit.tail_length = j;
    if (j == 0) {
        orbit.kind = OrbitKind::periodic;
    } else if (cycle == 1 && is_stationary(orbit.elements.back())) {
        orbit.kind = OrbitKind::stationary_terminated;
    } else {
        orbit.kind = OrbitKind::merges_into_periodic;
    }
    return orbit;
}

std::vector<Orbit> partition(unsigned p) {
    if (p < 2) throw std::invalid_argument("partition: p must be >= 2");
    if (p % 3 == 0)
        throw std::invalid_argument("partition: p divisible by 3 has no disjoint-orbit partition; "
                                    "use orbit_of per element");
    std::vector<Orbit> orbits;
    std::map<Rational, bool> covered;
    for (unsigned m = 1; m < p; ++m) {
        Rational seed(static_cast<long long>(m), static_cast<long long>(p));
        if (covered.count(seed)) continue;
        Orbit o = orbit_of(seed);
        for (const Rational& el : o.elements) covered[el] = true;
        orbits.push_back(std::move(o));
    }
    return orbits;
}

CharacteristicChain char_chain(const Characteristic& c) {
    CharacteristicChain out;
    std::map<Characteristic, std::size_t> seen;
    Characteristic cur = reduce(c).canonical;
    while (seen.find(cur) == seen.end()) {
        if (out.chain.size() > kIterationCap)
            throw std::runtime_error("char_chain: iteration cap exceeded");
        seen.emplace(cur, out.chain.size());
        out.chain.push_back(cur);
        cur = t_step(cur);
    }
    out.preperiod = seen[cur];
    out.period = out.chain.size() - out.preperiod;
    const Characteristic& last = out.chain.back();
    bool fixed_point = out.period == 1 && is_stationary(last.eps_prime) && is_stationary(last.eps);
    out.endpoint = fixed_point ? ChainEndpoint::stationary : ChainEndpoint::periodic_core;
    return out;
}

} // namespace theta
