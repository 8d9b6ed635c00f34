#pragma once

#include <cstdint>

namespace sb {

// Caps for the unbounded searches.  Hitting one raises sb::cap_exhausted;
// results obtained under a cap are exact (caps bound work, never accuracy).
struct SearchCaps {
    // primes examined per scan (zsig_min, least_prime_in_ap, kerr progression)
    std::uint64_t prime_scan_cap = 10'000'000;
    // largest group order brute-force group computations will touch
    std::uint64_t group_size_cap = 50'000;
    // largest prime-power value the k/l enumeration will visit
    std::uint64_t pp_value_cap = 1'000'000'000;
};

} // namespace sb
