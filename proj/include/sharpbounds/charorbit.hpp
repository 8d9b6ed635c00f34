#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sharpbounds/numtheory.hpp"

namespace sb {

// Irreducible character degrees of GF(q^m)+ ⋊ C_n, from the orbit /
// little-group method: each <ζ>-orbit O on Irr(A) contributes n/|O|
// characters of degree |O|.
struct CharacterProfile {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> degrees; // (degree, multiplicity), ascending
    std::uint64_t total_count = 0;                                // |Irr(G)| = k(G)
    Rational acd;

    std::uint64_t group_order() const; // Σ mult·deg²
    std::uint64_t linear_count() const;
};

// Multiset (ascending) of orbit sizes of <ζ> on the nonzero field elements.
// By Brauer's permutation lemma this equals the orbit-size multiset on
// Irr(A) \ {1_A}, which is what the character computation consumes.
std::vector<std::uint64_t> orbit_sizes(std::uint64_t q, unsigned m, std::uint64_t n);

CharacterProfile char_degrees_abelian_by_cyclic(std::uint64_t q, unsigned m, std::uint64_t n);

// acd(C_p × G) from the profile of G; equals profile.acd since acd(C_p) = 1
// (asserted on the expanded profile, not assumed).
Rational acd_direct_with_cyclic(std::uint64_t p, const CharacterProfile& profile);

// max over orbit sizes t of f_tr(t, r), r = number of orbits on A \ {0};
// a certified lower bound for acd. Trivial action (n = 1) returns 0.
Rational theorem32_lower_bound(std::uint64_t q, unsigned m, std::uint64_t n);

} // namespace sb
