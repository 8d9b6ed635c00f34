#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sharpbounds/config.hpp"
#include "sharpbounds/numtheory.hpp"

namespace sb {

// Finite group on the index carrier {0, ..., size-1}. Multiplication is a
// function; groups of order <= kGroupTableLimit additionally cache the full
// table (16-bit entries, at most 32 MiB) and answer mul/inv from it.
inline constexpr std::uint64_t kGroupTableLimit = 4096;

struct Group {
    std::uint64_t size = 1;
    std::uint64_t identity = 0;
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul_fn;
    std::function<std::uint64_t(std::uint64_t)> inv_fn;
    std::vector<std::uint64_t> generators;
    std::string label;

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return table_.empty() ? mul_fn(a, b) : table_[a * size + b];
    }
    std::uint64_t inv(std::uint64_t a) const {
        return inv_table_.empty() ? inv_fn(a) : inv_table_[a];
    }
    std::uint64_t conj(std::uint64_t x, std::uint64_t g) const {
        return mul(mul(inv(g), x), g);
    }

    // Materializes the mul/inv tables (an O(size^2) build; only worth it for
    // pair-count-scale consumers); no-op above kGroupTableLimit.
    void cache_tables();

private:
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> inv_table_;
};

// C_n as residues mod n under addition.
Group cyclic_group(std::uint64_t n);

// GF(q^m)+ ⋊ <ζ> with ζ = element_of_order(GF(q^m), n); carrier pairs (a, i),
// a a field element, i ∈ Z_n, product (a,i)·(b,j) = (a + ζ^i·b, i+j mod n),
// indexed as i·q^m + rank(a).
Group affine_group(std::uint64_t q, unsigned m, std::uint64_t n);

// C_p × G with componentwise operation; (c, h) indexed as c·|G| + h.
Group direct_with_cyclic(std::uint64_t p, const Group& G);

// Order of the subgroup generated by `gens` (BFS closure; also used as the
// "generators generate" check in tests).
std::uint64_t generated_subgroup_size(const Group& G, const std::vector<std::uint64_t>& gens);

// Exact partition into conjugacy classes via orbit closure under conjugation
// by generators; classes ordered by least element, each sorted ascending.
std::vector<std::vector<std::uint64_t>> conjugacy_classes(const Group& G,
                                                          const SearchCaps& caps = {});

// k(G)/|G| exactly.
Rational commuting_probability(const Group& G, const SearchCaps& caps = {});

// |G'|, with G' the normal closure of all commutators of generator pairs.
std::uint64_t derived_subgroup_size(const Group& G, const SearchCaps& caps = {});

// |Z(G)| = order of the centralizer of the generating set.
std::uint64_t center_size(const Group& G);

// Definitional count of ordered commuting pairs; serial reference and the
// OpenMP kernel it cross-checks against. Both equal k(G)·|G|.
std::uint64_t commuting_pair_count_serial(const Group& G);
std::uint64_t commuting_pair_count(const Group& G);

// True iff multiplication by ζ (order n) is GF(q)-irreducible on GF(q^m),
// i.e. <ζ> fixes no proper nonzero subspace: min_poly_degree(ζ) == m.
bool action_is_simple(std::uint64_t q, unsigned m, std::uint64_t n);

struct GroupStats {
    std::uint64_t order = 0;
    std::uint64_t class_count = 0;
    Rational pr;
    std::uint64_t derived_size = 0;
    std::uint64_t center_size = 0;
};

GroupStats compute_stats(const Group& G, const SearchCaps& caps = {});

} // namespace sb
