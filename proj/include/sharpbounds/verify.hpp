#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sharpbounds/bounds.hpp"
#include "sharpbounds/config.hpp"
#include "sharpbounds/numtheory.hpp"

namespace sb {

// A: nilpotency via Pr, B: supersolvability via Pr,
// C: nilpotency via acd, D: supersolvability via acd.
enum class TheoremId { A, B, C, D };

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view s);

// Sharpness of one bound at one prime: the bound and the witness group's
// independently computed value (brute-force Pr for A/B, orbit-method acd
// for C/D) must coincide exactly.
struct SharpnessReport {
    Int p;
    TheoremId theorem = TheoremId::A;
    Rational bound_value;
    std::string witness_label;
    Int witness_order;
    Rational witness_value;
    bool match = false;
    bool skipped = false; // witness exceeded a cap; reported distinctly from a mismatch
    std::string notes;
};

SharpnessReport verify_theorem_A(const Int& p, const SearchCaps& caps = {});
SharpnessReport verify_theorem_B(const Int& p, const SearchCaps& caps = {});
SharpnessReport verify_theorem_C(const Int& p, const SearchCaps& caps = {});
SharpnessReport verify_theorem_D(const Int& p, const SearchCaps& caps = {});
SharpnessReport verify_theorem(TheoremId id, const Int& p, const SearchCaps& caps = {});

// One row of the sweep: t(p) vs the least prime ≡ 1 (mod p), and r(p) vs the
// square of the least prime ≡ -1 (mod p), each side computed independently.
struct ConjectureReport {
    Int p;
    Int t_p;  // zsig_min(p, 1)
    Int p1;   // least_prime_in_ap(1, p)
    Int r_p;  // zsig_min(p, 2)
    Int p2;   // least_prime_in_ap(p-1, p)
    Int p2_sq;
    bool part_a_match = false; // t_p == p1
    bool part_b_match = false; // r_p == p2_sq
    std::string notes;
};

ConjectureReport conjecture_check(const Int& p, const SearchCaps& caps = {});

// All odd primes p <= p_max in ascending order. jobs > 1 partitions the
// primes across OpenMP workers; jobs == 1 is the serial reference path.
// Cap exhaustion anywhere aborts the sweep naming the offending prime.
std::vector<ConjectureReport> conjecture_sweep(const Int& p_max, const SearchCaps& caps = {},
                                               unsigned jobs = 1);

} // namespace sb
