#pragma once

#include <optional>
#include <string_view>

#include "sharpbounds/config.hpp"
#include "sharpbounds/numtheory.hpp"

namespace sb {

// min T(p, l) where T(p, l) = { q^r : q prime > p, r >= l, ord_p(q) = r }.
// l = 1 gives t(p), l = 2 gives r(p).
struct ZsigmondyMinimum {
    Int p;
    int l = 1;
    PrimePower witness; // the q^r attaining the minimum
    Int value;          // == witness.value
};

enum class BoundKind { fn, fs, gn, gs, hn, hs };

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view s);

// One computed threshold plus the data certifying it.
struct BoundReport {
    Int p;
    BoundKind kind = BoundKind::fn;
    Rational value;

    // fn/fs/gn/gs: prime attaining the maximum (equals p for fn/fs) and its
    // Zsigmondy minimum
    std::optional<Int> maximizer;
    std::optional<ZsigmondyMinimum> zsig;

    // hn/hs: the search result k (resp. l) with 2k+1 = q^r
    std::optional<Int> search_value;
    std::optional<PrimePower> odd_prime_power;
    // the search accepted a power of p itself (q = p is allowed, q > p is not
    // required here, unlike in T(p, l)); surfaced because it is a boundary case
    bool q_equals_p = false;
};

// Output of the arithmetic-progression construction: a prime q = 2n+1 > p
// found in the progression 2k(p-1)# + (2a+1), giving l = n(4n^2+6n+3) with
// 2l+1 = q^3 and no prime below p dividing l.
struct KerrWitness {
    Int p;
    Int a; // residue of n modulo (p-1)#
    Int n; // (q-1)/2
    Int q; // the prime found in the progression
    Int l; // n(4n^2 + 6n + 3)
};

// p is Zsigmondy for (q, r): ord_p(q) = r exactly (p prime, p not dividing q).
bool is_zsigmondy(const Int& p, const Int& q, const Int& r);

ZsigmondyMinimum zsig_min(const Int& p, int l, const SearchCaps& caps = {});

// f_n(p) = (1 + (p^2-1)/t(p)) / p^2 and the r(p) analogue f_s.
Rational f_n(const Int& p, const SearchCaps& caps = {});
Rational f_s(const Int& p, const SearchCaps& caps = {});

// g_n(p) = max over primes q >= p of f_n(q); likewise g_s from f_s.  The scan
// window is exact: f(q) <= 1/q, so primes q with q*num >= den of the current
// best cannot improve it.
BoundReport g_n(const Int& p, const SearchCaps& caps = {});
BoundReport g_s(const Int& p, const SearchCaps& caps = {});

// Least m > 1 with spf(m) >= p and 2m+1 = q^r for a prime q >= p, r >= 1
// (k_search) or r >= 2 (l_search).
Int k_search(const Int& p, const SearchCaps& caps = {});
Int l_search(const Int& p, const SearchCaps& caps = {});

// h_n(p) = 3k(p)/(k(p)+2); h_s(p) = 3l(p)/(l(p)+2) for p > 3.
BoundReport h_n(const Int& p, const SearchCaps& caps = {});
BoundReport h_s(const Int& p, const SearchCaps& caps = {});

// f(t, r) = t(r+1)/(t+r); nondecreasing in each argument (strictly in t,
// strictly in r once t >= 2; f(1, r) = 1 for every r).
Rational f_tr(const Int& t, const Int& r);

KerrWitness kerr_witness(const Int& p, const SearchCaps& caps = {});

// dispatch by kind (CLI entry point)
BoundReport bound_report(const Int& p, BoundKind kind, const SearchCaps& caps = {});

} // namespace sb
