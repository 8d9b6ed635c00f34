#include "sharpbounds/bounds.hpp"

#include <bit>
#include <queue>
#include <stdexcept>

namespace sb {

namespace {

void require_odd_prime(const Int& p, const char* who) {
    if (!is_prime(p) || p == 2) throw domain_error(std::string(who) + ": p must be an odd prime");
}

unsigned bitlen_u64(std::uint64_t v) {
    return 64u - static_cast<unsigned>(std::countl_zero(v));
}

} // namespace

std::string_view to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::fn: return "fn";
        case BoundKind::fs: return "fs";
        case BoundKind::gn: return "gn";
        case BoundKind::gs: return "gs";
        case BoundKind::hn: return "hn";
        case BoundKind::hs: return "hs";
    }
    return "?";
}

std::optional<BoundKind> parse_bound_kind(std::string_view s) {
    if (s == "fn") return BoundKind::fn;
    if (s == "fs") return BoundKind::fs;
    if (s == "gn") return BoundKind::gn;
    if (s == "gs") return BoundKind::gs;
    if (s == "hn") return BoundKind::hn;
    if (s == "hs") return BoundKind::hs;
    return std::nullopt;
}

bool is_zsigmondy(const Int& p, const Int& q, const Int& r) {
    if (!is_prime(p)) throw domain_error("is_zsigmondy: p must be prime");
    if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t()))
        throw domain_error("is_zsigmondy: p divides q");
    return mult_order(q, p) == r;
}

ZsigmondyMinimum zsig_min(const Int& p, int l, const SearchCaps& caps) {
    require_odd_prime(p, "zsig_min");
    if (l != 1 && l != 2) throw domain_error("zsig_min: l must be 1 or 2");
    if (!p.fits_ulong_p()) throw magnitude_exceeded("zsig_min: p too large to scan");

    const std::uint64_t pu = p.get_ui();
    const auto pm1 = factorize_u64(pu - 1);

    Int best;       // 0 = none yet
    std::uint64_t best_q = 0;
    std::uint64_t best_d = 0;

    PrimeStream qs(pu + 1);
    for (std::uint64_t scanned = 0; scanned < caps.prime_scan_cap; ++scanned) {
        const std::uint64_t q = qs.next();
        if (best_q != 0) {
            // every candidate from q onward is q^d with d >= l
            Int ql(static_cast<unsigned long>(q));
            if (l == 2) ql *= static_cast<unsigned long>(q);
            if (ql >= best) {
                return {p, l, PrimePower::make(Int(static_cast<unsigned long>(best_q)),
                                               static_cast<unsigned>(best_d)),
                        best};
            }
        }
        const std::uint64_t d = mult_order_u64(q, pu, pm1);
        if (d < static_cast<std::uint64_t>(l)) continue;

        // q^d can only matter if its bit length does not already exceed the
        // best value's: q^d >= 2^(d*(bitlen(q)-1))
        if (best_q != 0) {
            const std::size_t best_bits = mpz_sizeinbase(best.get_mpz_t(), 2);
            if (d * (bitlen_u64(q) - 1) >= best_bits) continue;
        }
        Int cand;
        mpz_ui_pow_ui(cand.get_mpz_t(), q, d);
        if (best_q == 0 || cand < best) {
            best = cand;
            best_q = q;
            best_d = d;
        }
    }
    throw cap_exhausted("zsig_min: prime scan cap exhausted");
}

namespace {

BoundReport f_report(const Int& p, int l, BoundKind kind, const SearchCaps& caps) {
    ZsigmondyMinimum zm = zsig_min(p, l, caps);
    BoundReport r;
    r.p = p;
    r.kind = kind;
    const Int p2 = p * p;
    r.value = Rational(zm.value + p2 - 1, zm.value * p2); // (1 + (p^2-1)/T)/p^2
    r.maximizer = p;
    r.zsig = std::move(zm);
    return r;
}

BoundReport g_report(const Int& p, int l, BoundKind kind, const SearchCaps& caps) {
    require_odd_prime(p, "g bound");
    BoundKind fkind = (l == 1) ? BoundKind::fn : BoundKind::fs;
    BoundReport best = f_report(p, l, fkind, caps);

    PrimeStream qs(p.get_ui() + 1);
    for (std::uint64_t scanned = 0; scanned < caps.prime_scan_cap; ++scanned) {
        const Int q(static_cast<unsigned long>(qs.next()));
        // f(q) <= 1/q, so q * num >= den means q cannot beat the running max
        if (q * best.value.num() >= best.value.den()) {
            best.kind = kind;
            best.p = p;
            return best;
        }
        BoundReport cand = f_report(q, l, fkind, caps);
        if (cand.value > best.value) best = std::move(cand);
    }
    throw cap_exhausted("g bound: prime scan cap exhausted");
}

struct PpSearchResult {
    Int m;
    PrimePower pp; // 2m+1 = q^r
    bool q_equals_p;
};

// Walk prime powers q^r (q >= p prime, r >= min_r) in increasing value and
// return the first with m = (q^r - 1)/2 > 1 and spf(m) >= p.
PpSearchResult odd_pp_search(const Int& p, unsigned min_r, const SearchCaps& caps) {
    require_odd_prime(p, "prime-power search");
    const std::uint64_t cap = caps.pp_value_cap;
    const std::uint64_t pu = p.get_ui();

    struct Ent {
        std::uint64_t value, q;
        unsigned r;
        bool operator>(const Ent& o) const { return value > o.value; }
    };
    std::priority_queue<Ent, std::vector<Ent>, std::greater<>> heap;

    // q^e, or 0 on overflow past the cap
    auto checked_pow = [cap](std::uint64_t q, unsigned e) -> std::uint64_t {
        unsigned __int128 v = 1;
        for (unsigned i = 0; i < e; ++i) {
            v *= q;
            if (v > cap) return 0;
        }
        return static_cast<std::uint64_t>(v);
    };

    PrimeStream bases(pu);
    std::uint64_t top_base = bases.next(); // == p
    bool more_bases = true;
    if (std::uint64_t v0 = checked_pow(top_base, min_r))
        heap.push({v0, top_base, min_r});
    else
        more_bases = false; // even the smallest base overflows the cap

    while (!heap.empty()) {
        const Ent e = heap.top();
        heap.pop();

        // keep one base beyond the largest we have popped, so ordering holds
        if (e.q == top_base && more_bases) {
            const std::uint64_t nb = bases.next();
            if (std::uint64_t v0 = checked_pow(nb, min_r)) {
                heap.push({v0, nb, min_r});
                top_base = nb;
            } else {
                more_bases = false;
            }
        }
        if (std::uint64_t up = checked_pow(e.q, e.r + 1)) heap.push({up, e.q, e.r + 1});

        const std::uint64_t m = (e.value - 1) / 2;
        if (m <= 1) continue;
        if (smallest_prime_factor(Int(static_cast<unsigned long>(m))) >= p) {
            return {Int(static_cast<unsigned long>(m)),
                    PrimePower::make(Int(static_cast<unsigned long>(e.q)), e.r), e.q == pu};
        }
    }
    throw cap_exhausted("prime-power search: value cap exhausted");
}

BoundReport h_report(const Int& p, unsigned min_r, BoundKind kind, const SearchCaps& caps) {
    PpSearchResult res = odd_pp_search(p, min_r, caps);
    BoundReport r;
    r.p = p;
    r.kind = kind;
    r.value = Rational(3 * res.m, res.m + 2);
    r.search_value = res.m;
    r.odd_prime_power = std::move(res.pp);
    r.q_equals_p = res.q_equals_p;
    return r;
}

} // namespace

Rational f_n(const Int& p, const SearchCaps& caps) {
    require_odd_prime(p, "f_n");
    return f_report(p, 1, BoundKind::fn, caps).value;
}

Rational f_s(const Int& p, const SearchCaps& caps) {
    require_odd_prime(p, "f_s");
    return f_report(p, 2, BoundKind::fs, caps).value;
}

BoundReport g_n(const Int& p, const SearchCaps& caps) {
    return g_report(p, 1, BoundKind::gn, caps);
}

BoundReport g_s(const Int& p, const SearchCaps& caps) {
    return g_report(p, 2, BoundKind::gs, caps);
}

Int k_search(const Int& p, const SearchCaps& caps) {
    return odd_pp_search(p, 1, caps).m;
}

Int l_search(const Int& p, const SearchCaps& caps) {
    return odd_pp_search(p, 2, caps).m;
}

BoundReport h_n(const Int& p, const SearchCaps& caps) {
    require_odd_prime(p, "h_n");
    return h_report(p, 1, BoundKind::hn, caps);
}

BoundReport h_s(const Int& p, const SearchCaps& caps) {
    if (!is_prime(p) || p <= 3) throw domain_error("h_s: p must be a prime > 3");
    return h_report(p, 2, BoundKind::hs, caps);
}

Rational f_tr(const Int& t, const Int& r) {
    if (t < 1 || r < 1) throw domain_error("f_tr: t and r must be >= 1");
    return Rational(t * (r + 1), t + r);
}

KerrWitness kerr_witness(const Int& p, const SearchCaps& caps) {
    if (!is_prime(p)) throw domain_error("kerr_witness: p must be prime");
    if (p > 100'000'000) throw magnitude_exceeded("kerr_witness: primorial sieve bound exceeded");

    // n = -1 mod every prime r < p keeps those r away from n and from
    // 4n^2+6n+3 (which is = 1 mod r at n = -1)
    std::vector<std::pair<Int, Int>> congruences;
    for (std::uint64_t r : primes_up_to(p.get_ui() - 1))
        congruences.emplace_back(Int(static_cast<unsigned long>(r - 1)),
                                 Int(static_cast<unsigned long>(r)));
    const Int a = crt(congruences);
    const Int modulus = (p == 2) ? Int(1) : primorial(p - 1);

    const Int step = 2 * modulus;
    Int q = 2 * a + 1 - step;
    bool found = false;
    for (std::uint64_t k = 0; k < caps.prime_scan_cap; ++k) {
        q += step;
        if (q > p && is_prime(q)) {
            found = true;
            break;
        }
    }
    if (!found) throw cap_exhausted("kerr_witness: progression scan cap exhausted");

    KerrWitness w;
    w.p = p;
    w.a = a;
    w.q = q;
    w.n = (q - 1) / 2;
    w.l = w.n * (4 * w.n * w.n + 6 * w.n + 3);

    Int cube = q * q * q;
    if (2 * w.l + 1 != cube) throw std::logic_error("kerr_witness: 2l+1 != q^3");
    Int g;
    mpz_gcd(g.get_mpz_t(), w.l.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) throw std::logic_error("kerr_witness: l shares a factor below p");
    return w;
}

BoundReport bound_report(const Int& p, BoundKind kind, const SearchCaps& caps) {
    switch (kind) {
        case BoundKind::fn: return f_report(p, 1, BoundKind::fn, caps);
        case BoundKind::fs: return f_report(p, 2, BoundKind::fs, caps);
        case BoundKind::gn: return g_n(p, caps);
        case BoundKind::gs: return g_s(p, caps);
        case BoundKind::hn: return h_n(p, caps);
        case BoundKind::hs: return h_s(p, caps);
    }
    throw domain_error("bound_report: unknown kind");
}

} // namespace sb
