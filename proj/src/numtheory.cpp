#include "sharpbounds/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cstddef>

namespace sb {

namespace {

// Witness base certified deterministic below kMillerRabinBound
// (Sorenson & Webster).  That bound comfortably exceeds 2^64.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const Int& miller_rabin_bound() {
    static const Int bound("318665857834031151167461");
    return bound;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

} // namespace

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t w : kWitnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    // n odd, > 37 here; write n-1 = d * 2^s
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t w : kWitnesses) {
        std::uint64_t x = powmod_u64(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (sgn(n) < 0) throw domain_error("is_prime: negative input");
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    if (n >= miller_rabin_bound())
        throw magnitude_exceeded("is_prime: input beyond deterministic witness bound");

    if (mpz_even_p(n.get_mpz_t())) return false;
    for (std::uint64_t w : kWitnesses)
        if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;

    Int d = n - 1;
    int s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    Int x, nm1 = n - 1;
    for (std::uint64_t w : kWitnesses) {
        Int base(static_cast<unsigned long>(w));
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

constexpr std::uint64_t kTrialDivisorLimit = 100'000'000;

// trial division core shared by smallest_prime_factor / factorize;
// returns the least divisor in [5, limit] of form 6k+-1, or 0
std::uint64_t least_six_k_divisor(const Int& n, const Int& isqrt_n) {
    std::uint64_t d = 5;
    int step = 2; // alternates 2, 4: 5, 7, 11, 13, ...
    while (Int(static_cast<unsigned long>(d)) <= isqrt_n) {
        if (d > kTrialDivisorLimit)
            throw magnitude_exceeded("trial division: divisor scan limit reached");
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return d;
        d += step;
        step = 6 - step;
    }
    return 0;
}

} // namespace

Int smallest_prime_factor(const Int& n) {
    if (n < 2) throw domain_error("smallest_prime_factor: n must be >= 2");
    if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) return 2;
    if (mpz_divisible_ui_p(n.get_mpz_t(), 3)) return 3;
    if (is_prime(n)) return n;
    Int isqrt_n;
    mpz_sqrt(isqrt_n.get_mpz_t(), n.get_mpz_t());
    std::uint64_t d = least_six_k_divisor(n, isqrt_n);
    if (d == 0)
        throw magnitude_exceeded("smallest_prime_factor: no factor within divisor limit");
    return Int(static_cast<unsigned long>(d));
}

Factorization factorize(const Int& n) {
    if (n < 1) throw domain_error("factorize: n must be >= 1");
    Factorization out;
    Int rest = n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    while (rest > 1) {
        if (is_prime(rest)) {
            strip(Int(rest)); // copy: strip mutates rest while dividing
            break;
        }
        Int isqrt_rest;
        mpz_sqrt(isqrt_rest.get_mpz_t(), rest.get_mpz_t());
        std::uint64_t d = least_six_k_divisor(rest, isqrt_rest);
        if (d == 0)
            throw magnitude_exceeded("factorize: no factor within divisor limit");
        strip(Int(static_cast<unsigned long>(d)));
    }
    return out;
}

Int Factorization::value() const {
    Int v = 1;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

Int primorial(const Int& n) {
    if (n < 1) throw domain_error("primorial: n must be >= 1");
    if (n > 100'000'000) throw magnitude_exceeded("primorial: sieve bound exceeded");
    Int out = 1;
    for (std::uint64_t p : primes_up_to(n.get_ui())) mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), p);
    return out;
}

namespace {

std::uint64_t order_from_factors(std::uint64_t q, std::uint64_t p,
                                 const std::vector<std::pair<std::uint64_t, unsigned>>& pm1) {
    std::uint64_t d = p - 1;
    for (const auto& [f, e] : pm1) {
        for (unsigned i = 0; i < e; ++i) {
            if (d % f == 0 && powmod_u64(q, d / f, p) == 1)
                d /= f;
            else
                break;
        }
    }
    return d;
}

} // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p : {2ull, 3ull}) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    std::uint64_t d = 5;
    int step = 2;
    while (d <= n / d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
        d += step;
        step = 6 - step;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t mult_order_u64(std::uint64_t q, std::uint64_t p,
                             const std::vector<std::pair<std::uint64_t, unsigned>>& pm1_factors) {
    return order_from_factors(q % p, p, pm1_factors);
}

Int mult_order(const Int& q, const Int& p) {
    if (!is_prime(p)) throw domain_error("mult_order: modulus must be prime");
    Int r = q % p;
    if (sgn(r) < 0) r += p;
    if (r == 0) throw domain_error("mult_order: p divides q");
    if (p == 2) return 1;

    if (p.fits_ulong_p()) {
        std::uint64_t pu = p.get_ui();
        return Int(static_cast<unsigned long>(
            order_from_factors(r.get_ui(), pu, factorize_u64(pu - 1))));
    }

    Factorization f = factorize(p - 1);
    Int d = p - 1;
    Int x;
    for (const auto& [pf, e] : f.factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (!mpz_divisible_p(d.get_mpz_t(), pf.get_mpz_t())) break;
            Int cand = d / pf;
            mpz_powm(x.get_mpz_t(), r.get_mpz_t(), cand.get_mpz_t(), p.get_mpz_t());
            if (x == 1)
                d = cand;
            else
                break;
        }
    }
    return d;
}

Int least_prime_in_ap(const Int& a, const Int& d, std::uint64_t scan_cap) {
    if (!(a > 0 && a < d)) throw domain_error("least_prime_in_ap: need 0 < a < d");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw domain_error("least_prime_in_ap: a and d must be coprime");

    Int x = a;
    for (std::uint64_t i = 0; i < scan_cap; ++i) {
        x += d;
        if (is_prime(x)) return x;
    }
    throw cap_exhausted("least_prime_in_ap: prime scan cap exhausted");
}

PrimePower PrimePower::make(const Int& base, unsigned exponent) {
    if (exponent < 1) throw domain_error("PrimePower: exponent must be >= 1");
    if (!is_prime(base)) throw domain_error("PrimePower: base must be prime");
    PrimePower pp;
    pp.base = base;
    pp.exponent = exponent;
    mpz_pow_ui(pp.value.get_mpz_t(), base.get_mpz_t(), exponent);
    return pp;
}

std::optional<PrimePower> as_prime_power(const Int& n) {
    if (n < 2) throw domain_error("as_prime_power: n must be >= 2");
    // Descend from the largest conceivable exponent: for n = q^r (q prime)
    // the exact s-th roots are exactly those with s | r, so the first exact
    // root found on the way down is q itself.  This avoids primality tests
    // on anything larger than n^(1/2) unless n has no proper exact root.
    auto max_r = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
    if (max_r == 0) max_r = 1; // n == 2 or 3
    Int root;
    for (unsigned r = max_r; r >= 1; --r) {
        int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), r);
        if (exact && is_prime(root)) return PrimePower::make(root, r);
        if (r == 1) break;
    }
    return std::nullopt;
}

Int crt(const std::vector<std::pair<Int, Int>>& congruences) {
    Int x = 0, modulus = 1;
    for (const auto& [r, m] : congruences) {
        if (m < 1) throw domain_error("crt: modulus must be >= 1");
        if (m == 1) continue;
        Int g;
        mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), m.get_mpz_t());
        if (g != 1) throw domain_error("crt: moduli must be pairwise coprime");
        // lift x across m: x + modulus*t with t = (r - x) / modulus (mod m)
        Int minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), m.get_mpz_t());
        Int t = ((r - x) * minv) % m;
        if (sgn(t) < 0) t += m;
        x += modulus * t;
        modulus *= m;
    }
    return x;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i * i <= n; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    for (std::uint64_t i = 2; i <= n; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

PrimeStream::PrimeStream(std::uint64_t low) : segment_lo_(std::max<std::uint64_t>(low, 2)) {}

std::uint64_t PrimeStream::next() {
    while (pos_ >= buffer_.size()) refill();
    return buffer_[pos_++];
}

void PrimeStream::refill() {
    constexpr std::uint64_t kSegment = 1u << 17;
    std::uint64_t lo = segment_lo_;
    std::uint64_t hi = lo + kSegment;

    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= hi - 1) ++root;
    if (base_primes_.empty() || base_primes_.back() < root) base_primes_ = primes_up_to(root);

    std::vector<bool> composite(kSegment, false);
    for (std::uint64_t p : base_primes_) {
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = true;
    }
    buffer_.clear();
    pos_ = 0;
    for (std::uint64_t v = lo; v < hi; ++v)
        if (v >= 2 && !composite[v - lo]) buffer_.push_back(v);
    segment_lo_ = hi;
}

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (sgn(o.v_) == 0) throw domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(std::size_t frac_digits) const {
    Int a = Int(v_.get_num());
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    const Int d = Int(v_.get_den());

    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits);
    Int whole = a / d;
    Int frac = (a % d) * scale / d;

    std::string fs = frac.get_str();
    if (fs.size() < frac_digits) fs.insert(fs.begin(), frac_digits - fs.size(), '0');
    return (neg ? "-" : "") + whole.get_str() + "." + fs;
}

} // namespace sb
