#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sharpbounds/config.hpp"
#include "sharpbounds/errors.hpp"

namespace sb {

// Arbitrary-precision integer.  Searches themselves stay in machine words
// where they can; Int is the interchange type for values that grow.
using Int = mpz_class;

// Exact rational, always in canonical form: gcd(num, den) = 1, den > 0.
// Equality is structural; all arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    // "num/den", or just "num" when den == 1
    std::string str() const;

    // Fixed-point decimal approximation, truncated toward zero.  For display
    // only; never used in comparisons.
    std::string decimal(std::size_t frac_digits = 12) const;

private:
    mpq_class v_;
};

// q^e with q prime, e >= 1; value = q^e kept alongside.
struct PrimePower {
    Int base;
    unsigned exponent = 1;
    Int value;

    static PrimePower make(const Int& base, unsigned exponent);
};

// Factor list sorted by prime, exponents >= 1.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;

    Int value() const;
};

// --- primality and factoring ------------------------------------------------

// Deterministic Miller-Rabin (witness base 2..37, certified below
// 318665857834031151167461 ~ 3.19e23).  Throws magnitude_exceeded above that.
bool is_prime(const Int& n);
bool is_prime_u64(std::uint64_t n);

// Least prime factor of n >= 2, by trial division (after a primality check,
// so prime inputs return immediately).  Throws magnitude_exceeded if the
// divisor scan would exceed 10^8.
Int smallest_prime_factor(const Int& n);

// Full factorization by trial division; same magnitude limit as above.
Factorization factorize(const Int& n);

// Product of all primes <= n, for n >= 1 (empty product = 1).
Int primorial(const Int& n);

// --- modular / multiplicative -----------------------------------------------

// Multiplicative order of q modulo the prime p (requires p not dividing q).
// Computed by divisor descent from p-1, so exact, never a scan.
Int mult_order(const Int& q, const Int& p);

// Least prime in the arithmetic progression a+d, a+2d, ... for 0 < a < d,
// gcd(a, d) = 1.  Dirichlet guarantees existence; the scan_cap bounds how
// many terms we are willing to test before raising cap_exhausted.
Int least_prime_in_ap(const Int& a, const Int& d,
                      std::uint64_t scan_cap = SearchCaps{}.prime_scan_cap);

// (q, r) with n = q^r, q prime, if n is a prime power (n >= 2).
std::optional<PrimePower> as_prime_power(const Int& n);

// Simultaneous congruences x = r_i (mod m_i) with pairwise coprime moduli;
// returns the least non-negative solution.  Non-coprime moduli are an error
// even when the system happens to be consistent.
Int crt(const std::vector<std::pair<Int, Int>>& congruences);

// --- machine-word helpers -----------------------------------------------------
// Hot-loop variants for callers that stay within 64 bits (the prime scans).

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m);
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);
std::uint64_t mult_order_u64(std::uint64_t q, std::uint64_t p,
                             const std::vector<std::pair<std::uint64_t, unsigned>>& pm1_factors);

// --- prime streams ------------------------------------------------------------

// All primes <= n, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Ascending stream of primes >= low, via a segmented sieve.  Used by the
// scans, which do not know their endpoint in advance.
class PrimeStream {
public:
    explicit PrimeStream(std::uint64_t low = 2);
    std::uint64_t next();

private:
    void refill();

    std::uint64_t segment_lo_;
    std::vector<std::uint64_t> base_primes_;
    std::vector<std::uint64_t> buffer_;
    std::size_t pos_ = 0;
};

} // namespace sb
