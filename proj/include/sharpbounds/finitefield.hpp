#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sharpbounds/errors.hpp"

namespace sb {

// Largest representable field: explicit arithmetic needs O(q^m) tables.
inline constexpr std::uint64_t kFieldOrderLimit = 10'000'000;

// Polynomial over GF(q), coefficients ascending by degree, no trailing zeros.
// The coefficient prime rides along so values are self-describing.
struct Poly {
    std::uint64_t q = 0;
    std::vector<std::uint64_t> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; } // -1 for 0
    bool is_zero() const { return coeffs.empty(); }
    void normalize();

    // "x^3 + 2x + 1"
    std::string str() const;

    friend bool operator==(const Poly&, const Poly&) = default;
};

class Field;

// Element of GF(q^m), held by rank: rank = sum coeffs[i] q^i in [0, q^m).
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field* f, std::uint64_t rank) : field_(f), rank_(rank) {}

    std::uint64_t rank() const { return rank_; }
    const Field& field() const;
    Poly rep() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement pow(std::uint64_t e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    const Field* field_ = nullptr;
    std::uint64_t rank_ = 0;
};

// GF(q^m) as GF(q)[x] modulo the lexicographically least monic irreducible
// of degree m.  Arithmetic is exposed on ranks for the hot paths; supported
// orders go up to 10^7.
class Field {
public:
    Field(std::uint64_t q, unsigned m);

    std::uint64_t characteristic() const { return q_; }
    unsigned degree() const { return m_; }
    std::uint64_t order() const { return order_; } // q^m
    const Poly& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement element(std::uint64_t rank) const;

    Poly rep(std::uint64_t rank) const;
    std::uint64_t rank_of(const Poly& p) const;

private:
    std::uint64_t q_ = 0;
    unsigned m_ = 0;
    std::uint64_t order_ = 0;
    Poly modulus_;
    std::vector<std::vector<std::uint64_t>> red_; // x^(m+i) mod modulus
};

// Least monic irreducible of degree m over GF(q), ordering candidates
// x^m + c by the base-q value of the lower coefficient block c.
Poly find_irreducible(std::uint64_t q, unsigned m);

// Element of multiplicative order n, for n | q^m - 1: scan g = 2, 3, ...,
// take z = g^((q^m-1)/n) and accept once z^(n/s) != 1 for every prime s | n.
FieldElement element_of_order(const Field& F, std::uint64_t n);

// Degree of the minimal polynomial of z over GF(q): the size of the
// Frobenius orbit {z, z^q, z^(q^2), ...}.  Requires z != 0.
unsigned min_poly_degree(const Field& F, const FieldElement& z);

} // namespace sb
