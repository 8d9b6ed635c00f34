#include "sharpbounds/finitefield.hpp"

#include <algorithm>

#include "sharpbounds/numtheory.hpp"

namespace sb {

namespace {


// --- GF(q)[x] arithmetic on raw coefficient vectors (ascending degree) ------

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint64_t q) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % q;
    }
    return out;
}

// a mod f, f monic
Coeffs poly_mod(Coeffs a, const Coeffs& f, std::uint64_t q) {
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (lead != 0)
            for (std::size_t i = 0; i < df; ++i) {
                std::uint64_t sub = lead * f[i] % q;
                std::uint64_t& t = a[shift + i];
                t = (t + q - sub) % q;
            }
        a.pop_back();
        trim(a);
        if (a.size() <= df) break;
    }
    trim(a);
    return a;
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& f, std::uint64_t q) {
    Coeffs r = {1};
    base = poly_mod(std::move(base), f, q);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base, q), f, q);
        base = poly_mod(poly_mul(base, base, q), f, q);
        e >>= 1;
    }
    return r;
}

Coeffs poly_sub(Coeffs a, const Coeffs& b, std::uint64_t q) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + q - b[i]) % q;
    trim(a);
    return a;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) { return powmod_u64(a, q - 2, q); }

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint64_t q) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // reduce a mod b after making b monic
        std::uint64_t inv = inv_mod(b.back(), q);
        for (auto& c : b) c = c * inv % q;
        a = poly_mod(std::move(a), b, q);
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::uint64_t inv = inv_mod(a.back(), q);
        for (auto& c : a) c = c * inv % q;
    }
    return a;
}

bool is_irreducible(const Coeffs& f, std::uint64_t q, unsigned m) {
    // x^(q^(m/s)) for prime s | m must be coprime to f; x^(q^m) must fold
    // back to x.  Iterate t <- t^q starting from t = x.
    Coeffs x = {0, 1};
    if (f[0] == 0 && m > 1) return false; // x divides f
    Coeffs t = poly_mod(x, f, q);
    auto mdivs = factorize_u64(m);
    for (unsigned i = 1; i <= m; ++i) {
        t = poly_powmod(std::move(t), q, f, q);
        for (const auto& [s, e] : mdivs) {
            if (i == m / s) {
                Coeffs g = poly_gcd(poly_sub(t, x, q), f, q);
                if (!(g.size() == 1 && g[0] == 1)) return false;
            }
        }
    }
    return t == poly_mod(x, f, q);
}

} // namespace

void Poly::normalize() {
    if (q == 0) throw domain_error("Poly: coefficient prime not set");
    for (auto& c : coeffs) c %= q;
    trim(coeffs);
}

std::string Poly::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        std::uint64_t c = coeffs[d];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (d == 0 || c != 1) out += std::to_string(c);
        if (d >= 1) out += "x";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

Poly find_irreducible(std::uint64_t q, unsigned m) {
    if (!is_prime_u64(q)) throw domain_error("find_irreducible: q must be prime");
    if (m < 1) throw domain_error("find_irreducible: m must be >= 1");

    std::uint64_t span = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (span > kFieldOrderLimit / q)
            throw magnitude_exceeded("find_irreducible: q^m beyond supported size");
        span *= q;
    }

    for (std::uint64_t v = 0; v < span; ++v) {
        Coeffs f(m + 1, 0);
        std::uint64_t rest = v;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = rest % q;
            rest /= q;
        }
        f[m] = 1;
        if (is_irreducible(f, q, m)) {
            Poly p;
            p.q = q;
            p.coeffs = std::move(f);
            return p;
        }
    }
    throw std::logic_error("find_irreducible: no irreducible found"); // unreachable
}

Field::Field(std::uint64_t q, unsigned m) : q_(q), m_(m) {
    modulus_ = find_irreducible(q, m); // validates q, m, and the size limit
    order_ = 1;
    for (unsigned i = 0; i < m; ++i) order_ *= q;

    // reduction rows x^(m+i) mod modulus for products of degree up to 2m-2
    red_.resize(m > 0 ? m - 1 : 0);
    Coeffs cur(modulus_.coeffs.begin(), modulus_.coeffs.end() - 1); // x^m = -(low part)
    for (auto& c : cur) c = (q - c) % q;
    for (unsigned i = 0; i + 1 < m; ++i) {
        red_[i] = cur;
        // multiply by x, reduce the spilled x^m via itself
        Coeffs nxt(m, 0);
        std::uint64_t spill = cur[m - 1];
        for (unsigned j = m - 1; j >= 1; --j) nxt[j] = cur[j - 1];
        nxt[0] = 0;
        if (spill != 0)
            for (unsigned j = 0; j < m; ++j) nxt[j] = (nxt[j] + spill * red_[0][j]) % q;
        cur = std::move(nxt);
    }
}

Poly Field::rep(std::uint64_t rank) const {
    if (rank >= order_) throw domain_error("Field::rep: rank out of range");
    Poly p;
    p.q = q_;
    p.coeffs.resize(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        p.coeffs[i] = rank % q_;
        rank /= q_;
    }
    p.normalize();
    return p;
}

std::uint64_t Field::rank_of(const Poly& p) const {
    if (p.q != q_) throw domain_error("Field::rank_of: wrong coefficient prime");
    if (p.degree() >= static_cast<int>(m_)) throw domain_error("Field::rank_of: degree too high");
    std::uint64_t rank = 0, pw = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t c = i < p.coeffs.size() ? p.coeffs[i] % q_ : 0;
        rank += c * pw;
        pw *= q_;
    }
    return rank;
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0, pw = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += (a % q_ + b % q_) % q_ * pw;
        a /= q_;
        b /= q_;
        pw *= q_;
    }
    return out;
}

std::uint64_t Field::neg(std::uint64_t a) const {
    std::uint64_t out = 0, pw = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += (q_ - a % q_) % q_ * pw;
        a /= q_;
        pw *= q_;
    }
    return out;
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) return a * b % q_;

    std::uint64_t da[64], db[64];
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = a % q_;
        a /= q_;
        db[i] = b % q_;
        b /= q_;
    }
    std::uint64_t prod[128] = {0};
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % q_;
    }
    for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
        std::uint64_t c = prod[d];
        if (c == 0) continue;
        const auto& row = red_[d - m_];
        for (unsigned j = 0; j < m_; ++j) prod[j] = (prod[j] + c * row[j]) % q_;
    }
    std::uint64_t out = 0, pw = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += prod[i] * pw;
        pw *= q_;
    }
    return out;
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1; // rank of the constant 1
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElement Field::element(std::uint64_t rank) const {
    if (rank >= order_) throw domain_error("Field::element: rank out of range");
    return {this, rank};
}

const Field& FieldElement::field() const {
    if (!field_) throw domain_error("FieldElement: default-constructed");
    return *field_;
}

Poly FieldElement::rep() const { return field().rep(rank_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (field_ == nullptr || field_ != o.field_)
        throw domain_error("FieldElement: mixed-field arithmetic");
    return {field_, field_->add(rank_, o.rank_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (field_ == nullptr || field_ != o.field_)
        throw domain_error("FieldElement: mixed-field arithmetic");
    return {field_, field_->mul(rank_, o.rank_)};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    return {field_, field().pow(rank_, e)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.rank_ == b.rank_;
}

FieldElement element_of_order(const Field& F, std::uint64_t n) {
    if (n < 1) throw domain_error("element_of_order: n must be >= 1");
    if ((F.order() - 1) % n != 0)
        throw domain_error("element_of_order: n does not divide q^m - 1");

    if (n == 1) return F.one();

    const std::uint64_t exp = (F.order() - 1) / n;
    const auto nf = factorize_u64(n);
    for (std::uint64_t g = 2; g < F.order(); ++g) {
        std::uint64_t z = F.pow(g, exp);
        bool full = true;
        for (const auto& [s, e] : nf) {
            if (F.pow(z, n / s) == 1) {
                full = false;
                break;
            }
        }
        if (full) return F.element(z);
    }
    throw std::logic_error("element_of_order: no element found"); // unreachable
}

unsigned min_poly_degree(const Field& F, const FieldElement& z) {
    if (&z.field() != &F) throw domain_error("min_poly_degree: element of a different field");
    if (z.rank() == 0) throw domain_error("min_poly_degree: z must be nonzero");
    unsigned d = 0;
    std::uint64_t w = z.rank();
    do {
        w = F.pow(w, F.characteristic());
        ++d;
    } while (w != z.rank());
    return d;
}

} // namespace sb
