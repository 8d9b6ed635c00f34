#include "sharpbounds/groupengine.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>

#include "sharpbounds/errors.hpp"
#include "sharpbounds/finitefield.hpp"

namespace sb {

namespace {

void require_within_cap(const Group& G, const SearchCaps& caps) {
    if (G.size > caps.group_size_cap)
        throw cap_exhausted("group of order " + std::to_string(G.size) +
                            " exceeds group size cap " + std::to_string(caps.group_size_cap));
}

} // namespace

void Group::cache_tables() {
    if (size > kGroupTableLimit || !table_.empty()) return;
    table_.resize(size * size);
    inv_table_.resize(size);
    for (std::uint64_t a = 0; a < size; ++a) {
        for (std::uint64_t b = 0; b < size; ++b)
            table_[a * size + b] = static_cast<std::uint16_t>(mul_fn(a, b));
        inv_table_[a] = static_cast<std::uint16_t>(inv_fn(a));
    }
}

Group cyclic_group(std::uint64_t n) {
    if (n < 1) throw domain_error("cyclic_group: order must be >= 1");
    Group G;
    G.size = n;
    G.identity = 0;
    G.mul_fn = [n](std::uint64_t a, std::uint64_t b) { return (a + b) % n; };
    G.inv_fn = [n](std::uint64_t a) { return (n - a) % n; };
    if (n > 1) G.generators = {1};
    G.label = "C_" + std::to_string(n);
    return G;
}

Group affine_group(std::uint64_t q, unsigned m, std::uint64_t n) {
    struct Ctx {
        Field F;
        std::vector<std::uint64_t> zeta_pow; // rank of ζ^i, i < n
        std::uint64_t Q, n;
        Ctx(std::uint64_t q, unsigned m) : F(q, m), Q(F.order()), n(0) {}
    };
    auto ctx = std::make_shared<Ctx>(q, m);
    ctx->n = n;
    const std::uint64_t zeta = element_of_order(ctx->F, n).rank(); // checks n | q^m - 1
    ctx->zeta_pow.reserve(n);
    std::uint64_t zp = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        ctx->zeta_pow.push_back(zp);
        zp = ctx->F.mul(zp, zeta);
    }

    Group G;
    G.size = n * ctx->Q;
    G.identity = 0;
    G.mul_fn = [ctx](std::uint64_t x, std::uint64_t y) {
        const std::uint64_t a = x % ctx->Q, i = x / ctx->Q;
        const std::uint64_t b = y % ctx->Q, j = y / ctx->Q;
        const std::uint64_t k = i + j >= ctx->n ? i + j - ctx->n : i + j;
        return k * ctx->Q + ctx->F.add(a, ctx->F.mul(ctx->zeta_pow[i], b));
    };
    G.inv_fn = [ctx](std::uint64_t x) {
        const std::uint64_t a = x % ctx->Q, i = x / ctx->Q;
        const std::uint64_t k = (ctx->n - i) % ctx->n;
        return k * ctx->Q + ctx->F.neg(ctx->F.mul(ctx->zeta_pow[k], a));
    };
    // translations by the polynomial basis 1, x, ..., x^{m-1} (ranks q^j),
    // plus (0, ζ) when the complement is nontrivial
    std::uint64_t basis = 1;
    for (unsigned j = 0; j < m; ++j) {
        G.generators.push_back(basis);
        basis *= q;
    }
    if (n > 1) G.generators.push_back(ctx->Q);
    const std::string fld =
        m == 1 ? "GF(" + std::to_string(q) + ")"
               : "GF(" + std::to_string(q) + "^" + std::to_string(m) + ")";
    G.label = fld + "+ : C_" + std::to_string(n);
    return G;
}

Group direct_with_cyclic(std::uint64_t p, const Group& G) {
    if (p < 1) throw domain_error("direct_with_cyclic: cyclic order must be >= 1");
    auto inner = std::make_shared<const Group>(G);
    const std::uint64_t h = inner->size;

    Group D;
    D.size = p * h;
    D.identity = inner->identity;
    D.mul_fn = [inner, p, h](std::uint64_t x, std::uint64_t y) {
        const std::uint64_t c = (x / h + y / h) % p;
        return c * h + inner->mul(x % h, y % h);
    };
    D.inv_fn = [inner, p, h](std::uint64_t x) {
        const std::uint64_t c = (p - x / h) % p;
        return c * h + inner->inv(x % h);
    };
    if (p > 1) D.generators.push_back(h + inner->identity);
    for (std::uint64_t g : inner->generators) D.generators.push_back(g);
    D.label = "C_" + std::to_string(p) + " x " +
              (G.label.find(' ') == std::string::npos ? G.label : "(" + G.label + ")");
    return D;
}

std::uint64_t generated_subgroup_size(const Group& G, const std::vector<std::uint64_t>& gens) {
    std::vector<std::uint64_t> step;
    for (std::uint64_t g : gens) {
        step.push_back(g);
        step.push_back(G.inv(g));
    }
    std::vector<char> in(G.size, 0);
    in[G.identity] = 1;
    std::vector<std::uint64_t> members{G.identity};
    for (std::size_t k = 0; k < members.size(); ++k) {
        for (std::uint64_t s : step) {
            const std::uint64_t y = G.mul(members[k], s);
            if (!in[y]) {
                in[y] = 1;
                members.push_back(y);
            }
        }
    }
    return members.size();
}

std::vector<std::vector<std::uint64_t>> conjugacy_classes(const Group& G, const SearchCaps& caps) {
    require_within_cap(G, caps);
    // pairs (g, g^{-1}); closure under conj by generators suffices: the class
    // orbit is finite, so conj-by-g is a bijection on it and inverses come free
    std::vector<std::pair<std::uint64_t, std::uint64_t>> gens;
    for (std::uint64_t g : G.generators) gens.emplace_back(g, G.inv(g));

    std::vector<char> seen(G.size, 0);
    std::vector<std::vector<std::uint64_t>> classes;
    for (std::uint64_t x = 0; x < G.size; ++x) {
        if (seen[x]) continue;
        std::vector<std::uint64_t> cls{x};
        seen[x] = 1;
        for (std::size_t k = 0; k < cls.size(); ++k) {
            for (const auto& [g, gi] : gens) {
                const std::uint64_t y = G.mul(G.mul(gi, cls[k]), g);
                if (!seen[y]) {
                    seen[y] = 1;
                    cls.push_back(y);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

Rational commuting_probability(const Group& G, const SearchCaps& caps) {
    return Rational(conjugacy_classes(G, caps).size(), G.size);
}

std::uint64_t derived_subgroup_size(const Group& G, const SearchCaps& caps) {
    require_within_cap(G, caps);
    std::vector<char> in(G.size, 0), is_seed(G.size, 0);
    std::vector<std::uint64_t> members{G.identity}, seeds;
    in[G.identity] = 1;
    auto add_seed = [&](std::uint64_t s) {
        if (!is_seed[s]) {
            is_seed[s] = 1;
            seeds.push_back(s);
        }
    };
    for (std::uint64_t g : G.generators) {
        for (std::uint64_t h : G.generators) {
            const std::uint64_t c = G.mul(G.mul(G.inv(g), G.inv(h)), G.mul(g, h));
            add_seed(c);
            add_seed(G.inv(c));
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;
        // subgroup closure: members are exactly the products of seeds
        for (std::size_t k = 0; k < members.size(); ++k) {
            for (std::uint64_t s : seeds) {
                const std::uint64_t y = G.mul(members[k], s);
                if (!in[y]) {
                    in[y] = 1;
                    members.push_back(y);
                }
            }
        }
        // normality: pull in generator conjugates, then re-close
        const std::size_t frozen = members.size();
        for (std::size_t k = 0; k < frozen; ++k) {
            for (std::uint64_t g : G.generators) {
                const std::uint64_t c = G.conj(members[k], g);
                if (!in[c]) {
                    add_seed(c);
                    add_seed(G.inv(c));
                    changed = true;
                }
            }
        }
    }
    return members.size();
}

std::uint64_t center_size(const Group& G) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < G.size; ++x) {
        bool central = true;
        for (std::uint64_t g : G.generators) {
            if (G.mul(x, g) != G.mul(g, x)) {
                central = false;
                break;
            }
        }
        count += central;
    }
    return count;
}

std::uint64_t commuting_pair_count_serial(const Group& G) {
    std::uint64_t total = 0;
    for (std::uint64_t x = 0; x < G.size; ++x)
        for (std::uint64_t y = 0; y < G.size; ++y)
            total += G.mul(x, y) == G.mul(y, x);
    return total;
}

std::uint64_t commuting_pair_count(const Group& G) {
    const std::int64_t n = static_cast<std::int64_t>(G.size);
    std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::int64_t x = 0; x < n; ++x) {
        std::uint64_t row = 0;
        for (std::int64_t y = 0; y < n; ++y)
            row += G.mul(x, y) == G.mul(y, x);
        total += row;
    }
    return total;
}

bool action_is_simple(std::uint64_t q, unsigned m, std::uint64_t n) {
    Field F(q, m);
    const FieldElement zeta = element_of_order(F, n);
    return min_poly_degree(F, zeta) == m;
}

GroupStats compute_stats(const Group& G, const SearchCaps& caps) {
    GroupStats st;
    st.order = G.size;
    st.class_count = conjugacy_classes(G, caps).size();
    st.pr = Rational(st.class_count, st.order);
    st.derived_size = derived_subgroup_size(G, caps);
    st.center_size = sb::center_size(G);
    return st;
}

} // namespace sb
