#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sharpbounds/bounds.hpp"
#include "sharpbounds/groupengine.hpp"
#include "sharpbounds/numtheory.hpp"

using namespace sb;

namespace {

// every affine parameter triple (q, m, n) with n | q^m - 1 and n*q^m <= max_order
std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t>> affine_params(
    std::uint64_t max_order) {
    std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t>> out;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        std::uint64_t Q = q;
        for (unsigned m = 1; Q <= max_order; ++m, Q *= q) {
            for (std::uint64_t n = 1; n < Q; ++n) {
                if ((Q - 1) % n != 0) continue;
                if (n * Q > max_order) continue;
                out.emplace_back(q, m, n);
            }
        }
    }
    return out;
}

std::vector<std::uint64_t> class_sizes(const Group& G) {
    std::vector<std::uint64_t> sizes;
    for (const auto& cls : conjugacy_classes(G)) sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

TEST_CASE("cyclic groups") {
    auto C12 = cyclic_group(12);
    CHECK(C12.size == 12);
    CHECK(C12.label == "C_12");
    CHECK(conjugacy_classes(C12).size() == 12); // abelian: all classes singletons
    CHECK(commuting_probability(C12) == Rational(1));
    CHECK(derived_subgroup_size(C12) == 1);
    CHECK(center_size(C12) == 12);

    auto C1 = cyclic_group(1);
    CHECK(C1.size == 1);
    CHECK(conjugacy_classes(C1).size() == 1);

    CHECK_THROWS_AS(cyclic_group(0), domain_error);
}

TEST_CASE("affine group indexing is frozen") {
    auto G = affine_group(3, 1, 2); // S_3; zeta = 2 in GF(3)
    CHECK(G.size == 6);
    CHECK(G.label == "GF(3)+ : C_2");
    CHECK(G.identity == 0);
    // (0,1)*(1,0) = (zeta*1, 1) = (2,1) -> 1*3+2
    CHECK(G.mul(3, 1) == 5);
    // (1,0)*(0,1) = (1,1) -> 4
    CHECK(G.mul(1, 3) == 4);
    // reflections square to the identity
    CHECK(G.mul(4, 4) == 0);
    CHECK(G.inv(3) == 3);
    CHECK(G.inv(1) == 2);

    CHECK_THROWS_AS(affine_group(7, 1, 4), domain_error); // 4 does not divide 6
    CHECK_THROWS_AS(affine_group(6, 1, 5), domain_error); // 6 not prime
}

TEST_CASE("classical class structures") {
    auto S3 = affine_group(3, 1, 2);
    CHECK(class_sizes(S3) == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(commuting_probability(S3) == Rational(1, 2));
    CHECK(derived_subgroup_size(S3) == 3);
    CHECK(center_size(S3) == 1);

    auto F21 = affine_group(7, 1, 3); // C_7 : C_3
    CHECK(F21.size == 21);
    CHECK(conjugacy_classes(F21).size() == 5);
    CHECK(commuting_probability(F21) == Rational(5, 21));
    CHECK(derived_subgroup_size(F21) == 7);
    CHECK(center_size(F21) == 1);

    auto A4 = affine_group(2, 2, 3);
    CHECK(A4.size == 12);
    CHECK(class_sizes(A4) == std::vector<std::uint64_t>{1, 3, 4, 4});
    CHECK(commuting_probability(A4) == Rational(1, 3));
    CHECK(derived_subgroup_size(A4) == 4); // V_4
    CHECK(center_size(A4) == 1);

    auto G75 = affine_group(5, 2, 3); // (C_5 x C_5) : C_3
    CHECK(G75.size == 75);
    CHECK(commuting_probability(G75) == Rational(11, 75));
    CHECK(derived_subgroup_size(G75) == 25);
}

TEST_CASE("group axioms spot-check") {
    std::mt19937 rng(0x5EED);
    std::vector<Group> groups;
    groups.push_back(cyclic_group(9));
    groups.push_back(affine_group(3, 1, 2));
    groups.push_back(affine_group(7, 1, 6));
    groups.push_back(affine_group(5, 2, 8));
    groups.push_back(affine_group(2, 4, 15));
    groups.push_back(direct_with_cyclic(5, affine_group(3, 2, 8)));
    for (const auto& G : groups) {
        std::uniform_int_distribution<std::uint64_t> pick(0, G.size - 1);
        for (int it = 0; it < 300; ++it) {
            std::uint64_t a = pick(rng), b = pick(rng), c = pick(rng);
            REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
            REQUIRE(G.mul(a, G.identity) == a);
            REQUIRE(G.mul(G.identity, a) == a);
            REQUIRE(G.mul(a, G.inv(a)) == G.identity);
            REQUIRE(G.mul(G.inv(a), a) == G.identity);
        }
    }
}

TEST_CASE("generators generate") {
    for (auto [q, m, n] : affine_params(2000)) {
        auto G = affine_group(q, m, n);
        REQUIRE(generated_subgroup_size(G, G.generators) == G.size);
    }
    auto D = direct_with_cyclic(7, affine_group(3, 1, 2));
    CHECK(generated_subgroup_size(D, D.generators) == 42);
}

TEST_CASE("class equation on the affine family") {
    for (auto [q, m, n] : affine_params(1000)) {
        auto G = affine_group(q, m, n);
        auto classes = conjugacy_classes(G);
        std::uint64_t sum = 0;
        for (const auto& cls : classes) {
            REQUIRE(G.size % cls.size() == 0); // class size divides order
            sum += cls.size();
        }
        REQUIRE(sum == G.size);
        // first class is {identity}
        REQUIRE(classes.front() == std::vector<std::uint64_t>{0});
    }
}

TEST_CASE("direct products with cyclic groups") {
    auto C3 = direct_with_cyclic(3, cyclic_group(1));
    CHECK(C3.size == 3);
    CHECK(commuting_probability(C3) == Rational(1));

    auto T3 = affine_group(7, 1, 3);
    auto G63 = direct_with_cyclic(3, T3);
    CHECK(G63.size == 63);
    CHECK(G63.label == "C_3 x (GF(7)+ : C_3)");
    CHECK(commuting_probability(G63) == Rational(5, 21));

    // Pr(C_p x G) = Pr(G)
    auto S3 = affine_group(3, 1, 2);
    auto R3 = affine_group(5, 2, 3);
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        REQUIRE(commuting_probability(direct_with_cyclic(p, T3)) == Rational(5, 21));
        REQUIRE(commuting_probability(direct_with_cyclic(p, S3)) == Rational(1, 2));
        REQUIRE(commuting_probability(direct_with_cyclic(p, R3)) == Rational(11, 75));
    }

    // center and derived subgroup behave componentwise
    CHECK(center_size(G63) == 3);
    CHECK(derived_subgroup_size(G63) == 7);
}

TEST_CASE("closed-form commuting probability at Zsigmondy parameters") {
    // when n is a Zsigmondy prime for (q, m): Pr = (1 + (n^2-1)/q^m) / n^2
    int hits = 0;
    for (auto [q, m, n] : affine_params(5000)) {
        if (n < 2 || !is_prime(Int(n))) continue;
        if (!is_zsigmondy(Int(n), Int(q), Int(m))) continue;
        auto G = affine_group(q, m, n);
        std::uint64_t Q = 1;
        for (unsigned i = 0; i < m; ++i) Q *= q;
        const Rational closed =
            (Rational(1) + Rational(Int(n * n - 1), Int(Q))) / Rational(Int(n * n));
        REQUIRE(commuting_probability(G) == closed);
        ++hits;
    }
    CHECK(hits >= 15);
}

TEST_CASE("smallest-prime-divisor bound on Pr") {
    // Pr(G) <= (1 + (p^2-1)/|G'|) / p^2 with p = spf(|G|)
    for (auto [q, m, n] : affine_params(1200)) {
        auto G = affine_group(q, m, n);
        const Int p = smallest_prime_factor(Int(G.size));
        const Int d = derived_subgroup_size(G);
        const Rational bound = (Rational(1) + Rational(p * p - 1, d)) / Rational(p * p);
        const Rational pr = commuting_probability(G);
        REQUIRE(!(bound < pr));
        REQUIRE(pr <= Rational(1)); // abelian normal subgroup has Pr = 1
    }
}

TEST_CASE("derived subgroup of simple-action affine groups is the translation part") {
    for (auto [q, m, n] : affine_params(3000)) {
        if (n < 2) continue;
        if (!action_is_simple(q, m, n)) continue;
        std::uint64_t Q = 1;
        for (unsigned i = 0; i < m; ++i) Q *= q;
        REQUIRE(derived_subgroup_size(affine_group(q, m, n)) == Q);
    }
}

TEST_CASE("action_is_simple") {
    CHECK(action_is_simple(7, 1, 3));
    CHECK(action_is_simple(5, 2, 3));
    CHECK_FALSE(action_is_simple(5, 2, 4)); // order-4 elements already lie in GF(5)
    CHECK(action_is_simple(2, 2, 3));
    CHECK_FALSE(action_is_simple(2, 4, 3)); // ord_3(2) = 2 < 4: a proper subspace is fixed

    // bridge: for n > 1, simplicity is equivalent to ord_n(q) = m
    auto naive_order_mod = [](std::uint64_t g, std::uint64_t n) {
        std::uint64_t x = g % n;
        unsigned d = 1;
        while (x != 1) {
            x = x * (g % n) % n;
            ++d;
        }
        return d;
    };
    for (auto [q, m, n] : affine_params(4000)) {
        if (n < 2) continue;
        REQUIRE(action_is_simple(q, m, n) == (naive_order_mod(q, n) == m));
    }
}

TEST_CASE("pair counts: definitional, serial and parallel agree with k(G)*|G|") {
    for (auto [q, m, n] : affine_params(200)) {
        auto G = affine_group(q, m, n);
        const std::uint64_t k = conjugacy_classes(G).size();
        const std::uint64_t serial = commuting_pair_count_serial(G);
        REQUIRE(serial == k * G.size);
        REQUIRE(commuting_pair_count(G) == serial);
        // definitional Pr = pairs / |G|^2 equals k/|G|
        REQUIRE(Rational(serial, G.size * G.size) == Rational(k, G.size));
    }
    // one larger OpenMP spot check: R_7 of order 1183
    auto R7 = affine_group(13, 2, 7);
    CHECK(commuting_pair_count(R7) ==
          conjugacy_classes(R7).size() * R7.size);
}

TEST_CASE("caps") {
    SearchCaps tight;
    tight.group_size_cap = 10;
    auto G = affine_group(7, 1, 3);
    CHECK_THROWS_AS(conjugacy_classes(G, tight), cap_exhausted);
    CHECK_THROWS_AS(commuting_probability(G, tight), cap_exhausted);
    CHECK_THROWS_AS(derived_subgroup_size(G, tight), cap_exhausted);
    CHECK_THROWS_AS(compute_stats(G, tight), cap_exhausted);
}

TEST_CASE("compute_stats consistency") {
    for (auto [q, m, n] : affine_params(800)) {
        auto G = affine_group(q, m, n);
        auto st = compute_stats(G);
        REQUIRE(st.order == G.size);
        REQUIRE(st.pr == Rational(st.class_count, st.order));
        REQUIRE(st.order % st.derived_size == 0);
        REQUIRE(st.order % st.center_size == 0);
    }
    auto st = compute_stats(affine_group(11, 1, 5));
    CHECK(st.class_count == 7); // 5 linear + 2 of degree 5
    CHECK(st.pr == Rational(7, 55));
    CHECK(st.derived_size == 11);
    CHECK(st.center_size == 1);
}
