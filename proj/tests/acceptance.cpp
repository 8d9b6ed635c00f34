// Acceptance gate: nine checks, one [PASS]/[FAIL] line each, nonzero exit if
// any fail. Each check recomputes its expected values from scratch (or from
// frozen literals) rather than trusting another module's cached result.
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "sharpbounds/bounds.hpp"
#include "sharpbounds/charorbit.hpp"
#include "sharpbounds/errors.hpp"
#include "sharpbounds/finitefield.hpp"
#include "sharpbounds/groupengine.hpp"
#include "sharpbounds/numtheory.hpp"
#include "sharpbounds/verify.hpp"

using namespace sb;
using json = nlohmann::json;
using clk = std::chrono::steady_clock;

namespace {

struct check_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw check_failed(msg);
}

// (q, m, n) with n | q^m - 1 and n * q^m <= max_order
std::vector<std::array<std::uint64_t, 3>> affine_params(std::uint64_t max_order) {
    std::vector<std::array<std::uint64_t, 3>> out;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        for (unsigned m = 1;; ++m) {
            std::uint64_t Q = 1;
            for (unsigned i = 0; i < m; ++i) Q *= q;
            if (Q > max_order) break;
            for (std::uint64_t n = 1; n <= Q - 1; ++n)
                if ((Q - 1) % n == 0 && n * Q <= max_order) out.push_back({q, m, n});
        }
    }
    return out;
}

// ------------------------------------------------------------ criteria ----

std::string c1_example_values() {
    const Rational fn19 = bound_report(Int(19), BoundKind::fn).value;
    const Rational fn23 = bound_report(Int(23), BoundKind::fn).value;
    const Rational fs29 = bound_report(Int(29), BoundKind::fs).value;
    const Rational fs31 = bound_report(Int(31), BoundKind::fs).value;
    require(fn19 == Rational(29, 3629), "f_n(19) != 29/3629: " + fn19.str());
    require(fn23 == Rational(25, 1081), "f_n(23) != 25/1081: " + fn23.str());
    require(fs29 == Rational(1061, 867941), "f_s(29) != 1061/867941: " + fs29.str());
    require(fs31 == Rational(151, 115351), "f_s(31) != 151/115351: " + fs31.str());
    require(fn19 < fn23, "expected f_n(19) < f_n(23)");
    require(fs29 < fs31, "expected f_s(29) < f_s(31)");
    return "f_n(19)=29/3629 < f_n(23)=25/1081; f_s(29)=1061/867941 < f_s(31)=151/115351";
}

std::string c2_conjecture_sweep() {
    const auto rows = conjecture_sweep(Int(1000), {}, /*jobs=*/1);
    for (const auto& row : rows) {
        require(row.part_a_match, "t(p) != P(1,p) at p = " + row.p.get_str());
        require(row.part_b_match, "r(p) != P(p-1,p)^2 at p = " + row.p.get_str());
    }
    std::ostringstream os;
    os << rows.size() << " odd primes <= 1000, t(p) = P(1,p) and r(p) = P(p-1,p)^2 on all";
    return os.str();
}

std::string c3_commuting_probability() {
    const Group s3 = affine_group(3, 1, 2);
    const Group f21 = affine_group(7, 1, 3);
    const Rational pr_s3 = commuting_probability(s3);
    const Rational pr_f21 = commuting_probability(f21);
    require(pr_s3 == Rational(1, 2), "Pr(S_3) != 1/2: " + pr_s3.str());
    require(pr_f21 == Rational(5, 21), "Pr(C_7:C_3) != 5/21: " + pr_f21.str());
    return "Pr(S_3) = 1/2, Pr(C_7:C_3) = 5/21 from conjugacy classes";
}

std::string c4_acd_examples() {
    const Rational s3 = char_degrees_abelian_by_cyclic(3, 1, 2).acd;
    const Rational a4 = char_degrees_abelian_by_cyclic(2, 2, 3).acd;
    require(s3 == Rational(4, 3), "acd(S_3) != 4/3: " + s3.str());
    require(a4 == Rational(3, 2), "acd(A_4) != 3/2: " + a4.str());
    for (std::uint64_t p : {3, 5, 11, 23}) {
        const Rational got = char_degrees_abelian_by_cyclic(2 * p + 1, 1, p).acd;
        const Rational want(3 * p, p + 2);
        require(got == want, "acd(C_" + std::to_string(2 * p + 1) + ":C_" + std::to_string(p) +
                                 ") != " + want.str() + ": " + got.str());
    }
    return "acd(S_3) = 4/3, acd(A_4) = 3/2, acd(C_{2p+1}:C_p) = 3p/(p+2) for p in {3,5,11,23}";
}

std::string c5_pr_sharpness() {
    std::uint64_t largest = 0;
    for (std::uint64_t p : {3, 5, 7}) {
        for (TheoremId id : {TheoremId::A, TheoremId::B}) {
            const SharpnessReport rep = verify_theorem(id, Int(p));
            require(!rep.skipped, std::string("theorem ") + std::string(to_string(id)) +
                                      " witness skipped at p = " + std::to_string(p) +
                                      " (" + rep.notes + ")");
            require(rep.match, std::string("theorem ") + std::string(to_string(id)) +
                                   " mismatch at p = " + std::to_string(p) + ": bound " +
                                   rep.bound_value.str() + " vs " + rep.witness_value.str());
            largest = std::max(largest, rep.witness_order.get_ui());
        }
    }
    return "brute-force Pr equals g_n, g_s for p in {3,5,7}; largest group " +
           std::to_string(largest) + " elements";
}

std::string c6_acd_sharpness() {
    for (std::uint64_t p : {3, 5, 7}) {
        const SharpnessReport rep = verify_theorem(TheoremId::C, Int(p));
        require(rep.match && !rep.skipped,
                "theorem C mismatch at p = " + std::to_string(p));
    }
    const SharpnessReport d5 = verify_theorem(TheoremId::D, Int(5));
    require(d5.match, "theorem D mismatch at p = 5");
    require(d5.bound_value == Rational(1995, 667),
            "h_s(5) != 1995/667: " + d5.bound_value.str());
    const auto orbits = orbit_sizes(11, 3, 665);
    require(orbits == std::vector<std::uint64_t>{665, 665},
            "orbit sizes of C_665 on GF(11^3)* are not {665, 665}");
    return "h_n sharp for p in {3,5,7}; h_s(5) = 1995/667 via orbit sizes {665, 665}";
}

std::string c7_property_suites() {
    // Lemma 2.2 with its equality condition on the nonabelian grid
    std::size_t lemma_groups = 0;
    for (const auto& [q, m, n] : affine_params(5000)) {
        if (n < 2) continue;
        const Group G = affine_group(q, static_cast<unsigned>(m), n);
        const GroupStats st = compute_stats(G);
        const Int p = smallest_prime_factor(Int(st.order));
        const Rational cap(Int(st.derived_size) + p * p - 1, Int(st.derived_size) * p * p);
        require(st.pr <= cap, "Lemma 2.2 violated on " + G.label);
        const CharacterProfile prof = char_degrees_abelian_by_cyclic(q, static_cast<unsigned>(m), n);
        bool all_p = true;
        for (const auto& [deg, mult] : prof.degrees)
            if (deg > 1 && Int(deg) != p) all_p = false;
        require((st.pr == cap) == all_p, "equality condition wrong on " + G.label);
        ++lemma_groups;
    }
    require(lemma_groups >= 30, "only " + std::to_string(lemma_groups) + " groups in grid");

    // class equation, degree-square sum, and class-count agreement
    std::size_t grid_groups = 0;
    for (const auto& [q, m, n] : affine_params(5000)) {
        const Group G = affine_group(q, static_cast<unsigned>(m), n);
        const auto classes = conjugacy_classes(G);
        std::uint64_t total = 0;
        for (const auto& cls : classes) {
            require(G.size % cls.size() == 0, "class size does not divide |G| in " + G.label);
            total += cls.size();
        }
        require(total == G.size, "class equation failed in " + G.label);

        const CharacterProfile prof = char_degrees_abelian_by_cyclic(q, static_cast<unsigned>(m), n);
        Int sq = 0;
        for (const auto& [deg, mult] : prof.degrees) sq += Int(mult) * deg * deg;
        require(sq == Int(G.size), "sum of degree squares != |G| in " + G.label);
        require(classes.size() == prof.total_count,
                "k(G) != |Irr(G)| in " + G.label);

        // orbit-count parity on odd-order constructions
        if (G.size % 2 == 1 && n >= 1) {
            const auto orb = orbit_sizes(q, static_cast<unsigned>(m), n);
            require(orb.size() % 2 == 0, "odd orbit count on odd-order " + G.label);
            if (orb.size() == 2)
                require(orb[0] == orb[1], "unequal orbit pair on " + G.label);
        }

        // lower bound f(t,r) <= acd and Cauchy-Schwarz 1/Pr >= acd^2
        require(theorem32_lower_bound(q, static_cast<unsigned>(m), n) <= prof.acd,
                "f(t,r) > acd on " + G.label);
        const Rational pr(classes.size(), G.size);
        require(prof.acd * prof.acd <= Rational(1, 1) / pr, "acd^2 > 1/Pr on " + G.label);
        ++grid_groups;
    }

    // bound and Zsigmondy floors over all odd primes <= 200
    std::size_t primes = 0;
    for (std::uint64_t p : primes_up_to(200)) {
        if (p == 2) continue;
        const Int ip(static_cast<unsigned long>(p));
        require(bound_report(ip, BoundKind::fn).value <= Rational(1, ip),
                "f_n(p) > 1/p at p = " + std::to_string(p));
        require(zsig_min(ip, 1).value >= ip + 1, "t(p) < p+1 at p = " + std::to_string(p));
        require(zsig_min(ip, 2).value >= ip + 1, "r(p) < p+1 at p = " + std::to_string(p));
        ++primes;
    }

    std::ostringstream os;
    os << lemma_groups << " nonabelian groups (equality condition), " << grid_groups
       << " grid groups (class eq, |Irr|, parity, f(t,r), Cauchy-Schwarz), " << primes
       << " primes (f_n <= 1/p, t,r >= p+1)";
    return os.str();
}

std::string c8_kerr_via_cli() {
    std::size_t count = 0;
    for (std::uint64_t p : primes_up_to(50)) {
        const std::string cmd = std::string("'") + SHARPBOUNDS_CLI_PATH "' kerr --p " +
                                std::to_string(p) + " --format json 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        require(pipe != nullptr, "popen failed");
        std::string out;
        char buf[4096];
        while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
        const int status = pclose(pipe);
        require(WIFEXITED(status) && WEXITSTATUS(status) == 0,
                "kerr CLI failed at p = " + std::to_string(p) + ": " + out);

        const json j = json::parse(out);
        const Int l(j["l"].get<std::string>());
        const Int q(j["q"].get<std::string>());
        require(2 * l + 1 == q * q * q, "2l+1 != q^3 at p = " + std::to_string(p));
        require(is_prime(q) && q > Int(static_cast<unsigned long>(p)),
                "q not a prime > p at p = " + std::to_string(p));
        Int g;
        const Int below_p = primorial(Int(static_cast<unsigned long>(p - 1)));
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), below_p.get_mpz_t());
        require(g == 1, "gcd(l, (p-1)#) != 1 at p = " + std::to_string(p));
        ++count;
    }
    return std::to_string(count) + " primes p <= 50: 2l+1 a prime cube q^3 with q > p, "
                                   "gcd(l, (p-1)#) = 1";
}

std::string c9_oracle_cross_checks() {
    // definitional pair count vs class count on every small construction
    std::size_t group_count = 0;
    for (const auto& [q, m, n] : affine_params(200)) {
        const Group G = affine_group(q, static_cast<unsigned>(m), n);
        const Int serial = commuting_pair_count_serial(G);
        require(serial == commuting_pair_count(G), "serial/parallel pair-count mismatch");
        const Int order(G.size);
        require(Rational(serial, order * order) ==
                    Rational(Int(conjugacy_classes(G).size()), order),
                "pair count / |G|^2 != k(G)/|G| on " + G.label);
        ++group_count;
    }
    const Group s3 = affine_group(3, 1, 2);
    for (std::uint64_t p : {2, 3, 5}) {
        const Group G = direct_with_cyclic(p, s3);
        const Int serial = commuting_pair_count_serial(G);
        require(serial == commuting_pair_count(G), "serial/parallel pair-count mismatch");
        const Int order(G.size);
        require(Rational(serial, order * order) ==
                    Rational(Int(conjugacy_classes(G).size()), order),
                "pair count / |G|^2 != k(G)/|G| on " + G.label);
        ++group_count;
    }

    // every constructible modulus with q^m <= 10^4, re-proved irreducible by
    // trial division over all smaller-degree monic polynomials
    auto poly_rem = [](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& g,
                       std::uint64_t q) {
        const std::size_t dg = g.size() - 1;
        while (a.size() > dg) {
            const std::uint64_t lead = a.back();
            if (lead != 0) {
                const std::size_t shift = a.size() - 1 - dg;
                for (std::size_t i = 0; i <= dg; ++i)
                    a[shift + i] = (a[shift + i] + (q - lead % q) * g[i]) % q;
            }
            a.pop_back();
        }
        return a;
    };
    auto is_zero = [](const std::vector<std::uint64_t>& v) {
        for (std::uint64_t c : v)
            if (c) return false;
        return true;
    };

    std::size_t moduli = 0;
    for (std::uint64_t q : primes_up_to(100)) {
        std::uint64_t Q = q;
        for (unsigned m = 1; Q <= 10'000; ++m, Q *= q) {
            const Poly f = find_irreducible(q, m);
            require(f.coeffs.size() == m + 1 && f.coeffs.back() == 1,
                    "modulus not monic of degree m for q = " + std::to_string(q));
            for (unsigned d = 1; 2 * d <= m; ++d) {
                // all monic divisor candidates of degree d, by base-q counting
                std::vector<std::uint64_t> g(d + 1, 0);
                g[d] = 1;
                while (true) {
                    require(!is_zero(poly_rem(f.coeffs, g, q)),
                            "constructed modulus has a degree-" + std::to_string(d) +
                                " factor at q = " + std::to_string(q) +
                                ", m = " + std::to_string(m));
                    unsigned i = 0;
                    while (i < d && g[i] == q - 1) g[i++] = 0;
                    if (i == d) break;
                    ++g[i];
                }
            }
            ++moduli;
        }
    }
    std::ostringstream os;
    os << group_count << " groups <= 200 elements (pair count / |G|^2 = k/|G|); " << moduli
       << " field moduli q^m <= 10^4 re-proved irreducible";
    return os.str();
}

// -------------------------------------------------------------- runner ----

struct Criterion {
    int id;
    const char* name;
    double limit_ms; // 0 = untimed
    std::function<std::string()> run;
};

bool run_criterion(const Criterion& c) {
    const auto t0 = clk::now();
    std::string detail;
    bool ok = true;
    try {
        detail = c.run();
    } catch (const std::exception& e) {
        detail = e.what();
        ok = false;
    }
    const double ms = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
    if (ok && c.limit_ms > 0 && ms >= c.limit_ms) {
        ok = false;
        detail = "over time budget: " + detail;
    }

    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " (" << std::fixed;
    line.precision(0);
    line << ms;
    if (c.limit_ms > 0) line << " ms < " << c.limit_ms;
    line << " ms): " << detail;
    std::cout << line.str() << "\n";
    return ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "example bound values", 1000, c1_example_values},
        {2, "conjecture sweep to 1000", 60000, c2_conjecture_sweep},
        {3, "commuting probabilities", 1000, c3_commuting_probability},
        {4, "average character degrees", 1000, c4_acd_examples},
        {5, "Pr sharpness (theorems A, B)", 120000, c5_pr_sharpness},
        {6, "acd sharpness (theorems C, D)", 10000, c6_acd_sharpness},
        {7, "property suites", 0, c7_property_suites},
        {8, "cube progression witness via CLI", 30000, c8_kerr_via_cli},
        {9, "oracle cross-checks", 0, c9_oracle_cross_checks},
    };

    int failed = 0;
    for (const auto& c : criteria)
        if (!run_criterion(c)) ++failed;

    if (failed) {
        std::cout << failed << " of " << criteria.size() << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
