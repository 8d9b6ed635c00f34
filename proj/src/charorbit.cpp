#include "sharpbounds/charorbit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sharpbounds/bounds.hpp"
#include "sharpbounds/errors.hpp"
#include "sharpbounds/finitefield.hpp"

namespace sb {

std::uint64_t CharacterProfile::group_order() const {
    std::uint64_t sum = 0;
    for (const auto& [deg, mult] : degrees) sum += mult * deg * deg;
    return sum;
}

std::uint64_t CharacterProfile::linear_count() const {
    for (const auto& [deg, mult] : degrees)
        if (deg == 1) return mult;
    return 0;
}

std::vector<std::uint64_t> orbit_sizes(std::uint64_t q, unsigned m, std::uint64_t n) {
    Field F(q, m);
    const std::uint64_t zeta = element_of_order(F, n).rank(); // checks n | q^m - 1
    std::vector<char> seen(F.order(), 0);
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t a = 1; a < F.order(); ++a) {
        if (seen[a]) continue;
        std::uint64_t len = 0, x = a;
        do {
            seen[x] = 1;
            ++len;
            x = F.mul(x, zeta);
        } while (x != a);
        sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

CharacterProfile char_degrees_abelian_by_cyclic(std::uint64_t q, unsigned m, std::uint64_t n) {
    const auto orbits = orbit_sizes(q, m, n);

    std::map<std::uint64_t, std::uint64_t> mult;
    mult[1] = n; // trivial orbit {1_A}: n linear characters (G/A is cyclic of order n)
    for (std::uint64_t d : orbits) mult[d] += n / d;

    CharacterProfile prof;
    Int degsum = 0;
    std::uint64_t sqsum = 0, Q = 1;
    for (unsigned i = 0; i < m; ++i) Q *= q;
    for (const auto& [deg, cnt] : mult) {
        prof.degrees.emplace_back(deg, cnt);
        prof.total_count += cnt;
        degsum += Int(deg) * Int(cnt);
        sqsum += cnt * deg * deg;
    }
    prof.acd = Rational(degsum, Int(prof.total_count));

    // orbit-method consistency: Σ mult·deg² must equal |G|
    if (sqsum != n * Q)
        throw std::logic_error("char_degrees_abelian_by_cyclic: degree square sum mismatch");
    return prof;
}

Rational acd_direct_with_cyclic(std::uint64_t p, const CharacterProfile& profile) {
    if (p < 1) throw domain_error("acd_direct_with_cyclic: cyclic order must be >= 1");
    Int degsum = 0;
    Int count = 0;
    for (const auto& [deg, mult] : profile.degrees) {
        degsum += Int(deg) * Int(mult) * Int(p); // each character replicated p times
        count += Int(mult) * Int(p);
    }
    const Rational expanded(degsum, count);
    if (!(expanded == profile.acd))
        throw std::logic_error("acd_direct_with_cyclic: expansion changed the mean");
    return expanded;
}

Rational theorem32_lower_bound(std::uint64_t q, unsigned m, std::uint64_t n) {
    if (n == 1) return Rational(0); // trivial action: nothing to certify
    const auto orbits = orbit_sizes(q, m, n);
    const Int r = Int(orbits.size());
    Rational best(0);
    for (std::uint64_t t : orbits) {
        const Rational cand = f_tr(Int(t), r);
        if (best < cand) best = cand;
    }
    return best;
}

} // namespace sb
