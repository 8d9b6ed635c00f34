// Serial-vs-parallel comparison for the two OpenMP kernels: the commuting
// pair counter and the conjecture sweep. Wall-clock only; exactness is the
// test suite's job.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <thread>

#include "sharpbounds/groupengine.hpp"
#include "sharpbounds/verify.hpp"

using namespace sb;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

void bench_pairs(std::uint64_t q, unsigned m, std::uint64_t n) {
    Group G = affine_group(q, m, n);
    G.cache_tables(); // no-op above the table limit; then std::function path

    auto t0 = clk::now();
    const Int serial = commuting_pair_count_serial(G);
    const double t_serial = ms_since(t0);

    t0 = clk::now();
    const Int parallel = commuting_pair_count(G);
    const double t_parallel = ms_since(t0);

    std::cout << "pair count  " << G.label << "  |G| = " << G.size << "\n";
    std::cout << "  serial   " << t_serial << " ms\n";
    std::cout << "  parallel " << t_parallel << " ms  (speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x)\n";
    if (serial != parallel) {
        std::cout << "  COUNT MISMATCH: " << serial.get_str() << " vs " << parallel.get_str()
                  << "\n";
    }
}

void bench_sweep(const Int& max, unsigned jobs) {
    auto t0 = clk::now();
    const auto serial_rows = conjecture_sweep(max, {}, 1);
    const double t_serial = ms_since(t0);

    t0 = clk::now();
    const auto parallel_rows = conjecture_sweep(max, {}, jobs);
    const double t_parallel = ms_since(t0);

    std::cout << "conjecture sweep to " << max.get_str() << "  (" << serial_rows.size()
              << " primes)\n";
    std::cout << "  serial        " << t_serial << " ms\n";
    std::cout << "  " << jobs << " jobs       " << t_parallel << " ms  (speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x)\n";
    if (serial_rows.size() != parallel_rows.size())
        std::cout << "  ROW COUNT MISMATCH\n";
}

} // namespace

int main() {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::cout << "hardware threads: " << hw << "\n\n";

    bench_pairs(7, 2, 48);  // order 2352: table-cached multiplication
    bench_pairs(89, 1, 88); // order 7832: closure-based multiplication
    std::cout << "\n";
    bench_sweep(Int(1000), hw);
    return 0;
}
