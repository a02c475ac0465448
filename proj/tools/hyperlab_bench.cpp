// Compares the serial reference path of the sweep kernels against the
// OpenMP path on representative workloads, checking that both produce
// identical results. Run with --quick for a reduced size.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "hyperlab/classify.hpp"
#include "hyperlab/sweep.hpp"

using namespace hyperlab;
namespace sw = hyperlab::sweep;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Row {
    std::string name;
    double serial_ms = 0;
    double parallel_ms = 0;
    bool equal = false;
};

// Brute-force window quantifier for the 2-absorbing condition of mZ: scans
// ordered triples over [-3m, 3m]^3 and reports the first violation index.
i64 window_2a_scan(const Ring& r, i64 m, sw::Mode mode) {
    const i64 w = 3 * m;
    const i64 side = 2 * w + 1;
    std::vector<i64> mults(r.multipliers().begin(), r.multipliers().end());
    return sw::first_match(side * side * side, mode, [&](i64 idx) {
        auto t = sw::decode_triple(idx, side);
        i64 a = t[0] - w, b = t[1] - w, c = t[2] - w;
        i64 abc = a * b * c;
        for (i64 k1 : mults)
            for (i64 k2 : mults)
                if ((k1 * k2 * abc) % m != 0) return false;
        auto pair_in = [&](i64 x, i64 y) {
            for (i64 k : mults)
                if ((k * x * y) % m != 0) return false;
            return true;
        };
        return !pair_in(a, b) && !pair_in(b, c) && !pair_in(a, c);
    });
}

Row bench_window_2a(const Ring& r, i64 m) {
    Row row;
    row.name = "2a window oracle " + r.render() + " m=" + std::to_string(m);
    double t0 = now_ms();
    i64 serial = window_2a_scan(r, m, sw::Mode::Serial);
    row.serial_ms = now_ms() - t0;
    t0 = now_ms();
    i64 parallel = window_2a_scan(r, m, sw::Mode::Parallel);
    row.parallel_ms = now_ms() - t0;
    row.equal = serial == parallel;
    return row;
}

Row bench_classifier_grid(const Ring& r, i64 dmax) {
    Row row;
    row.name = "classifier grid " + r.render() + " d<=" + std::to_string(dmax);
    auto run = [&](sw::Mode mode) {
        std::vector<Verdict> out;
        for (i64 d = 2; d <= dmax; ++d) {
            Ideal i = Ideal::principal_multiple(d);
            out.push_back(is_two_absorbing(r, i, mode));
            out.push_back(is_two_absorbing_primary(r, i, mode));
        }
        return out;
    };
    double t0 = now_ms();
    auto serial = run(sw::Mode::Serial);
    row.serial_ms = now_ms() - t0;
    t0 = now_ms();
    auto parallel = run(sw::Mode::Parallel);
    row.parallel_ms = now_ms() - t0;
    row.equal = serial == parallel;
    return row;
}

// Pair-condition window scans (prime and primary) batched over all moduli up
// to mmax; result is the vector of first-violation indices.
Row bench_window_pairs(const Ring& r, i64 mmax) {
    Row row;
    row.name = "pair window oracles " + r.render() + " m<=" + std::to_string(mmax);
    std::vector<i64> mults(r.multipliers().begin(), r.multipliers().end());
    auto run = [&](sw::Mode mode) {
        std::vector<i64> firsts;
        for (i64 m = 2; m <= mmax; ++m) {
            const i64 w = 3 * m;
            const i64 side = 2 * w + 1;
            firsts.push_back(sw::first_match(side * side, mode, [&](i64 idx) {
                auto [i, jj] = sw::decode_pair(idx, side);
                i64 x = i - w, y = jj - w;
                for (i64 k : mults)
                    if ((k * x * y) % m != 0) return false;
                return x % m != 0 && y % m != 0;
            }));
        }
        return firsts;
    };
    double t0 = now_ms();
    auto serial = run(sw::Mode::Serial);
    row.serial_ms = now_ms() - t0;
    t0 = now_ms();
    auto parallel = run(sw::Mode::Parallel);
    row.parallel_ms = now_ms() - t0;
    row.equal = serial == parallel;
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    Ring k23 = Ring::integer_scaled({2, 3});
    Ring k24 = Ring::integer_scaled({2, 4});

    std::vector<Row> rows;
    rows.push_back(bench_window_2a(k23, quick ? 24 : 54));
    rows.push_back(bench_window_2a(k24, quick ? 25 : 55));
    rows.push_back(bench_window_pairs(k23, quick ? 40 : 120));
    rows.push_back(bench_classifier_grid(k23, quick ? 60 : 150));
    rows.push_back(bench_classifier_grid(k24, quick ? 60 : 150));

    std::printf("threads=%d\n", sw::thread_budget());
    std::printf("%-52s %12s %12s %9s %6s\n", "kernel", "serial_ms", "parallel_ms", "speedup",
                "equal");
    bool all_equal = true;
    for (const Row& row : rows) {
        double speedup = row.parallel_ms > 0 ? row.serial_ms / row.parallel_ms : 0;
        std::printf("%-52s %12.1f %12.1f %8.2fx %6s\n", row.name.c_str(), row.serial_ms,
                    row.parallel_ms, speedup, row.equal ? "yes" : "NO");
        all_equal = all_equal && row.equal;
    }
    if (!all_equal) {
        std::fprintf(stderr, "serial/parallel mismatch\n");
        return 1;
    }
    return 0;
}
