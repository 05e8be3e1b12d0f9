// Compares the OpenMP kernels against their serial reference implementations
// on representative workloads and reports wall-clock speedups. Every row also
// checks that the two implementations produce identical results; a mismatch
// aborts with exit code 1.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "shufflelab/invariants.hpp"
#include "shufflelab/matrix.hpp"
#include "shufflelab/parallel.hpp"
#include "shufflelab/ring.hpp"
#include "shufflelab/shuffle.hpp"
#include "shufflelab/signature.hpp"
#include "shufflelab/special_matrices.hpp"
#include "shufflelab/tableau.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_s(F&& f) {
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Row {
    std::string name;
    double serial_s = 0.0;
    double parallel_s = 0.0;
    bool match = false;
};

void print_rows(const std::vector<Row>& rows) {
    std::printf("%-34s %12s %12s %9s  %s\n", "benchmark", "serial [s]", "parallel [s]",
                "speedup", "match");
    for (const auto& r : rows) {
        std::printf("%-34s %12.3f %12.3f %8.2fx  %s\n", r.name.c_str(), r.serial_s,
                    r.parallel_s, r.parallel_s > 0.0 ? r.serial_s / r.parallel_s : 0.0,
                    r.match ? "yes" : "NO");
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace shufflelab;

    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            quick = true;
        } else {
            std::fprintf(stderr, "usage: %s [--quick]\n", argv[0]);
            return 2;
        }
    }

    std::printf("threads: %d\n\n", par::max_threads());

    std::vector<Row> rows;

    {
        const int d = quick ? 4 : 5;
        const FormalSum s = inv(Tableau::single_column(d));
        Row r;
        r.name = "shuffle square of inv(t1," + std::to_string(d) + ")";
        FormalSum a(1), b(1);
        r.serial_s = time_s([&] { a = shuffle_serial(s, s); });
        r.parallel_s = time_s([&] { b = shuffle(s, s); });
        r.match = a == b;
        rows.push_back(std::move(r));
    }

    {
        const int d = quick ? 4 : 5;
        const auto w = build_W(d);
        Row r;
        r.name = "det of W_" + std::to_string(d);
        FormalSum a(1), b(1);
        r.serial_s = time_s([&] { a = det_serial(w); });
        r.parallel_s = time_s([&] { b = det(w); });
        r.match = a == b;
        rows.push_back(std::move(r));
    }

    {
        const int d = quick ? 4 : 5;
        const Tableau t = Tableau::two_column(d);
        Row r;
        r.name = "inv of t2," + std::to_string(d);
        FormalSum a(1), b(1);
        r.serial_s = time_s([&] { a = inv_serial(t); });
        r.parallel_s = time_s([&] { b = inv(t); });
        r.match = a == b;
        rows.push_back(std::move(r));
    }

    {
        const int d = quick ? 3 : 4;
        Row r;
        r.name = "Andreief chain sum, d=" + std::to_string(d);
        FormalSum a(1), b(1);
        r.serial_s = time_s([&] { a = andreief_rhs_serial(d); });
        r.parallel_s = time_s([&] { b = andreief_rhs(d); });
        r.match = a == b;
        rows.push_back(std::move(r));
    }

    {
        const int d = 4;
        const int paths = quick ? 50 : 200;
        const std::uint64_t seed = 20260815;
        Row r;
        r.name = "signature batch, d=4, " + std::to_string(paths) + " paths";
        CgmBatch a, b;
        r.serial_s = time_s([&] { a = run_cgm_batch_serial(d, paths, seed, 1e-9); });
        r.parallel_s = time_s([&] { b = run_cgm_batch(d, paths, seed, 1e-9); });
        r.match = a.passed == b.passed && a.failed == b.failed &&
                  a.max_abs_err == b.max_abs_err && a.max_rel_err == b.max_rel_err &&
                  a.worst_path == b.worst_path;
        rows.push_back(std::move(r));
    }

    print_rows(rows);

    for (const auto& r : rows) {
        if (!r.match) {
            std::fprintf(stderr, "mismatch between serial and parallel results: %s\n",
                         r.name.c_str());
            return 1;
        }
    }
    return 0;
}
