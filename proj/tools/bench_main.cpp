// Benchmark comparing the serial reference pipeline against the OpenMP
// kernels: generator enumeration, graded-piece construction and reduction.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hfk/homology.hpp"
#include "hfk/util.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct RunStats {
    double enumerate_s = 0;
    double pipeline_s = 0;
    size_t generators = 0;
    hfk::BigradedPoly poly;
};

RunStats run_once(const hfk::GridDiagram& g, const hfk::WindingTable& wt, int min_a, bool serial) {
    hfk::set_threads(serial ? 1 : 0);
    RunStats stats;

    auto t0 = Clock::now();
    auto gens = serial ? hfk::collect_generators_serial(wt, min_a)
                       : hfk::collect_generators(wt, min_a);
    stats.enumerate_s = seconds_since(t0);
    stats.generators = gens.size();

    t0 = Clock::now();
    stats.poly = hfk::associated_graded_poly(g, wt, min_a);
    stats.pipeline_s = seconds_since(t0);
    return stats;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel benchmark"};
    std::string grid_path;
    int min_a = 0;
    bool full = false;
    int repeat = 1;
    app.add_option("--grid", grid_path, "grid file (default: the 10x10 (3,7) torus grid)");
    app.add_option("--min-a", min_a, "Alexander grading floor (default 0)");
    app.add_flag("--full", full, "enumerate the whole symmetric group");
    app.add_option("--repeat", repeat, "repetitions per configuration");

    CLI11_PARSE(app, argc, argv);

    hfk::GridDiagram g;
    if (grid_path.empty()) {
        g = hfk::torus_grid(3, 7);
    } else {
        std::ifstream in(grid_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        g = hfk::parse_grid(buf.str());
    }
    hfk::WindingTable wt = hfk::winding_table(g);
    int bound = full ? hfk::kNoAlexanderBound : min_a;

    std::cout << "grid n = " << g.n << ", floor = " << (full ? std::string("none")
                                                             : std::to_string(min_a))
              << "\n";
    std::cout << "mode      enumerate   enum+reduce   generators\n";
    RunStats serial_last, parallel_last;
    for (int r = 0; r < repeat; ++r) {
        serial_last = run_once(g, wt, bound, /*serial=*/true);
        std::printf("serial    %8.3fs    %8.3fs    %zu\n", serial_last.enumerate_s,
                    serial_last.pipeline_s, serial_last.generators);
        parallel_last = run_once(g, wt, bound, /*serial=*/false);
        std::printf("parallel  %8.3fs    %8.3fs    %zu\n", parallel_last.enumerate_s,
                    parallel_last.pipeline_s, parallel_last.generators);
    }
    if (serial_last.poly != parallel_last.poly) {
        std::cerr << "MISMATCH between serial and parallel results\n";
        return 1;
    }
    std::cout << "results agree: " << hfk::to_monomial_string(serial_last.poly) << "\n";
    if (parallel_last.pipeline_s > 0)
        std::printf("speedup: %.2fx\n", serial_last.pipeline_s / parallel_last.pipeline_s);
    return 0;
}
