// Command-line front end: compute, simplify and verify subcommands.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hfk/compute.hpp"
#include "hfk/errors.hpp"
#include "hfk/fixtures.hpp"
#include "hfk/moves.hpp"
#include "hfk/util.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hfk::ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void apply_thread_option(int threads_flag) {
    if (threads_flag > 0) {
        hfk::set_threads(threads_flag);
        return;
    }
    if (const char* env = std::getenv("HFK_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) hfk::set_threads(n);
    }
}

nlohmann::json poly_json(const hfk::BigradedPoly& p) {
    return nlohmann::json::parse(hfk::poly_to_json(p));
}

int cmd_compute(const std::string& grid_path, const std::string& range, bool want_tau,
                bool want_e2, bool mirror, bool as_json, int threads_flag) {
    apply_thread_option(threads_flag);
    hfk::GridDiagram g = hfk::parse_grid(read_file(grid_path));
    if (mirror) g = hfk::mirror_grid(g);

    hfk::ComputeOptions opts;
    opts.range = range == "full" ? hfk::Range::Full : hfk::Range::NonNegative;
    opts.want_tau = want_tau;
    opts.want_e2 = want_e2;
    hfk::HfkResult result = hfk::compute_hfk(g, opts);

    if (as_json) {
        nlohmann::json out;
        out["grid"] = {{"n", g.n}, {"x", g.x_rows}, {"o", g.o_rows}};
        out["hfk"] = poly_json(result.hfk);
        out["poly"] = hfk::to_monomial_string(result.hfk);
        if (result.tau) {
            if (result.tau->determinate()) {
                out["tau"] = *result.tau->value;
            } else {
                out["tau"] = nullptr;
                out["tau_reason"] = result.tau->reason;
            }
        }
        if (result.e2) out["e2"] = poly_json(*result.e2);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "HFK^ = " << hfk::to_monomial_string(result.hfk) << "\n";
    if (result.e2) std::cout << "E^2  = " << hfk::to_monomial_string(*result.e2) << "\n";
    if (result.tau) {
        if (result.tau->determinate()) std::cout << "tau  = " << *result.tau->value << "\n";
        else std::cout << "tau  = indeterminate (" << result.tau->reason << ")\n";
    }
    return 0;
}

int cmd_simplify(const std::string& grid_path, uint64_t seed, uint64_t budget,
                 const std::string& out_path) {
    hfk::GridDiagram g = hfk::parse_grid(read_file(grid_path));
    std::vector<int> trace;
    hfk::GridDiagram reduced = hfk::simplify(g, seed, budget, &trace);

    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << "size trajectory: " << g.n;
    int last = g.n;
    for (int n : trace) {
        if (n != last) info << " -> " << n;
        last = n;
    }
    info << " (final " << reduced.n << ")\n";

    std::string text = hfk::serialize_grid(reduced);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw hfk::ValidationError("cannot write file: " + out_path);
        out << text;
    }
    return 0;
}

int cmd_verify(const std::string& fixtures_path, bool allow_mirror, int threads_flag) {
    apply_thread_option(threads_flag);
    auto records = hfk::parse_fixtures(read_file(fixtures_path));
    int failures = 0;
    for (const auto& rec : records) {
        hfk::VerifyRow row = hfk::verify_fixture(rec, allow_mirror);
        const char* status = row.status == hfk::VerifyStatus::Pass   ? "PASS"
                             : row.status == hfk::VerifyStatus::Fail ? "FAIL"
                                                                     : "SKIP";
        std::cout << status << "  " << row.name;
        if (!row.detail.empty()) std::cout << "  [" << row.detail << "]";
        std::cout << "\n";
        if (row.status == hfk::VerifyStatus::Fail) ++failures;
    }
    if (failures) {
        std::cout << failures << " fixture(s) failed\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knot Floer homology of grid diagrams"};
    app.require_subcommand(1);

    std::string grid_path, out_path, fixtures_path;
    std::string range = "nonneg";
    bool want_tau = false, want_e2 = false, mirror = false, as_json = false, allow_mirror = false;
    int threads_flag = 0;
    uint64_t seed = 1, budget = 1000;

    auto* compute = app.add_subcommand("compute", "compute HFK^ (and optionally tau, E^2)");
    compute->add_option("--grid", grid_path, "grid file")->required();
    compute->add_option("--range", range, "nonneg (default; symmetry-completed) or full")
        ->check(CLI::IsMember({"nonneg", "full"}));
    compute->add_flag("--tau", want_tau, "compute the tau invariant");
    compute->add_flag("--e2", want_e2, "compute the E^2 page");
    compute->add_flag("--mirror", mirror, "mirror the grid before computing");
    compute->add_flag("--json", as_json, "JSON output");
    compute->add_option("--threads", threads_flag, "worker pool cap (HFK_THREADS as fallback)");

    auto* simplify = app.add_subcommand("simplify", "reduce a grid by random moves");
    simplify->add_option("--grid", grid_path, "grid file")->required();
    simplify->add_option("--seed", seed, "RNG seed");
    simplify->add_option("--budget", budget, "number of moves to try");
    simplify->add_option("--out", out_path, "output grid file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "recompute fixture records and compare");
    verify->add_option("--fixtures", fixtures_path, "fixtures JSON file")->required();
    verify->add_flag("--allow-mirror", allow_mirror, "accept results up to the mirror transform");
    verify->add_option("--threads", threads_flag, "worker pool cap (HFK_THREADS as fallback)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(grid_path, range, want_tau, want_e2, mirror, as_json, threads_flag);
        if (simplify->parsed()) return cmd_simplify(grid_path, seed, budget, out_path);
        if (verify->parsed()) return cmd_verify(fixtures_path, allow_mirror, threads_flag);
    } catch (const hfk::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hfk::ComputeError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
