#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"

#include "hfk/complex.hpp"
#include "hfk/errors.hpp"
#include "hfk/util.hpp"
#include "test_helpers.hpp"

using namespace hfk;

namespace {

const GridDiagram kUnknot2{2, {0, 1}, {1, 0}};
// minimal trefoil whose generator census is pinned below
const GridDiagram kTrefoil5{5, {4, 0, 1, 2, 3}, {1, 2, 3, 4, 0}};

std::vector<Perm> all_perms(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), uint8_t{0});
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

TEST_CASE("permutation keys are a lexicographic bijection") {
    for (int n : {1, 2, 3, 4, 5}) {
        auto perms = all_perms(n);
        for (size_t i = 0; i < perms.size(); ++i) {
            CHECK(perm_rank(perms[i]) == i);
            CHECK(perm_unrank(i, n) == perms[i]);
        }
    }
}

TEST_CASE("unknot gradings land at (0,0) and (-1,-1)") {
    WindingTable wt = winding_table(kUnknot2);
    Perm id{0, 1}, s0{1, 0};
    CHECK(alexander_grading(wt, id) == 0);
    CHECK(alexander_grading(wt, s0) == -1);
    CHECK(maslov_grading(kUnknot2, id) == 0);
    CHECK(maslov_grading(kUnknot2, s0) == -1);
}

TEST_CASE("white-dot permutation has Maslov grading 1-n") {
    Rng rng(81);
    for (int trial = 0; trial < 20; ++trial) {
        GridDiagram g = random_grid(2 + (int)rng.below(6), rng.next());
        Perm s0(g.n);
        for (int c = 0; c < g.n; ++c) s0[c] = static_cast<uint8_t>(g.o_rows[c]);
        CHECK(maslov_grading(g, s0) == 1 - g.n);
        RegionDecomposition rd = region_decomposition(g, s0);
        CHECK(rd.curves.empty());
    }
}

TEST_CASE("trefoil generator census matches the pinned example") {
    // one generator at A=1, Maslov 2; five at A=0, Maslov 1
    WindingTable wt = winding_table(kTrefoil5);
    Perm top{4, 0, 1, 2, 3};
    std::set<Perm> five = {{0, 4, 1, 2, 3}, {3, 0, 1, 2, 4}, {4, 0, 1, 3, 2},
                           {4, 0, 2, 1, 3}, {4, 1, 0, 2, 3}};
    CHECK(alexander_grading(wt, top) == 1);
    CHECK(maslov_grading(kTrefoil5, top) == 2);
    for (const auto& p : five) {
        CHECK(alexander_grading(wt, p) == 0);
        CHECK(maslov_grading(kTrefoil5, p) == 1);
    }

    std::vector<Perm> a0;
    std::vector<Perm> a1;
    enumerate_generators_serial(wt, 0, [&](const Perm& p, int a) {
        if (a == 0) a0.push_back(p);
        else a1.push_back(p);
    });
    CHECK(a1 == std::vector<Perm>{top});
    CHECK(a0.size() == 5);
    CHECK(std::set<Perm>(a0.begin(), a0.end()) == five);

    auto d = boundary(kTrefoil5, top, DiffMode::Full);
    CHECK(std::set<Perm>(d.begin(), d.end()) == five);
}

TEST_CASE("unknot boundaries are empty in both modes") {
    for (const Perm& p : {Perm{0, 1}, Perm{1, 0}}) {
        CHECK(boundary(kUnknot2, p, DiffMode::Full).empty());
        CHECK(boundary(kUnknot2, p, DiffMode::Graded).empty());
    }
}

TEST_CASE("boundary grading behaviour") {
    // graded mode preserves A and lowers M by 1; full mode lowers A by the
    // number of black dots inside the chosen rectangle, never raising it
    Rng rng(82);
    for (int trial = 0; trial < 12; ++trial) {
        GridDiagram g = random_grid(3 + (int)rng.below(3), rng.next());
        WindingTable wt = winding_table(g);
        BoundaryOracle oracle(g);
        for (const auto& sigma : all_perms(g.n)) {
            int a = alexander_grading(wt, sigma);
            for (const auto& target : boundary(g, sigma, DiffMode::Graded)) {
                CHECK(alexander_grading(wt, target) == a);
                CHECK(maslov_grading(g, target) == maslov_grading(g, sigma) - 1);
            }
            for (const auto& target : boundary(g, sigma, DiffMode::Full))
                CHECK(alexander_grading(wt, target) <= a);
        }
    }
}

TEST_CASE("full differential squares to zero") {
    Rng rng(83);
    for (int trial = 0; trial < 8; ++trial) {
        GridDiagram g = random_grid(3 + (int)rng.below(3), rng.next());
        for (const auto& sigma : all_perms(g.n)) {
            std::map<GenKey, int> parity;
            for (const auto& mid : boundary(g, sigma, DiffMode::Full))
                for (const auto& end : boundary(g, mid, DiffMode::Full))
                    parity[perm_rank(end)] ^= 1;
            for (const auto& [key, par] : parity) CHECK(par == 0);
        }
    }
    // spot-check one larger grid on random generators
    GridDiagram g = random_grid(8, 991);
    Rng pick(992);
    uint64_t fact8 = 40320;
    for (int i = 0; i < 50; ++i) {
        Perm sigma = perm_unrank(pick.below(fact8), 8);
        std::map<GenKey, int> parity;
        for (const auto& mid : boundary(g, sigma, DiffMode::Full))
            for (const auto& end : boundary(g, mid, DiffMode::Full))
                parity[perm_rank(end)] ^= 1;
        for (const auto& [key, par] : parity) CHECK(par == 0);
    }
}

TEST_CASE("Maslov parity matches permutation sign") {
    Rng rng(84);
    for (int trial = 0; trial < 6; ++trial) {
        GridDiagram g = random_grid(3 + (int)rng.below(3), rng.next());
        for (const auto& sigma : all_perms(g.n)) {
            int m = maslov_grading(g, sigma);
            bool even = perm_sign_is_even(sigma);
            // all even-sign generators share one Maslov parity
            Perm id(g.n);
            std::iota(id.begin(), id.end(), uint8_t{0});
            int m_id = maslov_grading(g, id);
            CHECK(((m - m_id) % 2 == 0) == even);
        }
    }
}

TEST_CASE("region decomposition reconstructs its curves") {
    // boundary of sum a_i S_i equals gamma edge-for-edge with orientation
    Rng rng(85);
    for (int trial = 0; trial < 30; ++trial) {
        GridDiagram g = random_grid(3 + (int)rng.below(4), rng.next());
        uint64_t fact = 1;
        for (int i = 2; i <= g.n; ++i) fact *= i;
        Perm sigma = perm_unrank(rng.below(fact), g.n);
        RegionDecomposition rd = region_decomposition(g, sigma);

        // oriented unit edges: key (x, y, horizontal?), value net multiplicity
        std::map<std::tuple<int, int, bool>, int> expected, actual;
        for (const auto& curve : rd.curves) {
            for (size_t i = 0; i < curve.size(); ++i) {
                auto p = curve[i];
                auto q = curve[(i + 1) % curve.size()];
                if (p[0] == q[0]) {
                    int step = q[1] > p[1] ? 1 : -1;
                    for (int y = p[1]; y != q[1]; y += step)
                        expected[{p[0], std::min(y, y + step), false}] += step;
                } else {
                    int step = q[0] > p[0] ? 1 : -1;
                    for (int x = p[0]; x != q[0]; x += step)
                        expected[{std::min(x, x + step), p[1], true}] += step;
                }
            }
        }
        for (int c = 0; c < g.n; ++c) {
            for (int r = 0; r < g.n; ++r) {
                int a = rd.cell(c, r);
                if (a == 0) continue;
                // counterclockwise boundary of the cell
                actual[{c, r, true}] += a;          // bottom, rightward
                actual[{c + 1, r, false}] += a;     // right, upward
                actual[{c, r + 1, true}] -= a;      // top, leftward
                actual[{c, r, false}] -= a;         // left, downward
            }
        }
        std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(actual, [](const auto& kv) { return kv.second == 0; });
        CHECK(expected == actual);
    }
}

TEST_CASE("bounded enumeration equals exhaustive filtering") {
    GridDiagram g = torus_grid(3, 4);
    WindingTable wt = winding_table(g);
    size_t brute = 0;
    for (const auto& sigma : all_perms(7))
        if (alexander_grading(wt, sigma) >= 0) ++brute;
    auto gens = collect_generators_serial(wt, 0);
    CHECK(gens.size() == brute);
    CHECK(gens.size() < 5040);
    for (const auto& gen : gens)
        CHECK(alexander_grading(wt, perm_unrank(gen.key, 7)) == gen.alexander);
}

TEST_CASE("unbounded enumeration produces the whole symmetric group") {
    WindingTable wt = winding_table(kUnknot2);
    auto gens = collect_generators_serial(wt, kNoAlexanderBound);
    CHECK(gens.size() == 2);
}

TEST_CASE("parallel enumeration matches the serial reference") {
    GridDiagram g = torus_grid(3, 5);
    WindingTable wt = winding_table(g);
    auto serial = collect_generators_serial(wt, 0);
    set_threads(0);
    auto parallel = collect_generators(wt, 0);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].key == parallel[i].key);
        CHECK(serial[i].alexander == parallel[i].alexander);
    }
}

TEST_CASE("graded pieces partition the enumerated generators") {
    Rng rng(86);
    for (int trial = 0; trial < 10; ++trial) {
        GridDiagram g = random_grid(3 + (int)rng.below(3), rng.next());
        WindingTable wt = winding_table(g);
        auto pieces = build_graded_complexes(g, wt);
        size_t total = 0;
        uint64_t fact = 1;
        for (int i = 2; i <= g.n; ++i) fact *= i;
        for (const auto& piece : pieces) {
            total += piece.size();
            verify_d2(piece);
        }
        CHECK(total == fact);
    }
}

TEST_CASE("trefoil graded pieces at A >= 0 have no internal differential") {
    WindingTable wt = winding_table(kTrefoil5);
    auto pieces = build_graded_complexes(kTrefoil5, wt, 0);
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].alexander == 0);
    CHECK(pieces[0].size() == 5);
    CHECK(pieces[0].edge_count() == 0);
    CHECK(pieces[1].alexander == 1);
    CHECK(pieces[1].size() == 1);
    CHECK(pieces[1].edge_count() == 0);
}
