#include "hfk/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "hfk/errors.hpp"
#include "hfk/util.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hfk {

namespace {

constexpr int kMaxN = 16;

const uint64_t kFactorial[kMaxN + 1] = {
    1ull,         1ull,          2ull,           6ull,           24ull,           120ull,
    720ull,       5040ull,       40320ull,       362880ull,      3628800ull,      39916800ull,
    479001600ull, 6227020800ull, 87178291200ull, 1307674368000ull, 20922789888000ull};

std::string perm_to_string(const Perm& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
    return s + "]";
}

} // namespace

GenKey perm_rank(const Perm& p) {
    const int n = static_cast<int>(p.size());
    GenKey key = 0;
    uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
        uint32_t below = std::popcount(seen & ((1u << p[i]) - 1));
        key += (p[i] - below) * kFactorial[n - 1 - i];
        seen |= 1u << p[i];
    }
    return key;
}

Perm perm_unrank(GenKey key, int n) {
    Perm p(n);
    uint8_t avail[kMaxN];
    for (int i = 0; i < n; ++i) avail[i] = static_cast<uint8_t>(i);
    int remaining = n;
    for (int i = 0; i < n; ++i) {
        uint64_t f = kFactorial[n - 1 - i];
        int idx = static_cast<int>(key / f);
        key %= f;
        p[i] = avail[idx];
        for (int j = idx; j + 1 < remaining; ++j) avail[j] = avail[j + 1];
        --remaining;
    }
    return p;
}

bool perm_sign_is_even(const Perm& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

int alexander_grading(const WindingTable& wt, const Perm& sigma) {
    long long sum = 0;
    for (int c = 0; c < wt.n; ++c) sum += wt.at(c, sigma[c]);
    long long a8 = wt.a_eighths - 8 * sum;
    if (a8 % 8 != 0)
        throw ComputeError("non-integral Alexander grading for " + perm_to_string(sigma));
    return static_cast<int>(a8 / 8);
}

// Staircase construction: starting from the smallest column where sigma and
// the white-dot permutation sigma_0 disagree, alternate a horizontal segment
// to the column whose sigma_0-value matches and a vertical segment up/down to
// that column's sigma-value, until the curve closes; repeat until every
// disagreement is consumed.  Drawn on the planar grid, never wrapping.
RegionDecomposition region_decomposition(const GridDiagram& g, const Perm& sigma) {
    const int n = g.n;
    RegionDecomposition rd;
    rd.n = n;
    rd.coeff.assign(static_cast<size_t>(n) * n, 0);

    std::vector<int> col_of_white_row(n);
    for (int c = 0; c < n; ++c) col_of_white_row[g.o_rows[c]] = c;

    std::vector<char> consumed(n, 0);
    for (int c = 0; c < n; ++c)
        if (sigma[c] == g.o_rows[c]) consumed[c] = 1;

    for (int start = 0; start < n; ++start) {
        if (consumed[start]) continue;
        std::vector<std::array<int, 2>> path;
        path.push_back({start, sigma[start]});
        consumed[start] = 1;
        int cur = start;
        while (true) {
            int next = col_of_white_row[sigma[cur]];
            path.push_back({next, sigma[cur]});  // horizontal endpoint
            if (next == start) break;            // vertical back to the start point closes
            path.push_back({next, sigma[next]}); // vertical endpoint
            consumed[next] = 1;
            cur = next;
        }
        if (path.back()[0] != start) throw ComputeError("staircase curve failed to close");
        rd.curves.push_back(std::move(path));
    }

    // Cell coefficients: winding number of the curves around each cell
    // center, by a rightward ray over the vertical segments (upward = +1).
    // The unbounded region carries 0 automatically.
    for (const auto& curve : rd.curves) {
        size_t len = curve.size();
        for (size_t i = 0; i < len; ++i) {
            const auto& p = curve[i];
            const auto& q = curve[(i + 1) % len];
            if (p[0] != q[0]) continue; // horizontal
            int x = p[0];
            int lo = std::min(p[1], q[1]), hi = std::max(p[1], q[1]);
            int dir = q[1] > p[1] ? 1 : -1;
            for (int cy = lo; cy < hi; ++cy)
                for (int cx = 0; cx < x; ++cx) rd.coeff[static_cast<size_t>(cx) * n + cy] += dir;
        }
    }
    return rd;
}

int maslov_grading(const GridDiagram& g, const Perm& sigma) {
    const int n = g.n;
    RegionDecomposition rd = region_decomposition(g, sigma);

    auto corner_sum = [&](int px, int py) {
        int s = 0;
        for (int cx = px - 1; cx <= px; ++cx) {
            if (cx < 0 || cx >= n) continue;
            for (int cy = py - 1; cy <= py; ++cy) {
                if (cy < 0 || cy >= n) continue;
                s += rd.cell(cx, cy);
            }
        }
        return s;
    };

    long long total4 = 4LL * (1 - n);
    for (int c = 0; c < n; ++c) total4 += corner_sum(c, sigma[c]);
    for (int c = 0; c < n; ++c) total4 += corner_sum(c, g.o_rows[c]);
    for (int c = 0; c < n; ++c) total4 -= 8LL * rd.cell(c, g.o_rows[c]);

    if (total4 % 4 != 0)
        throw ComputeError("non-integral Maslov grading for " + perm_to_string(sigma) +
                           " (4M = " + std::to_string(total4) + ")");
    return static_cast<int>(total4 / 4);
}

BoundaryOracle::BoundaryOracle(const GridDiagram& g) : grid_(g) {
    const int n = g.n;
    auto build = [&](const std::vector<int>& rows, std::vector<int>& prefix) {
        prefix.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
        auto at = [&](int c, int r) -> int& { return prefix[static_cast<size_t>(c) * (n + 1) + r]; };
        for (int c = 1; c <= n; ++c)
            for (int r = 1; r <= n; ++r)
                at(c, r) = at(c - 1, r) + at(c, r - 1) - at(c - 1, r - 1) +
                           (rows[c - 1] == r - 1 ? 1 : 0);
    };
    build(g.x_rows, black_prefix_);
    build(g.o_rows, white_prefix_);
}

int BoundaryOracle::whites_in(int c1, int r1, int c2, int r2) const {
    const int s = grid_.n + 1;
    return white_prefix_[static_cast<size_t>(c2) * s + r2] -
           white_prefix_[static_cast<size_t>(c1) * s + r2] -
           white_prefix_[static_cast<size_t>(c2) * s + r1] +
           white_prefix_[static_cast<size_t>(c1) * s + r1];
}

int BoundaryOracle::blacks_in(int c1, int r1, int c2, int r2) const {
    const int s = grid_.n + 1;
    return black_prefix_[static_cast<size_t>(c2) * s + r2] -
           black_prefix_[static_cast<size_t>(c1) * s + r2] -
           black_prefix_[static_cast<size_t>(c2) * s + r1] +
           black_prefix_[static_cast<size_t>(c1) * s + r1];
}

// For columns i < j the four circles cut the torus into four rectangles.
// The two connecting sigma to sigma' with the sigma-points at their lower
// left and upper right are, for sigma(i) < sigma(j),
//
//      |       |                  1 |   2   | 1
//      |   0   |   (bounded)    ----+-------+----    (0 = bounded,
//      |       |                  3 |   0   | 3       1 = wraps both ways)
//
// and for sigma(i) > sigma(j) the two that wrap vertically (2) or
// horizontally (3).  A rectangle is admissible when its interior avoids
// white dots and sigma-points (Full) and also black dots (Graded); sigma'
// lies in d(sigma) iff exactly one of the pair is admissible.
void BoundaryOracle::boundary_pairs(const Perm& sigma, DiffMode mode,
                                    std::vector<std::pair<int, int>>& out) const {
    out.clear();
    const int n = grid_.n;
    const bool graded = mode == DiffMode::Graded;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int si = sigma[i], sj = sigma[j];
            bool first, second;
            if (si < sj) {
                int dots_in = whites_in(i, si, j, sj) + (graded ? blacks_in(i, si, j, sj) : 0);
                first = dots_in == 0;
                for (int k = i + 1; k < j && first; ++k)
                    if (si < sigma[k] && sigma[k] < sj) first = false;

                int inside_cols = j - i, inside_rows = sj - si;
                int dots_out = (n - inside_cols - inside_rows + whites_in(i, si, j, sj));
                if (graded) dots_out += (n - inside_cols - inside_rows + blacks_in(i, si, j, sj));
                second = dots_out == 0;
                for (int k = 0; k < i && second; ++k)
                    if (sigma[k] < si || sigma[k] > sj) second = false;
                for (int k = j + 1; k < n && second; ++k)
                    if (sigma[k] < si || sigma[k] > sj) second = false;
            } else {
                int lo = sj, hi = si;
                int in_rect_w = whites_in(i, lo, j, hi);
                int in_rect_b = blacks_in(i, lo, j, hi);
                // vertical wrap: columns [i, j), rows outside [lo, hi)
                int dots_v = (j - i) - in_rect_w + (graded ? (j - i) - in_rect_b : 0);
                first = dots_v == 0;
                for (int k = i + 1; k < j && first; ++k)
                    if (sigma[k] < lo || sigma[k] > hi) first = false;
                // horizontal wrap: columns outside [i, j), rows [lo, hi)
                int dots_h = (hi - lo) - in_rect_w + (graded ? (hi - lo) - in_rect_b : 0);
                second = dots_h == 0;
                for (int k = 0; k < i && second; ++k)
                    if (lo < sigma[k] && sigma[k] < hi) second = false;
                for (int k = j + 1; k < n && second; ++k)
                    if (lo < sigma[k] && sigma[k] < hi) second = false;
            }
            if (first != second) out.emplace_back(i, j);
        }
    }
}

std::vector<Perm> boundary(const GridDiagram& g, const Perm& sigma, DiffMode mode) {
    BoundaryOracle oracle(g);
    std::vector<std::pair<int, int>> pairs;
    oracle.boundary_pairs(sigma, mode, pairs);
    std::vector<Perm> result;
    result.reserve(pairs.size());
    for (auto [i, j] : pairs) {
        Perm q = sigma;
        std::swap(q[i], q[j]);
        result.push_back(std::move(q));
    }
    return result;
}

namespace {

// Branch-and-bound state for one subtree of the column-assignment search.
struct Enumerator {
    const WindingTable& wt;
    int n;
    long long budget; // maximal allowed sum of winding numbers over sigma
    bool bounded;
    std::vector<int> suffix_min; // static optimistic completion per column
    Perm sigma;
    uint32_t used = 0;
    const GeneratorVisitor& visit;

    Enumerator(const WindingTable& wt_, int min_alexander, const GeneratorVisitor& visit_)
        : wt(wt_), n(wt_.n), visit(visit_) {
        bounded = min_alexander != kNoAlexanderBound;
        budget = bounded ? static_cast<long long>(wt.alexander_const()) - min_alexander : 0;
        sigma.assign(n, 0);
        suffix_min.assign(n + 1, 0);
        for (int c = n - 1; c >= 0; --c) {
            int mn = wt.at(c, 0);
            for (int r = 1; r < n; ++r) mn = std::min(mn, wt.at(c, r));
            suffix_min[c] = suffix_min[c + 1] + mn;
        }
    }

    // Tighter completion bound from the unused rows only.
    long long refined_bound(int col) const {
        long long s = 0;
        for (int c = col; c < n; ++c) {
            int mn = INT32_MAX;
            for (int r = 0; r < n; ++r)
                if (!(used >> r & 1)) mn = std::min(mn, wt.at(c, r));
            s += mn;
        }
        return s;
    }

    void recurse(int col, long long sum) {
        if (col == n) {
            visit(sigma, static_cast<int>(wt.alexander_const() - sum));
            return;
        }
        if (bounded) {
            if (sum + suffix_min[col] > budget) return;
            if (sum + refined_bound(col) > budget) return;
        }
        for (int r = 0; r < n; ++r) {
            if (used >> r & 1) continue;
            sigma[col] = static_cast<uint8_t>(r);
            used |= 1u << r;
            recurse(col + 1, sum + wt.at(col, r));
            used &= ~(1u << r);
        }
    }

    void run_root(int first_row) {
        sigma[0] = static_cast<uint8_t>(first_row);
        used = 1u << first_row;
        recurse(1, wt.at(0, first_row));
        used = 0;
    }
};

} // namespace

void enumerate_generators_serial(const WindingTable& wt, int min_alexander,
                                 const GeneratorVisitor& visit) {
    Enumerator e(wt, min_alexander, visit);
    for (int r = 0; r < wt.n; ++r) e.run_root(r);
}

std::vector<Generator> collect_generators_serial(const WindingTable& wt, int min_alexander) {
    std::vector<Generator> out;
    enumerate_generators_serial(wt, min_alexander,
                                [&](const Perm& p, int a) { out.push_back({perm_rank(p), a}); });
    return out;
}

std::vector<Generator> collect_generators(const WindingTable& wt, int min_alexander) {
#ifdef _OPENMP
    if (parallel_enabled()) {
        std::vector<std::vector<Generator>> buckets(wt.n);
#pragma omp parallel for schedule(dynamic, 1)
        for (int r = 0; r < wt.n; ++r) {
            auto& bucket = buckets[r];
            GeneratorVisitor visit = [&](const Perm& p, int a) {
                bucket.push_back({perm_rank(p), a});
            };
            Enumerator e(wt, min_alexander, visit);
            e.run_root(r);
        }
        size_t total = 0;
        for (const auto& b : buckets) total += b.size();
        std::vector<Generator> out;
        out.reserve(total);
        for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
        return out;
    }
#endif
    return collect_generators_serial(wt, min_alexander);
}

uint64_t GradedPiece::edge_count() const {
    uint64_t e = 0;
    for (const auto& v : out) e += v.size();
    return e;
}

std::vector<GradedPiece> build_graded_complexes(const GridDiagram& g, const WindingTable& wt,
                                                int min_alexander) {
    auto gens = collect_generators(wt, min_alexander);

    std::map<int, std::vector<GenKey>> buckets;
    for (const auto& gen : gens) buckets[gen.alexander].push_back(gen.key);

    std::vector<GradedPiece> pieces;
    pieces.reserve(buckets.size());
    for (auto& [a, keys] : buckets) {
        GradedPiece piece;
        piece.alexander = a;
        piece.basis = std::move(keys); // already sorted: enumeration is lexicographic
        pieces.push_back(std::move(piece));
    }

    BoundaryOracle oracle(g);
    for (auto& piece : pieces) {
        const auto& basis = piece.basis;
        piece.out.assign(basis.size(), {});
        int64_t count = static_cast<int64_t>(basis.size());
        bool escaped = false; // boundary target missing from its piece
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) if (parallel_enabled()) reduction(|| : escaped)
#endif
        for (int64_t v = 0; v < count; ++v) {
            Perm sigma = perm_unrank(basis[v], g.n);
            std::vector<std::pair<int, int>> pairs;
            oracle.boundary_pairs(sigma, DiffMode::Graded, pairs);
            auto& row = piece.out[v];
            row.reserve(pairs.size());
            for (auto [i, j] : pairs) {
                std::swap(sigma[i], sigma[j]);
                GenKey key = perm_rank(sigma);
                std::swap(sigma[i], sigma[j]);
                auto it = std::lower_bound(basis.begin(), basis.end(), key);
                if (it == basis.end() || *it != key) {
                    escaped = true;
                    continue;
                }
                row.push_back(static_cast<uint32_t>(it - basis.begin()));
            }
            std::sort(row.begin(), row.end());
        }
        if (escaped) throw ComputeError("graded boundary left its Alexander piece");
    }
    return pieces;
}

void verify_d2(const GradedPiece& piece) {
    for (size_t v = 0; v < piece.basis.size(); ++v) {
        std::map<uint32_t, int> parity;
        for (uint32_t u : piece.out[v])
            for (uint32_t w : piece.out[u]) parity[w] ^= 1;
        for (const auto& [w, par] : parity)
            if (par)
                throw ComputeError("d^2 != 0 at piece A=" + std::to_string(piece.alexander));
    }
}

} // namespace hfk
