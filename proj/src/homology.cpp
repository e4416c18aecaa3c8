#include "hfk/homology.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "hfk/errors.hpp"
#include "hfk/util.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hfk {

namespace {

// Merge-based symmetric difference of sorted index sets.
std::vector<uint32_t> symdiff(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void sorted_erase(std::vector<uint32_t>& v, uint32_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

void sorted_insert(std::vector<uint32_t>& v, uint32_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

bool sorted_contains(const std::vector<uint32_t>& v, uint32_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    return it != v.end() && *it == x;
}

} // namespace

size_t ReductionGraph::alive_count() const {
    size_t c = 0;
    for (uint8_t a : alive) c += a;
    return c;
}

ReductionGraph reduction_graph(const GradedPiece& piece, bool track_labels) {
    ReductionGraph g;
    size_t n = piece.basis.size();
    g.out = piece.out;
    g.in.assign(n, {});
    g.alive.assign(n, 1);
    g.track_labels = track_labels;
    for (size_t v = 0; v < n; ++v)
        for (uint32_t u : g.out[v]) g.in[u].push_back(static_cast<uint32_t>(v));
    // in-lists come out sorted because v ascends
    if (track_labels) {
        g.label.assign(n, {});
        for (size_t v = 0; v < n; ++v) g.label[v] = {static_cast<uint32_t>(v)};
    }
    return g;
}

void augment(ReductionGraph& graph, const std::vector<std::vector<uint32_t>>& chains) {
    size_t base = graph.vertex_count();
    for (size_t i = 0; i < chains.size(); ++i) {
        uint32_t v = static_cast<uint32_t>(base + i);
        std::vector<uint32_t> chain = chains[i];
        std::sort(chain.begin(), chain.end());
        graph.out.push_back(chain);
        graph.in.emplace_back();
        graph.alive.push_back(1);
        if (graph.track_labels) graph.label.push_back({v});
        for (uint32_t u : chain) sorted_insert(graph.in[u], v);
    }
}

// One reduction step on edge i -> j.  Every other predecessor k of j gets
// label(k) ^= label(i) and out(k) ^= out(i), then both endpoints are removed.
// The labels of the surviving vertices stay linearly independent.
static void reduce_step(ReductionGraph& g, uint32_t i, uint32_t j) {
    auto preds_j = g.in[j]; // snapshot
    auto out_i = g.out[i];  // snapshot, contains j

    // Predecessors of i that are not predecessors of j just lose the edge.
    for (uint32_t k : g.in[i]) {
        if (!g.alive[k] || k == j) continue;
        if (!sorted_contains(preds_j, k)) sorted_erase(g.out[k], i);
    }

    for (uint32_t k : preds_j) {
        if (k == i || !g.alive[k]) continue;
        if (g.track_labels) g.label[k] = symdiff(g.label[k], g.label[i]);

        std::vector<uint32_t> merged = symdiff(g.out[k], out_i);
        // i and j are leaving the graph; j cancels in the symmetric
        // difference, i may survive it if k had an edge to i.
        std::vector<uint32_t> added, removed;
        std::set_difference(merged.begin(), merged.end(), g.out[k].begin(), g.out[k].end(),
                            std::back_inserter(added));
        std::set_difference(g.out[k].begin(), g.out[k].end(), merged.begin(), merged.end(),
                            std::back_inserter(removed));
        sorted_erase(merged, i);
        for (uint32_t l : added)
            if (l != i && l != j) sorted_insert(g.in[l], k);
        for (uint32_t l : removed)
            if (l != i && l != j) sorted_erase(g.in[l], k);
        g.out[k] = std::move(merged);
    }

    for (uint32_t l : out_i)
        if (l != j && g.alive[l]) sorted_erase(g.in[l], i);
    for (uint32_t l : g.out[j])
        if (g.alive[l]) sorted_erase(g.in[l], j);

    g.alive[i] = g.alive[j] = 0;
    g.out[i].clear();
    g.out[j].clear();
    g.in[i].clear();
    g.in[j].clear();
    if (g.track_labels) {
        g.label[i].clear();
        g.label[j].clear();
    }
}

uint64_t reduce_graph(ReductionGraph& g) {
    auto degree = [&](uint32_t v) { return g.out[v].size() + g.in[v].size(); };

    // Lazy min-heap of candidate edges keyed by endpoint degree sum; stale
    // entries are re-keyed or dropped on pop.  A rescan refills it when it
    // runs dry, which also guarantees termination on an edgeless graph.
    using Entry = std::tuple<size_t, uint32_t, uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    auto push_candidate = [&](uint32_t v) {
        if (g.alive[v] && !g.out[v].empty()) {
            uint32_t t = g.out[v].front();
            heap.emplace(degree(v) + degree(t), v, t);
        }
    };
    for (uint32_t v = 0; v < g.vertex_count(); ++v) push_candidate(v);

    uint64_t steps = 0;
    while (true) {
        if (heap.empty()) {
            bool any = false;
            for (uint32_t v = 0; v < g.vertex_count(); ++v) {
                if (g.alive[v] && !g.out[v].empty()) {
                    push_candidate(v);
                    any = true;
                }
            }
            if (!any) break;
            continue;
        }
        auto [key, i, j] = heap.top();
        heap.pop();
        if (!g.alive[i] || !g.alive[j]) continue;
        if (!sorted_contains(g.out[i], j)) {
            push_candidate(i);
            continue;
        }
        size_t cur = degree(i) + degree(j);
        if (cur != key) {
            heap.emplace(cur, i, j);
            continue;
        }
        auto touched = g.in[j]; // re-seed candidates after the step
        reduce_step(g, i, j);
        ++steps;
        for (uint32_t k : touched)
            if (g.alive[k]) push_candidate(k);
    }
    return steps;
}

ReducedPiece reduce(const GridDiagram& g, const GradedPiece& piece, bool track_labels,
                    size_t verify_members) {
    ReductionGraph graph = reduction_graph(piece, track_labels);
    ReducedPiece result;
    result.alexander = piece.alexander;
    result.initial_vertices = piece.basis.size();
    result.steps = reduce_graph(graph);

    for (uint32_t v = 0; v < graph.vertex_count(); ++v) {
        if (!graph.alive[v]) continue;
        HomologyClass cls;
        if (track_labels) {
            cls.chain.reserve(graph.label[v].size());
            for (uint32_t idx : graph.label[v]) cls.chain.push_back(piece.basis[idx]);
        } else {
            cls.chain.push_back(piece.basis[v]);
        }
        cls.maslov = maslov_grading(g, perm_unrank(cls.chain.front(), g.n));
        size_t check = cls.chain.size();
        if (verify_members != 0) check = std::min(check, verify_members);
        for (size_t i = 1; i < check; ++i) {
            int m = maslov_grading(g, perm_unrank(cls.chain[i], g.n));
            if (m != cls.maslov)
                throw ComputeError("mixed Maslov gradings inside one homology label (piece A=" +
                                   std::to_string(piece.alexander) + ")");
        }
        result.classes.push_back(std::move(cls));
    }
    return result;
}

int z2_rank(std::vector<std::vector<uint64_t>> rows) {
    int rank = 0;
    size_t words = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < words * 64; ++col) {
        size_t word = col / 64;
        uint64_t mask = 1ull << (col % 64);
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][word] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != static_cast<size_t>(rank) && (rows[r][word] & mask))
                for (size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        }
        ++rank;
        if (static_cast<size_t>(rank) == rows.size()) break;
    }
    return rank;
}

std::map<int, long long> gaussian_homology(const GridDiagram& g, const GradedPiece& piece) {
    // Bucket the basis by Maslov grading, then dim H_m = |C_m| - rank d_m -
    // rank d_{m+1} by dense elimination.
    std::map<int, std::vector<uint32_t>> by_maslov;
    std::vector<int> maslov_of(piece.basis.size());
    for (size_t v = 0; v < piece.basis.size(); ++v) {
        maslov_of[v] = maslov_grading(g, perm_unrank(piece.basis[v], g.n));
        by_maslov[maslov_of[v]].push_back(static_cast<uint32_t>(v));
    }

    std::map<int, int> ranks; // maslov m -> rank of d: C_m -> C_{m-1}
    for (const auto& [m, sources] : by_maslov) {
        auto target_it = by_maslov.find(m - 1);
        if (target_it == by_maslov.end()) continue;
        const auto& targets = target_it->second;
        std::map<uint32_t, size_t> target_pos;
        for (size_t i = 0; i < targets.size(); ++i) target_pos[targets[i]] = i;
        size_t words = (targets.size() + 63) / 64;
        std::vector<std::vector<uint64_t>> rows;
        rows.reserve(sources.size());
        for (uint32_t v : sources) {
            std::vector<uint64_t> row(words, 0);
            for (uint32_t u : piece.out[v]) {
                if (maslov_of[u] != m - 1)
                    throw ComputeError("graded differential does not lower Maslov by 1");
                size_t pos = target_pos.at(u);
                row[pos / 64] |= 1ull << (pos % 64);
            }
            rows.push_back(std::move(row));
        }
        ranks[m] = z2_rank(std::move(rows));
    }

    std::map<int, long long> dims;
    for (const auto& [m, bucket] : by_maslov) {
        long long d = static_cast<long long>(bucket.size());
        auto it = ranks.find(m);
        if (it != ranks.end()) d -= it->second;
        it = ranks.find(m + 1);
        if (it != ranks.end()) d -= it->second;
        if (d < 0) throw ComputeError("negative homology dimension from elimination");
        if (d > 0) dims[m] = d;
    }
    return dims;
}

// Pieces reduce independently; launch the largest first so a dominant piece
// does not trail the worker pool.
std::vector<size_t> largest_first_order(const std::vector<GradedPiece>& pieces) {
    std::vector<size_t> order(pieces.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pieces[a].size() > pieces[b].size(); });
    return order;
}

BigradedPoly associated_graded_poly(const GridDiagram& g, const WindingTable& wt,
                                    int min_alexander) {
    auto pieces = build_graded_complexes(g, wt, min_alexander);
    auto order = largest_first_order(pieces);
    std::vector<std::map<int, long long>> piece_dims(pieces.size());
    int64_t count = static_cast<int64_t>(pieces.size());
    bool failed = false;
    std::string error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel_enabled())
#endif
    for (int64_t i = 0; i < count; ++i) {
        const GradedPiece& piece = pieces[order[i]];
        try {
            ReducedPiece red = reduce(g, piece, /*track_labels=*/false);
            for (const auto& cls : red.classes) piece_dims[order[i]][cls.maslov] += 1;
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                failed = true;
                error = e.what();
            }
        }
    }
    if (failed) throw ComputeError(error);

    BigradedPoly poly;
    for (size_t i = 0; i < pieces.size(); ++i)
        for (const auto& [m, d] : piece_dims[i]) poly.add(pieces[i].alexander, m, d);
    return poly;
}

BigradedPoly strip_s_factor(const BigradedPoly& p, int grid_n, int min_alexander) {
    const int k = grid_n - 1;
    std::vector<long long> binom(k + 1, 0);
    binom[0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = i; j >= 1; --j) binom[j] += binom[j - 1];

    const bool bounded = min_alexander != kNoAlexanderBound;
    BigradedPoly remainder;
    if (bounded) {
        // entries below the trusted range would poison the corner division
        for (const auto& [key, dim] : p.terms)
            if (key.first >= min_alexander) remainder.terms.emplace(key, dim);
    } else {
        remainder = p;
    }
    BigradedPoly quotient;
    while (!remainder.terms.empty()) {
        // maximal corner: the S-factor expansion has its top at (0, 0), so
        // the highest (a, m) term of the remainder is a quotient term
        auto it = std::prev(remainder.terms.end());
        auto [a, m] = it->first;
        long long c = it->second;
        if (c < 0)
            throw ComputeError("inexact tensor-factor division, residual " +
                               to_monomial_string(remainder));
        quotient.add(a, m, c);
        for (int i = 0; i <= k; ++i) {
            int ta = a - i, tm = m - i;
            if (bounded && ta < min_alexander) continue; // below the computed range
            remainder.add(ta, tm, -c * binom[i]);
        }
    }
    return quotient;
}

LaurentPoly euler_characteristic(const BigradedPoly& p) {
    LaurentPoly chi;
    for (const auto& [key, dim] : p.terms) {
        auto [a, m] = key;
        chi[a] += (m % 2 == 0 ? dim : -dim);
        if (chi[a] == 0) chi.erase(a);
    }
    return chi;
}

} // namespace hfk
