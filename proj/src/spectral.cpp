#include "hfk/spectral.hpp"

#include <algorithm>
#include <string>

#include "hfk/errors.hpp"
#include "hfk/util.hpp"

namespace hfk {

BigradedPoly symmetry_complete(const BigradedPoly& p) {
    BigradedPoly out = p;
    for (const auto& [key, dim] : p.terms) {
        auto [a, m] = key;
        if (a <= 0) continue;
        Bigrading mirror{-a, m - 2 * a};
        auto it = out.terms.find(mirror);
        if (it == out.terms.end()) out.terms.emplace(mirror, dim);
        else if (it->second != dim)
            throw ComputeError("symmetry completion conflict at (a=" + std::to_string(-a) +
                               ", m=" + std::to_string(m - 2 * a) + ")");
    }
    // a negative-grading entry whose positive partner is absent is stale data
    for (const auto& [key, dim] : p.terms) {
        auto [a, m] = key;
        if (a >= 0) continue;
        if (p.at(-a, m - 2 * a) != dim)
            throw ComputeError("symmetry completion conflict at (a=" + std::to_string(a) +
                               ", m=" + std::to_string(m) + ")");
    }
    return out;
}

SpectralEngine::SpectralEngine(const GridDiagram& g, int min_alexander)
    : grid_(g), wt_(winding_table(g)), min_alexander_(min_alexander) {
    auto pieces = build_graded_complexes(grid_, wt_, min_alexander_);
    auto order = largest_first_order(pieces);
    std::vector<ReducedPiece> reduced(pieces.size());
    int64_t count = static_cast<int64_t>(pieces.size());
    bool failed = false;
    std::string error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel_enabled())
#endif
    for (int64_t i = 0; i < count; ++i) {
        try {
            reduced[order[i]] = reduce(grid_, pieces[order[i]], /*track_labels=*/true);
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

    for (size_t i = 0; i < pieces.size(); ++i) {
        PieceData data;
        data.piece = std::move(pieces[i]);
        data.reduced = std::move(reduced[i]);
        data.homology_total = static_cast<long long>(data.reduced.classes.size());
        int a = data.piece.alexander;
        for (const auto& cls : data.reduced.classes) e1_unstripped_.add(a, cls.maslov, 1);
        pieces_.emplace(a, std::move(data));
    }
}

SpectralEngine::PieceData* SpectralEngine::find_piece(int a) {
    auto it = pieces_.find(a);
    return it == pieces_.end() ? nullptr : &it->second;
}

// Full-mode boundaries of the H_m representatives of piece a, projected one
// Alexander grading down and expressed as basis-index chains of piece a-1.
std::vector<std::vector<uint32_t>> SpectralEngine::boundary_chains(int a, int m) {
    PieceData* src = find_piece(a);
    if (!src) return {};
    PieceData* dst = find_piece(a - 1);

    BoundaryOracle oracle(grid_);
    std::vector<std::vector<uint32_t>> chains;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& cls : src->reduced.classes) {
        if (cls.maslov != m) continue;
        std::map<GenKey, int> parity;
        for (GenKey key : cls.chain) {
            Perm sigma = perm_unrank(key, grid_.n);
            oracle.boundary_pairs(sigma, DiffMode::Full, pairs);
            for (auto [i, j] : pairs) {
                // Alexander drop across the rectangle from the four changed
                // winding numbers.
                int drop = wt_.at(i, sigma[i]) + wt_.at(j, sigma[j]) - wt_.at(i, sigma[j]) -
                           wt_.at(j, sigma[i]);
                if (drop > 0) throw ComputeError("full differential raised Alexander grading");
                if (drop != -1) continue;
                std::swap(sigma[i], sigma[j]);
                parity[perm_rank(sigma)] ^= 1;
                std::swap(sigma[i], sigma[j]);
            }
        }
        std::vector<uint32_t> chain;
        for (const auto& [key, par] : parity) {
            if (!par) continue;
            if (!dst)
                throw ComputeError("connecting boundary hit a missing piece at A=" +
                                   std::to_string(a - 1));
            const auto& basis = dst->piece.basis;
            auto it = std::lower_bound(basis.begin(), basis.end(), key);
            if (it == basis.end() || *it != key)
                throw ComputeError("connecting boundary missing from piece basis");
            chain.push_back(static_cast<uint32_t>(it - basis.begin()));
        }
        // each z must be a cycle of the target piece
        if (dst && !chain.empty()) {
            std::map<uint32_t, int> dz;
            for (uint32_t v : chain)
                for (uint32_t u : dst->piece.out[v]) dz[u] ^= 1;
            for (const auto& [u, par] : dz)
                if (par) throw ComputeError("connecting chain is not a cycle in its piece");
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

// Adjoin generators g_i with d g_i = z_i to the target piece and re-reduce;
// the drop in homology determines the rank of the connecting map:
//   after = before - rank + (count - rank).
int SpectralEngine::d1_rank_unstripped(int a, int m) {
    auto cached = rank_cache_.find({a, m});
    if (cached != rank_cache_.end()) return cached->second;

    int rank = 0;
    auto chains = boundary_chains(a, m);
    if (!chains.empty()) {
        bool all_empty = std::all_of(chains.begin(), chains.end(),
                                     [](const auto& c) { return c.empty(); });
        PieceData* dst = find_piece(a - 1);
        if (all_empty || !dst) {
            rank = 0;
        } else {
            ReductionGraph graph = reduction_graph(dst->piece, /*track_labels=*/false);
            augment(graph, chains);
            reduce_graph(graph);
            long long after = static_cast<long long>(graph.alive_count());
            long long before = dst->homology_total;
            long long k = static_cast<long long>(chains.size());
            long long twice = before + k - after;
            if (twice < 0 || twice % 2 != 0)
                throw ComputeError("inconsistent homology drop in connecting-rank computation");
            rank = static_cast<int>(twice / 2);
        }
    }
    rank_cache_[{a, m}] = rank;
    return rank;
}

BigradedPoly SpectralEngine::d1_rank_table_unstripped() {
    BigradedPoly table;
    for (const auto& [key, dim] : e1_unstripped_.terms) {
        auto [a, m] = key;
        if (a - 1 < min_alexander_ && min_alexander_ != kNoAlexanderBound) continue;
        int r = d1_rank_unstripped(a, m);
        if (r) table.add(a, m, r);
    }
    return table;
}

BigradedPoly SpectralEngine::e2_unstripped() {
    BigradedPoly ranks = d1_rank_table_unstripped();
    BigradedPoly e2;
    for (const auto& [key, dim] : e1_unstripped_.terms) {
        auto [a, m] = key;
        long long d = dim - ranks.at(a, m) - ranks.at(a + 1, m + 1);
        if (d < 0) throw ComputeError("negative E^2 dimension at (a=" + std::to_string(a) +
                                      ", m=" + std::to_string(m) + ")");
        e2.add(a, m, d);
    }
    return e2;
}

SpectralPages SpectralEngine::pages() {
    // rank and E^2 tables are only known one grading above the piece floor
    int bound = min_alexander_;
    int inner = bound == kNoAlexanderBound ? bound : bound + 1;
    SpectralPages pages;
    pages.e1 = strip_s_factor(e1_unstripped_, grid_.n, bound);
    pages.d1_ranks = strip_s_factor(d1_rank_table_unstripped(), grid_.n, inner).terms;
    pages.e2 = strip_s_factor(e2_unstripped(), grid_.n, inner);
    return pages;
}

TauResult tau_from_e2(const BigradedPoly& e2) {
    if (e2.terms.empty()) throw ComputeError("empty E^2 page");
    if (e2.total() % 2 == 0)
        throw ComputeError("E^2 page has even total dimension; convergence to Z/2 impossible");

    // untouchable = hit by nothing and mapping to nothing under any d^k,
    // k >= 2 (bidegree: Alexander -k, Maslov -1)
    auto untouchable = [&](Bigrading key) {
        auto [a, m] = key;
        for (const auto& [other, dim] : e2.terms) {
            auto [a2, m2] = other;
            if (m2 == m - 1 && a2 <= a - 2) return false;
            if (m2 == m + 1 && a2 >= a + 2) return false;
        }
        return true;
    };

    if (e2.total() == 1) {
        auto [key, dim] = *e2.terms.begin();
        if (key.second != 0)
            throw ComputeError("single E^2 class away from Maslov grading 0; grading "
                               "calibration failure");
        return TauResult{key.first, ""};
    }

    std::vector<Bigrading> forced;
    for (const auto& [key, dim] : e2.terms) {
        if (!untouchable(key)) continue;
        if (dim != 1)
            throw ComputeError("E^2 bidegree of dimension " + std::to_string(dim) +
                               " excluded from every higher differential; convergence violated");
        forced.push_back(key);
    }

    if (forced.size() == 1) {
        auto [a, m] = forced.front();
        if (m != 0)
            throw ComputeError("forced E^2 survivor away from Maslov grading 0; grading "
                               "calibration failure");
        return TauResult{a, ""};
    }
    if (forced.empty())
        return TauResult{std::nullopt, "higher differentials not forced by bidegrees"};
    throw ComputeError("multiple E^2 classes excluded from every higher differential; "
                       "convergence violated");
}

TauResult SpectralEngine::tau() { return tau_from_e2(pages().e2); }

SpectralEngine make_support_engine(const GridDiagram& g) {
    // Phase 1: top Alexander grading of the stripped homology from the
    // nonnegative range.
    WindingTable wt = winding_table(g);
    BigradedPoly nonneg = associated_graded_poly(g, wt, 0);
    BigradedPoly stripped = strip_s_factor(nonneg, g.n, 0);
    int top = stripped.empty() ? 0 : stripped.max_alexander();
    // Phase 2: pages need pieces down one grading below the symmetric
    // support.
    return SpectralEngine(g, -top - 1);
}

int d1_rank(const GridDiagram& g, int alexander, int maslov) {
    SpectralEngine engine(g, alexander - 1);
    return engine.d1_rank_unstripped(alexander, maslov);
}

SpectralPages e2_page(const GridDiagram& g) {
    SpectralEngine engine = make_support_engine(g);
    return engine.pages();
}

TauResult tau(const GridDiagram& g) {
    SpectralEngine engine = make_support_engine(g);
    return engine.tau();
}

} // namespace hfk
