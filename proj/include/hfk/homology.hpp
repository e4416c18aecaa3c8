#ifndef HFK_HOMOLOGY_HPP
#define HFK_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hfk/complex.hpp"
#include "hfk/poly.hpp"

namespace hfk {

// State of the graph reduction: vertices labeled by sets of original basis
// elements (indices into the piece basis, or synthetic indices >= basis size
// for adjoined generators), directed edges meaning a nonzero boundary
// coefficient.  The labels stay linearly independent throughout a run.
struct ReductionGraph {
    std::vector<std::vector<uint32_t>> out;
    std::vector<std::vector<uint32_t>> in;
    std::vector<std::vector<uint32_t>> label; // empty vectors when not tracked
    std::vector<uint8_t> alive;
    bool track_labels = false;

    size_t vertex_count() const { return out.size(); }
    size_t alive_count() const;
};

ReductionGraph reduction_graph(const GradedPiece& piece, bool track_labels);

// Adjoin formal generators whose boundaries are the given chains (basis
// index sets).  Used for connecting-map ranks.
void augment(ReductionGraph& graph, const std::vector<std::vector<uint32_t>>& chains);

// Graph reduction: repeatedly pick an edge X_i -> X_j (smallest endpoint
// degree sum first), delete both vertices, and patch every other
// predecessor of X_j by symmetric difference with X_i.  Runs until the graph
// is edgeless; each step removes exactly two vertices.  Returns the number
// of steps.
uint64_t reduce_graph(ReductionGraph& graph);

struct HomologyClass {
    int maslov = 0;
    std::vector<GenKey> chain; // representative cycle, original generator keys
};

struct ReducedPiece {
    int alexander = 0;
    uint64_t steps = 0;
    uint64_t initial_vertices = 0;
    std::vector<HomologyClass> classes;
};

// Homology of one graded piece via graph reduction.  Maslov gradings are
// evaluated on the surviving representatives only; every member of a
// surviving label (up to verify_members, 0 = all) is checked to share the
// class grading, and a mismatch is a ComputeError.
ReducedPiece reduce(const GridDiagram& g, const GradedPiece& piece, bool track_labels = true,
                    size_t verify_members = 16);

// Independent oracle: bigraded dimensions by dense Gaussian elimination over
// Z/2, bucketing the basis by Maslov grading.  Quadratic-space; test scale.
std::map<int, long long> gaussian_homology(const GridDiagram& g, const GradedPiece& piece);

// Rank of a Z/2 matrix given as bit rows; helper shared with the spectral
// oracle tests.
int z2_rank(std::vector<std::vector<uint64_t>> rows);

// Homology of every piece in range assembled into one table.  This is
// HFK ^ tensor (1 + q^{-1}t^{-1})^{n-1} restricted to the range.
BigradedPoly associated_graded_poly(const GridDiagram& g, const WindingTable& wt,
                                    int min_alexander = kNoAlexanderBound);

// Scheduling order for independent per-piece work: largest piece first.
std::vector<size_t> largest_first_order(const std::vector<GradedPiece>& pieces);

// Exact division by (1 + q^{-1}t^{-1})^{n-1}, working down from the maximal
// corner.  min_alexander bounds the range on which the dividend is known:
// contributions falling below it are unchecked, and everything at or above
// it must divide exactly (nonnegative intermediates, zero remainder) or a
// ComputeError carrying the residual is thrown.  Pass kNoAlexanderBound when
// the dividend covers the full range.
BigradedPoly strip_s_factor(const BigradedPoly& p, int grid_n,
                            int min_alexander = kNoAlexanderBound);

// Sum over the table of (-1)^m dim t^a; equals the Alexander polynomial on a
// stripped full-range table.
LaurentPoly euler_characteristic(const BigradedPoly& p);

} // namespace hfk

#endif
