#ifndef HFK_SPECTRAL_HPP
#define HFK_SPECTRAL_HPP

#include <map>
#include <optional>
#include <string>

#include "hfk/homology.hpp"

namespace hfk {

// Stripped pages of the knot filtration spectral sequence.  d1_ranks maps a
// source bidegree (a, m) to the rank of d^1 into (a-1, m-1), so
//   dim E2(a, m) = dim E1(a, m) - d1_ranks(a, m) - d1_ranks(a+1, m+1).
struct SpectralPages {
    BigradedPoly e1;
    std::map<Bigrading, long long> d1_ranks;
    BigradedPoly e2;
};

struct TauResult {
    std::optional<int> value;
    std::string reason; // set when indeterminate

    bool determinate() const { return value.has_value(); }
};

// Adds the reflected terms (a, m) -> (-a, m - 2a) for every a > 0 entry;
// idempotent on complete tables.  A negative-grading entry conflicting with
// its reflection is a ComputeError.
BigradedPoly symmetry_complete(const BigradedPoly& p);

// Shared machinery: pieces of the full complex with homology representatives
// retained, connecting-map ranks via adjoined generators, page assembly and
// the tau extraction rule.  min_alexander bounds the computed range; pages
// and tau need pieces down to -(top Alexander grading) - 1, which
// make_support_engine picks automatically.
class SpectralEngine {
  public:
    SpectralEngine(const GridDiagram& g, int min_alexander);

    // Rank of d^1 out of bidegree (a, m), on the unstripped complex: the
    // boundaries of the H_m representatives of piece a are pushed into piece
    // a-1, formal generators with those boundaries are adjoined, and the
    // homology rank drop is returned.
    int d1_rank_unstripped(int a, int m);

    const BigradedPoly& e1_unstripped() const { return e1_unstripped_; }
    BigradedPoly d1_rank_table_unstripped();
    BigradedPoly e2_unstripped();

    SpectralPages pages(); // stripped by exact division
    TauResult tau();

    int min_alexander() const { return min_alexander_; }

  private:
    struct PieceData {
        GradedPiece piece;
        ReducedPiece reduced;
        long long homology_total = 0;
    };

    PieceData* find_piece(int a);
    std::vector<std::vector<uint32_t>> boundary_chains(int a, int m);

    GridDiagram grid_;
    WindingTable wt_;
    int min_alexander_ = 0;
    std::map<int, PieceData> pieces_;
    BigradedPoly e1_unstripped_;
    std::map<Bigrading, int> rank_cache_;
};

// Engine over the range needed for pages and tau (down one grading below the
// symmetric support of the stripped homology).
SpectralEngine make_support_engine(const GridDiagram& g);

// Spec-level operations.
int d1_rank(const GridDiagram& g, int alexander, int maslov);
SpectralPages e2_page(const GridDiagram& g);
TauResult tau(const GridDiagram& g);

// tau extraction from a stripped E^2 table: the single class when the table
// is one-dimensional, else the unique class no higher differential can touch
// for bidegree reasons; indeterminate otherwise.  The survivor must sit in
// Maslov grading 0.
TauResult tau_from_e2(const BigradedPoly& e2);

} // namespace hfk

#endif
