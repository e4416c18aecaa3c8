#ifndef HFK_GRID_HPP
#define HFK_GRID_HPP

#include <string>
#include <vector>

namespace hfk {

// An n x n grid diagram (arc presentation) of a knot.  Column c carries a
// black dot X in the cell (c, x_rows[c]) and a white dot O in the cell
// (c, o_rows[c]).  Columns are indexed left to right and rows bottom to top;
// the dot of cell (c, r) sits at (c + 1/2, r + 1/2) and lattice points are
// the integer vertices of the grid.  The knot is traced by a vertical segment
// from X to O in each column and a horizontal segment from O to X in each
// row, verticals crossing over.
struct GridDiagram {
    int n = 0;
    std::vector<int> x_rows;
    std::vector<int> o_rows;

    bool operator==(const GridDiagram&) const = default;
};

// Winding numbers of the knot around every lattice point of [0,n]^2, plus the
// grading constant a.  A counterclockwise circle has winding number +1; the
// knot is oriented black-to-white along verticals.  a is kept in eighths so
// it stays exact; for a knot it is an integer (checked on construction).
struct WindingTable {
    int n = 0;
    int a_eighths = 0;
    std::vector<int> w; // (n+1) x (n+1), row-major by x

    int at(int x, int y) const { return w[static_cast<size_t>(x) * (n + 1) + y]; }
    int alexander_const() const { return a_eighths / 8; }
};

// Grid file format (bit-exact on output):
//   optional '#' comment lines
//   n
//   X: r0 r1 ... r_{n-1}
//   O: r0 r1 ... r_{n-1}
// with whitespace-separated 0-indexed decimal rows, row 0 at the bottom.
GridDiagram parse_grid(const std::string& text);
std::string serialize_grid(const GridDiagram& g);

// All violated invariants, empty when the grid is a valid knot diagram.
std::vector<std::string> validate(const GridDiagram& g);
void require_valid(const GridDiagram& g);

// The (p+q) x (p+q) presentation of the (p,q) torus knot, up to mirror:
// x_rows[c] = c, o_rows[c] = (c+p) mod (p+q).  Requires coprime p, q >= 1
// with p + q >= 2.
GridDiagram torus_grid(int p, int q);

// Mirror knot: columns reversed.  An involution.
GridDiagram mirror_grid(const GridDiagram& g);

WindingTable winding_table(const GridDiagram& g);

// Test helper: winding numbers recomputed with a leftward ray; must agree
// with the table everywhere.
int winding_number_leftward(const GridDiagram& g, int x, int y);

// Seeded random valid knot grid, rejection-sampled.  Deterministic per seed.
GridDiagram random_grid(int n, uint64_t seed);

} // namespace hfk

#endif
