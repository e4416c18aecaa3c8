#ifndef HFK_MOVES_HPP
#define HFK_MOVES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hfk/grid.hpp"

namespace hfk {

enum class MoveKind {
    TranslateX,     // columns shift cyclically left
    TranslateY,     // rows shift cyclically down
    CommuteColumns, // swap columns c, c+1 (non-interleaved intervals)
    CommuteRows,    // swap rows r, r+1
    Stabilize,      // split a marking into an L of three, n -> n+1
    Destabilize     // merge a 2x2 block with three markings, n -> n-1
};

enum class MarkType { X, O };

// Corner of the 2x2 replacement block left empty by a stabilization.
enum class Corner { SW, SE, NW, NE };

struct Move {
    MoveKind kind = MoveKind::TranslateX;
    int index = 0;              // column / row for commutation and stabilization,
                                // block column for destabilization
    int row = 0;                // block row for destabilization
    MarkType mark = MarkType::X; // stabilized marking type
    Corner corner = Corner::SW;  // stabilization variant

    bool operator==(const Move&) const = default;
};

std::string to_string(const Move& m);

// Applies a move, validating legality first.  Throws ValidationError for an
// illegal move; the result is always a valid grid presenting the same knot.
GridDiagram apply_move(const GridDiagram& g, const Move& m);

// Complete, deterministic, order-stable enumeration of the legal moves.
// Every returned move succeeds in apply_move.  Destabilization below n = 3
// is excluded (the 1x1 grid is degenerate).
std::vector<Move> legal_moves(const GridDiagram& g);

// Randomized simplifier: always takes an available destabilization, else a
// seeded-random translation or commutation, with an occasional stabilization
// (probability 1/16) to escape local minima.  Runs for `budget` moves and
// returns the smallest grid encountered.  Deterministic per (g, seed,
// budget).  size_trace, when given, records n after every applied move.
GridDiagram simplify(const GridDiagram& g, uint64_t seed, uint64_t budget,
                     std::vector<int>* size_trace = nullptr);

} // namespace hfk

#endif
