#include "hfk/moves.hpp"

#include <algorithm>

#include "hfk/errors.hpp"
#include "hfk/util.hpp"

namespace hfk {

namespace {

GridDiagram translate_x(const GridDiagram& g) {
    GridDiagram out;
    out.n = g.n;
    out.x_rows.resize(g.n);
    out.o_rows.resize(g.n);
    for (int c = 0; c < g.n; ++c) {
        out.x_rows[c] = g.x_rows[(c + 1) % g.n];
        out.o_rows[c] = g.o_rows[(c + 1) % g.n];
    }
    return out;
}

GridDiagram translate_y(const GridDiagram& g) {
    GridDiagram out;
    out.n = g.n;
    out.x_rows.resize(g.n);
    out.o_rows.resize(g.n);
    for (int c = 0; c < g.n; ++c) {
        out.x_rows[c] = (g.x_rows[c] + g.n - 1) % g.n;
        out.o_rows[c] = (g.o_rows[c] + g.n - 1) % g.n;
    }
    return out;
}

GridDiagram transpose(const GridDiagram& g) {
    GridDiagram out;
    out.n = g.n;
    out.x_rows.resize(g.n);
    out.o_rows.resize(g.n);
    for (int c = 0; c < g.n; ++c) {
        out.x_rows[g.x_rows[c]] = c;
        out.o_rows[g.o_rows[c]] = c;
    }
    return out;
}

// Adjacent columns commute when their vertical intervals are strictly
// disjoint or strictly nested; sharing a row is not a commutation.
bool columns_commute(const GridDiagram& g, int c) {
    int lo1 = std::min(g.x_rows[c], g.o_rows[c]);
    int hi1 = std::max(g.x_rows[c], g.o_rows[c]);
    int lo2 = std::min(g.x_rows[c + 1], g.o_rows[c + 1]);
    int hi2 = std::max(g.x_rows[c + 1], g.o_rows[c + 1]);
    if (hi1 < lo2 || hi2 < lo1) return true;               // disjoint
    if (lo1 < lo2 && hi2 < hi1) return true;               // 2 nested in 1
    if (lo2 < lo1 && hi1 < hi2) return true;               // 1 nested in 2
    return false;
}

GridDiagram commute_columns(const GridDiagram& g, int c) {
    if (c < 0 || c + 1 >= g.n) throw ValidationError("commutation column out of range");
    if (!columns_commute(g, c))
        throw ValidationError("columns " + std::to_string(c) + "," + std::to_string(c + 1) +
                              " interleave; commutation illegal");
    GridDiagram out = g;
    std::swap(out.x_rows[c], out.x_rows[c + 1]);
    std::swap(out.o_rows[c], out.o_rows[c + 1]);
    return out;
}

// The 2x2 replacement block sits in columns c, c+1 and rows r, r+1 of the
// stabilized grid.  The corner named by the move stays empty, the two cells
// beside it take the stabilized marking type, the opposite corner takes the
// other type, and the displaced mates of the split column and row land on
// the side away from the empty corner.
GridDiagram stabilize(const GridDiagram& g, MarkType mark, int c, Corner corner) {
    if (c < 0 || c >= g.n) throw ValidationError("stabilization column out of range");
    const int n = g.n;
    const int r = mark == MarkType::X ? g.x_rows[c] : g.o_rows[c];
    const bool east_empty = corner == Corner::NE || corner == Corner::SE;
    const bool north_empty = corner == Corner::NE || corner == Corner::NW;

    auto new_col = [&](int col) { return col > c ? col + 1 : col; };
    auto new_row = [&](int row) { return row > r ? row + 1 : row; };

    GridDiagram out;
    out.n = n + 1;
    out.x_rows.assign(n + 1, -1);
    out.o_rows.assign(n + 1, -1);
    for (int col = 0; col < n; ++col) {
        if (col != c) {
            out.x_rows[new_col(col)] = new_row(g.x_rows[col]);
            out.o_rows[new_col(col)] = new_row(g.o_rows[col]);
        }
    }

    auto& same = mark == MarkType::X ? out.x_rows : out.o_rows;
    auto& other = mark == MarkType::X ? out.o_rows : out.x_rows;
    // the two cells adjacent to the empty corner take the doubled type
    if (corner == Corner::NE || corner == Corner::SW) {
        same[c] = r + 1;     // NW
        same[c + 1] = r;     // SE
        other[corner == Corner::NE ? c : c + 1] = corner == Corner::NE ? r : r + 1;
    } else { // NW or SE empty: marks on the SW-NE diagonal
        same[c] = r;         // SW
        same[c + 1] = r + 1; // NE
        other[corner == Corner::NW ? c + 1 : c] = corner == Corner::NW ? r : r + 1;
    }

    // displaced mates of the split column and row
    int col_mate = mark == MarkType::X ? g.o_rows[c] : g.x_rows[c];
    other[east_empty ? c + 1 : c] = new_row(col_mate);
    int row_mate_col = -1;
    for (int col = 0; col < n; ++col) {
        int row = mark == MarkType::X ? g.o_rows[col] : g.x_rows[col];
        if (row == r) row_mate_col = col;
    }
    other[new_col(row_mate_col)] = north_empty ? r + 1 : r;

    require_valid(out);
    return out;
}

// Number of markings inside the 2x2 block at columns c, c+1 and rows r, r+1.
int block_marks(const GridDiagram& g, int c, int r, Corner* empty, MarkType* doubled) {
    int count = 0;
    bool occupied[2][2] = {{false, false}, {false, false}};
    MarkType type[2][2] = {{MarkType::X, MarkType::X}, {MarkType::X, MarkType::X}};
    for (int dc = 0; dc < 2; ++dc) {
        if (g.x_rows[c + dc] == r || g.x_rows[c + dc] == r + 1) {
            int dr = g.x_rows[c + dc] - r;
            occupied[dc][dr] = true;
            type[dc][dr] = MarkType::X;
            ++count;
        }
        if (g.o_rows[c + dc] == r || g.o_rows[c + dc] == r + 1) {
            int dr = g.o_rows[c + dc] - r;
            occupied[dc][dr] = true;
            type[dc][dr] = MarkType::O;
            ++count;
        }
    }
    if (count != 3) return count;
    if (empty) {
        if (!occupied[0][0]) *empty = Corner::SW;
        else if (!occupied[1][0]) *empty = Corner::SE;
        else if (!occupied[0][1]) *empty = Corner::NW;
        else *empty = Corner::NE;
    }
    if (doubled) {
        int xs = 0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                if (occupied[a][b] && type[a][b] == MarkType::X) ++xs;
        *doubled = xs == 2 ? MarkType::X : MarkType::O;
    }
    return count;
}

GridDiagram destabilize(const GridDiagram& g, int c, int r) {
    if (g.n < 3) throw ValidationError("cannot destabilize below n = 2");
    if (c < 0 || c + 1 >= g.n || r < 0 || r + 1 >= g.n)
        throw ValidationError("destabilization block out of range");
    Corner empty;
    MarkType doubled;
    if (block_marks(g, c, r, &empty, &doubled) != 3)
        throw ValidationError("no destabilizable block at (" + std::to_string(c) + "," +
                              std::to_string(r) + ")");

    GridDiagram out;
    out.n = g.n - 1;
    out.x_rows.assign(out.n, -1);
    out.o_rows.assign(out.n, -1);
    auto old_in_block = [&](int col, int row) {
        return (col == c || col == c + 1) && (row == r || row == r + 1);
    };
    auto map_col = [&](int col) { return col > c + 1 ? col - 1 : std::min(col, c); };
    auto map_row = [&](int row) { return row > r + 1 ? row - 1 : std::min(row, r); };
    for (int col = 0; col < g.n; ++col) {
        if (!old_in_block(col, g.x_rows[col])) out.x_rows[map_col(col)] = map_row(g.x_rows[col]);
        if (!old_in_block(col, g.o_rows[col])) out.o_rows[map_col(col)] = map_row(g.o_rows[col]);
    }
    auto& same = doubled == MarkType::X ? out.x_rows : out.o_rows;
    same[c] = r;
    require_valid(out);
    return out;
}

} // namespace

std::string to_string(const Move& m) {
    switch (m.kind) {
    case MoveKind::TranslateX: return "translate-x";
    case MoveKind::TranslateY: return "translate-y";
    case MoveKind::CommuteColumns: return "commute-columns(" + std::to_string(m.index) + ")";
    case MoveKind::CommuteRows: return "commute-rows(" + std::to_string(m.index) + ")";
    case MoveKind::Stabilize: {
        const char* corner = m.corner == Corner::SW   ? "SW"
                             : m.corner == Corner::SE ? "SE"
                             : m.corner == Corner::NW ? "NW"
                                                      : "NE";
        return std::string("stabilize(") + (m.mark == MarkType::X ? "X" : "O") + "," +
               std::to_string(m.index) + "," + corner + ")";
    }
    case MoveKind::Destabilize:
        return "destabilize(" + std::to_string(m.index) + "," + std::to_string(m.row) + ")";
    }
    return "?";
}

GridDiagram apply_move(const GridDiagram& g, const Move& m) {
    require_valid(g);
    switch (m.kind) {
    case MoveKind::TranslateX: return translate_x(g);
    case MoveKind::TranslateY: return translate_y(g);
    case MoveKind::CommuteColumns: return commute_columns(g, m.index);
    case MoveKind::CommuteRows: {
        GridDiagram t = transpose(g);
        t = commute_columns(t, m.index);
        return transpose(t);
    }
    case MoveKind::Stabilize: return stabilize(g, m.mark, m.index, m.corner);
    case MoveKind::Destabilize: return destabilize(g, m.index, m.row);
    }
    throw ValidationError("unknown move kind");
}

std::vector<Move> legal_moves(const GridDiagram& g) {
    require_valid(g);
    std::vector<Move> moves;
    moves.push_back({MoveKind::TranslateX});
    moves.push_back({MoveKind::TranslateY});
    for (int c = 0; c + 1 < g.n; ++c)
        if (columns_commute(g, c)) moves.push_back({MoveKind::CommuteColumns, c});
    GridDiagram t = transpose(g);
    for (int r = 0; r + 1 < g.n; ++r)
        if (columns_commute(t, r)) moves.push_back({MoveKind::CommuteRows, r});
    for (MarkType mark : {MarkType::X, MarkType::O})
        for (int c = 0; c < g.n; ++c)
            for (Corner corner : {Corner::SW, Corner::SE, Corner::NW, Corner::NE})
                moves.push_back({MoveKind::Stabilize, c, 0, mark, corner});
    if (g.n >= 3)
        for (int c = 0; c + 1 < g.n; ++c)
            for (int r = 0; r + 1 < g.n; ++r)
                if (block_marks(g, c, r, nullptr, nullptr) == 3)
                    moves.push_back({MoveKind::Destabilize, c, r});
    return moves;
}

GridDiagram simplify(const GridDiagram& g, uint64_t seed, uint64_t budget,
                     std::vector<int>* size_trace) {
    require_valid(g);
    Rng rng(seed);
    GridDiagram current = g;
    GridDiagram best = g;
    for (uint64_t step = 0; step < budget; ++step) {
        auto moves = legal_moves(current);
        std::vector<Move> destabs, stabs, rest;
        for (const auto& m : moves) {
            if (m.kind == MoveKind::Destabilize) destabs.push_back(m);
            else if (m.kind == MoveKind::Stabilize) stabs.push_back(m);
            else rest.push_back(m);
        }
        Move chosen;
        if (!destabs.empty()) {
            chosen = destabs[rng.below(destabs.size())];
        } else if (!stabs.empty() && rng.chance(1, 16)) {
            chosen = stabs[rng.below(stabs.size())];
        } else if (!rest.empty()) {
            chosen = rest[rng.below(rest.size())];
        } else {
            break;
        }
        current = apply_move(current, chosen);
        if (size_trace) size_trace->push_back(current.n);
        if (current.n < best.n) best = current;
    }
    return best;
}

} // namespace hfk
