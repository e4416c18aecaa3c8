#include "hfk/grid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hfk/errors.hpp"
#include "hfk/util.hpp"

namespace hfk {

namespace {

bool is_permutation(const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int r : v) {
        if (r < 0 || r >= n || seen[r]) return false;
        seen[r] = 1;
    }
    return true;
}

// Follow the knot: vertical from the X of a column to its O, horizontal from
// that O to the X in the same row.  A knot visits every column once.
bool single_component(const GridDiagram& g) {
    std::vector<int> x_col_of_row(g.n);
    for (int c = 0; c < g.n; ++c) x_col_of_row[g.x_rows[c]] = c;
    int col = 0;
    for (int step = 0; step < g.n; ++step) {
        int row = g.o_rows[col];
        col = x_col_of_row[row];
        if (col == 0) return step == g.n - 1;
    }
    return false;
}

} // namespace

std::vector<std::string> validate(const GridDiagram& g) {
    std::vector<std::string> errs;
    if (g.n < 2) errs.push_back("grid size must be at least 2");
    if (g.n > 16) errs.push_back("grid sizes above 16 are not supported");
    if (static_cast<int>(g.x_rows.size()) != g.n)
        errs.push_back("X row list length does not match n");
    if (static_cast<int>(g.o_rows.size()) != g.n)
        errs.push_back("O row list length does not match n");
    if (!errs.empty()) return errs;

    if (!is_permutation(g.x_rows, g.n)) errs.push_back("X rows are not a permutation");
    if (!is_permutation(g.o_rows, g.n)) errs.push_back("O rows are not a permutation");
    if (!errs.empty()) return errs;

    for (int c = 0; c < g.n; ++c)
        if (g.x_rows[c] == g.o_rows[c]) {
            errs.push_back("X and O share a cell in column " + std::to_string(c));
            return errs;
        }
    if (!single_component(g)) errs.push_back("diagram is a multi-component link, not a knot");
    return errs;
}

void require_valid(const GridDiagram& g) {
    auto errs = validate(g);
    if (errs.empty()) return;
    std::string msg = "invalid grid:";
    for (const auto& e : errs) msg += " " + e + ";";
    throw ValidationError(msg);
}

GridDiagram parse_grid(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> content;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        content.push_back(line.substr(first));
    }
    if (content.size() != 3)
        throw ValidationError("grid file needs exactly three content lines (n, X, O), got " +
                              std::to_string(content.size()));

    GridDiagram g;
    {
        std::istringstream ls(content[0]);
        if (!(ls >> g.n) || g.n < 2) throw ValidationError("bad grid size line: " + content[0]);
        std::string extra;
        if (ls >> extra) throw ValidationError("trailing tokens after grid size");
    }
    auto parse_rows = [&](const std::string& l, const char* tag) {
        std::istringstream ls(l);
        std::string head;
        ls >> head;
        if (head != std::string(tag) + ":")
            throw ValidationError(std::string("expected '") + tag + ":' line, got: " + l);
        std::vector<int> rows;
        int r;
        while (ls >> r) rows.push_back(r);
        if (!ls.eof()) throw ValidationError(std::string("non-numeric token on ") + tag + " line");
        if (static_cast<int>(rows.size()) != g.n)
            throw ValidationError(std::string(tag) + " line has " + std::to_string(rows.size()) +
                                  " entries, expected " + std::to_string(g.n));
        return rows;
    };
    g.x_rows = parse_rows(content[1], "X");
    g.o_rows = parse_rows(content[2], "O");
    require_valid(g);
    return g;
}

std::string serialize_grid(const GridDiagram& g) {
    std::ostringstream out;
    out << g.n << "\n";
    out << "X:";
    for (int r : g.x_rows) out << " " << r;
    out << "\nO:";
    for (int r : g.o_rows) out << " " << r;
    out << "\n";
    return out.str();
}

GridDiagram torus_grid(int p, int q) {
    if (p < 1 || q < 1 || p + q < 2) throw ValidationError("torus grid needs p, q >= 1");
    if (std::gcd(p, q) != 1) throw ValidationError("torus grid needs coprime p, q");
    GridDiagram g;
    g.n = p + q;
    g.x_rows.resize(g.n);
    g.o_rows.resize(g.n);
    for (int c = 0; c < g.n; ++c) {
        g.x_rows[c] = c;
        g.o_rows[c] = (c + p) % g.n;
    }
    require_valid(g);
    return g;
}

GridDiagram mirror_grid(const GridDiagram& g) {
    GridDiagram m;
    m.n = g.n;
    m.x_rows.assign(g.x_rows.rbegin(), g.x_rows.rend());
    m.o_rows.assign(g.o_rows.rbegin(), g.o_rows.rend());
    return m;
}

// Rightward ray cast: the vertical strand of column c covers height y when
// min(x, o) < y <= max(x, o); an upward strand (O above X) crossing the ray
// counts +1, a downward one -1.
WindingTable winding_table(const GridDiagram& g) {
    require_valid(g);
    WindingTable wt;
    wt.n = g.n;
    wt.w.assign(static_cast<size_t>(g.n + 1) * (g.n + 1), 0);
    for (int x = 0; x <= g.n; ++x) {
        for (int y = 0; y <= g.n; ++y) {
            int v = 0;
            for (int c = x; c < g.n; ++c) {
                int xr = g.x_rows[c], orow = g.o_rows[c];
                if (xr < y && y <= orow) ++v;
                else if (orow < y && y <= xr) --v;
            }
            wt.w[static_cast<size_t>(x) * (g.n + 1) + y] = v;
        }
    }

    // a = (1/8) sum of w over the four corners of each marked cell, with
    // multiplicity, minus (n-1)/2; kept in eighths.
    long long corner_sum = 0;
    auto corners = [&](int c, int r) {
        corner_sum += wt.at(c, r) + wt.at(c + 1, r) + wt.at(c, r + 1) + wt.at(c + 1, r + 1);
    };
    for (int c = 0; c < g.n; ++c) {
        corners(c, g.x_rows[c]);
        corners(c, g.o_rows[c]);
    }
    long long a8 = corner_sum - 4LL * (g.n - 1);
    if (a8 % 8 != 0)
        throw ComputeError("grading constant a is not an integer (8a = " + std::to_string(a8) +
                           "); winding computation is inconsistent");
    wt.a_eighths = static_cast<int>(a8);
    return wt;
}

int winding_number_leftward(const GridDiagram& g, int x, int y) {
    int v = 0;
    for (int c = 0; c < x; ++c) {
        int xr = g.x_rows[c], orow = g.o_rows[c];
        if (xr < y && y <= orow) --v; // upward strand, ray points left
        else if (orow < y && y <= xr) ++v;
    }
    return v;
}

GridDiagram random_grid(int n, uint64_t seed) {
    if (n < 2) throw ValidationError("random grid needs n >= 2");
    Rng rng(seed);
    auto random_perm = [&](std::vector<int>& p) {
        p.resize(n);
        std::iota(p.begin(), p.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(p[i], p[static_cast<size_t>(rng.below(i + 1))]);
    };
    GridDiagram g;
    g.n = n;
    while (true) {
        random_perm(g.x_rows);
        random_perm(g.o_rows);
        if (validate(g).empty()) return g;
    }
}

} // namespace hfk
