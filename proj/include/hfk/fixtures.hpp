#ifndef HFK_FIXTURES_HPP
#define HFK_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hfk/compute.hpp"
#include "hfk/grid.hpp"
#include "hfk/poly.hpp"

namespace hfk {

// One verification record: a named knot, optionally its grid, its expected
// stripped homology table and optional tau / E^2 page.
struct FixtureRecord {
    std::string name;
    std::optional<GridDiagram> grid;
    BigradedPoly hfk;
    std::optional<int> tau;
    std::optional<BigradedPoly> e2;
};

// JSON schema:
//   [{"name": str,
//     "grid": {"n": int, "x": [int], "o": [int]} | null,
//     "hfk":  [{"a": int, "m": int, "dim": int}],
//     "tau":  int | null,
//     "e2":   [{"a","m","dim"}] | null}, ...]
std::vector<FixtureRecord> parse_fixtures(const std::string& json_text);
std::string serialize_fixtures(const std::vector<FixtureRecord>& records);

std::string poly_to_json(const BigradedPoly& p);
BigradedPoly poly_from_json(const std::string& json_text);

enum class VerifyStatus { Pass, Fail, Skip };

struct VerifyRow {
    std::string name;
    VerifyStatus status = VerifyStatus::Skip;
    std::string detail;
};

// Recomputes a record from its grid and compares exactly; with allow_mirror,
// also accepts the mirror transform (a, m) -> (a, 2a - m) with tau negated.
// Records without a grid are skipped.
VerifyRow verify_fixture(const FixtureRecord& rec, bool allow_mirror);

// Term-level diff for failure messages.
std::string poly_diff(const BigradedPoly& expected, const BigradedPoly& actual);

} // namespace hfk

#endif
