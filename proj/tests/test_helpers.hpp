#ifndef HFK_TEST_HELPERS_HPP
#define HFK_TEST_HELPERS_HPP

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <tuple>

#include "hfk/grid.hpp"
#include "hfk/poly.hpp"

namespace hfk_test {

inline std::string fixture_path(const std::string& name) {
    return std::string(HFK_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline hfk::GridDiagram load_grid(const std::string& name) {
    return hfk::parse_grid(read_file(fixture_path(name)));
}

inline hfk::BigradedPoly poly(std::initializer_list<std::tuple<int, int, long long>> terms) {
    hfk::BigradedPoly p;
    for (const auto& [a, m, dim] : terms) p.add(a, m, dim);
    return p;
}

} // namespace hfk_test

#endif
