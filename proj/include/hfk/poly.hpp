#ifndef HFK_POLY_HPP
#define HFK_POLY_HPP

#include <map>
#include <string>
#include <utility>

namespace hfk {

using Bigrading = std::pair<int, int>; // (alexander, maslov)

// A table of nonnegative dimensions indexed by (alexander, maslov); the
// output type for HFK, E^1 and E^2 pages and for d^1 rank tables.  Zero
// entries are never stored, so equality is exact term-by-term comparison.
struct BigradedPoly {
    std::map<Bigrading, long long> terms;

    long long at(int a, int m) const;
    void add(int a, int m, long long dim); // drops the entry when it hits 0
    long long total() const;
    bool empty() const { return terms.empty(); }
    int max_alexander() const; // requires nonempty
    int min_alexander() const; // requires nonempty

    bool operator==(const BigradedPoly&) const = default;
};

// Monomial form used in the result tables: terms sorted by Alexander then
// Maslov, coefficient prefixes, "q^m t^a" with exponents 0 and 1 elided,
// e.g. "q^{-1}t^{-1}+3+qt".
std::string to_monomial_string(const BigradedPoly& p);

// The bigraded reflection (a, m) -> (a, 2a - m) relating a knot and its
// mirror.
BigradedPoly mirror_transform(const BigradedPoly& p);

// Both gradings negated: (a, m) -> (-a, -m).  Mirroring acts this way on
// the spectral pages, which lack the conjugation symmetry of the homology.
BigradedPoly reverse_bigrading(const BigradedPoly& p);

// Multiply by (1 + q^{-1}t^{-1})^k (the two-generator tensor factor).
BigradedPoly multiply_s_factor(const BigradedPoly& p, int k);

// Laurent polynomial in t, for Euler characteristics.
using LaurentPoly = std::map<int, long long>;
std::string to_string(const LaurentPoly& p);

} // namespace hfk

#endif
