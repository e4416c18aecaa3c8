#include "hfk/poly.hpp"

#include <sstream>
#include <vector>

#include "hfk/errors.hpp"

namespace hfk {

long long BigradedPoly::at(int a, int m) const {
    auto it = terms.find({a, m});
    return it == terms.end() ? 0 : it->second;
}

void BigradedPoly::add(int a, int m, long long dim) {
    if (dim == 0) return;
    auto [it, inserted] = terms.try_emplace({a, m}, dim);
    if (!inserted) {
        it->second += dim;
        if (it->second == 0) terms.erase(it);
    }
}

long long BigradedPoly::total() const {
    long long t = 0;
    for (const auto& [k, d] : terms) t += d;
    return t;
}

int BigradedPoly::max_alexander() const {
    int best = terms.begin()->first.first;
    for (const auto& [k, d] : terms) best = std::max(best, k.first);
    return best;
}

int BigradedPoly::min_alexander() const {
    int best = terms.begin()->first.first;
    for (const auto& [k, d] : terms) best = std::min(best, k.first);
    return best;
}

namespace {

void append_power(std::ostringstream& out, char var, int e) {
    if (e == 0) return;
    out << var;
    if (e == 1) return;
    if (e >= 2 && e <= 9) out << '^' << e;
    else out << "^{" << e << "}";
}

} // namespace

std::string to_monomial_string(const BigradedPoly& p) {
    if (p.terms.empty()) return "0";
    // map ordering is (a, m) lexicographic already
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, dim] : p.terms) {
        auto [a, m] = key;
        if (!first) out << "+";
        first = false;
        if (dim != 1 || (a == 0 && m == 0)) out << dim;
        append_power(out, 'q', m);
        append_power(out, 't', a);
    }
    return out.str();
}

BigradedPoly mirror_transform(const BigradedPoly& p) {
    BigradedPoly out;
    for (const auto& [key, dim] : p.terms) out.add(key.first, 2 * key.first - key.second, dim);
    return out;
}

BigradedPoly reverse_bigrading(const BigradedPoly& p) {
    BigradedPoly out;
    for (const auto& [key, dim] : p.terms) out.add(-key.first, -key.second, dim);
    return out;
}

BigradedPoly multiply_s_factor(const BigradedPoly& p, int k) {
    std::vector<long long> binom(k + 1, 0);
    binom[0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = i; j >= 1; --j) binom[j] += binom[j - 1];
    BigradedPoly out;
    for (const auto& [key, dim] : p.terms)
        for (int i = 0; i <= k; ++i) out.add(key.first - i, key.second - i, dim * binom[i]);
    return out;
}

std::string to_string(const LaurentPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [a, c] : p) {
        if (c == 0) continue;
        if (!first) out << (c > 0 ? "+" : "");
        first = false;
        if (c == -1 && a != 0) out << "-";
        else if (c != 1 || a == 0) out << c;
        append_power(out, 't', a);
    }
    std::string s = out.str();
    return s.empty() ? "0" : s;
}

} // namespace hfk
