// Split vector bundles on P^1, encoded as a multiset of line-bundle degrees.
//
// A bundle O(a_1) ⊕ ... ⊕ O(a_r) is stored as a map degree -> multiplicity
// with arbitrary-precision multiplicities: symmetric powers reach ranks like
// C(2n+1, n+1), which overflow 64 bits near n ≈ 30. Entries with multiplicity
// zero are deleted eagerly, so multiset equality is plain map equality.
//
// All values are immutable after construction and every operation is a pure
// function; sharing across threads is safe.
#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace cybundle {

// h^0(P^1, O(a)) = max(a+1, 0)
inline long long h0_line(long long a) { return a >= 0 ? a + 1 : 0; }

// h^1(P^1, O(a)) = max(-a-1, 0); h0 - h1 = a + 1 (Riemann-Roch)
inline long long h1_line(long long a) { return a <= -2 ? -a - 1 : 0; }

class SplitBundle {
public:
    SplitBundle() = default;

    SplitBundle(std::initializer_list<std::pair<long long, BigInt>> init) {
        for (const auto& [deg, mult] : init) add(deg, mult);
    }

    // O(a)
    static SplitBundle line(long long a) { return SplitBundle{{a, 1}}; }

    // O^r
    static SplitBundle trivial(const BigInt& r) {
        SplitBundle b;
        b.add(0, r);
        return b;
    }

    // O(-1) ⊕ O^{n-1} ⊕ O(1), the rank-(n+1) bundle whose projectivization
    // carries the singular anticanonical family.
    static SplitBundle standard_unbalanced(long long n) {
        if (n < 2) throw std::invalid_argument("standard_unbalanced: need n >= 2");
        return SplitBundle{{-1, 1}, {0, n - 1}, {1, 1}};
    }

    void add(long long degree, const BigInt& mult) {
        if (mult < 0) throw std::invalid_argument("SplitBundle: negative multiplicity");
        if (mult == 0) return;
        auto it = summands_.find(degree);
        if (it == summands_.end())
            summands_.emplace(degree, mult);
        else
            it->second += mult;
    }

    const std::map<long long, BigInt>& summands() const { return summands_; }

    bool empty() const { return summands_.empty(); }

    BigInt rank() const {
        BigInt r = 0;
        for (const auto& [deg, mult] : summands_) r += mult;
        return r;
    }

    // first Chern class / degree
    BigInt degree() const {
        BigInt d = 0;
        for (const auto& [deg, mult] : summands_) d += BigInt(deg) * mult;
        return d;
    }

    BigInt multiplicity(long long degree) const {
        auto it = summands_.find(degree);
        return it == summands_.end() ? BigInt(0) : it->second;
    }

    // componentwise multiplicity dominance
    bool contains(const SplitBundle& sub) const {
        for (const auto& [deg, mult] : sub.summands_)
            if (multiplicity(deg) < mult) return false;
        return true;
    }

    bool operator==(const SplitBundle&) const = default;

    std::map<long long, BigInt>& mutable_summands() { return summands_; }

private:
    std::map<long long, BigInt> summands_;
};

inline SplitBundle twist(const SplitBundle& e, long long k) {
    SplitBundle out;
    for (const auto& [deg, mult] : e.summands()) out.add(deg + k, mult);
    return out;
}

inline SplitBundle direct_sum(const SplitBundle& e, const SplitBundle& f) {
    SplitBundle out = e;
    for (const auto& [deg, mult] : f.summands()) out.add(deg, mult);
    return out;
}

// E ⊗ F: multiplicity maps convolve.
inline SplitBundle tensor(const SplitBundle& e, const SplitBundle& f) {
    SplitBundle out;
    for (const auto& [de, me] : e.summands())
        for (const auto& [df, mf] : f.summands()) out.add(de + df, me * mf);
    return out;
}

// E^∨
inline SplitBundle dual(const SplitBundle& e) {
    SplitBundle out;
    for (const auto& [deg, mult] : e.summands()) out.add(-deg, mult);
    return out;
}

inline BigInt h0_bundle(const SplitBundle& e) {
    BigInt total = 0;
    for (const auto& [deg, mult] : e.summands())
        if (deg >= 0) total += mult * (deg + 1);
    return total;
}

inline BigInt h1_bundle(const SplitBundle& e) {
    BigInt total = 0;
    for (const auto& [deg, mult] : e.summands())
        if (deg <= -2) total += mult * (-deg - 1);
    return total;
}

// S^d E by dynamic programming over the distinct degrees: a summand class
// of degree a with multiplicity m, raised to total exponent e, contributes
// weight e·a with multiplicity C(m+e-1, e). Monomials are never enumerated;
// S^{n+1}E for n = 20 has rank ≈ 2.7e11 and must still be cheap.
inline SplitBundle sym_pow(const SplitBundle& e, long long d) {
    if (d < 0) throw std::invalid_argument("sym_pow: negative power");
    // state: (exponent budget spent, accumulated weight) -> multiplicity
    std::map<std::pair<long long, long long>, BigInt> dp;
    dp[{0, 0}] = 1;
    for (const auto& [deg, mult] : e.summands()) {
        std::map<std::pair<long long, long long>, BigInt> next;
        for (const auto& [state, ways] : dp) {
            auto [spent, weight] = state;
            for (long long exp = 0; exp + spent <= d; ++exp) {
                BigInt contrib = ways * monomial_count(mult, exp);
                if (contrib == 0) continue;
                next[{spent + exp, weight + exp * deg}] += contrib;
            }
        }
        dp = std::move(next);
    }
    SplitBundle out;
    for (const auto& [state, ways] : dp)
        if (state.first == d) out.add(state.second, ways);
    return out;
}

// Textual notation: sorted "O(a)^m" terms joined by "+", exponent omitted
// when 1, degree omitted when 0, e.g. "O(-1)+O^2+O(1)". The empty bundle
// prints as "0". Round-trip parse/print is the identity on canonical form.
inline std::string to_string(const SplitBundle& e) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [deg, mult] : e.summands()) {
        if (!out.empty()) out += "+";
        out += deg == 0 ? "O" : "O(" + std::to_string(deg) + ")";
        if (mult != 1) out += "^" + mult.str();
    }
    return out;
}

inline SplitBundle parse_bundle(std::string_view text) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_bundle: " + why + " in \"" + std::string(text) + "\"");
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail("empty input");
    if (s == "0") return {};
    SplitBundle out;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'O') fail("expected 'O'");
        ++pos;
        long long deg = 0;
        if (pos < s.size() && s[pos] == '(') {
            size_t close = s.find(')', pos);
            if (close == std::string::npos) fail("unclosed '('");
            std::string num = s.substr(pos + 1, close - pos - 1);
            try {
                size_t used = 0;
                deg = std::stoll(num, &used);
                if (used != num.size()) fail("bad degree");
            } catch (const std::logic_error&) {
                fail("bad degree");
            }
            pos = close + 1;
        }
        BigInt mult = 1;
        if (pos < s.size() && s[pos] == '^') {
            size_t end = pos + 1;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            if (end == pos + 1) fail("bad exponent");
            mult = BigInt(s.substr(pos + 1, end - pos - 1));
            if (mult < 1) fail("exponent must be >= 1");
            pos = end;
        }
        out.add(deg, mult);
        if (pos < s.size()) {
            if (s[pos] != '+') fail("expected '+'");
            ++pos;
            if (pos == s.size()) fail("trailing '+'");
        }
    }
    return out;
}

}  // namespace cybundle
