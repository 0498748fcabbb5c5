// Test-only brute-force oracles, kept independent of the library's main
// computation paths: symmetric powers by enumerating exponent vectors, and
// the point filtration by enumerating monomials in a chart.
#pragma once

#include <map>
#include <vector>

#include "cybundle/split_bundle.hpp"

namespace cybundle::testing {

// S^d E with one slot per line-bundle summand and every exponent vector
// enumerated. Only usable for small ranks (C(rank+d-1, d) <= ~1e4).
inline std::map<long long, BigInt> sym_pow_enumerated(const SplitBundle& e, long long d) {
    std::vector<long long> slots;
    for (const auto& [deg, mult] : e.summands())
        for (BigInt i = 0; i < mult; ++i) slots.push_back(deg);
    std::map<long long, BigInt> out;
    auto rec = [&](auto&& self, long long idx, long long lo, long long weight) -> void {
        if (idx == d) {
            out[weight] += 1;
            return;
        }
        for (long long i = lo; i < static_cast<long long>(slots.size()); ++i)
            self(self, idx + 1, i, weight + slots[i]);
    };
    if (slots.empty()) {
        if (d == 0) out[0] += 1;
        return out;
    }
    rec(rec, 0, 0, 0);
    return out;
}

// Degree-d monomials on P^{m-1} vanishing to order >= p at (1:0:...:0),
// i.e. with chart-degree d - e_0 >= p.
inline BigInt point_filtration_enumerated(long long m, long long d, long long p) {
    BigInt count = 0;
    std::vector<int> e(m, 0);
    auto rec = [&](auto&& self, long long idx, long long left) -> void {
        if (idx == m - 1) {
            e[idx] = static_cast<int>(left);
            if (d - e[0] >= p) count += 1;
            return;
        }
        for (long long k = 0; k <= left; ++k) {
            e[idx] = static_cast<int>(k);
            self(self, idx + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return count;
}

}  // namespace cybundle::testing
