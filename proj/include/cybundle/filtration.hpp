// The two filtrations of S^{n+1}E induced by the sub-line-bundle O(-1) ⊂ E,
// E = O(-1) ⊕ O^{n-1} ⊕ O(1). With Q = O^{n-1} ⊕ O(1):
//
//   F^p = ⊕_{i=p}^{n+1}   S^i(O(-1)) ⊗ S^{n+1-i}(Q)
//   G^p = ⊕_{i=0}^{n+1-p} S^i(O(-1)) ⊗ S^{n+1-i}(Q)
//
// After the anticanonical twist, h^0(G^p(2)) counts sections of ω^{-1}
// vanishing to order >= p along the section curve C. The plateau length of
// that sequence is the generic multiplicity of the anticanonical hypersurface
// along C, and h^0(G^{n-1}(2)) is dim V, the space of sections vanishing to
// order >= n-1.
#pragma once

#include <stdexcept>
#include <vector>

#include "split_bundle.hpp"

namespace cybundle {

struct FiltrationTable {
    long long n = 0;
    std::vector<SplitBundle> g;       // G^0 .. G^{n+2}
    std::vector<SplitBundle> f;       // F^0 .. F^{n+2}
    std::vector<BigInt> h0_twisted;   // h^0(G^p(2))
    SplitBundle total;                // S^{n+1}E
};

inline FiltrationTable build_filtration(long long n) {
    if (n < 3) throw std::invalid_argument("build_filtration: need n >= 3");
    const SplitBundle e = SplitBundle::standard_unbalanced(n);
    const SplitBundle q{{0, n - 1}, {1, 1}};
    FiltrationTable t;
    t.n = n;
    t.total = sym_pow(e, n + 1);
    // piece(i) = S^i(O(-1)) ⊗ S^{n+1-i}(Q) = (S^{n+1-i}Q)(-i)
    auto piece = [&](long long i) { return twist(sym_pow(q, n + 1 - i), -i); };
    for (long long p = 0; p <= n + 2; ++p) {
        SplitBundle gp, fp;
        for (long long i = 0; i <= n + 1 - p; ++i) gp = direct_sum(gp, piece(i));
        for (long long i = p; i <= n + 1; ++i) fp = direct_sum(fp, piece(i));
        t.h0_twisted.push_back(h0_bundle(twist(gp, 2)));
        t.g.push_back(std::move(gp));
        t.f.push_back(std::move(fp));
    }
    return t;
}

// S^{n+1}E ≅ G^{n+2-p} ⊕ F^p for every p, as an exact multiset identity.
inline bool check_split_complement(const FiltrationTable& t) {
    for (long long p = 0; p <= t.n + 2; ++p)
        if (direct_sum(t.g[t.n + 2 - p], t.f[p]) != t.total) return false;
    return true;
}

// Largest p with h^0(G^p(2)) = h^0(G^0(2)): the generic vanishing order of
// an anticanonical section along C, hence the generic multiplicity there.
inline long long generic_multiplicity_along_C(const FiltrationTable& t) {
    long long best = 0;
    for (long long p = 0; p <= t.n + 2; ++p)
        if (t.h0_twisted[p] == t.h0_twisted[0]) best = p;
    return best;
}

// dim V = h^0(G^{n-1}(2)), the sections vanishing to order >= n-1 along C.
inline BigInt dim_V(const FiltrationTable& t) { return t.h0_twisted[t.n - 1]; }

struct FamilyFiberChecks {
    bool h0_t_const = false;            // h^0(E) = h^0(O^{n+1}) = n+1
    bool h0_tf_const = false;           // h^0(E(1)) = h^0(O(1)^{n+1}) = 2n+2
    bool f3_fiber_h0_zero = false;      // generic fiber of F^3(2) is O(-1)^N
    bool dim_v_eq_generic_h0 = false;   // dim V = 3·C(2n+1, n+1)
};

// Fiberwise numerical inputs for the one-parameter family degenerating the
// trivial bundle to E: constancy of h^0 for the t and t+f systems across
// fibers, vanishing of sections of the generic F^3(2) fiber, and the equality
// of dim V with the generic fiber's anticanonical h^0.
inline FamilyFiberChecks family_fiber_checks(long long n) {
    if (n < 3) throw std::invalid_argument("family_fiber_checks: need n >= 3");
    const SplitBundle e = SplitBundle::standard_unbalanced(n);
    const SplitBundle triv = SplitBundle::trivial(n + 1);
    FamilyFiberChecks out;
    out.h0_t_const = h0_bundle(e) == h0_bundle(triv) && h0_bundle(e) == n + 1;
    out.h0_tf_const =
        h0_bundle(twist(e, 1)) == h0_bundle(twist(triv, 1)) && h0_bundle(twist(e, 1)) == 2 * n + 2;
    const SplitBundle f3_fiber =
        twist(tensor(sym_pow(SplitBundle::line(-1), 3), sym_pow(triv, n - 2)), 2);
    out.f3_fiber_h0_zero = h0_bundle(f3_fiber) == 0 && !f3_fiber.empty();
    const FiltrationTable t = build_filtration(n);
    out.dim_v_eq_generic_h0 = dim_V(t) == 3 * binomial(2 * n + 1, n + 1);
    return out;
}

}  // namespace cybundle
