// Divisor arithmetic on a Hirzebruch surface P(O ⊕ O(-e)): Picard lattice
// spanned by the section class C with C² = -e and the fiber class f, the
// restriction map from the ambient projective bundle in the n = 3 case, and
// the fixed-component decomposition of an effective class.
#pragma once

#include <stdexcept>
#include <string>

#include "proj_bundle.hpp"

namespace cybundle {

// c·C + fcoef·f on the surface with invariant e (C² = -e, C·f = 1, f² = 0).
struct SurfaceClass {
    long long c = 0;
    long long fcoef = 0;
    long long e = 2;
    bool operator==(const SurfaceClass&) const = default;
};

inline long long pairing(const SurfaceClass& x, const SurfaceClass& y) {
    if (x.e != y.e) throw std::invalid_argument("pairing: classes live on different surfaces");
    return -x.e * x.c * y.c + x.c * y.fcoef + y.c * x.fcoef;
}

// Restriction of a·t + b·f on P(O(-1) ⊕ O^2 ⊕ O(1)) to the surface
// S = P(O(-1) ⊕ O(1)) cut out by the rank-two quotient: t|_S = C + f and
// f|_S = f, so (a, b) -> a·C + (a+b)·f with e = 2.
inline SurfaceClass restrict_to_surface(const PBundle& p, DivisorClass d) {
    if (p.fiber_dim() != 3 || p.bundle() != SplitBundle::standard_unbalanced(3))
        throw std::invalid_argument("restrict_to_surface: needs the n = 3 unbalanced bundle");
    return {d.a, d.a + d.b, 2};
}

struct SurfaceDecomposition {
    SurfaceClass fixed;
    SurfaceClass mobile;
};

// Strip off the fixed part of |D|: subtract C while D·C < 0. The residual
// meets C non-negatively; fixed + mobile = input.
inline SurfaceDecomposition fixed_component_decomposition(SurfaceClass d) {
    if (d.c < 0 || d.fcoef < 0)
        throw std::invalid_argument("fixed_component_decomposition: class must be effective");
    SurfaceClass fixed{0, 0, d.e};
    const SurfaceClass section{1, 0, d.e};
    while (d.c > 0 && pairing(d, section) < 0) {
        d.c -= 1;
        fixed.c += 1;
    }
    return {fixed, d};
}

inline std::string to_string(const SurfaceClass& x) {
    return std::to_string(x.c) + "C" + (x.fcoef < 0 ? "" : "+") + std::to_string(x.fcoef) + "f";
}

}  // namespace cybundle
