// Dimension bookkeeping for the two anticanonical families: automorphism
// group dimensions of P(E), the parameter count h^0(ω^{-1}) - 1 - dim Aut,
// the strict dimension gap for n > 3, and the n = 3 rigidity computations
// (cubic intersection form, finite isometry search, nef discrimination).
#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "filtration.hpp"
#include "proj_bundle.hpp"

namespace cybundle {

struct AutBreakdown {
    BigInt constant_entries = 0;   // matrix entries of degree 0
    BigInt linear_entries = 0;     // degree 1
    BigInt quadratic_entries = 0;  // degree 2
    BigInt matrix_dim = 0;         // Σ h^0(O(a_j - a_i)) over ordered pairs
    BigInt aut_dim = 0;            // (matrix_dim - 1) + 3
};

// An automorphism of P(E) comes from a matrix of forms on P^1 (the entry
// Hom(O(a_i), O(a_j)) contributes h^0(O(a_j - a_i)) parameters), modulo
// scalars, combined with an automorphism of the base.
inline AutBreakdown aut_dim(const SplitBundle& e) {
    AutBreakdown out;
    for (const auto& [ai, mi] : e.summands()) {
        for (const auto& [aj, mj] : e.summands()) {
            const long long diff = aj - ai;
            out.matrix_dim += mi * mj * h0_line(diff);
            if (diff == 0) out.constant_entries += mi * mj;
            if (diff == 1) out.linear_entries += mi * mj;
            if (diff == 2) out.quadratic_entries += mi * mj;
        }
    }
    out.aut_dim = out.matrix_dim - 1 + 3;
    return out;
}

struct ModuliReport {
    long long n = 0;
    BigInt h0_antik_p1;
    BigInt h0_antik_p2;
    BigInt aut_p1;
    BigInt aut_p2;
    BigInt dim_m1;        // h^0(ω^{-1}_{P1}) - 1 - dim Aut(P1)
    BigInt dim_m2_lower;  // lower bound only; equality is not claimed
    bool gap_strict = false;
};

inline ModuliReport moduli_report(long long n) {
    if (n < 3) throw std::invalid_argument("moduli_report: need n >= 3");
    const SplitBundle e1 = SplitBundle::trivial(n + 1);
    const SplitBundle e2 = SplitBundle::standard_unbalanced(n);
    ModuliReport r;
    r.n = n;
    r.h0_antik_p1 = h0_bundle(twist(sym_pow(e1, n + 1), 2));
    r.h0_antik_p2 = h0_bundle(twist(sym_pow(e2, n + 1), 2));
    r.aut_p1 = aut_dim(e1).aut_dim;
    r.aut_p2 = aut_dim(e2).aut_dim;
    r.dim_m1 = r.h0_antik_p1 - 1 - r.aut_p1;
    r.dim_m2_lower = r.h0_antik_p2 - 1 - r.aut_p2;
    r.gap_strict = r.dim_m2_lower > r.dim_m1;
    return r;
}

// Values of the cubic intersection form of the anticanonical hypersurface
// X ∈ |-K| on the (t, f) basis of its Picard group.
struct CubicForm {
    BigInt c_ttt;
    BigInt c_ttf;
    BigInt c_tff;
    BigInt c_fff;
    bool operator==(const CubicForm&) const = default;
};

inline CubicForm cubic_form_on_X(const PBundle& p) {
    if (p.fiber_dim() != 3) throw std::invalid_argument("cubic_form_on_X: need n = 3");
    const DivisorClass t{1, 0}, f{0, 1};
    const DivisorClass x = -canonical_class(p);
    return {intersection_number(p, {t, t, t, x}), intersection_number(p, {t, t, f, x}),
            intersection_number(p, {t, f, f, x}), intersection_number(p, {f, f, f, x})};
}

struct IntMatrix2 {
    long long a = 1, b = 0, c = 0, d = 1;  // column action: t -> a·t + c·f, f -> b·t + d·f
    bool operator==(const IntMatrix2&) const = default;
};

// Exhaustive search for GL_2(Z) substitutions preserving the cubic form as a
// polynomial identity, entries bounded by |entry| <= bound. The determinant
// ±1 constraint is what a Picard-group isomorphism imposes.
inline std::vector<IntMatrix2> lattice_isometries(const CubicForm& form, long long bound) {
    if (bound < 1) throw std::invalid_argument("lattice_isometries: need bound >= 1");
    // symmetric trilinear evaluation on vectors (x1,y1),(x2,y2),(x3,y3)
    auto tri = [&](long long x1, long long y1, long long x2, long long y2, long long x3,
                   long long y3) -> BigInt {
        return form.c_ttt * (BigInt(x1) * x2 * x3) +
               form.c_ttf * (BigInt(x1) * x2 * y3 + BigInt(x1) * y2 * x3 + BigInt(y1) * x2 * x3) +
               form.c_tff * (BigInt(x1) * y2 * y3 + BigInt(y1) * x2 * y3 + BigInt(y1) * y2 * x3) +
               form.c_fff * (BigInt(y1) * y2 * y3);
    };
    std::vector<IntMatrix2> found;
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
            for (long long c = -bound; c <= bound; ++c)
                for (long long d = -bound; d <= bound; ++d) {
                    const long long det = a * d - b * c;
                    if (det != 1 && det != -1) continue;
                    // images of the basis vectors
                    if (tri(a, c, a, c, a, c) != form.c_ttt) continue;
                    if (tri(a, c, a, c, b, d) != form.c_ttf) continue;
                    if (tri(a, c, b, d, b, d) != form.c_tff) continue;
                    if (tri(b, d, b, d, b, d) != form.c_fff) continue;
                    found.push_back({a, b, c, d});
                }
    return found;
}

struct NefDiscriminator {
    bool t_nef_on_x1 = false;
    bool t_nef_on_x2 = false;
};

// t is base-point-free on the product space, hence nef on X1; on X2 it meets
// the quotient-degree -1 section curve negatively.
inline NefDiscriminator nef_discriminator(long long n) {
    if (n < 3) throw std::invalid_argument("nef_discriminator: need n >= 3");
    const PBundle p1 = PBundle::product_space(n);
    const PBundle p2 = PBundle::unbalanced_space(n);
    NefDiscriminator out;
    out.t_nef_on_x1 = base_locus_of_t_system(p1, 0).empty();
    out.t_nef_on_x2 = section_curve_from_quotient(p2, -1).t_deg >= 0;
    return out;
}

}  // namespace cybundle
