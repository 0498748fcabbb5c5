// Geometry of P(E) -> P^1 in Grothendieck's convention (P(E) parametrizes
// rank-one quotients; sections of O_{P(E)}(1) are sections of E).
//
// Pic P(E) = Z·t ⊕ Z·f with t = c1(O(1)) and f the fiber class. The Chow
// ring is Z[t,f] / (f^2, t^{n+1} - degree(E)·t^n·f); the sign of the t^{n+1}
// relation follows from the quotient convention (P(O(1)^2) ≅ P^1×P^1 forces
// t^2 = +2·t·f). The cohomology rules must satisfy h^{n+1}(P, K_P) = 1 and
// the full Serre-duality sweep in the tests.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "split_bundle.hpp"

namespace cybundle {

// a·t + b·f
struct DivisorClass {
    long long a = 0;
    long long b = 0;
    bool operator==(const DivisorClass&) const = default;
};

inline DivisorClass operator+(DivisorClass x, DivisorClass y) { return {x.a + y.a, x.b + y.b}; }
inline DivisorClass operator-(DivisorClass x, DivisorClass y) { return {x.a - y.a, x.b - y.b}; }
inline DivisorClass operator-(DivisorClass x) { return {-x.a, -x.b}; }
inline DivisorClass operator*(long long c, DivisorClass x) { return {c * x.a, c * x.b}; }

// bt·b*t + bf·b*f + e·E_exc in Pic of the blow-up of P(E) along the section
// curve; free abelian of rank 3.
struct BlowupClass {
    long long bt = 0;
    long long bf = 0;
    long long e = 0;
    bool operator==(const BlowupClass&) const = default;
};

inline BlowupClass operator+(BlowupClass x, BlowupClass y) {
    return {x.bt + y.bt, x.bf + y.bf, x.e + y.e};
}
inline BlowupClass operator*(long long c, BlowupClass x) { return {c * x.bt, c * x.bf, c * x.e}; }

// Intersection numbers (t·C, f·C) of a section curve of the projection;
// f·C = 1 for any section.
struct CurveClassOnP {
    long long t_deg = 0;
    long long f_deg = 1;
    bool operator==(const CurveClassOnP&) const = default;
};

class PBundle {
public:
    PBundle(SplitBundle e, long long n) : e_(std::move(e)), n_(n) {
        if (n_ < 1 || e_.rank() != n_ + 1)
            throw std::invalid_argument("PBundle: rank(E) must equal n+1 >= 2");
    }

    // P^1 x P^n
    static PBundle product_space(long long n) { return PBundle(SplitBundle::trivial(n + 1), n); }

    // P(O(-1) ⊕ O^{n-1} ⊕ O(1))
    static PBundle unbalanced_space(long long n) {
        return PBundle(SplitBundle::standard_unbalanced(n), n);
    }

    const SplitBundle& bundle() const { return e_; }
    long long fiber_dim() const { return n_; }
    long long dim() const { return n_ + 1; }

private:
    SplitBundle e_;
    long long n_;
};

// K_{P(E)} = -rank(E)·t + (degree(E) - 2)·f
inline DivisorClass canonical_class(const PBundle& p) {
    return {-static_cast<long long>(p.bundle().rank()),
            static_cast<long long>(p.bundle().degree()) - 2};
}

// π_* O(a·t + b·f) = (S^a E)(b), valid for a >= 0.
inline SplitBundle pushforward(const PBundle& p, DivisorClass d) {
    if (d.a < 0)
        throw std::invalid_argument("pushforward: zero for a < 0; use cohomology_pbundle");
    return twist(sym_pow(p.bundle(), d.a), d.b);
}

// Full cohomology of O(a·t + b·f) on P(E) via the Leray identifications:
//   a >= 0:        h^i = h^i(P^1, (S^a E)(b)),        nonzero only for i in {0,1}
//   -(n+1) < a < 0: everything vanishes
//   a <= -(n+1):   h^i = h^{i-n}(P^1, S^{-a-n-1}(E^∨) ⊗ det(E)^∨ ⊗ O(b))
inline BigInt cohomology_pbundle(const PBundle& p, DivisorClass d, long long i) {
    const long long n = p.fiber_dim();
    if (i < 0 || i > n + 1)
        throw std::invalid_argument("cohomology_pbundle: i outside 0..dim");
    if (d.a >= 0) {
        if (i > 1) return 0;
        SplitBundle push = twist(sym_pow(p.bundle(), d.a), d.b);
        return i == 0 ? h0_bundle(push) : h1_bundle(push);
    }
    if (d.a > -(n + 1)) return 0;
    if (i != n && i != n + 1) return 0;
    const long long m = -d.a - n - 1;
    const long long det_deg = static_cast<long long>(p.bundle().degree());
    SplitBundle top = twist(sym_pow(dual(p.bundle()), m), d.b - det_deg);
    return i == n ? h0_bundle(top) : h1_bundle(top);
}

// Product of n+1 divisor classes, reduced by f^2 = 0 and
// t^{n+1} = degree(E)·t^n·f, normalized so t^n·f = 1.
inline BigInt intersection_number(const PBundle& p, const std::vector<DivisorClass>& classes) {
    const long long n = p.fiber_dim();
    if (static_cast<long long>(classes.size()) != n + 1)
        throw std::invalid_argument("intersection_number: need exactly n+1 classes");
    // coefficient of t^{n+1} and of t^n·f in the expanded product
    BigInt coeff_t = 1;   // Π a_i
    BigInt coeff_tf = 0;  // Σ_j b_j Π_{i≠j} a_i
    for (const auto& c : classes) {
        coeff_tf = coeff_tf * c.a + coeff_t * c.b;
        coeff_t *= c.a;
    }
    return p.bundle().degree() * coeff_t + coeff_tf;
}

// The base locus of |t + b·f| is P(F) ⊆ P(E) where F collects the summands
// of E whose b-twisted degree is negative. Returned untwisted; empty result
// means base-point-free.
inline SplitBundle base_locus_of_t_system(const PBundle& p, long long b) {
    SplitBundle f;
    for (const auto& [deg, mult] : p.bundle().summands())
        if (deg + b < 0) f.add(deg, mult);
    return f;
}

// The section of π induced by a quotient E -> O(q): O(1) restricts to the
// quotient line bundle, so t·C = q.
inline CurveClassOnP section_curve_from_quotient(const PBundle& p, long long q) {
    if (p.bundle().multiplicity(q) == 0)
        throw std::invalid_argument("section_curve_from_quotient: degree not a summand of E");
    return {q, 1};
}

struct BlowupCheck {
    BlowupClass k_blowup;
    BlowupClass proper_transform;
    BlowupClass k_resolution_sum;
    bool decomposition_ok = false;
};

// Divisor-class arithmetic on the blow-up of P(E) along the quotient-degree
// -1 section: the canonical class picks up (n-1)·E_exc, the anticanonical
// proper transform loses (n-1)·E_exc, and their sum vanishing encodes the
// crepancy of the resolution. decomposition_ok verifies that the proper
// transform splits as (n-1)(b*t - E) + 2 b*(t + f).
inline BlowupCheck blowup_check(const PBundle& p) {
    const long long n = p.fiber_dim();
    if (n < 3 || p.bundle().multiplicity(-1) == 0)
        throw std::invalid_argument("blowup_check: needs n >= 3 and a degree -1 quotient section");
    const DivisorClass k = canonical_class(p);
    BlowupCheck out;
    out.k_blowup = {k.a, k.b, n - 1};
    out.proper_transform = {-k.a, -k.b, -(n - 1)};
    out.k_resolution_sum = out.k_blowup + out.proper_transform;
    const BlowupClass expected = (n - 1) * BlowupClass{1, 0, -1} + 2 * BlowupClass{1, 1, 0};
    out.decomposition_ok = out.proper_transform == expected;
    return out;
}

// Codimension of the image of H^0(O_P(t)) -> H^0(O_fiber(t)) ≅ H^0(O_{P^n}(1)),
// read off the twist exact sequence O(t-f) -> O(t) -> O_f(t).
inline long long codim_of_fiber_restriction(const PBundle& p) {
    BigInt image_dim = h0_bundle(p.bundle()) - h0_bundle(twist(p.bundle(), -1));
    return p.fiber_dim() + 1 - static_cast<long long>(image_dim);
}

inline std::string to_string(DivisorClass d) {
    return std::to_string(d.a) + "*t" + (d.b < 0 ? "" : "+") + std::to_string(d.b) + "*f";
}

inline std::string to_string(BlowupClass c) {
    return std::to_string(c.bt) + "*bt" + (c.bf < 0 ? "" : "+") + std::to_string(c.bf) + "*bf" +
           (c.e < 0 ? "" : "+") + std::to_string(c.e) + "*E";
}

namespace detail {
// Reads "<int>*<tag0><sep><int>*<tag1>..." where <sep> is the sign of the
// next coefficient; the tags must appear in order.
inline std::vector<long long> parse_starred_terms(std::string_view text,
                                                  const std::vector<std::string>& tags,
                                                  const char* what) {
    auto fail = [&]() {
        throw std::invalid_argument(std::string(what) + ": malformed class \"" +
                                    std::string(text) + "\"");
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::vector<long long> coeffs;
    size_t pos = 0;
    for (size_t k = 0; k < tags.size(); ++k) {
        const std::string star_tag = "*" + tags[k];
        const size_t tag_pos = s.find(star_tag, pos);
        if (tag_pos == std::string::npos) fail();
        std::string num = s.substr(pos, tag_pos - pos);
        if (k > 0 && !num.empty() && num[0] == '+') num = num.substr(1);
        try {
            size_t used = 0;
            coeffs.push_back(std::stoll(num, &used));
            if (used != num.size()) fail();
        } catch (const std::logic_error&) {
            fail();
        }
        pos = tag_pos + star_tag.size();
    }
    if (pos != s.size()) fail();
    return coeffs;
}
}  // namespace detail

inline DivisorClass parse_divisor_class(std::string_view text) {
    const auto c = detail::parse_starred_terms(text, {"t", "f"}, "parse_divisor_class");
    return {c[0], c[1]};
}

inline BlowupClass parse_blowup_class(std::string_view text) {
    const auto c = detail::parse_starred_terms(text, {"bt", "bf", "E"}, "parse_blowup_class");
    return {c[0], c[1], c[2]};
}

}  // namespace cybundle
