// Explicit global sections of O(a·t + b·f) on P(E), E = O(-1) ⊕ O^{n-1} ⊕ O(1),
// as bigraded polynomials with exact rational coefficients.
//
// Fiber coordinates are ordered z, w_1, ..., w_{n-1}, v, matching the summands
// of E (weights -1, 0, ..., 0, +1); s, u are the base coordinates on P^1. A
// term z^{k_0} w^{k_1..} v^{k_n} s^i u^j of a section of O(a·t + b·f) obeys
//   Σ k_m = a   and   i + j = b + Σ k_m·weight_m,
// i.e. the base degree is forced by the fiber monomial's weight. The section
// curve C is cut out by {w = v = 0}, so the vanishing order of a term along C
// is its total non-z fiber exponent. The divisor of type t+f carved out by the
// O(-1) sub-line-bundle is the z-coordinate section (class (1,1), base degree 0).
//
// Coefficients are exact rationals throughout: the rank computations that
// feed the verification claims must be certain.
#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "split_bundle.hpp"

namespace cybundle {

struct SectionMonomial {
    std::vector<int> fiber;  // exponents of z, w_1..w_{n-1}, v
    long long s = 0;
    long long u = 0;
    auto operator<=>(const SectionMonomial&) const = default;
};

class SectionPoly {
public:
    SectionPoly(long long n, long long a, long long b) : n_(n), a_(a), b_(b) {
        if (n < 2) throw std::invalid_argument("SectionPoly: need n >= 2");
    }

    static long long weight_of(long long n, const std::vector<int>& fiber) {
        return fiber.back() - fiber.front();  // v exponent minus z exponent
    }

    // Single term c · (fiber monomial) · s^i u^j, checked against the class.
    static SectionPoly monomial(long long n, long long a, long long b,
                                std::vector<int> fiber, long long s_exp, long long u_exp,
                                Rational coeff = 1) {
        SectionPoly p(n, a, b);
        p.add_term({std::move(fiber), s_exp, u_exp}, coeff);
        return p;
    }

    void add_term(SectionMonomial mon, const Rational& coeff) {
        if (static_cast<long long>(mon.fiber.size()) != n_ + 1)
            throw std::invalid_argument("SectionPoly: fiber exponent arity mismatch");
        long long total = 0;
        for (int k : mon.fiber) {
            if (k < 0) throw std::invalid_argument("SectionPoly: negative exponent");
            total += k;
        }
        if (total != a_)
            throw std::invalid_argument("SectionPoly: fiber degree must equal a");
        if (mon.s < 0 || mon.u < 0 || mon.s + mon.u != b_ + weight_of(n_, mon.fiber))
            throw std::invalid_argument("SectionPoly: base degree violates the class");
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(mon), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long long n() const { return n_; }
    long long a() const { return a_; }
    long long b() const { return b_; }
    const std::map<SectionMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const SectionPoly&) const = default;

private:
    long long n_;
    long long a_;
    long long b_;
    std::map<SectionMonomial, Rational> terms_;
};

inline SectionPoly operator+(const SectionPoly& p, const SectionPoly& q) {
    if (p.n() != q.n() || p.a() != q.a() || p.b() != q.b())
        throw std::invalid_argument("SectionPoly +: class mismatch");
    SectionPoly out = p;
    for (const auto& [mon, c] : q.terms()) out.add_term(mon, c);
    return out;
}

inline SectionPoly operator*(const Rational& c, const SectionPoly& p) {
    SectionPoly out(p.n(), p.a(), p.b());
    if (c != 0)
        for (const auto& [mon, coeff] : p.terms()) out.add_term(mon, c * coeff);
    return out;
}

// Multiplication of sections: classes add, terms convolve.
inline SectionPoly multiply(const SectionPoly& p, const SectionPoly& q) {
    if (p.n() != q.n()) throw std::invalid_argument("multiply: different ambient spaces");
    SectionPoly out(p.n(), p.a() + q.a(), p.b() + q.b());
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            SectionMonomial m = mp;
            for (size_t i = 0; i < m.fiber.size(); ++i) m.fiber[i] += mq.fiber[i];
            m.s += mq.s;
            m.u += mq.u;
            out.add_term(std::move(m), cp * cq);
        }
    }
    return out;
}

// Minimum over terms of the total non-z fiber exponent; the order of
// vanishing along C = {w = v = 0}.
inline long long vanishing_order_along_C(const SectionPoly& p) {
    if (p.is_zero())
        throw std::domain_error("vanishing_order_along_C: undefined for the zero section");
    long long best = -1;
    for (const auto& [mon, c] : p.terms()) {
        long long order = 0;
        for (size_t i = 1; i < mon.fiber.size(); ++i) order += mon.fiber[i];
        if (best < 0 || order < best) best = order;
    }
    return best;
}

namespace detail {
// All exponent vectors of length `slots` summing to `total`.
inline void for_each_composition(long long total, long long slots,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> k(slots, 0);
    std::function<void(long long, long long)> rec = [&](long long idx, long long left) {
        if (idx == slots - 1) {
            k[idx] = static_cast<int>(left);
            fn(k);
            return;
        }
        for (long long e = 0; e <= left; ++e) {
            k[idx] = static_cast<int>(e);
            rec(idx + 1, left - e);
        }
    };
    if (slots <= 0) {
        if (total == 0) fn(k);
        return;
    }
    rec(0, total);
}

// All size-`count` multisets of {0, ..., pool-1}, as sorted index vectors.
inline void for_each_multiset(long long pool, long long count,
                              const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick(count, 0);
    std::function<void(long long, long long)> rec = [&](long long idx, long long lo) {
        if (idx == count) {
            fn(pick);
            return;
        }
        for (long long i = lo; i < pool; ++i) {
            pick[idx] = static_cast<int>(i);
            rec(idx + 1, i);
        }
    };
    rec(0, 0);
}
}  // namespace detail

struct SectionBasis {
    long long a = 0;
    long long b = 0;
    std::vector<SectionPoly> elements;
};

// One element per (fiber monomial of degree a, base monomial of the forced
// degree), coefficient 1; the size equals h^0 of the pushforward (S^a E)(b).
inline SectionBasis monomial_basis(long long n, long long a, long long b) {
    if (a < 0) throw std::invalid_argument("monomial_basis: need a >= 0");
    SectionBasis basis{a, b, {}};
    detail::for_each_composition(a, n + 1, [&](const std::vector<int>& fiber) {
        long long base_deg = b + SectionPoly::weight_of(n, fiber);
        for (long long i = 0; base_deg >= 0 && i <= base_deg; ++i)
            basis.elements.push_back(SectionPoly::monomial(n, a, b, fiber, i, base_deg - i));
    });
    return basis;
}

// Rank over Q of the span, by fraction-exact Gaussian elimination on the
// coordinate matrix in the monomial basis. Rows are kept sparse.
inline BigInt rank_of_span(const std::vector<SectionPoly>& vectors, long long a, long long b) {
    std::map<SectionMonomial, long long> column;
    for (const auto& v : vectors) {
        if (v.a() != a || v.b() != b)
            throw std::invalid_argument("rank_of_span: vector not in the stated class");
        for (const auto& [mon, c] : v.terms())
            column.emplace(mon, static_cast<long long>(column.size()));
    }
    std::map<long long, std::map<long long, Rational>> pivots;  // pivot column -> reduced row
    BigInt rank = 0;
    for (const auto& v : vectors) {
        std::map<long long, Rational> row;
        for (const auto& [mon, c] : v.terms()) row[column.at(mon)] = c;
        while (!row.empty()) {
            const long long lead = row.begin()->first;
            auto pivot = pivots.find(lead);
            if (pivot == pivots.end()) {
                const Rational inv = Rational(1) / row.begin()->second;
                for (auto& [col, c] : row) c *= inv;
                pivots.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            const Rational factor = row.begin()->second;
            for (const auto& [col, c] : pivot->second) {
                auto it = row.find(col);
                if (it == row.end()) {
                    row.emplace(col, -factor * c);
                } else {
                    it->second -= factor * c;
                    if (it->second == 0) row.erase(it);
                }
            }
        }
    }
    return rank;
}

// Rank of the image of S^{n-1}H^0(O(t)) ⊗ S^2 H^0(O(t+f)) -> H^0(O((n+1)t+2f)):
// every product of the n-1 + 2 basis monomials is enumerated (no sampling).
// The product count grows like C(2n-1, n-1)·C(2n+3, 2), so a budget guard
// rejects large n unless the caller raises the cap.
inline BigInt image_of_psi(long long n, long long budget_max_n = 6) {
    if (n < 3) throw std::invalid_argument("image_of_psi: need n >= 3");
    if (n > budget_max_n)
        throw std::invalid_argument("image_of_psi: n exceeds the enumeration budget");
    const SectionBasis b1 = monomial_basis(n, 1, 0);
    const SectionBasis b2 = monomial_basis(n, 1, 1);
    std::vector<SectionPoly> products;
    detail::for_each_multiset(
        static_cast<long long>(b1.elements.size()), n - 1, [&](const std::vector<int>& pick1) {
            detail::for_each_multiset(
                static_cast<long long>(b2.elements.size()), 2, [&](const std::vector<int>& pick2) {
                    SectionPoly prod = b1.elements[pick1[0]];
                    for (size_t i = 1; i < pick1.size(); ++i)
                        prod = multiply(prod, b1.elements[pick1[i]]);
                    for (int j : pick2) prod = multiply(prod, b2.elements[j]);
                    products.push_back(std::move(prod));
                });
        });
    return rank_of_span(products, n + 1, 2);
}

// Joint rank of the three product families refining the multiplication map:
//   n+1 sections of |t| and two of |f|;
//   n   sections of |t|, one of |f|, and the z-coordinate section of |t+f|;
//   n-1 sections of |t| and the z-section squared.
// Expected to span all of V.
inline BigInt refined_psi_rank(long long n, long long budget_max_n = 6) {
    if (n < 3) throw std::invalid_argument("refined_psi_rank: need n >= 3");
    if (n > budget_max_n)
        throw std::invalid_argument("refined_psi_rank: n exceeds the enumeration budget");
    const SectionBasis t_basis = monomial_basis(n, 1, 0);
    std::vector<int> z_fiber(n + 1, 0);
    z_fiber[0] = 1;
    const SectionPoly z_section = SectionPoly::monomial(n, 1, 1, z_fiber, 0, 0);
    const std::vector<SectionPoly> base = {
        SectionPoly::monomial(n, 0, 1, std::vector<int>(n + 1, 0), 1, 0),   // s
        SectionPoly::monomial(n, 0, 1, std::vector<int>(n + 1, 0), 0, 1)};  // u
    std::vector<SectionPoly> products;
    auto push_t_products = [&](long long count, const SectionPoly& tail) {
        detail::for_each_multiset(static_cast<long long>(t_basis.elements.size()), count,
                                  [&](const std::vector<int>& pick) {
                                      SectionPoly prod = tail;
                                      for (int i : pick) prod = multiply(prod, t_basis.elements[i]);
                                      products.push_back(std::move(prod));
                                  });
    };
    for (const auto& f1 : base)
        for (const auto& f2 : base) push_t_products(n + 1, multiply(f1, f2));
    for (const auto& f1 : base) push_t_products(n, multiply(f1, z_section));
    push_t_products(n - 1, multiply(z_section, z_section));
    return rank_of_span(products, n + 1, 2);
}

// dim of degree-d forms on P^{m-1} vanishing to order >= p at a point,
// for p = 0..d+1: dim W^p = Σ_{j=p}^{d} C(m-2+j, j).
inline std::vector<BigInt> point_filtration_dims(long long m, long long d) {
    if (m < 2 || d < 0) throw std::invalid_argument("point_filtration_dims: need m >= 2, d >= 0");
    std::vector<BigInt> dims(d + 2, 0);
    for (long long p = 0; p <= d + 1; ++p)
        for (long long j = p; j <= d; ++j) dims[p] += binomial(m - 2 + j, j);
    return dims;
}

// Terms print as "c * <fiber part> * <base part>", e.g.
// "-3/2 * z^2 w1 v * s"; an empty part prints as "1".
inline std::string to_string(const SectionPoly& p) {
    if (p.is_zero()) return "0";
    const long long n = p.n();
    std::ostringstream out;
    bool first = true;
    for (const auto& [mon, coeff] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        std::string fiber, base;
        auto append = [](std::string& dst, const std::string& name, long long exp) {
            if (exp == 0) return;
            if (!dst.empty()) dst += " ";
            dst += name;
            if (exp != 1) dst += "^" + std::to_string(exp);
        };
        for (long long i = 0; i <= n; ++i) {
            const std::string name = i == 0 ? "z" : (i == n ? "v" : "w" + std::to_string(i));
            append(fiber, name, mon.fiber[i]);
        }
        append(base, "s", mon.s);
        append(base, "u", mon.u);
        out << coeff.str() << " * " << (fiber.empty() ? "1" : fiber) << " * "
            << (base.empty() ? "1" : base);
    }
    return out.str();
}

}  // namespace cybundle
