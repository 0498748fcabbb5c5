// The claim suite: every computable ingredient of the two-family intersection
// story for a given fiber dimension n, each claim carrying an expected value,
// the computed value, a provenance label, and a pass/fail/skipped status.
// Reports render to an aligned text table or a structured JSON document and
// are byte-identical across runs.
#pragma once

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "filtration.hpp"
#include "hirzebruch.hpp"
#include "moduli.hpp"
#include "proj_bundle.hpp"
#include "section_ring.hpp"
#include "split_bundle.hpp"

namespace cybundle {

inline constexpr const char* kReportSchemaVersion = "1.0";

struct Claim {
    std::string id;
    std::string provenance;
    std::string expected;
    std::string computed;
    std::string status;  // pass | fail | skipped
    std::string reason;  // non-empty only when skipped
};

struct ClaimReport {
    long long n = 0;
    std::vector<Claim> claims;
    std::vector<std::string> notes;

    long long count(const std::string& status) const {
        long long c = 0;
        for (const auto& claim : claims)
            if (claim.status == status) ++c;
        return c;
    }
    bool all_passed() const { return count("fail") == 0; }
};

struct SuiteOptions {
    long long psi_max_n = 5;
    long long isometry_bound = 10;
};

namespace detail {
inline std::string fmt(const CubicForm& f) {
    return "(" + f.c_ttt.str() + "," + f.c_ttf.str() + "," + f.c_tff.str() + "," + f.c_fff.str() +
           ")";
}
inline std::string fmt(const std::vector<IntMatrix2>& ms) {
    std::string out = "[";
    for (size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ", ";
        out += "[[" + std::to_string(ms[i].a) + "," + std::to_string(ms[i].b) + "],[" +
               std::to_string(ms[i].c) + "," + std::to_string(ms[i].d) + "]]";
    }
    return out + "]";
}
}  // namespace detail

inline ClaimReport run_suite(long long n, SuiteOptions options = {}) {
    if (n < 3) throw std::invalid_argument("run_suite: need n >= 3");
    ClaimReport report;
    report.n = n;

    auto add = [&](std::string id, std::string provenance, std::string expected,
                   std::string computed) {
        const bool ok = expected == computed;
        report.claims.push_back({std::move(id), std::move(provenance), std::move(expected),
                                 std::move(computed), ok ? "pass" : "fail", ""});
    };
    auto add_pred = [&](std::string id, std::string provenance, std::string expected,
                        std::string computed, bool ok) {
        report.claims.push_back({std::move(id), std::move(provenance), std::move(expected),
                                 std::move(computed), ok ? "pass" : "fail", ""});
    };
    auto skip = [&](std::string id, std::string provenance, std::string expected,
                    std::string reason) {
        report.claims.push_back({std::move(id), std::move(provenance), std::move(expected), "",
                                 "skipped", std::move(reason)});
    };

    const PBundle p1 = PBundle::product_space(n);
    const PBundle p2 = PBundle::unbalanced_space(n);
    const SplitBundle e = p2.bundle();
    const FiltrationTable table = build_filtration(n);
    const BigInt dim_v = dim_V(table);
    const BigInt generic_h0 = 3 * binomial(2 * n + 1, n + 1);

    add("filtration_split_complement", "symmetric power splits against the two filtrations",
        "true", check_split_complement(table) ? "true" : "false");
    add("multiplicity_along_C", "length of the h0 plateau of the order filtration",
        std::to_string(n / 2), std::to_string(generic_multiplicity_along_C(table)));
    add("dim_V", "order-(n-1) subspace vs the closed binomial count", generic_h0.str(),
        dim_v.str());
    add("h0_antik_two_routes", "anticanonical sections: filtration route vs direct pushforward",
        table.h0_twisted[0].str(), h0_bundle(twist(sym_pow(e, n + 1), 2)).str());

    add("base_locus_t_p2", "negative summand of E sweeps out the base locus of |t|", "O(-1)",
        to_string(base_locus_of_t_system(p2, 0)));
    add("base_locus_t_plus_f_p2", "|t+f| is base-point-free on the unbalanced space", "0",
        to_string(base_locus_of_t_system(p2, 1)));
    add("base_locus_t_p1", "|t| is base-point-free on the product space", "0",
        to_string(base_locus_of_t_system(p1, 0)));

    const BlowupCheck blowup = blowup_check(p2);
    add("blowup_crepant_sum", "canonical class of the blow-up cancels the proper transform",
        "0*bt+0*bf+0*E", to_string(blowup.k_resolution_sum));
    add("blowup_decomposition", "proper transform splits as (n-1)(b*t - E) + 2 b*(t+f)", "true",
        blowup.decomposition_ok ? "true" : "false");

    add("h1_E_twist_minus1", "obstruction space of the fiber restriction sequence", "1",
        h1_bundle(twist(e, -1)).str());
    add("h1_E", "the t system restricts onto hyperplanes with no higher obstruction", "0",
        h1_bundle(e).str());
    add("fiber_restriction_codim", "image of |t| in a fiber's hyperplane system", "1",
        std::to_string(codim_of_fiber_restriction(p2)));
    add("h2_canonical", "middle cohomology of the canonical bundle vanishes", "0",
        cohomology_pbundle(p2, canonical_class(p2), 2).str());
    add("h_top_canonical", "top cohomology of the canonical bundle", "1",
        cohomology_pbundle(p2, canonical_class(p2), n + 1).str());

    const FamilyFiberChecks fiber = family_fiber_checks(n);
    add("fiber_h0_t_const", "h0 of the t system is constant across the degeneration", "true",
        fiber.h0_t_const ? "true" : "false");
    add("fiber_h0_tf_const", "h0 of the t+f system is constant across the degeneration", "true",
        fiber.h0_tf_const ? "true" : "false");
    add("fiber_F3_sections_vanish", "generic fiber of the third filtration piece has no sections",
        "true", fiber.f3_fiber_h0_zero ? "true" : "false");
    add("dim_v_eq_generic_fiber_h0", "dim V matches the generic fiber's anticanonical h0", "true",
        fiber.dim_v_eq_generic_h0 ? "true" : "false");

    if (n <= options.psi_max_n) {
        add("psi_image_rank", "rank of the products of t and t+f sections equals dim V",
            dim_v.str(), image_of_psi(n, options.psi_max_n).str());
    } else {
        skip("psi_image_rank", "rank of the products of t and t+f sections equals dim V",
             dim_v.str(),
             "enumeration budget: n > psi_max_n = " + std::to_string(options.psi_max_n));
    }

    const BigInt aut1 = aut_dim(p1.bundle()).aut_dim;
    const BigInt aut2 = aut_dim(e).aut_dim;
    add("aut_dim_p2", "automorphisms from matrices of forms plus the base",
        BigInt((n + 1) * (n + 1) + 3).str(), aut2.str());
    add("aut_gap", "the unbalanced bundle has exactly one extra automorphism parameter", "1",
        BigInt(aut2 - aut1).str());

    const ModuliReport moduli = moduli_report(n);
    const BigInt h0_diff = moduli.h0_antik_p2 - moduli.h0_antik_p1;
    add_pred("h0_antik_difference", "anticanonical section count gap, minimal exactly at n = 3",
             n == 3 ? "1" : "> 1", h0_diff.str(), n == 3 ? h0_diff == 1 : h0_diff > 1);
    add("moduli_gap_strict", "parameter-count gap between the two families",
        n == 3 ? "false" : "true", moduli.gap_strict ? "true" : "false");

    if (n == 3) {
        const DivisorClass anti_k = -canonical_class(p2);
        const SurfaceClass restricted = restrict_to_surface(p2, anti_k);
        add("surface_antik_restriction", "anticanonical class restricted to the quotient surface",
            "4C+6f", to_string(restricted));
        const SurfaceDecomposition dec = fixed_component_decomposition(restricted);
        add("surface_fixed_component", "negative section splits off the restricted system",
            "1C+0f", to_string(dec.fixed));
        add("surface_mobile_part", "residual mobile class after removing the section", "3C+6f",
            to_string(dec.mobile));
        const SurfaceClass section{1, 0, 2};
        add("surface_mobile_meets_C", "mobile part is disjoint from the section", "0",
            std::to_string(pairing(dec.mobile, section)));
        add("surface_section_self_intersection", "self-intersection of the section on the surface",
            "-2", std::to_string(pairing(section, section)));

        const CubicForm form1 = cubic_form_on_X(p1);
        const CubicForm form2 = cubic_form_on_X(p2);
        add("cubic_form_x1", "cubic intersection form of the product-space hypersurface",
            "(2,4,0,0)", detail::fmt(form1));
        add("cubic_form_x2", "cubic intersection form of the unbalanced-space hypersurface",
            "(2,4,0,0)", detail::fmt(form2));
        add("cubic_isometries_trivial", "only the identity preserves the cubic form",
            "[[[1,0],[0,1]]]", detail::fmt(lattice_isometries(form2, options.isometry_bound)));
        const NefDiscriminator nef = nef_discriminator(n);
        add("nef_t_x1", "t is nef on the product-space hypersurface", "true",
            nef.t_nef_on_x1 ? "true" : "false");
        add("nef_t_x2", "t meets the section curve negatively on the unbalanced side", "false",
            nef.t_nef_on_x2 ? "true" : "false");
    }

    report.notes.push_back(
        "index conventions: two off-by-one labelings of the quotient filtration are in "
        "circulation; values here follow the vanishing-order convention in which "
        "dim V = h0(G^{n-1}(2)).");
    if (n != 3)
        report.notes.push_back(
            "surface decomposition, cubic form, isometry, and nef claims run only at n = 3.");
    return report;
}

inline std::vector<ClaimReport> run_range(long long lo, long long hi, SuiteOptions options = {}) {
    if (lo < 3 || hi < lo) throw std::invalid_argument("run_range: need 3 <= lo <= hi");
    std::vector<ClaimReport> reports;
    for (long long n = lo; n <= hi; ++n) reports.push_back(run_suite(n, options));
    return reports;
}

inline std::string render_text(const ClaimReport& report) {
    size_t wid = 6, wexp = 8, wcomp = 8;
    for (const auto& c : report.claims) {
        wid = std::max(wid, c.id.size());
        wexp = std::max(wexp, c.expected.size());
        wcomp = std::max(wcomp, c.computed.size());
    }
    auto pad = [](const std::string& s, size_t w) { return s + std::string(w - s.size(), ' '); };
    std::ostringstream out;
    out << "claim suite for n = " << report.n << "\n";
    out << pad("status", 8) << pad("id", wid + 2) << pad("expected", wexp + 2)
        << pad("computed", wcomp + 2) << "provenance\n";
    for (const auto& c : report.claims) {
        out << pad(c.status, 8) << pad(c.id, wid + 2) << pad(c.expected, wexp + 2)
            << pad(c.computed, wcomp + 2) << c.provenance;
        if (!c.reason.empty()) out << " [" << c.reason << "]";
        out << "\n";
    }
    out << "summary: " << report.claims.size() << " claims, " << report.count("pass")
        << " passed, " << report.count("fail") << " failed, " << report.count("skipped")
        << " skipped\n";
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    return out.str();
}

inline nlohmann::ordered_json to_json(const ClaimReport& report, const SuiteOptions& options) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["n"] = report.n;
    doc["options"] = {{"psi_max_n", options.psi_max_n}, {"isometry_bound", options.isometry_bound}};
    doc["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : report.claims) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["provenance"] = c.provenance;
        jc["expected"] = c.expected;
        jc["computed"] = c.computed;
        jc["status"] = c.status;
        if (!c.reason.empty()) jc["reason"] = c.reason;
        doc["claims"].push_back(jc);
    }
    doc["notes"] = report.notes;
    doc["summary"] = {{"total", report.claims.size()},
                      {"passed", report.count("pass")},
                      {"failed", report.count("fail")},
                      {"skipped", report.count("skipped")}};
    return doc;
}

inline std::string render_text_range(const std::vector<ClaimReport>& reports) {
    std::ostringstream out;
    long long failed = 0, total = 0;
    for (const auto& r : reports) {
        out << render_text(r) << "\n";
        failed += r.count("fail");
        total += static_cast<long long>(r.claims.size());
    }
    out << "range summary: " << reports.size() << " values of n, " << total << " claims, "
        << failed << " failed\n";
    return out.str();
}

inline nlohmann::ordered_json to_json_range(const std::vector<ClaimReport>& reports,
                                            const SuiteOptions& options) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["reports"] = nlohmann::ordered_json::array();
    long long failed = 0, total = 0;
    for (const auto& r : reports) {
        doc["reports"].push_back(to_json(r, options));
        failed += r.count("fail");
        total += static_cast<long long>(r.claims.size());
    }
    doc["summary"] = {{"runs", reports.size()}, {"total", total}, {"failed", failed}};
    return doc;
}

}  // namespace cybundle
