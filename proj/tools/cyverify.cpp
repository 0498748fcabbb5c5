// Command-line front end: runs the full claim suite for one n or a range,
// renders text or structured reports, and exposes the calculator operations
// individually. Exit status: 0 when no claim failed, 1 when any failed,
// 2 on usage errors.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "cybundle/filtration.hpp"
#include "cybundle/moduli.hpp"
#include "cybundle/proj_bundle.hpp"
#include "cybundle/section_ring.hpp"
#include "cybundle/split_bundle.hpp"
#include "cybundle/verify.hpp"

namespace {

using namespace cybundle;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

std::string render(const std::vector<ClaimReport>& reports, const SuiteOptions& options,
                   const std::string& format, bool range) {
    if (format == "structured")
        return (range ? to_json_range(reports, options) : to_json(reports.front(), options))
                   .dump(2) +
               "\n";
    return range ? render_text_range(reports) : render_text(reports.front());
}

PBundle bundle_space(const SplitBundle& e) {
    const long long rank = static_cast<long long>(e.rank());
    if (rank < 2) throw std::invalid_argument("bundle must have rank >= 2");
    return PBundle(e, rank - 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the two-family intersection numerics on P(E) -> P1"};
    app.require_subcommand(1);

    long long n = 3, from = 3, to = 3, d = 0, a = 0, b = 0, i = 0;
    std::string bundle_text, class_text, format = "text", out_path;
    SuiteOptions options;
    int exit_code = 0;

    auto add_report_options = [&](CLI::App* cmd) {
        cmd->add_option("--psi-max-n", options.psi_max_n,
                        "largest n for which the product enumeration runs");
        cmd->add_option("--isometry-bound", options.isometry_bound,
                        "entry bound for the isometry search");
        cmd->add_option("--format", format, "text|structured")
            ->check(CLI::IsMember({"text", "structured"}));
        cmd->add_option("--out", out_path, "write the report to this path instead of stdout");
    };

    auto* verify = app.add_subcommand("verify", "run the claim suite for one n");
    verify->add_option("--n", n, "fiber dimension (>= 3)")->required();
    add_report_options(verify);
    verify->callback([&] {
        auto report = run_suite(n, options);
        emit(render({report}, options, format, false), out_path);
        exit_code = report.all_passed() ? 0 : 1;
    });

    auto* verify_range = app.add_subcommand("verify-range", "run the claim suite for a range of n");
    verify_range->add_option("--from", from, "first n")->required();
    verify_range->add_option("--to", to, "last n")->required();
    add_report_options(verify_range);
    verify_range->callback([&] {
        auto reports = run_range(from, to, options);
        emit(render(reports, options, format, true), out_path);
        exit_code = 0;
        for (const auto& r : reports)
            if (!r.all_passed()) exit_code = 1;
    });

    auto* h0 = app.add_subcommand("h0", "h^0 of a split bundle on P1");
    h0->add_option("bundle", bundle_text, "e.g. \"O(-1)+O^2+O(1)\"")->required();
    h0->callback([&] { std::cout << h0_bundle(parse_bundle(bundle_text)).str() << "\n"; });

    auto* sympow = app.add_subcommand("sympow", "symmetric power of a split bundle");
    sympow->add_option("bundle", bundle_text)->required();
    sympow->add_option("d", d, "power (>= 0)")->required();
    sympow->callback(
        [&] { std::cout << to_string(sym_pow(parse_bundle(bundle_text), d)) << "\n"; });

    auto* push = app.add_subcommand("pushforward", "pushforward of O(a t + b f) from P(E)");
    push->add_option("bundle", bundle_text)->required();
    push->add_option("a", a)->required();
    push->add_option("b", b)->required();
    push->callback([&] {
        std::cout << to_string(pushforward(bundle_space(parse_bundle(bundle_text)), {a, b}))
                  << "\n";
    });

    auto* coh = app.add_subcommand("cohomology", "h^i of O(a t + b f) on P(E)");
    coh->add_option("bundle", bundle_text)->required();
    coh->add_option("a", a)->required();
    coh->add_option("b", b)->required();
    coh->add_option("i", i)->required();
    coh->callback([&] {
        std::cout << cohomology_pbundle(bundle_space(parse_bundle(bundle_text)), {a, b}, i).str()
                  << "\n";
    });

    auto* mult = app.add_subcommand("multiplicity", "filtration table and multiplicity along C");
    mult->add_option("--n", n)->required();
    mult->callback([&] {
        const FiltrationTable table = build_filtration(n);
        size_t wp = 1, wrank = 9, wh0 = 10;
        for (long long p = 0; p <= n + 2; ++p) {
            wp = std::max(wp, std::to_string(p).size());
            wrank = std::max(wrank, table.g[p].rank().str().size());
            wh0 = std::max(wh0, table.h0_twisted[p].str().size());
        }
        auto pad = [](const std::string& s, size_t w) {
            return s + std::string(w - s.size(), ' ');
        };
        std::cout << pad("p", wp + 2) << pad("rank(G^p)", wrank + 2) << "h0(G^p(2))\n";
        for (long long p = 0; p <= n + 2; ++p)
            std::cout << pad(std::to_string(p), wp + 2) << pad(table.g[p].rank().str(), wrank + 2)
                      << table.h0_twisted[p].str() << "\n";
        std::cout << "generic multiplicity along C: " << generic_multiplicity_along_C(table)
                  << "\n";
        std::cout << "dim V = " << dim_V(table).str() << "\n";
    });

    auto* mod = app.add_subcommand("moduli", "dimension counts for the two families");
    mod->add_option("--n", n)->required();
    mod->callback([&] {
        const ModuliReport r = moduli_report(n);
        std::cout << "h0(antiK) product space:     " << r.h0_antik_p1.str() << "\n"
                  << "h0(antiK) unbalanced space:  " << r.h0_antik_p2.str() << "\n"
                  << "dim Aut product space:       " << r.aut_p1.str() << "\n"
                  << "dim Aut unbalanced space:    " << r.aut_p2.str() << "\n"
                  << "dim M1:                      " << r.dim_m1.str() << "\n"
                  << "dim M2 (lower bound):        " << r.dim_m2_lower.str() << "\n"
                  << "gap strict:                  " << (r.gap_strict ? "true" : "false") << "\n";
    });

    auto* sections = app.add_subcommand("sections", "monomial basis of O(a t + b f) sections");
    sections->add_option("--n", n)->required();
    sections->add_option("--class", class_text, "a,b or (a,b)")->required();
    sections->callback([&] {
        std::string cls = class_text;
        if (cls.size() >= 2 && cls.front() == '(' && cls.back() == ')')
            cls = cls.substr(1, cls.size() - 2);
        const auto comma = cls.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--class expects \"a,b\" or \"(a,b)\"");
        const long long ca = std::stoll(cls.substr(0, comma));
        const long long cb = std::stoll(cls.substr(comma + 1));
        const SectionBasis basis = monomial_basis(n, ca, cb);
        std::cout << "dim = " << basis.elements.size() << "\n";
        for (const auto& s : basis.elements) std::cout << to_string(s) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
