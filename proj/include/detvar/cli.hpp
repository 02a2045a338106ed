#ifndef DETVAR_CLI_HPP
#define DETVAR_CLI_HPP

/**
 * Command-line front end.  Subcommands: psu, betti, count, compare, verify.
 * Exit codes: 0 success, 1 verification failure (verify only), 2 usage
 * error, 3 solver underdetermined/inconsistent.
 */

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "detvar/det_variety.hpp"
#include "detvar/output.hpp"
#include "detvar/point_count.hpp"
#include "detvar/spaces.hpp"
#include "detvar/verify.hpp"

namespace detvar {

namespace detail {

inline void emit(const OutputRecord& record, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << to_json_string(record) << "\n";
    else if (format == "csv")
        out << to_csv(record);
    else
        out << to_table(record);
}

inline OutputRecord psu_record(int n, const std::string& convention) {
    const Polynomial p = psu_poincare(n);
    OutputRecord r = record_for_polynomial(n, "psu", p);
    r.diagnostics.push_back("degree: " + std::to_string(p.degree()));
    r.diagnostics.push_back(std::string("palindromic: ") +
                            (is_palindromic(p) ? "true" : "false"));
    if (convention != "nonzero")
        r.diagnostics.push_back(
            std::string("unimodal (all coefficients): ") +
            (is_unimodal(p, UnimodalConvention::AllCoefficients) ? "true" : "false"));
    if (convention != "all")
        r.diagnostics.push_back(
            std::string("unimodal (nonzero coefficients): ") +
            (is_unimodal(p, UnimodalConvention::NonzeroCoefficients) ? "true" : "false"));
    return r;
}

inline OutputRecord betti_record(int n, const std::string& mode) {
    if (mode == "corollary") {
        const CorollaryComponents c = corollary_components(n);
        OutputRecord r = record_for_polynomial(n, "corollary", c.a + c.b_tilde);
        r.diagnostics.push_back("A(t) = " + c.a.str());
        r.diagnostics.push_back("B(t) = " + c.b.str());
        r.diagnostics.push_back("B~(t) = " + c.b_tilde.str());
        return r;
    }
    if (mode == "theorem") {
        const HomologyTable table = theorem_homology_table(n);
        OutputRecord r = record_for_polynomial(n, "theorem", table.free_rank_polynomial());
        // Descriptors carry more than the free ranks from n^2-1 up.
        for (const auto& [deg, descriptor] : table.entries)
            if (deg >= n * n - 1)
                r.diagnostics.push_back("H_" + std::to_string(deg) + "(Y) = " +
                                        descriptor.str());
        for (const auto& d : table.diagnostics) r.diagnostics.push_back(d);
        return r;
    }
    return record_for_polynomial(n, "solved", solved_poincare(n));
}

inline OutputRecord count_record(int n) {
    OutputRecord r = record_for_polynomial(n, "count", projective_det_count(n), 'q');
    r.diagnostics.push_back("gl_count = " + gl_count(n).str('q'));
    r.diagnostics.push_back("singular_locus_count = " + singular_locus_count(n).str('q'));
    r.diagnostics.push_back("euler characteristic at q=1: " + euler_via_count(n).str());
    return r;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Betti tables of the projectivized determinantal hypersurface "
                 "{det = 0} by three independent routes"};
    app.name("detvar");
    app.require_subcommand(1);

    std::string format = "table";
    std::string convention;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--convention", convention,
                   "Unimodality convention to report (default: both)")
        ->check(CLI::IsMember({"all", "nonzero"}));
    app.fallthrough();

    int n = 2;
    int max_n = 8;
    std::string mode = "solved";
    const auto n_range = CLI::Range(2, 1000);

    CLI::App* psu = app.add_subcommand("psu", "PSU_n Poincare polynomial with analysis");
    psu->add_option("--n", n, "matrix size")->required()->check(n_range);

    CLI::App* betti = app.add_subcommand("betti", "Betti polynomial / homology table of Y");
    betti->add_option("--n", n, "matrix size")->required()->check(n_range);
    betti->add_option("--mode", mode, "computation mode")
        ->check(CLI::IsMember({"solved", "corollary", "theorem"}))
        ->capture_default_str();

    CLI::App* count = app.add_subcommand("count", "Counting polynomials over F_q and chi");
    count->add_option("--n", n, "matrix size")->required()->check(n_range);

    CLI::App* compare = app.add_subcommand("compare", "Degreewise comparison of all modes");
    compare->add_option("--n", n, "matrix size")->required()->check(n_range);

    CLI::App* verify = app.add_subcommand("verify", "Run the acceptance suite up to N");
    verify->add_option("--max-n", max_n, "cap on n")->check(n_range)->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (psu->parsed()) {
            detail::emit(detail::psu_record(n, convention), format, out);
        } else if (betti->parsed()) {
            detail::emit(detail::betti_record(n, mode), format, out);
        } else if (count->parsed()) {
            detail::emit(detail::count_record(n), format, out);
        } else if (compare->parsed()) {
            const ComparisonReport report = compare_modes(n);
            if (format == "table")
                out << comparison_table(report);
            else
                detail::emit(record_for_comparison(report), format, out);
        } else if (verify->parsed()) {
            const std::vector<CriterionResult> results = run_acceptance_suite(max_n);
            print_acceptance_results(results, out);
            return all_criteria_passed(results) ? 0 : 1;
        }
    } catch (const Underdetermined& e) {
        err << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const Inconsistent& e) {
        err << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace detvar

#endif  // DETVAR_CLI_HPP
