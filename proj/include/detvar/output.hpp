#ifndef DETVAR_OUTPUT_HPP
#define DETVAR_OUTPUT_HPP

/**
 * Serialization of results as JSON, CSV, and plain-text tables.
 * Coefficients always serialize as decimal strings, never native numbers,
 * so no consumer can lose precision.  JSON output is stable: re-parsing
 * and re-dumping an emitted record is byte-identical.
 */

#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "detvar/det_variety.hpp"
#include "detvar/polynomial.hpp"

namespace detvar {

/**
 * One result record: a polynomial as sorted (degree, coefficient-string)
 * pairs plus free-form diagnostics and any degreewise discrepancies.
 */
struct OutputRecord {
    int n = 0;
    std::string mode;
    std::vector<std::pair<int, std::string>> poincare;
    std::vector<std::string> diagnostics;
    std::vector<Discrepancy> discrepancies;
    char variable = 't';  ///< display-only; not serialized
};

inline OutputRecord record_for_polynomial(int n, std::string mode, const Polynomial& p,
                                          char variable = 't') {
    OutputRecord r;
    r.n = n;
    r.mode = std::move(mode);
    r.variable = variable;
    for (const auto& [deg, c] : p.terms()) r.poincare.emplace_back(deg, c.str());
    return r;
}

inline OutputRecord record_for_comparison(const ComparisonReport& report) {
    Polynomial solved;
    for (const auto& row : report.rows)
        solved = solved + Polynomial::monomial(row.degree, row.solved_rank);
    OutputRecord r = record_for_polynomial(report.n, "compare", solved);
    std::ostringstream euler;
    euler << "euler characteristic: solved = " << report.solved_euler
          << ", point count = " << report.count_euler << ", n^2 = "
          << report.n * report.n << (report.euler_match ? " (match)" : " (MISMATCH)");
    r.diagnostics.push_back(euler.str());
    if (report.oracle_available)
        r.diagnostics.push_back(std::string("quadric oracle ") +
                                (report.oracle_matches_solved ? "matches" : "DIFFERS FROM") +
                                " the solved polynomial at every degree");
    for (const auto& d : report.diagnostics) r.diagnostics.push_back(d);
    r.discrepancies = report.discrepancies;
    return r;
}

inline nlohmann::json to_json(const OutputRecord& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["mode"] = r.mode;
    j["poincare"] = nlohmann::json::array();
    for (const auto& [deg, c] : r.poincare)
        j["poincare"].push_back({{"degree", deg}, {"coeff", c}});
    j["diagnostics"] = r.diagnostics;
    j["discrepancies"] = nlohmann::json::array();
    for (const auto& d : r.discrepancies) {
        nlohmann::json values = nlohmann::json::object();
        for (const auto& [mode, value] : d.values) values[mode] = value;
        j["discrepancies"].push_back({{"degree", d.degree}, {"values", values}});
    }
    return j;
}

inline std::string to_json_string(const OutputRecord& r) { return to_json(r).dump(2); }

/// Exactly one header line `degree,coefficient`, then one row per term.
inline std::string to_csv(const OutputRecord& r) {
    std::ostringstream out;
    out << "degree,coefficient\n";
    for (const auto& [deg, c] : r.poincare) out << deg << "," << c << "\n";
    return out.str();
}

inline std::string to_table(const OutputRecord& r) {
    std::ostringstream out;
    out << "n = " << r.n << "  mode = " << r.mode << "\n";
    Polynomial p;
    for (const auto& [deg, c] : r.poincare) p = p + Polynomial::monomial(deg, Int(c));
    out << "polynomial: " << p.str(r.variable) << "\n";
    out << "degree  coefficient\n";
    for (const auto& [deg, c] : r.poincare)
        out << std::left << std::setw(8) << deg << c << "\n";
    if (!r.discrepancies.empty()) {
        out << "discrepancies:\n";
        for (const auto& d : r.discrepancies) {
            out << "  degree " << d.degree << ":";
            for (const auto& [mode, value] : d.values) out << " " << mode << "=" << value;
            out << "\n";
        }
    }
    if (!r.diagnostics.empty()) {
        out << "diagnostics:\n";
        for (const auto& line : r.diagnostics) out << "  - " << line << "\n";
    }
    return out.str();
}

/// Full multi-column rendering of a comparison report (table format only).
inline std::string comparison_table(const ComparisonReport& report) {
    std::ostringstream out;
    out << "comparison for n = " << report.n << "\n";
    out << std::left << std::setw(8) << "degree" << std::setw(9) << "theorem" << std::setw(11)
        << "corollary" << std::setw(8) << "solved";
    if (report.oracle_available) out << std::setw(8) << "oracle";
    out << "\n";
    for (const auto& row : report.rows) {
        out << std::left << std::setw(8) << row.degree << std::setw(9) << row.theorem_rank
            << std::setw(11) << row.corollary_coeff << std::setw(8) << row.solved_rank;
        if (row.oracle) out << std::setw(8) << *row.oracle;
        out << "\n";
    }
    const OutputRecord r = record_for_comparison(report);
    if (!r.discrepancies.empty()) {
        out << "discrepancies:\n";
        for (const auto& d : r.discrepancies) {
            out << "  degree " << d.degree << ":";
            for (const auto& [mode, value] : d.values) out << " " << mode << "=" << value;
            out << "\n";
        }
    }
    out << "diagnostics:\n";
    for (const auto& line : r.diagnostics) out << "  - " << line << "\n";
    return out.str();
}

}  // namespace detvar

#endif  // DETVAR_OUTPUT_HPP
