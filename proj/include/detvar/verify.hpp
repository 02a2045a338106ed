#ifndef DETVAR_VERIFY_HPP
#define DETVAR_VERIFY_HPP

/**
 * The one-shot verification suite: ten pinned criteria covering the quadric
 * oracle, Euler cross-checks, PSU structure, the lower-degree pattern, the
 * shape of the solved polynomial, point counting, the literal corollary
 * with its expected discrepancy set, unimodality, solver soundness, and the
 * Kunneth product rule.  Every expected value is frozen here; nothing is
 * computed from the implementation under test except the values being
 * checked.  `max_n` caps each criterion's n-range at min(stated bound, N);
 * fixed-n checks run iff their n <= N; the two n-independent criteria
 * (solver soundness, Kunneth) always run in full.
 */

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "detvar/det_variety.hpp"
#include "detvar/exact_sequence.hpp"
#include "detvar/point_count.hpp"
#include "detvar/polynomial.hpp"
#include "detvar/spaces.hpp"

namespace detvar {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

class CriterionCheck {
  public:
    void fail(const std::string& why) {
        ok_ = false;
        if (!message_.empty()) message_ += "; ";
        message_ += why;
    }

    void expect(bool condition, const std::string& why) {
        if (!condition) fail(why);
    }

    bool ok() const { return ok_; }
    const std::string& message() const { return message_; }

  private:
    bool ok_ = true;
    std::string message_;
};

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace detail

inline std::vector<CriterionResult> run_acceptance_suite(int max_n) {
    using detail::CriterionCheck;
    std::vector<CriterionResult> results;
    auto record = [&](int index, const std::string& name, const CriterionCheck& check,
                      const std::string& pass_detail) {
        results.push_back({index, name, check.ok(), check.ok() ? pass_detail : check.message()});
    };
    auto capped = [&](int stated) { return std::min(stated, max_n); };

    {  // 1. Quadric oracle, exact, under one second.
        CriterionCheck check;
        std::ostringstream detail;
        if (max_n >= 2) {
            const auto start = std::chrono::steady_clock::now();
            const Polynomial solved = solved_poincare(2);
            const double ms = detail::elapsed_ms(start);
            check.expect(solved == Polynomial::from_coefficients({1, 0, 2, 0, 1}),
                         "solved_poincare(2) = " + solved.str() + ", expected 1 + 2t^2 + t^4");
            check.expect(ms < 1000.0, "took " + std::to_string(ms) + " ms, limit 1000");
            detail << "solved_poincare(2) == 1 + 2t^2 + t^4 (" << ms << " ms)";
        } else {
            detail << "skipped (needs n >= 2)";
        }
        record(1, "quadric oracle", check, detail.str());
    }

    {  // 2. Euler cross-check against point counting, n in 2..8.
        CriterionCheck check;
        const auto start = std::chrono::steady_clock::now();
        for (int n = 2; n <= capped(8); ++n) {
            const Int via_solver = solved_poincare(n).evaluate_at_integer(-1);
            const Int via_count = euler_via_count(n);
            if (via_solver != via_count || via_count != n * n) {
                std::ostringstream why;
                why << "n=" << n << ": solver gives " << via_solver << ", count gives "
                    << via_count << ", expected " << n * n;
                check.fail(why.str());
            }
        }
        const double ms = detail::elapsed_ms(start);
        check.expect(ms < 10000.0, "took " + std::to_string(ms) + " ms, limit 10000");
        std::ostringstream detail;
        detail << "chi(Y) = n^2 via solver and count for n in 2.." << capped(8) << " (" << ms
               << " ms)";
        record(2, "euler cross-check", check, detail.str());
    }

    {  // 3. PSU polynomial structure, n in 2..20.
        CriterionCheck check;
        for (int n = 2; n <= capped(20); ++n) {
            const Polynomial p = psu_poincare(n);
            if (!is_palindromic(p)) check.fail("psu_poincare(" + std::to_string(n) + ") not palindromic");
            if (p.evaluate(Rational(1)) != Rational(Int(1) << (n - 1)))
                check.fail("psu_poincare(" + std::to_string(n) + ") coefficient sum != 2^(n-1)");
            if (p.degree() != n * n - 1)
                check.fail("psu_poincare(" + std::to_string(n) + ") degree != n^2-1");
        }
        record(3, "psu structure", check,
               "palindromic, sum 2^(n-1), degree n^2-1 for n in 2.." + std::to_string(capped(20)));
    }

    {  // 4. Lower-degree pattern of the solved polynomial.
        CriterionCheck check;
        for (int n = 2; n <= capped(8); ++n) {
            const Polynomial p = solved_poincare(n);
            for (int k = 0; k <= n * n - 3; ++k) {
                const Int expected = (k % 2 == 0) ? 1 : 0;
                if (p.coefficient(k) != expected) {
                    std::ostringstream why;
                    why << "n=" << n << " k=" << k << ": coefficient " << p.coefficient(k)
                        << ", expected " << expected;
                    check.fail(why.str());
                }
            }
        }
        record(4, "lower-degree pattern", check,
               "coefficients 1 (even) / 0 (odd) up to n^2-3 for n in 2.." +
                   std::to_string(capped(8)));
    }

    {  // 5. Shape: degree, constant and leading coefficients.
        CriterionCheck check;
        for (int n = 2; n <= capped(8); ++n) {
            const Polynomial p = solved_poincare(n);
            if (p.degree() != 2 * (n * n - 2))
                check.fail("n=" + std::to_string(n) + ": degree != 2(n^2-2)");
            if (p.coefficient(0) != 1) check.fail("n=" + std::to_string(n) + ": constant != 1");
            if (p.coefficient(p.degree()) != 1)
                check.fail("n=" + std::to_string(n) + ": leading coefficient != 1");
        }
        record(5, "shape", check,
               "degree 2(n^2-2), constant 1, leading 1 for n in 2.." + std::to_string(capped(8)));
    }

    {  // 6. Point counting.  NOTE: the nonnegativity clause is checked as
       //    stated but is false from n = 5 on (first negative coefficient at
       //    degree 17); it is reported here, not patched over.
        CriterionCheck check;
        if (max_n >= 2)
            check.expect(projective_det_count(2) == Polynomial::from_coefficients({1, 2, 1}),
                         "projective_det_count(2) != q^2 + 2q + 1");
        for (int n = 2; n <= capped(8); ++n) {
            try {
                const Polynomial c = projective_det_count(n);
                for (const auto& [deg, coeff] : c.terms()) {
                    if (coeff < 0) {
                        std::ostringstream why;
                        why << "n=" << n << ": negative coefficient " << coeff << " at degree "
                            << deg;
                        check.fail(why.str());
                        break;
                    }
                }
            } catch (const NotDivisible& e) {
                check.fail("n=" + std::to_string(n) + ": " + e.what());
            }
        }
        record(6, "point counting", check,
               "projective_det_count(2) == q^2+2q+1; division exact with nonnegative "
               "coefficients for n in 2.." +
                   std::to_string(capped(8)));
    }

    {  // 7. Literal corollary at n=2 and the pinned discrepancy set.
        CriterionCheck check;
        std::ostringstream detail;
        if (max_n >= 2) {
            const CorollaryComponents c = corollary_components(2);
            check.expect(c.a == Polynomial::from_terms({{0, 1}, {2, 1}}), "A(2) != 1 + t^2");
            check.expect(c.b == Polynomial::from_terms({{3, 1}, {6, 1}}), "B(2) != t^3 + t^6");
            check.expect(c.b_tilde == Polynomial::from_terms({{3, 2}, {6, 1}}),
                         "B~(2) != 2t^3 + t^6");
            check.expect(corollary_poincare(2) ==
                             Polynomial::from_terms({{0, 1}, {2, 1}, {3, 2}, {6, 1}}),
                         "corollary_poincare(2) != 1 + t^2 + 2t^3 + t^6");
            std::set<int> degrees;
            for (const auto& d : compare_modes(2).discrepancies) degrees.insert(d.degree);
            if (degrees != std::set<int>{2, 3, 4, 6}) {
                std::ostringstream why;
                why << "discrepant degrees {";
                for (int k : degrees) why << " " << k;
                why << " }, expected { 2 3 4 6 }";
                check.fail(why.str());
            }
            detail << "components match; exactly 4 discrepant degrees {2,3,4,6}";
        } else {
            detail << "skipped (needs n >= 2)";
        }
        record(7, "literal corollary", check, detail.str());
    }

    {  // 8. Unimodality under both conventions.
        CriterionCheck check;
        if (max_n >= 4)
            check.expect(is_unimodal(psu_poincare(4), UnimodalConvention::NonzeroCoefficients),
                         "psu_poincare(4) should be unimodal over nonzero coefficients");
        if (max_n >= 6)
            check.expect(!is_unimodal(psu_poincare(6), UnimodalConvention::NonzeroCoefficients),
                         "psu_poincare(6) should fail unimodality over nonzero coefficients");
        for (int n = 2; n <= capped(8); ++n)
            check.expect(!is_unimodal(psu_poincare(n), UnimodalConvention::AllCoefficients),
                         "psu_poincare(" + std::to_string(n) +
                             ") should fail unimodality over all coefficients");
        std::ostringstream detail;
        detail << "all-coefficients convention fails for n in 2.." << capped(8);
        if (max_n >= 4) detail << "; psu(4) unimodal over nonzero coefficients";
        if (max_n >= 6) detail << "; psu(6) not unimodal over nonzero coefficients";
        record(8, "unimodality claims", check, detail.str());
    }

    {  // 9. Solver soundness on 200 randomized bounded exact sequences.
        CriterionCheck check;
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> len_dist(4, 10);
        std::uniform_int_distribution<int> rank_dist(0, 4);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int iter = 0; iter < 200 && check.ok(); ++iter) {
            const int m = len_dist(rng);
            std::vector<Int> arrows(m - 1, 0);
            for (int i = 1; i + 1 < m - 1; ++i) arrows[i] = rank_dist(rng);
            std::vector<Int> ranks(m, 0);
            for (int i = 1; i + 1 < m; ++i) ranks[i] = arrows[i - 1] + arrows[i];

            ExactSequenceSpec spec;
            spec.terms.push_back(SequenceTerm::known(0));
            std::vector<int> erased;
            for (int i = 1; i + 1 < m; ++i) {
                if (coin(rng)) {
                    spec.terms.push_back(SequenceTerm::unknown("u" + std::to_string(i)));
                    erased.push_back(i);
                } else {
                    spec.terms.push_back(SequenceTerm::known(ranks[i]));
                }
            }
            spec.terms.push_back(SequenceTerm::known(0));
            for (int i = 0; i + 1 < m; ++i) spec.hypotheses.push_back({i, arrows[i]});

            try {
                const SolvedSequence s = solve_exact_sequence(spec);
                Int alternating = 0;
                for (int i = 0; i < m; ++i) {
                    const Int r = spec.terms[i].is_known() ? spec.terms[i].rank()
                                                           : s.assignment.at(spec.terms[i].id());
                    alternating += (i % 2 == 0) ? r : -r;
                }
                if (alternating != 0) check.fail("alternating rank sum nonzero");
                for (int i : erased)
                    if (s.assignment.at("u" + std::to_string(i)) != ranks[i]) {
                        check.fail("erase-and-recover mismatch at iteration " +
                                   std::to_string(iter));
                        break;
                    }
            } catch (const std::exception& e) {
                check.fail("solver failed on a solvable sequence: " + std::string(e.what()));
            }
        }
        // An unconstrained interior arrow must surface as Underdetermined.
        try {
            ExactSequenceSpec spec;
            spec.terms = {SequenceTerm::known(0), SequenceTerm::unknown("a"),
                          SequenceTerm::known(1), SequenceTerm::known(1),
                          SequenceTerm::unknown("b"), SequenceTerm::known(0)};
            solve_exact_sequence(spec);
            check.fail("unconstrained sequence solved silently");
        } catch (const Underdetermined&) {
            // expected
        }
        record(9, "solver soundness", check,
               "200 randomized sequences: alternating sum 0, erase-and-recover exact, "
               "underdetermined surfaced");
    }

    {  // 10. Kunneth: products of projective spaces against the cell count.
        CriterionCheck check;
        for (int a = 0; a <= 5; ++a) {
            for (int b = 0; b <= 5; ++b) {
                const Polynomial product = projective_poincare(a) * projective_poincare(b);
                Polynomial expected;
                for (int k = 0; k <= a + b; ++k) {
                    Int cells = 0;
                    for (int i = 0; i <= a; ++i)
                        if (k - i >= 0 && k - i <= b) ++cells;
                    expected = expected + Polynomial::monomial(2 * k, cells);
                }
                if (product != expected) {
                    check.fail("P^" + std::to_string(a) + " x P^" + std::to_string(b) +
                               " mismatch");
                }
            }
        }
        record(10, "kunneth", check, "P^a x P^b matches the product cell count for a,b <= 5");
    }

    return results;
}

inline bool all_criteria_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

inline void print_acceptance_results(const std::vector<CriterionResult>& results,
                                     std::ostream& out) {
    int passed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.index << "  " << r.name << ": "
            << r.detail << "\n";
        if (r.passed) ++passed;
    }
    out << passed << "/" << results.size() << " criteria passed\n";
}

}  // namespace detvar

#endif  // DETVAR_VERIFY_HPP
