#ifndef DETVAR_EXACT_SEQUENCE_HPP
#define DETVAR_EXACT_SEQUENCE_HPP

/**
 * A solver for bounded exact sequences of free-rank terms.
 *
 * A sequence 0 -> t_1 -> ... -> t_{m-2} -> 0 of free abelian groups is exact
 * iff there are arrow ranks w_i (the rank of the map t_i -> t_{i+1}) with
 *
 *     rank(t_i) = w_{i-1} + w_i        for every position i,
 *
 * where the virtual boundary arrows have rank 0.  Given known terms, unknown
 * terms, and asserted arrow ranks, the solver determines every unknown rank
 * or reports the failure mode honestly: Underdetermined when several
 * nonnegative assignments satisfy all constraints (never a silent default),
 * Inconsistent when none does.
 *
 * Because each equation couples only adjacent arrows, the constraint system
 * decomposes along the sequence into independent one-parameter families, so
 * interval propagation is a complete decision procedure here, not a
 * heuristic.
 */

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "detvar/graded.hpp"
#include "detvar/polynomial.hpp"
#include "detvar/spaces.hpp"

namespace detvar {

struct Underdetermined : std::runtime_error {
    Underdetermined(std::string what, std::vector<std::string> unknowns, int parameters)
        : std::runtime_error(std::move(what)),
          free_unknowns(std::move(unknowns)),
          free_parameter_count(parameters) {}

    std::vector<std::string> free_unknowns;  ///< unknown ids left undetermined
    int free_parameter_count;                ///< independent degrees of freedom
};

struct Inconsistent : std::runtime_error {
    explicit Inconsistent(const std::string& what) : std::runtime_error(what) {}
};

/// Known(rank) or Unknown(id); ids must be unique within one sequence.
class SequenceTerm {
  public:
    static SequenceTerm known(Int rank) {
        if (rank < 0) throw std::invalid_argument("SequenceTerm: negative rank");
        SequenceTerm t;
        t.rank_ = std::move(rank);
        return t;
    }

    static SequenceTerm unknown(std::string id) {
        if (id.empty()) throw std::invalid_argument("SequenceTerm: empty unknown id");
        SequenceTerm t;
        t.id_ = std::move(id);
        return t;
    }

    bool is_known() const { return id_.empty(); }
    const Int& rank() const { return rank_; }
    const std::string& id() const { return id_; }

  private:
    SequenceTerm() = default;
    Int rank_ = 0;
    std::string id_;
};

/// Asserted rank of the arrow between positions `arrow` and `arrow + 1`.
struct MapHypothesis {
    int arrow;
    Int rank;
};

/**
 * A bounded exact sequence with known/unknown terms and arrow-rank
 * hypotheses.  The first and last terms must be Known(0).
 */
struct ExactSequenceSpec {
    std::vector<SequenceTerm> terms;
    std::vector<MapHypothesis> hypotheses;
    std::string provenance;  ///< e.g. which (n, q) produced this sequence
};

/**
 * A complete solution: every unknown resolved and every arrow rank pinned.
 * Satisfies rank(t_i) = map_ranks[i-1] + map_ranks[i] with zero boundary
 * arrows, all values nonnegative.
 */
struct SolvedSequence {
    std::map<std::string, Int> assignment;
    std::vector<Int> map_ranks;  ///< size terms.size() - 1
};

namespace detail {

// base + coef * param, with coef in {-1, 0, +1}; param < 0 means constant.
struct LinExpr {
    Int base;
    int coef = 0;
    int param = -1;
};

struct ParamInterval {
    Int lo = 0;
    std::optional<Int> hi;
    bool pinned() const { return hi && lo == *hi; }
    bool empty() const { return hi && lo > *hi; }
};

}  // namespace detail

inline void validate_sequence_spec(const ExactSequenceSpec& spec) {
    const auto m = spec.terms.size();
    if (m < 3) throw std::invalid_argument("exact sequence needs at least 3 terms");
    if (!spec.terms.front().is_known() || spec.terms.front().rank() != 0 ||
        !spec.terms.back().is_known() || spec.terms.back().rank() != 0)
        throw std::invalid_argument("exact sequence must start and end with Known(0)");
    std::map<std::string, int> seen;
    for (const auto& t : spec.terms)
        if (!t.is_known() && ++seen[t.id()] > 1)
            throw std::invalid_argument("duplicate unknown id '" + t.id() + "' in sequence");
    for (const auto& h : spec.hypotheses) {
        if (h.arrow < 0 || h.arrow + 1 >= static_cast<int>(m))
            throw std::invalid_argument("hypothesis arrow index out of range");
        if (h.rank < 0) throw std::invalid_argument("hypothesis rank must be nonnegative");
    }
}

inline SolvedSequence solve_exact_sequence(const ExactSequenceSpec& spec) {
    using detail::LinExpr;
    using detail::ParamInterval;

    validate_sequence_spec(spec);
    const int m = static_cast<int>(spec.terms.size());

    std::vector<ParamInterval> bounds;
    auto inconsistent = [&](const std::string& why) -> Inconsistent {
        std::string msg = "inconsistent exact sequence: " + why;
        if (!spec.provenance.empty()) msg += " [" + spec.provenance + "]";
        return Inconsistent(msg);
    };

    auto require_nonnegative = [&](const LinExpr& e) {
        if (e.coef == 0) {
            if (e.base < 0) throw inconsistent("an arrow rank would be negative");
        } else if (e.coef > 0) {
            Int lo = -e.base;
            if (lo > bounds[e.param].lo) bounds[e.param].lo = lo;
        } else {
            Int hi = e.base;
            if (!bounds[e.param].hi || hi < *bounds[e.param].hi) bounds[e.param].hi = hi;
        }
    };

    auto require_equal = [&](const LinExpr& e, const Int& value, const std::string& what) {
        if (e.coef == 0) {
            if (e.base != value) throw inconsistent(what);
            return;
        }
        Int x = e.coef > 0 ? value - e.base : e.base - value;
        if (x > bounds[e.param].lo) bounds[e.param].lo = x;
        if (!bounds[e.param].hi || x < *bounds[e.param].hi) bounds[e.param].hi = x;
    };

    // Left-to-right sweep expressing every arrow rank as an affine function
    // of at most one parameter.  Arrow i sits between positions i and i+1;
    // index m-1 is the virtual closing arrow and must come out zero.
    std::vector<LinExpr> arrows(m);
    LinExpr prev{0, 0, -1};
    for (int i = 0; i < m; ++i) {
        const SequenceTerm& t = spec.terms[i];
        if (t.is_known()) {
            arrows[i] = LinExpr{t.rank() - prev.base, -prev.coef, prev.param};
            require_nonnegative(arrows[i]);
        } else {
            arrows[i] = LinExpr{0, 1, static_cast<int>(bounds.size())};
            bounds.push_back(ParamInterval{});  // fresh parameter, >= 0
        }
        prev = arrows[i];
    }
    require_equal(arrows[m - 1], 0, "sequence does not close with a zero arrow");
    for (const auto& h : spec.hypotheses)
        require_equal(arrows[h.arrow], h.rank,
                      "arrow " + std::to_string(h.arrow) + " cannot have the asserted rank");

    for (const auto& b : bounds)
        if (b.empty()) throw inconsistent("no nonnegative assignment satisfies the constraints");

    // Any interval still containing two values is a genuine degree of freedom.
    std::vector<bool> param_free(bounds.size());
    int free_count = 0;
    for (std::size_t k = 0; k < bounds.size(); ++k) {
        param_free[k] = !bounds[k].pinned();
        if (param_free[k]) ++free_count;
    }
    if (free_count > 0) {
        std::vector<std::string> affected;
        for (int i = 1; i < m; ++i) {  // ends are known, so unknowns have i >= 1
            if (spec.terms[i].is_known()) continue;
            const LinExpr& before = arrows[i - 1];
            const bool depends = (before.coef != 0 && param_free[before.param]) ||
                                 (arrows[i].coef != 0 && param_free[arrows[i].param]);
            if (depends) affected.push_back(spec.terms[i].id());
        }
        std::ostringstream msg;
        msg << "underdetermined exact sequence: " << free_count << " free parameter(s)";
        if (!affected.empty()) {
            msg << " affecting";
            for (const auto& id : affected) msg << " " << id;
        }
        if (!spec.provenance.empty()) msg << " [" << spec.provenance << "]";
        throw Underdetermined(msg.str(), std::move(affected), free_count);
    }

    auto value_of = [&](const LinExpr& e) -> Int {
        return e.coef == 0 ? e.base : e.base + e.coef * bounds[e.param].lo;
    };

    SolvedSequence solved;
    solved.map_ranks.reserve(m - 1);
    for (int i = 0; i + 1 < m; ++i) solved.map_ranks.push_back(value_of(arrows[i]));
    for (int i = 1; i < m; ++i) {
        if (spec.terms[i].is_known()) continue;
        solved.assignment.emplace(spec.terms[i].id(),
                                  value_of(arrows[i - 1]) + value_of(arrows[i]));
    }
    return solved;
}

/**
 * The localization sequences for the projectivized determinantal
 * hypersurface Y inside X = P^{n^2-1} with open complement U = PGL_n: for
 * each q = 1..n^2-1,
 *
 *   0 -> BM_{2q+1}(U) -> H_{2q}(Y) -> H_{2q}(X) -> BM_{2q}(U) -> H_{2q-1}(Y) -> 0.
 *
 * X and U terms come from the catalog; Y terms are global unknowns named
 * "Y<degree>", except that degrees above 2(n^2-2) = 2 dim Y are forced to
 * zero by the dimension bound.  For q <= n^2-3 the restriction map
 * H_{2q}(X) -> BM_{2q}(U) is asserted to be zero (the Chow groups of U
 * vanish in exactly that range); the two boundary sequences carry no
 * hypothesis and must close on their own.  Degree 0 never appears here and
 * is handled separately by solve_determinantal_ranks.
 */
inline std::vector<ExactSequenceSpec> build_localization_system(int n) {
    if (n < 2) throw std::invalid_argument("build_localization_system: n must be >= 2");
    const int ambient = n * n - 1;
    const int top_y_degree = 2 * (n * n - 2);
    const Polynomial x_poincare = projective_poincare(ambient);
    const GradedRanks u_ranks = pgl_bm_ranks(n);

    auto y_term = [&](int k) {
        if (k > top_y_degree) return SequenceTerm::known(0);
        return SequenceTerm::unknown("Y" + std::to_string(k));
    };

    std::vector<ExactSequenceSpec> specs;
    specs.reserve(ambient);
    for (int q = 1; q <= ambient; ++q) {
        ExactSequenceSpec spec;
        spec.terms = {
            SequenceTerm::known(0),
            SequenceTerm::known(u_ranks.rank(2 * q + 1)),
            y_term(2 * q),
            SequenceTerm::known(x_poincare.coefficient(2 * q)),
            SequenceTerm::known(u_ranks.rank(2 * q)),
            y_term(2 * q - 1),
            SequenceTerm::known(0),
        };
        if (q <= n * n - 3) spec.hypotheses.push_back({3, 0});  // X -> U restriction is zero
        spec.provenance = "n=" + std::to_string(n) + ", q=" + std::to_string(q);
        specs.push_back(std::move(spec));
    }
    return specs;
}

/**
 * Solves the whole localization system and assembles the Betti numbers of Y
 * for degrees 0..2(n^2-2).  Unknowns shared across sequences must agree;
 * any solver failure propagates, it is never papered over with a guess.
 */
inline GradedRanks solve_determinantal_ranks(int n) {
    if (n < 2) throw std::invalid_argument("solve_determinantal_ranks: n must be >= 2");
    std::map<std::string, Int> merged;
    for (const auto& spec : build_localization_system(n)) {
        const SolvedSequence solved = solve_exact_sequence(spec);
        for (const auto& [id, value] : solved.assignment) {
            auto [it, inserted] = merged.emplace(id, value);
            if (!inserted && it->second != value)
                throw Inconsistent("cross-sequence disagreement at " + id + ": " +
                                   it->second.str() + " vs " + value.str());
        }
    }
    GradedRanks betti(2 * (n * n - 2));
    betti.set(0, 1);  // Y is path connected
    for (const auto& [id, value] : merged) betti.set(std::stoi(id.substr(1)), value);
    return betti;
}

}  // namespace detvar

#endif  // DETVAR_EXACT_SEQUENCE_HPP
