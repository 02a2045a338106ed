#ifndef DETVAR_GRADED_HPP
#define DETVAR_GRADED_HPP

/**
 * Shared data model for graded rank data and symbolic homology descriptors.
 * Ranks are free ranks only; torsion is carried as opaque symbols and never
 * resolved, and extensions are kept unresolved because rank is additive in
 * short exact sequences regardless of the extension class.
 */

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "detvar/polynomial.hpp"

namespace detvar {

/**
 * Degree -> nonnegative free rank with a declared support bound.
 * Invariant: no stored rank is zero; stored degrees lie in [0, max_degree].
 */
class GradedRanks {
  public:
    explicit GradedRanks(int max_degree) : max_degree_(max_degree) {
        if (max_degree < 0) throw std::invalid_argument("GradedRanks: negative support bound");
    }

    static GradedRanks from_polynomial(const Polynomial& p) {
        GradedRanks g(p.is_zero() ? 0 : p.degree());
        for (const auto& [deg, c] : p.terms()) {
            if (c < 0)
                throw NegativeCoefficient("GradedRanks: negative coefficient at degree " +
                                          std::to_string(deg));
            g.set(deg, c);
        }
        return g;
    }

    void set(int degree, Int rank) {
        if (degree < 0 || degree > max_degree_)
            throw std::out_of_range("GradedRanks: degree " + std::to_string(degree) +
                                    " outside [0, " + std::to_string(max_degree_) + "]");
        if (rank < 0) throw std::invalid_argument("GradedRanks: negative rank");
        if (rank == 0)
            ranks_.erase(degree);
        else
            ranks_[degree] = std::move(rank);
    }

    Int rank(int degree) const {
        auto it = ranks_.find(degree);
        return it == ranks_.end() ? Int(0) : it->second;
    }

    int max_degree() const { return max_degree_; }
    const std::map<int, Int>& ranks() const { return ranks_; }

    Int total_rank() const {
        Int sum = 0;
        for (const auto& [deg, r] : ranks_) sum += r;
        return sum;
    }

    bool operator==(const GradedRanks& other) const { return ranks_ == other.ranks_; }

  private:
    int max_degree_;
    std::map<int, Int> ranks_;
};

/// sum rank(k) t^k
inline Polynomial poincare_from_ranks(const GradedRanks& g) {
    Polynomial p;
    for (const auto& [deg, r] : g.ranks()) p = p + Polynomial::monomial(deg, r);
    return p;
}

/// Alternating rank sum; equals poincare_from_ranks(g) evaluated at -1.
inline Int euler_characteristic(const GradedRanks& g) {
    Int sum = 0;
    for (const auto& [deg, r] : g.ranks()) sum += (deg % 2 == 0) ? r : -r;
    return sum;
}

/// Opaque stand-in for the torsion subgroup of H_degree(PSU_n).
struct TorsionSymbol {
    int n;
    int degree;

    TorsionSymbol(int n_, int degree_) : n(n_), degree(degree_) {
        if (degree < 0 || degree > n * n - 1)
            throw std::out_of_range("TorsionSymbol: degree outside [0, n^2-1]");
    }

    std::string label() const {
        return "Tors H_" + std::to_string(degree) + "(PSU_" + std::to_string(n) + ")";
    }

    auto operator<=>(const TorsionSymbol&) const = default;
};

/**
 * Per-degree symbolic group descriptor: a free part, optional torsion
 * symbols, or an unresolved extension of Z by another descriptor.  The free
 * rank of an extension is quotient + sub, which is exact over Q.
 */
class GroupDescriptor {
  public:
    enum class Kind { Free, FreePlusTorsion, Extension };

    static GroupDescriptor free_of_rank(Int rank) {
        if (rank < 0) throw std::invalid_argument("GroupDescriptor: negative rank");
        GroupDescriptor d;
        d.kind_ = Kind::Free;
        d.rank_ = std::move(rank);
        return d;
    }

    static GroupDescriptor free_plus_torsion(Int rank, std::vector<TorsionSymbol> torsion) {
        if (rank < 0) throw std::invalid_argument("GroupDescriptor: negative rank");
        GroupDescriptor d;
        d.kind_ = Kind::FreePlusTorsion;
        d.rank_ = std::move(rank);
        d.torsion_ = std::move(torsion);
        return d;
    }

    /// The quotient rank is always 1 (a single Z quotient).
    static GroupDescriptor extension(Int quotient_rank, GroupDescriptor sub) {
        if (quotient_rank != 1)
            throw std::invalid_argument("GroupDescriptor: extension quotient rank must be 1");
        GroupDescriptor d;
        d.kind_ = Kind::Extension;
        d.rank_ = std::move(quotient_rank);
        d.sub_ = std::make_shared<const GroupDescriptor>(std::move(sub));
        return d;
    }

    Kind kind() const { return kind_; }

    Int free_rank() const {
        return kind_ == Kind::Extension ? rank_ + sub_->free_rank() : rank_;
    }

    const std::vector<TorsionSymbol>& torsion() const { return torsion_; }

    const GroupDescriptor& sub() const {
        if (kind_ != Kind::Extension)
            throw std::logic_error("GroupDescriptor: sub() on a non-extension");
        return *sub_;
    }

    /// True when the descriptor can denote a nonzero group (free rank, torsion
    /// symbols, or an extension quotient).
    bool has_content() const {
        if (kind_ == Kind::Extension) return true;
        return rank_ > 0 || !torsion_.empty();
    }

    std::string str() const {
        std::ostringstream out;
        switch (kind_) {
            case Kind::Free:
                out << free_part_str();
                break;
            case Kind::FreePlusTorsion: {
                out << free_part_str();
                for (const auto& t : torsion_) out << " + " << t.label();
                break;
            }
            case Kind::Extension:
                out << "extension of Z by (" << sub_->str() << ")";
                break;
        }
        return out.str();
    }

  private:
    std::string free_part_str() const {
        if (rank_ == 0) return "0";
        if (rank_ == 1) return "Z";
        std::ostringstream out;
        out << "Z^" << rank_;
        return out.str();
    }

    Kind kind_ = Kind::Free;
    Int rank_ = 0;
    std::vector<TorsionSymbol> torsion_;
    std::shared_ptr<const GroupDescriptor> sub_;
};

/**
 * Degree -> descriptor table.  Content the defining statement would place
 * above the table's degree range lands in `diagnostics` instead of `entries`.
 */
struct HomologyTable {
    std::map<int, GroupDescriptor> entries;
    std::vector<std::string> diagnostics;

    Int free_rank(int degree) const {
        auto it = entries.find(degree);
        return it == entries.end() ? Int(0) : it->second.free_rank();
    }

    Polynomial free_rank_polynomial() const {
        Polynomial p;
        for (const auto& [deg, d] : entries) p = p + Polynomial::monomial(deg, d.free_rank());
        return p;
    }
};

}  // namespace detvar

#endif  // DETVAR_GRADED_HPP
