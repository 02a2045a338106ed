#ifndef DETVAR_POLYNOMIAL_HPP
#define DETVAR_POLYNOMIAL_HPP

/**
 * Exact univariate polynomial arithmetic over arbitrary-precision integers,
 * plus the structural predicates (palindromic, unimodal) used throughout
 * the library.  Values are immutable after construction and all operations
 * are pure, so they are safe to share across threads.
 */

#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace detvar {

using Int = boost::multiprecision::cpp_int;

/// Exact rational numbers; always reduced, denominator > 0.  Only used for
/// evaluation points (t = -1, q = 1, ...); coefficients stay integral.
using Rational = boost::multiprecision::cpp_rational;

struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial() : std::domain_error("operation undefined on the zero polynomial") {}
};

struct NegativeCoefficient : std::domain_error {
    explicit NegativeCoefficient(const std::string& what) : std::domain_error(what) {}
};

struct NotDivisible : std::domain_error {
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

/**
 * A univariate polynomial with cpp_int coefficients, stored sparsely as
 * degree -> coefficient.  Invariant: no stored coefficient is zero, so the
 * empty map is the zero polynomial and map equality is polynomial equality.
 */
class Polynomial {
  public:
    Polynomial() = default;

    /// Dense construction: coeffs[i] is the coefficient of t^i.  Zeros are dropped.
    static Polynomial from_coefficients(const std::vector<Int>& coeffs) {
        Polynomial p;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) p.terms_[static_cast<int>(i)] = coeffs[i];
        return p;
    }

    /// Sparse construction from (degree, coefficient) pairs.  Repeated degrees add up.
    static Polynomial from_terms(std::initializer_list<std::pair<int, Int>> terms) {
        Polynomial p;
        for (const auto& [deg, c] : terms) {
            if (deg < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
            p.terms_[deg] += c;
        }
        p.normalize();
        return p;
    }

    static Polynomial monomial(int degree, Int coeff = 1) {
        if (degree < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
        Polynomial p;
        if (coeff != 0) p.terms_[degree] = std::move(coeff);
        return p;
    }

    static Polynomial constant(Int c) { return monomial(0, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }

    /// Highest stored degree; -1 is the zero-polynomial sentinel.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    Int coefficient(int degree) const {
        auto it = terms_.find(degree);
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Degree -> coefficient, ascending, zero-free.
    const std::map<int, Int>& terms() const { return terms_; }

    bool operator==(const Polynomial& other) const = default;

    Polynomial operator+(const Polynomial& other) const {
        Polynomial r = *this;
        for (const auto& [deg, c] : other.terms_) r.terms_[deg] += c;
        r.normalize();
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [deg, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator-(const Polynomial& other) const { return *this + (-other); }

    /// Convolution product; deg(p*q) = deg(p) + deg(q) for nonzero inputs.
    Polynomial operator*(const Polynomial& other) const {
        Polynomial r;
        for (const auto& [da, ca] : terms_)
            for (const auto& [db, cb] : other.terms_) r.terms_[da + db] += ca * cb;
        r.normalize();
        return r;
    }

    /// Exact Horner evaluation.
    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (int k = degree(); k >= 0; --k) acc = acc * x + Rational(coefficient(k));
        return acc;
    }

    /// Evaluation at an integer point; stays integral.
    Int evaluate_at_integer(const Int& x) const {
        Int acc = 0;
        for (int k = degree(); k >= 0; --k) acc = acc * x + coefficient(k);
        return acc;
    }

    /// Human-readable form, e.g. "1 + 2t^2 + t^4".
    std::string str(char variable = 't') const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [deg, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) { out << "-"; a = -a; }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (deg == 0) out << a;
            else {
                if (a != 1) out << a;
                out << variable;
                if (deg != 1) out << "^" << deg;
            }
            first = false;
        }
        return out.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

  private:
    void normalize() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }

    std::map<int, Int> terms_;
};

/**
 * Exact quotient p / d.  Throws NotDivisible when the division leaves a
 * remainder or a fractional coefficient; a failure here signals a modeling
 * bug upstream, never a rounding concern.
 */
inline Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
    // Long division over the rationals, then an integrality check.
    std::map<int, Rational> rem;
    for (const auto& [deg, c] : p.terms()) rem[deg] = Rational(c);
    const int dd = d.degree();
    const Rational dlead(d.coefficient(dd));
    std::map<int, Rational> quot;
    auto top = [&]() -> int {
        while (!rem.empty()) {
            if (rem.rbegin()->second != 0) return rem.rbegin()->first;
            rem.erase(std::prev(rem.end()));
        }
        return -1;
    };
    for (int t = top(); t >= dd; t = top()) {
        Rational c = rem[t] / dlead;
        quot[t - dd] += c;
        for (const auto& [deg, dc] : d.terms()) rem[t - dd + deg] -= c * Rational(dc);
    }
    if (top() != -1)
        throw NotDivisible("exact_div: nonzero remainder dividing (" + p.str() + ") by (" + d.str() + ")");
    Polynomial q;
    std::vector<Int> dense;
    for (const auto& [deg, c] : quot) {
        if (c == 0) continue;
        if (denominator(c) != 1)
            throw NotDivisible("exact_div: fractional quotient coefficient at degree " + std::to_string(deg));
        q = q + Polynomial::monomial(deg, numerator(c));
    }
    return q;
}

/// coefficient(k) == coefficient(degree - k) for all k.  Throws ZeroPolynomial.
inline bool is_palindromic(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    const int d = p.degree();
    for (int k = 0; 2 * k <= d; ++k)
        if (p.coefficient(k) != p.coefficient(d - k)) return false;
    return true;
}

/// Unimodality is convention-sensitive when zero coefficients are interspersed,
/// so callers must pick the sequence to test; there is no default.
enum class UnimodalConvention {
    AllCoefficients,     ///< coefficient(0..degree) including zeros
    NonzeroCoefficients  ///< nonzero coefficients in degree order
};

/// Rises to a peak then falls.  Requires nonnegative coefficients.
inline bool is_unimodal(const Polynomial& p, UnimodalConvention convention) {
    std::vector<Int> seq;
    for (const auto& [deg, c] : p.terms())
        if (c < 0)
            throw NegativeCoefficient("is_unimodal: negative coefficient at degree " + std::to_string(deg));
    if (convention == UnimodalConvention::AllCoefficients) {
        for (int k = 0; k <= p.degree(); ++k) seq.push_back(p.coefficient(k));
    } else {
        for (const auto& [deg, c] : p.terms()) seq.push_back(c);
    }
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
    while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
    return seq.empty() || i == seq.size() - 1;
}

}  // namespace detvar

#endif  // DETVAR_POLYNOMIAL_HPP
