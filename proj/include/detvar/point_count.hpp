#ifndef DETVAR_POINT_COUNT_HPP
#define DETVAR_POINT_COUNT_HPP

/**
 * Counting polynomials over finite fields for GL_n, the determinantal
 * hypersurface {det = 0}, and its projectivization.  Counts stay symbolic
 * in the variable q throughout; evaluating at q = 1 after the exact
 * division by q - 1 yields the topological Euler characteristic.
 */

#include <stdexcept>

#include "detvar/polynomial.hpp"

namespace detvar {

/// A polynomial in the formal variable q.
using CountingPolynomial = Polynomial;

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i), expanded.
inline CountingPolynomial gl_count(int n) {
    if (n < 1) throw std::invalid_argument("gl_count: n must be >= 1");
    Polynomial p = Polynomial::constant(1);
    for (int i = 0; i < n; ++i)
        p = p * (Polynomial::monomial(n) - Polynomial::monomial(i));
    return p;
}

/// |{det = 0}(F_q)| = q^{n^2} - |GL_n(F_q)|.
inline CountingPolynomial singular_locus_count(int n) {
    if (n < 1) throw std::invalid_argument("singular_locus_count: n must be >= 1");
    return Polynomial::monomial(n * n) - gl_count(n);
}

/// Points of the projectivization: (|{det = 0}| - 1) / (q - 1).  The cone
/// minus its vertex fibers over the quotient with fiber F_q^*, so the
/// division is exact; NotDivisible here means an upstream modeling bug.
inline CountingPolynomial projective_det_count(int n) {
    if (n < 2) throw std::invalid_argument("projective_det_count: n must be >= 2");
    const Polynomial numerator = singular_locus_count(n) - Polynomial::constant(1);
    const Polynomial q_minus_1 = Polynomial::monomial(1) - Polynomial::constant(1);
    return exact_div(numerator, q_minus_1);
}

/// Euler characteristic of the projectivized hypersurface via q = 1.
inline Int euler_via_count(int n) {
    return projective_det_count(n).evaluate_at_integer(1);
}

}  // namespace detvar

#endif  // DETVAR_POINT_COUNT_HPP
