#ifndef DETVAR_SPACES_HPP
#define DETVAR_SPACES_HPP

/**
 * Closed-form Poincare polynomials and Borel-Moore rank profiles for the
 * classical spaces the rank bookkeeping consumes: P^m, PSU_n, PGL_n, and
 * the quadric surface P^1 x P^1.  Everything here is a pure function of
 * its arguments; results are rational (free) ranks only.
 */

#include <stdexcept>
#include <string>

#include "detvar/graded.hpp"
#include "detvar/polynomial.hpp"

namespace detvar {

struct SpaceId {
    enum class Kind { ProjectiveSpace, PSU, PGL, QuadricSurface };

    Kind kind;
    int param;  // m for P^m; n for PSU_n / PGL_n; unused for the quadric

    static SpaceId projective(int m) {
        if (m < 0) throw std::invalid_argument("P^m needs m >= 0");
        return {Kind::ProjectiveSpace, m};
    }
    static SpaceId psu(int n) {
        if (n < 2) throw std::invalid_argument("PSU_n needs n >= 2");
        return {Kind::PSU, n};
    }
    static SpaceId pgl(int n) {
        if (n < 2) throw std::invalid_argument("PGL_n needs n >= 2");
        return {Kind::PGL, n};
    }
    static SpaceId quadric_surface() { return {Kind::QuadricSurface, 0}; }

    auto operator<=>(const SpaceId&) const = default;
};

/// 1 + t^2 + ... + t^{2m}
inline Polynomial projective_poincare(int m) {
    if (m < 0) throw std::invalid_argument("projective_poincare: m must be >= 0");
    Polynomial p;
    for (int k = 0; k <= m; ++k) p = p + Polynomial::monomial(2 * k);
    return p;
}

/// prod_{i=1}^{n-1} (1 + t^{2i+1}), expanded; degree n^2 - 1.  These are the
/// rational Betti numbers of PSU_n.
inline Polynomial psu_poincare(int n) {
    if (n < 2) throw std::invalid_argument("psu_poincare: n must be >= 2");
    Polynomial p = Polynomial::constant(1);
    for (int i = 1; i <= n - 1; ++i)
        p = p * (Polynomial::constant(1) + Polynomial::monomial(2 * i + 1));
    return p;
}

/**
 * Borel-Moore rank profile of PGL_n: zero below degree n^2 - 1 and the
 * PSU_n Betti numbers shifted up by n^2 - 1 above it.  The orientation
 * duality shift is applied here, once, and nowhere else.
 */
inline GradedRanks pgl_bm_ranks(int n) {
    if (n < 2) throw std::invalid_argument("pgl_bm_ranks: n must be >= 2");
    const int shift = n * n - 1;
    GradedRanks g(2 * shift);
    const Polynomial psu = psu_poincare(n);
    for (const auto& [deg, c] : psu.terms()) g.set(deg + shift, c);
    return g;
}

/// P^1 x P^1: the product cell structure gives 1 + 2t^2 + t^4.
inline Polynomial quadric_surface_poincare() {
    return projective_poincare(1) * projective_poincare(1);
}

/// Poincare polynomial of a compact catalog space.  PGL_n is noncompact;
/// ask for its profile through pgl_bm_ranks instead.
inline Polynomial poincare_polynomial(const SpaceId& space) {
    switch (space.kind) {
        case SpaceId::Kind::ProjectiveSpace: return projective_poincare(space.param);
        case SpaceId::Kind::PSU: return psu_poincare(space.param);
        case SpaceId::Kind::QuadricSurface: return quadric_surface_poincare();
        case SpaceId::Kind::PGL:
            throw std::invalid_argument("PGL_n is noncompact; use pgl_bm_ranks");
    }
    throw std::logic_error("unreachable");
}

}  // namespace detvar

#endif  // DETVAR_SPACES_HPP
