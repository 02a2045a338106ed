#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <vector>

#include "detvar/polynomial.hpp"

using detvar::Int;
using detvar::Polynomial;
using detvar::Rational;
using detvar::UnimodalConvention;

namespace {

// Independent oracle: coefficient of t^target in prod (1 + t^e) over `exps`,
// by explicit subset-sum enumeration.
Int subset_sum_coefficient(const std::vector<int>& exps, int target) {
    std::map<int, Int> counts{{0, 1}};
    for (int e : exps) {
        std::map<int, Int> next = counts;
        for (const auto& [sum, ways] : counts) next[sum + e] += ways;
        counts = std::move(next);
    }
    auto it = counts.find(target);
    return it == counts.end() ? Int(0) : it->second;
}

Polynomial odd_factor_product(const std::vector<int>& exps) {
    Polynomial p = Polynomial::constant(1);
    for (int e : exps) p = p * (Polynomial::constant(1) + Polynomial::monomial(e));
    return p;
}

Polynomial random_polynomial(std::mt19937& rng, int max_degree = 6, int max_abs = 5) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<int> coeff_dist(-max_abs, max_abs);
    Polynomial p;
    const int terms = deg_dist(rng);
    for (int i = 0; i <= terms; ++i) p = p + Polynomial::monomial(deg_dist(rng), coeff_dist(rng));
    return p;
}

Polynomial random_palindromic(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg_dist(0, 8);
    std::uniform_int_distribution<int> coeff_dist(1, 4);
    const int d = deg_dist(rng);
    Polynomial p;
    for (int k = 0; 2 * k <= d; ++k) {
        Int c = coeff_dist(rng);
        p = p + Polynomial::monomial(k, c);
        if (d - k != k) p = p + Polynomial::monomial(d - k, c);
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial addition") {
    const Polynomial one_t2 = Polynomial::from_coefficients({1, 0, 1});
    CHECK(one_t2 + Polynomial::monomial(2) == Polynomial::from_coefficients({1, 0, 2}));
    const Polynomial p = Polynomial::from_terms({{0, 1}, {3, -2}, {7, 5}});
    CHECK(p + Polynomial() == p);
    CHECK(Polynomial::from_terms({{0, 1}, {3, 1}}) + Polynomial::from_terms({{0, -1}, {3, -1}}) ==
          Polynomial());
}

TEST_CASE("polynomial multiplication") {
    const Polynomial one_t2 = Polynomial::from_coefficients({1, 0, 1});
    // Kunneth for P^1 x P^1: the quadric surface polynomial.
    CHECK(one_t2 * one_t2 == Polynomial::from_coefficients({1, 0, 2, 0, 1}));

    const Polynomial p = Polynomial::from_terms({{0, 2}, {4, -1}, {9, 3}});
    CHECK(p * Polynomial::constant(1) == p);

    const std::vector<int> exps{3, 5, 7, 9};
    const Polynomial prod = odd_factor_product(exps);
    CHECK(prod.coefficient(12) == subset_sum_coefficient(exps, 12));
    CHECK(prod.coefficient(15) == subset_sum_coefficient(exps, 15));
    CHECK(prod.coefficient(12) == 2);
    CHECK(prod.coefficient(15) == 1);
}

TEST_CASE("polynomial evaluation") {
    const Polynomial quadric = Polynomial::from_coefficients({1, 0, 2, 0, 1});
    CHECK(quadric.evaluate(Rational(-1)) == Rational(4));
    const Polynomial p = Polynomial::from_terms({{0, 7}, {2, -3}, {5, 1}});
    CHECK(p.evaluate(Rational(0)) == Rational(7));
    CHECK(Polynomial::from_terms({{0, 1}, {3, 1}}).evaluate(Rational(-1)) == Rational(0));
    CHECK(p.evaluate_at_integer(2) == 7 - 3 * 4 + 32);
    CHECK(p.evaluate(Rational(1, 2)) == Rational(7) - Rational(3, 4) + Rational(1, 32));
}

TEST_CASE("exact division") {
    // q^3 + q^2 - q - 1 = (q+1)^2 (q-1), checked by hand.
    const Polynomial num = Polynomial::from_coefficients({-1, -1, 1, 1});
    const Polynomial q_minus_1 = Polynomial::from_coefficients({-1, 1});
    CHECK(exact_div(num, q_minus_1) == Polynomial::from_coefficients({1, 2, 1}));

    const Polynomial p = Polynomial::from_terms({{0, -4}, {2, 9}, {6, 1}});
    CHECK(exact_div(p, Polynomial::constant(1)) == p);

    CHECK_THROWS_AS(exact_div(Polynomial::from_coefficients({1, 0, 1}), q_minus_1),
                    detvar::NotDivisible);
    // Remainder-free but fractional quotient is also not divisible over Z.
    CHECK_THROWS_AS(exact_div(Polynomial::monomial(1), Polynomial::constant(2)),
                    detvar::NotDivisible);
    CHECK_THROWS_AS(exact_div(p, Polynomial()), std::invalid_argument);
    CHECK(exact_div(Polynomial(), q_minus_1) == Polynomial());
}

TEST_CASE("palindromic predicate") {
    CHECK(is_palindromic(Polynomial::from_terms({{0, 1}, {3, 1}})));
    CHECK_FALSE(is_palindromic(Polynomial::from_terms({{0, 1}, {2, 2}, {3, 1}})));
    CHECK(is_palindromic(Polynomial::from_coefficients({1, 0, 2, 0, 1})));
    CHECK_THROWS_AS(is_palindromic(Polynomial()), detvar::ZeroPolynomial);
}

TEST_CASE("unimodality conventions") {
    // prod_{i=1..3} (1 + t^{2i+1}): all eight nonzero coefficients equal 1.
    const Polynomial p4 = odd_factor_product({3, 5, 7});
    CHECK(is_unimodal(p4, UnimodalConvention::NonzeroCoefficients));

    // prod_{i=1..5}: nonzero coefficients at degrees 12,14,15,16 are 2,2,1,2.
    const Polynomial p6 = odd_factor_product({3, 5, 7, 9, 11});
    CHECK(p6.coefficient(12) == 2);
    CHECK(p6.coefficient(14) == 2);
    CHECK(p6.coefficient(15) == 1);
    CHECK(p6.coefficient(16) == 2);
    CHECK_FALSE(is_unimodal(p6, UnimodalConvention::NonzeroCoefficients));

    // 1,0,0,1 dips then rises.
    CHECK_FALSE(is_unimodal(Polynomial::from_terms({{0, 1}, {3, 1}}),
                            UnimodalConvention::AllCoefficients));
    CHECK(is_unimodal(Polynomial::from_coefficients({1, 2, 2, 1}),
                      UnimodalConvention::AllCoefficients));
    CHECK_THROWS_AS(is_unimodal(Polynomial::from_terms({{1, -1}}),
                                UnimodalConvention::AllCoefficients),
                    detvar::NegativeCoefficient);
}

TEST_CASE("normalization and degree sentinel") {
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial::from_coefficients({0, 0, 0}).is_zero());
    CHECK(Polynomial::from_terms({{2, 1}, {2, -1}}).is_zero());
    CHECK(Polynomial::monomial(5).degree() == 5);
    const Polynomial p = Polynomial::from_terms({{0, 1}, {1, 0}, {2, 3}});
    for (const auto& [deg, c] : p.terms()) CHECK(c != 0);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial a = random_polynomial(rng);
        const Polynomial b = random_polynomial(rng);
        const Polynomial c = random_polynomial(rng);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        if (!a.is_zero() && !b.is_zero())
            REQUIRE((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("palindromic products stay palindromic") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial a = random_palindromic(rng);
        const Polynomial b = random_palindromic(rng);
        REQUIRE(is_palindromic(a * b));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial a = random_polynomial(rng);
        const Polynomial b = random_polynomial(rng);
        const Rational x(num(rng), den(rng));
        REQUIRE((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        REQUIRE((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    }
}
