#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "dompoly/polynomial.hpp"
#include "dompoly/formats.hpp"

using namespace dompoly;

namespace {

/// Deterministic small polynomial for property checks.
Polynomial sample_poly(Splitmix64& rng) {
    const int degree = static_cast<int>(rng.next() % 7);
    std::vector<BigInt> coef;
    for (int i = 0; i <= degree; ++i)
        coef.push_back(BigInt(static_cast<long long>(rng.next() % 19) - 9));
    return Polynomial(std::move(coef));
}

} // namespace

TEST_CASE("zero normalization and equality", "[polynomial]") {
    CHECK(Polynomial{}.is_zero());
    CHECK(Polynomial{}.degree() == -1);
    CHECK(Polynomial{0, 0, 0}.is_zero());
    CHECK(Polynomial{1, 2} - Polynomial{1, 2} == Polynomial{});
    CHECK(Polynomial{0, 1} == Polynomial::x());
    CHECK(Polynomial::constant(0).is_zero());
    CHECK(Polynomial::monomial(5, 0).is_zero());
    CHECK(Polynomial{1, 0, 3}.degree() == 2);
    CHECK(Polynomial{1, 3, 0, 0}.degree() == 1);
}

TEST_CASE("coefficient access is total", "[polynomial]") {
    const Polynomial p{0, 1, 3, 1};
    CHECK(p.coeff(0) == 0);
    CHECK(p.coeff(2) == 3);
    CHECK(p.coeff(7) == 0);
    CHECK(p.coeff(-1) == 0);
    CHECK(p.coefficients() == std::vector<BigInt>{0, 1, 3, 1});
}

TEST_CASE("arithmetic basics", "[polynomial]") {
    const Polynomial a{1, 1};  // 1 + x
    const Polynomial b{-1, 0, 1}; // x^2 - 1
    CHECK(a + b == Polynomial{0, 1, 1});
    CHECK(a - a == Polynomial{});
    CHECK(a * Polynomial{-1, 1} == b);
    CHECK(a * Polynomial{} == Polynomial{});
    CHECK(a * BigInt(3) == Polynomial{3, 3});
    CHECK(BigInt(0) * a == Polynomial{});
    CHECK(-b == Polynomial{1, 0, -1});
}

TEST_CASE("ring identities on seeded samples", "[polynomial]") {
    Splitmix64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial a = sample_poly(rng), b = sample_poly(rng), c = sample_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Polynomial{} == a);
        CHECK(a * Polynomial::one() == a);
    }
}

TEST_CASE("binomial powers", "[polynomial]") {
    CHECK(binomial_power(0) == Polynomial{1});
    CHECK(binomial_power(1) == Polynomial{1, 1});
    CHECK(binomial_power(2) == Polynomial{1, 2, 1});
    CHECK(binomial_power(5).coeff(2) == 10);

    // Cross-check against an independently built Pascal triangle.
    std::vector<std::vector<BigInt>> triangle{{1}};
    for (int k = 1; k <= 20; ++k) {
        std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 1);
        for (int j = 1; j < k; ++j)
            row[static_cast<std::size_t>(j)] =
                triangle.back()[static_cast<std::size_t>(j - 1)] + triangle.back()[static_cast<std::size_t>(j)];
        triangle.push_back(row);
    }
    for (int k = 0; k <= 20; ++k)
        CHECK(binomial_power(k).coefficients() == triangle[static_cast<std::size_t>(k)]);
}

TEST_CASE("binomial coefficients", "[polynomial]") {
    CHECK(binomial_coefficient(0, 0) == 1);
    CHECK(binomial_coefficient(5, 2) == 10);
    CHECK(binomial_coefficient(5, 6) == 0);
    CHECK(binomial_coefficient(5, -1) == 0);
    CHECK(binomial_coefficient(64, 32) == BigInt("1832624140942590534"));
    for (int n = 0; n <= 16; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(binomial_coefficient(n, k) == binomial_coefficient(n, n - k));
            CHECK(binomial_coefficient(n, k) == binomial_power(n).coeff(k));
        }
}

TEST_CASE("evaluation", "[polynomial]") {
    const Polynomial p{0, 1, 3, 1}; // x + 3x^2 + x^3
    CHECK(p.evaluate(BigInt(1)) == 5);
    CHECK(p.evaluate(BigInt(0)) == 0);
    CHECK(p.evaluate(BigInt(-1)) == 1);
    CHECK(p.evaluate(BigInt(2)) == 22);
    CHECK(p.evaluate(BigRational(1, 2)) == BigRational(11, 8));
    CHECK(Polynomial{}.evaluate(BigInt(9)) == 0);

    Splitmix64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial a = sample_poly(rng), b = sample_poly(rng);
        const BigRational t(static_cast<long long>(rng.next() % 13) - 6,
                            static_cast<long long>(rng.next() % 7) + 1);
        CHECK((a * b).evaluate(t) == a.evaluate(t) * b.evaluate(t));
        CHECK((a + b).evaluate(t) == a.evaluate(t) + b.evaluate(t));
    }
}

TEST_CASE("reversal to a degree", "[polynomial]") {
    CHECK(Polynomial{0, 2, 1}.reversed_to_degree(2) == Polynomial{1, 2});
    CHECK(Polynomial{1}.reversed_to_degree(3) == Polynomial{0, 0, 0, 1});
    CHECK(Polynomial{0, 1, 3, 1}.reversed_to_degree(3) == Polynomial{1, 3, 1});
    CHECK(Polynomial{}.reversed_to_degree(2) == Polynomial{});
    const Polynomial quadratic{0, 0, 1};
    CHECK_THROWS_AS(quadratic.reversed_to_degree(1), DegreeTooSmall);

    Splitmix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial p = sample_poly(rng);
        const int k = p.degree() + static_cast<int>(rng.next() % 3);
        if (k < 0) continue;
        CHECK(p.reversed_to_degree(k).reversed_to_degree(k) == p);
    }
}

TEST_CASE("negated substitution", "[polynomial]") {
    CHECK(Polynomial{0, 1, 3, 1}.substituted_neg() == Polynomial{0, -1, 3, -1});
    CHECK(Polynomial{}.substituted_neg() == Polynomial{});

    Splitmix64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial p = sample_poly(rng);
        CHECK(p.substituted_neg().substituted_neg() == p);
        const BigInt t(static_cast<long long>(rng.next() % 9) - 4);
        CHECK(p.substituted_neg().evaluate(t) == p.evaluate(BigInt(-t)));
    }
}

TEST_CASE("lowest nonzero degree", "[polynomial]") {
    CHECK(lowest_nonzero_degree(Polynomial{0, 0, 4, 4, 1}) == 2);
    CHECK(lowest_nonzero_degree(Polynomial{1}) == 0);
    CHECK(lowest_nonzero_degree(Polynomial{}) == -1);
}

TEST_CASE("rendering", "[polynomial]") {
    CHECK(Polynomial{}.to_string() == "0");
    CHECK(Polynomial{0, 1, 3, 1}.to_string() == "x^3 + 3x^2 + x");
    CHECK(Polynomial{1, -1}.to_string() == "-x + 1");
    CHECK(Polynomial{-2}.to_string() == "-2");
    CHECK(Polynomial{0, 0, -5}.to_string() == "-5x^2");
    CHECK(Polynomial{2, 1, 0, -3}.to_string() == "-3x^3 + x + 2");
    CHECK(Polynomial{0, 1, 3, 1}.coefficient_strings() ==
          std::vector<std::string>{"0", "1", "3", "1"});
    CHECK(Polynomial{}.coefficient_strings().empty());
}
