#include "lebnorm/numbers.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace lebnorm;

namespace {

// Exact rational equal to a double (doubles are dyadic rationals).
Rational exact_of_double(double d) {
    const mpq_class q(d);
    return Rational(Int(q.get_num()), Int(q.get_den()));
}

QuadInt random_quad(std::mt19937& rng) {
    std::uniform_int_distribution<long> dist(-50, 50);
    return QuadInt{Int(dist(rng)), Int(dist(rng))};
}

}  // namespace

TEST_CASE("quad_mul basics") {
    const QuadInt lambda = quad_lambda();
    CHECK(quad_mul(lambda, lambda) == QuadInt{7, 4});
    CHECK(quad_mul(QuadInt{1, 0}, QuadInt{-13, 42}) == QuadInt{-13, 42});
    CHECK(quad_mul(lambda, quad_conj(lambda)) == QuadInt{1, 0});
    CHECK(quad_norm(lambda) == 1);
}

TEST_CASE("quad_pow examples") {
    const QuadInt lambda = quad_lambda();
    CHECK(quad_pow(lambda, 0) == QuadInt{1, 0});
    CHECK(quad_pow(lambda, 2) == QuadInt{7, 4});
    CHECK(quad_pow(lambda, 5) == QuadInt{362, 209});
    CHECK_THROWS_AS(quad_pow(lambda, -1), std::invalid_argument);
}

TEST_CASE("conjugation is a ring homomorphism, norm is multiplicative") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const QuadInt x = random_quad(rng);
        const QuadInt y = random_quad(rng);
        CHECK(quad_conj(quad_mul(x, y)) == quad_mul(quad_conj(x), quad_conj(y)));
        CHECK(quad_norm(quad_mul(x, y)) == quad_norm(x) * quad_norm(y));
    }
}

TEST_CASE("lambda powers have unit norm") {
    for (std::int64_t k = 0; k <= 120; ++k)
        CHECK(quad_norm(quad_pow(quad_lambda(), k)) == 1);
}

TEST_CASE("Rational normalizes on construction") {
    CHECK(Rational(6, 4).num() == 3);
    CHECK(Rational(6, 4).den() == 2);
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-10, 5).str() == "-2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2) - Rational(5, 3) == Rational(1, 3));
    CHECK(Rational(5, 9) * Rational(3) == Rational(5, 3));
    CHECK(Rational(17, 9) / Rational(17, 9) == Rational(1));
    CHECK(-Rational(3, 4) == Rational(-3, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 4) > 1);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("Rational round-trip property") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational x(num(rng), den(rng));
        const Rational y(num(rng), den(rng));
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("Rational parse and str") {
    CHECK(Rational::parse("5/3") == Rational(5, 3));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("-47/1485") == Rational(-47, 1485));
    CHECK(Rational::parse("2923/1485").str() == "2923/1485");
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(4).str() == "4");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("to_double rounds to nearest") {
    CHECK(to_double(Rational(7)) == 7.0);
    CHECK(to_double(Rational(1, 2)) == 0.5);
    CHECK(to_double(Rational(5, 3)) == doctest::Approx(5.0 / 3.0).epsilon(1e-16));

    // Independent oracle: no representable double is closer than the result.
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational r(num(rng), den(rng));
        const double d = to_double(r);
        const Rational err = abs(r - exact_of_double(d));
        const double up = std::nextafter(d, std::numeric_limits<double>::infinity());
        const double down = std::nextafter(d, -std::numeric_limits<double>::infinity());
        CHECK(err <= abs(r - exact_of_double(up)));
        CHECK(err <= abs(r - exact_of_double(down)));
    }
}

TEST_CASE("to_double handles tiny magnitudes") {
    const Rational tiny(1, Int("1000000000000000000000"));  // 1e-21
    const double d = to_double(tiny);
    CHECK(d == doctest::Approx(1e-21).epsilon(1e-12));
    CHECK(to_double(-tiny) == -d);
}

TEST_CASE("float cross-check of the closed form A_k = (lambda^k + lambda^-k)/2") {
    const double lam = 2.0 + std::sqrt(3.0);
    for (std::int64_t k = 0; k <= 15; ++k) {
        const QuadInt p = quad_pow(quad_lambda(), k);
        const double a = (std::pow(lam, double(k)) + std::pow(lam, -double(k))) / 2.0;
        const double b = (std::pow(lam, double(k)) - std::pow(lam, -double(k))) / (2.0 * std::sqrt(3.0));
        CHECK(p.a.get_d() == doctest::Approx(a).epsilon(1e-12));
        CHECK(p.b.get_d() == doctest::Approx(b).epsilon(1e-12));
    }
}
