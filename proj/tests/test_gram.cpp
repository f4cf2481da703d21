#include "lebnorm/gram.hpp"

#include "lebnorm/sequences.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace lebnorm;

TEST_CASE("GramSpec validates and exposes exact knots") {
    CHECK_THROWS_AS(GramSpec(0), std::invalid_argument);
    CHECK_THROWS_AS(GramSpec(-3), std::invalid_argument);
    const GramSpec spec(4);
    CHECK(spec.knot(0) == Rational(0));
    CHECK(spec.knot(1) == Rational(1, 4));
    CHECK(spec.knot(4) == Rational(1));
    CHECK(spec.mesh() == Rational(1, 4));
    CHECK_THROWS_AS(spec.knot(5), std::out_of_range);
}

TEST_CASE("gram matrix entries for n=1 and n=2") {
    const SymTridiag m1 = gram_matrix(GramSpec(1));
    CHECK(m1.entry(0, 0) == Rational(1, 3));
    CHECK(m1.entry(0, 1) == Rational(1, 6));
    CHECK(m1.entry(1, 0) == Rational(1, 6));
    CHECK(m1.entry(1, 1) == Rational(1, 3));

    const SymTridiag m2 = gram_matrix(GramSpec(2));
    CHECK(m2.entry(0, 0) == Rational(1, 6));
    CHECK(m2.entry(1, 1) == Rational(1, 3));
    CHECK(m2.entry(2, 2) == Rational(1, 6));
    CHECK(m2.entry(0, 1) == Rational(1, 12));
    CHECK(m2.entry(0, 2) == Rational(0));
}

TEST_CASE("interior row sums equal the mesh width") {
    for (std::int64_t n : {2, 3, 8, 17}) {
        const GramSpec spec(n);
        const SymTridiag m = gram_matrix(spec);
        for (std::int64_t i = 1; i < n; ++i) {
            Rational row_sum(0);
            for (std::int64_t k = 0; k <= n; ++k) row_sum += m.entry(i, k);
            CHECK(row_sum == spec.mesh());
        }
    }
}

TEST_CASE("closed-form inverse for n=1 and n=2") {
    const GramSpec s1(1);
    CHECK(inverse_gram_entry(s1, 0, 0) == Rational(4));
    CHECK(inverse_gram_entry(s1, 0, 1) == Rational(-2));
    CHECK(inverse_gram_entry(s1, 1, 0) == Rational(-2));
    CHECK(inverse_gram_entry(s1, 1, 1) == Rational(4));

    const GramSpec s2(2);
    const Rational expect[3][3] = {{7, -2, 1}, {-2, 4, -2}, {1, -2, 7}};
    const InverseGram inv(s2);
    for (std::int64_t i = 0; i <= 2; ++i)
        for (std::int64_t k = 0; k <= 2; ++k) CHECK(inv.entry(i, k) == expect[i][k]);
    CHECK_THROWS_AS(inv.entry(0, 3), std::out_of_range);
}

TEST_CASE("inverse check: product with the Gram matrix is exactly the identity") {
    for (std::int64_t n : {1, 2, 3, 8, 32}) {
        const CheckReport r = check_inverse(GramSpec(n));
        CHECK(r.passed());
        CHECK(*r.max_defect == Rational(0));
        CHECK(r.checked == (n + 1) * (n + 1));
    }
}

TEST_CASE("ratio operation matches the quota law") {
    CHECK(ratio(GramSpec(2), 1, 2) == Rational(2));
    CHECK(ratio(GramSpec(2), 2, 0) == Rational(1, 2));
    CHECK(ratio(GramSpec(1), 1, 1) == Rational(2));
    CHECK_THROWS_AS(ratio(GramSpec(2), 0, 0), std::out_of_range);
    CHECK_THROWS_AS(ratio(GramSpec(2), 3, 0), std::out_of_range);
}

TEST_CASE("quota law over all entries up to n=16") {
    for (std::int64_t n = 1; n <= 16; ++n) {
        const CheckReport r = check_quota(GramSpec(n));
        CHECK(r.passed());
        CHECK(r.checked == n * (n + 1));
    }
}

TEST_CASE("inverse symmetries and sign pattern") {
    for (std::int64_t n : {1, 2, 5, 12}) {
        const InverseGram inv{GramSpec(n)};
        for (std::int64_t i = 0; i <= n; ++i) {
            for (std::int64_t k = 0; k <= n; ++k) {
                const Rational v = inv.entry(i, k);
                CHECK(v == inv.entry(k, i));
                CHECK(v == inv.entry(n - i, n - k));
                CHECK(v.sign() == (((i + k) % 2 == 0) ? 1 : -1));
                // Sign-alternating diagonal dominance.
                CHECK(abs(inv.entry(i, i)) >= abs(v));
            }
        }
    }
}

TEST_CASE("a corrupted Gram entry is caught and the row named") {
    const GramSpec spec(6);
    SymTridiag m = gram_matrix(spec);
    m.off[2] += Rational(1, 1000);
    const CheckReport r = check_inverse(spec, m);
    REQUIRE_FALSE(r.passed());
    CHECK(*r.max_defect > Rational(0));
    bool names_row = false;
    for (const CheckFailure& f : r.failures)
        if (f.location.find("i=2") != std::string::npos ||
            f.location.find("i=3") != std::string::npos)
            names_row = true;
    CHECK(names_row);

    SymTridiag d = gram_matrix(spec);
    d.diag[4] = Rational(0);
    const CheckReport r2 = check_inverse(spec, d);
    REQUIRE_FALSE(r2.passed());
    bool names_diag = false;
    for (const CheckFailure& f : r2.failures)
        if (f.location.find("i=4") != std::string::npos) names_diag = true;
    CHECK(names_diag);
}
