#include "lebnorm/sequences.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace lebnorm;

namespace {

// Canonical values 0..top as plain vectors, for building corrupted tables.
std::pair<std::vector<Int>, std::vector<Int>> canonical_values(std::int64_t top) {
    SeqTable t;
    t.extend_to(top);
    std::vector<Int> a;
    std::vector<Int> b;
    for (std::int64_t k = 0; k <= top; ++k) {
        a.push_back(t.A(k));
        b.push_back(t.B(k));
    }
    return {a, b};
}

}  // namespace

TEST_CASE("seq reproduces the first values") {
    const Int expect_a[5] = {1, 2, 7, 26, 97};
    const Int expect_b[5] = {0, 1, 4, 15, 56};
    for (std::int64_t k = 0; k < 5; ++k) {
        const SeqPair p = seq(k);
        CHECK(p.k == k);
        CHECK(p.A == expect_a[k]);
        CHECK(p.B == expect_b[k]);
    }
    const SeqPair p5 = seq(5);
    CHECK(p5.A == 362);
    CHECK(p5.B == 209);
}

TEST_CASE("SeqTable rejects bad external values and fixed-size overruns") {
    CHECK_THROWS_AS(SeqTable({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SeqTable({Int(1)}, {Int(0), Int(1)}), std::invalid_argument);
    SeqTable fixed({Int(1), Int(2)}, {Int(0), Int(1)});
    CHECK(fixed.A(1) == 2);
    CHECK_FALSE(fixed.extendable());
    CHECK_THROWS_AS(fixed.A(2), std::out_of_range);
    SeqTable canonical;
    CHECK_THROWS_AS(canonical.A(-1), std::out_of_range);
}

TEST_CASE("growth bounds hold, with the B equality case at k=1") {
    const CheckReport r1 = check_growth_bounds(1);
    CHECK(r1.passed());
    CHECK(r1.checked == 3);  // A at k=0,1 and B at k=1
    CHECK(check_growth_bounds(4).passed());
    const CheckReport r200 = check_growth_bounds(200);
    CHECK(r200.passed());
    CHECK(r200.checked == 401);
    SeqTable t;
    CHECK(t.B(2) == 4 * t.B(1));  // the equality case the bound allows
}

TEST_CASE("downward recurrence inverts the forward one") {
    SeqTable t;
    CHECK(t.A(0) == 2 * t.A(1) - 3 * t.B(1));
    CHECK(t.A(3) == 2 * t.A(4) - 3 * t.B(4));
    CHECK(t.B(3) == 2 * t.B(4) - t.A(4));
    const CheckReport r = check_downward_recurrence(200);
    CHECK(r.passed());
    CHECK(r.checked == 201);
}

TEST_CASE("sum identities") {
    SeqTable t;
    // m = 2 by hand: (B_0+B_1) + (B_1+B_2) + (B_2+B_3) = 1 + 5 + 19 = 25 = A_3 - 1.
    CHECK(t.B(0) + 2 * t.B(1) + 2 * t.B(2) + t.B(3) == 25);
    CHECK(t.A(3) - 1 == 25);
    const CheckReport r0 = check_sum_identities(0);
    CHECK(r0.passed());
    CHECK(r0.checked == 4);
    CHECK(check_sum_identities(500).passed());
}

TEST_CASE("addition identities") {
    SeqTable t;
    CHECK(t.B(0) * t.A(4) + t.A(0) * t.B(4) == t.B(4));          // k=0 degenerates
    CHECK(t.B(1) * t.A(3) + t.A(1) * t.B(3) == 56);              // 1*26 + 2*15
    CHECK(t.B(2) * t.A(3) + t.A(2) * t.B(3) == 209);             // n=5, k=2
    CHECK(check_addition_identities(4).passed());
    CHECK(check_addition_identities(5).passed());
    const CheckReport r = check_addition_identities_range(60);
    CHECK(r.passed());
}

TEST_CASE("pell invariant and lambda power agreement") {
    CHECK(check_pell(500).passed());
    CHECK(check_lambda_powers(500).passed());
}

TEST_CASE("A-ratios increase strictly and converge to lambda") {
    SeqTable t;
    for (std::int64_t k = 0; k + 2 <= 100; ++k) {
        // A_{k+2}/A_{k+1} > A_{k+1}/A_k as an exact cross-product comparison.
        CHECK(t.A(k + 2) * t.A(k) > t.A(k + 1) * t.A(k + 1));
    }
    const double lambda = 2.0 + std::sqrt(3.0);
    for (std::int64_t k = 20; k <= 24; ++k) {
        const double r = t.A(k + 1).get_d() / t.A(k).get_d();
        CHECK(std::abs(r - lambda) < 1e-12);
    }
    // Exact form of A_{k+1}/A_k < 2 + sqrt(3): equivalent to 3 B_k^2 < A_k^2,
    // which is the Pell invariant.
    for (std::int64_t k = 0; k <= 100; ++k) CHECK(3 * t.B(k) * t.B(k) < t.A(k) * t.A(k));
}

TEST_CASE("a corrupted A value is caught and the index named") {
    auto [a, b] = canonical_values(20);
    a[7] += 1;
    SeqTable bad(a, b);
    const CheckReport pell = check_pell(bad, 20);
    REQUIRE_FALSE(pell.passed());
    CHECK(pell.failures.front().location == "k=7");
    SeqTable bad2(a, b);
    CHECK_FALSE(check_downward_recurrence(bad2, 19).passed());
    SeqTable bad3(a, b);
    CHECK_FALSE(check_lambda_powers(bad3, 20).passed());
}
