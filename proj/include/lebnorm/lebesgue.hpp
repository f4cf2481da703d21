#pragma once

#include "lebnorm/gram.hpp"
#include "lebnorm/numbers.hpp"
#include "lebnorm/report.hpp"
#include "lebnorm/sequences.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lebnorm {

/// phi(t) = (1 + t^2) / (1 + t)^2, exact; t = -1 is a pole.
Rational phi(const Rational& t);
double phi(double t);

/// Per-n record of the projection norm ||P_n||_1 = max_k g_k(n).
struct NormReport {
    std::int64_t n = 0;
    Rational norm_exact;
    double norm_float = 0.0;
    std::vector<std::int64_t> argmax_indices;  // ascending
    Rational gap;                              // 2 - norm_exact
    std::optional<std::vector<Rational>> per_k;
};

/// Evaluates g_k(n) = (A_{n-k} S_k + A_k S_{n-k}) / B_n over shared prefix
/// sums S_m = sum_{j<m} (A_j^2 + A_{j+1}^2)/(A_j + A_{j+1}); the summand is
/// (A_j + A_{j+1}) phi(A_{j+1}/A_j) cleared of the inner fraction.
class LebesgueEval {
public:
    Rational g(std::int64_t n, std::int64_t k);
    Rational g(const GramSpec& spec, std::int64_t k);
    NormReport norm(std::int64_t n, bool with_per_k = false);
    Rational dg0(std::int64_t n);  ///< g_0(n+1) - g_0(n)
    Rational h(std::int64_t n, std::int64_t k);  ///< B_n (g_0(n) - g_k(n))

private:
    const Rational& prefix(std::int64_t m);

    SeqTable seqs_;
    std::vector<Rational> prefix_{Rational(0)};
};

Rational g(const GramSpec& spec, std::int64_t k);

/// Independent route: sum_{i=1..n} p_{i,k} phi(|a_{i,k}|/|a_{i-1,k}|) with
/// p_{i,k} = (d/2)(|a_{i,k}| + |a_{i-1,k}|), straight from the closed-form
/// inverse entries. Must equal g(spec, k) exactly.
Rational g_via_p(const GramSpec& spec, std::int64_t k);

NormReport norm(std::int64_t n);
Rational dg0(std::int64_t n);
Rational h(std::int64_t n, std::int64_t k);

/// Exact checks for 1 <= n <= N, one report per property:
///   (a) g_0(n+1) > g_0(n)                      (b) g_0(n) > g_k(n), 1 <= k <= n/2
///   (c) g_k(n) = g_{n-k}(n)                    (d) ||P_n||_1 < 2
///   (e) gap(n+1) < gap(n)
std::vector<CheckReport> verify_theorems(std::int64_t N);

/// g(spec, k) == g_via_p(spec, k) for all k, 1 <= n <= max_n.
CheckReport check_g_routes(std::int64_t max_n);

struct LimitRow {
    std::int64_t n;
    double gap;
    std::optional<double> ratio;  // gap(n)/gap(n-1), absent at n = 1
};

/// gap(n) = 2 - ||P_n||_1 and successive gap ratios for n = 1..N.
std::vector<LimitRow> limit_diagnostics(std::int64_t N);

}  // namespace lebnorm
