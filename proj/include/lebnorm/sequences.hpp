#pragma once

#include "lebnorm/numbers.hpp"
#include "lebnorm/report.hpp"

#include <cstdint>
#include <deque>
#include <vector>

namespace lebnorm {

/// The pair (A_k, B_k) at index k.
struct SeqPair {
    std::int64_t k;
    Int A;
    Int B;
};

/// Prefix table of the integer sequences defined by
///   A_{k+1} = 2 A_k + 3 B_k,   A_0 = 1,
///   B_{k+1} =   A_k + 2 B_k,   B_0 = 0.
/// The default table grows on demand (append-only); deque storage keeps
/// references returned by A() and B() valid across later extensions. A table
/// wrapping externally supplied values is fixed-size; such values are not
/// trusted, they are what the check_* functions validate.
class SeqTable {
public:
    SeqTable();
    SeqTable(std::vector<Int> a_values, std::vector<Int> b_values);

    const Int& A(std::int64_t k);
    const Int& B(std::int64_t k);
    SeqPair pair(std::int64_t k);

    void extend_to(std::int64_t k);
    std::int64_t max_index() const { return static_cast<std::int64_t>(a_.size()) - 1; }
    bool extendable() const { return extendable_; }

private:
    std::deque<Int> a_;
    std::deque<Int> b_;
    bool extendable_ = true;
};

/// Exact (A_k, B_k) in one linear pass.
SeqPair seq(std::int64_t k);

/// A_{k+1} <= 4 A_k for 0 <= k <= K and B_{k+1} <= 4 B_k for 1 <= k <= K.
CheckReport check_growth_bounds(SeqTable& t, std::int64_t K);
CheckReport check_growth_bounds(std::int64_t K);

/// A_k = 2 A_{k+1} - 3 B_{k+1} and B_k = 2 B_{k+1} - A_{k+1} for 0 <= k <= K.
CheckReport check_downward_recurrence(SeqTable& t, std::int64_t K);
CheckReport check_downward_recurrence(std::int64_t K);

/// The four summation identities, verified for every 0 <= m <= K:
///   sum_{k<=m} (B_k + B_{k+1}) = A_{m+1} - 1
///   2 sum_{k<=m} A_k           = 3 B_{m+1} - A_{m+1} + 1
///   sum_{k<=m} (A_k + A_{k+1}) = 3 B_{m+1}
///   2 sum_{k<=m} B_k           = A_{m+1} - B_{m+1} - 1
CheckReport check_sum_identities(SeqTable& t, std::int64_t K);
CheckReport check_sum_identities(std::int64_t K);

/// The four addition identities at a fixed n, for all 0 <= k <= n:
///   B_k A_{n-k} + A_k B_{n-k} = B_n      B_n A_{n-k} - B_{n-k} A_n = B_k
///   A_k A_{n-k} + 3 B_{n-k} B_k = A_n    A_n A_{n-k} - 3 B_n B_{n-k} = A_k
CheckReport check_addition_identities(SeqTable& t, std::int64_t n);
CheckReport check_addition_identities(std::int64_t n);

/// Addition identities swept over all 1 <= n <= max_n.
CheckReport check_addition_identities_range(SeqTable& t, std::int64_t max_n);
CheckReport check_addition_identities_range(std::int64_t max_n);

/// Pell invariant A_k^2 - 3 B_k^2 = 1 for 0 <= k <= K.
CheckReport check_pell(SeqTable& t, std::int64_t K);
CheckReport check_pell(std::int64_t K);

/// quad_pow(lambda, k) = (A_k, B_k) componentwise for 0 <= k <= K.
CheckReport check_lambda_powers(SeqTable& t, std::int64_t K);
CheckReport check_lambda_powers(std::int64_t K);

}  // namespace lebnorm
