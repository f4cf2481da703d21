#pragma once

#include "lebnorm/numbers.hpp"
#include "lebnorm/report.hpp"

#include <cstdint>
#include <vector>

namespace lebnorm {

/// Uniform partition of [0,1] into n subintervals with knots t_i = i/n.
/// The hat-function basis on it has dimension n+1.
class GramSpec {
public:
    explicit GramSpec(std::int64_t n);

    std::int64_t n() const { return n_; }
    Rational knot(std::int64_t i) const;
    Rational mesh() const { return Rational(Int(1), Int(n_)); }

private:
    std::int64_t n_;
};

/// Symmetric tridiagonal matrix with exact rational entries.
struct SymTridiag {
    std::vector<Rational> diag;  ///< n+1 diagonal entries
    std::vector<Rational> off;   ///< n superdiagonal entries, off[i] = entry (i, i+1)

    std::int64_t dim() const { return static_cast<std::int64_t>(diag.size()); }
    Rational entry(std::int64_t i, std::int64_t k) const;
};

/// Exact Gram matrix of the hat basis: diagonal 2d/3 (d/3 at the two ends),
/// off-diagonal d/6, with d the mesh width.
SymTridiag gram_matrix(const GramSpec& spec);

/// Closed-form inverse Gram entries
///   a_{i,k} = (2n / B_n) (-1)^{i+k} A_{min(i,k)} A_{n - max(i,k)}.
class InverseGram {
public:
    explicit InverseGram(const GramSpec& spec);

    std::int64_t n() const { return n_; }
    std::int64_t dim() const { return n_ + 1; }
    Rational entry(std::int64_t i, std::int64_t k) const;
    std::vector<std::vector<Rational>> dense() const;

private:
    std::int64_t n_;
    std::vector<Int> a_seq_;  // A_0 .. A_n
    Rational scale_;          // 2n / B_n
};

Rational inverse_gram_entry(const GramSpec& spec, std::int64_t i, std::int64_t k);

/// |a_{i,k}| / |a_{i-1,k}| for 1 <= i <= n. Asserts the closed-form ratio law
/// (A_i/A_{i-1} for i <= k, A_{n-i}/A_{n-i+1} for i > k) before returning.
Rational ratio(const GramSpec& spec, std::int64_t i, std::int64_t k);

/// Exact product of gram_matrix and the closed-form inverse against the
/// identity; max_defect in the report must be exactly 0.
CheckReport check_inverse(const GramSpec& spec);

/// Same check against a caller-supplied candidate Gram matrix.
CheckReport check_inverse(const GramSpec& spec, const SymTridiag& gram);

/// Ratio law over every admissible (i, k) pair of one partition.
CheckReport check_quota(const GramSpec& spec);

}  // namespace lebnorm
