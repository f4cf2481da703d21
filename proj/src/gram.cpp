#include "lebnorm/gram.hpp"

#include "lebnorm/sequences.hpp"

#include <stdexcept>
#include <string>

namespace lebnorm {

namespace {

void require_index(std::int64_t i, std::int64_t n, const char* what) {
    if (i < 0 || i > n) throw std::out_of_range(std::string(what) + ": index out of range");
}

}  // namespace

GramSpec::GramSpec(std::int64_t n) : n_(n) {
    if (n < 1) throw std::invalid_argument("GramSpec: n must be >= 1");
}

Rational GramSpec::knot(std::int64_t i) const {
    require_index(i, n_, "GramSpec::knot");
    return Rational(Int(i), Int(n_));
}

Rational SymTridiag::entry(std::int64_t i, std::int64_t k) const {
    const std::int64_t n = dim() - 1;
    require_index(i, n, "SymTridiag::entry");
    require_index(k, n, "SymTridiag::entry");
    if (i == k) return diag[static_cast<std::size_t>(i)];
    if (i + 1 == k) return off[static_cast<std::size_t>(i)];
    if (k + 1 == i) return off[static_cast<std::size_t>(k)];
    return Rational(0);
}

SymTridiag gram_matrix(const GramSpec& spec) {
    const std::int64_t n = spec.n();
    const Rational d = spec.mesh();
    SymTridiag m;
    m.diag.assign(static_cast<std::size_t>(n) + 1, d * Rational(2, 3));
    m.diag.front() = d * Rational(1, 3);
    m.diag.back() = d * Rational(1, 3);
    m.off.assign(static_cast<std::size_t>(n), d * Rational(1, 6));
    return m;
}

InverseGram::InverseGram(const GramSpec& spec) : n_(spec.n()) {
    SeqTable t;
    t.extend_to(n_);
    a_seq_.reserve(static_cast<std::size_t>(n_) + 1);
    for (std::int64_t k = 0; k <= n_; ++k) a_seq_.push_back(t.A(k));
    scale_ = Rational(Int(2 * n_), t.B(n_));
}

Rational InverseGram::entry(std::int64_t i, std::int64_t k) const {
    require_index(i, n_, "InverseGram::entry");
    require_index(k, n_, "InverseGram::entry");
    const std::int64_t lo = i < k ? i : k;
    const std::int64_t hi = i < k ? k : i;
    Rational v = scale_ * Rational(a_seq_[static_cast<std::size_t>(lo)] *
                                   a_seq_[static_cast<std::size_t>(n_ - hi)]);
    return ((i + k) & 1) ? -v : v;
}

std::vector<std::vector<Rational>> InverseGram::dense() const {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n_) + 1);
    for (std::int64_t i = 0; i <= n_; ++i) {
        m[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n_) + 1);
        for (std::int64_t k = 0; k <= n_; ++k)
            m[static_cast<std::size_t>(i)].push_back(entry(i, k));
    }
    return m;
}

Rational inverse_gram_entry(const GramSpec& spec, std::int64_t i, std::int64_t k) {
    return InverseGram(spec).entry(i, k);
}

namespace {

Rational expected_ratio(SeqTable& t, std::int64_t n, std::int64_t i, std::int64_t k) {
    t.extend_to(n);
    if (i <= k) return Rational(t.A(i), t.A(i - 1));
    return Rational(t.A(n - i), t.A(n - i + 1));
}

}  // namespace

Rational ratio(const GramSpec& spec, std::int64_t i, std::int64_t k) {
    const std::int64_t n = spec.n();
    require_index(k, n, "ratio");
    if (i < 1 || i > n) throw std::out_of_range("ratio: i must satisfy 1 <= i <= n");
    const InverseGram inv(spec);
    const Rational r = abs(inv.entry(i, k)) / abs(inv.entry(i - 1, k));
    SeqTable t;
    if (r != expected_ratio(t, n, i, k))
        throw std::logic_error("ratio: closed-form ratio law violated");
    return r;
}

CheckReport check_inverse(const GramSpec& spec) {
    return check_inverse(spec, gram_matrix(spec));
}

CheckReport check_inverse(const GramSpec& spec, const SymTridiag& gram) {
    const std::int64_t n = spec.n();
    if (gram.dim() != n + 1)
        throw std::invalid_argument("check_inverse: matrix dimension does not match spec");
    CheckReport r{.name = "gram-inverse", .range = "n=" + std::to_string(n)};
    r.max_defect = Rational(0);
    const InverseGram inv(spec);
    const auto a = inv.dense();
    for (std::int64_t i = 0; i <= n; ++i) {
        for (std::int64_t k = 0; k <= n; ++k) {
            // Row i of the tridiagonal matrix has at most three nonzeros.
            Rational prod = gram.diag[static_cast<std::size_t>(i)] *
                            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (i > 0)
                prod += gram.off[static_cast<std::size_t>(i - 1)] *
                        a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
            if (i < n)
                prod += gram.off[static_cast<std::size_t>(i)] *
                        a[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(k)];
            const Rational defect = prod - Rational(i == k ? 1 : 0);
            ++r.checked;
            if (!defect.is_zero()) {
                r.failures.push_back({"(gram * inverse)_{i,k} = delta_{i,k}",
                                      "n=" + std::to_string(n) + ",i=" + std::to_string(i) +
                                          ",k=" + std::to_string(k),
                                      prod.str(), i == k ? "1" : "0"});
                if (abs(defect) > *r.max_defect) r.max_defect = abs(defect);
            }
        }
    }
    return r;
}

CheckReport check_quota(const GramSpec& spec) {
    const std::int64_t n = spec.n();
    CheckReport r{.name = "quota", .range = "n=" + std::to_string(n)};
    const InverseGram inv(spec);
    SeqTable t;
    t.extend_to(n);
    for (std::int64_t k = 0; k <= n; ++k) {
        for (std::int64_t i = 1; i <= n; ++i) {
            ++r.checked;
            const Rational lhs = abs(inv.entry(i, k)) / abs(inv.entry(i - 1, k));
            const Rational rhs = expected_ratio(t, n, i, k);
            if (lhs != rhs)
                r.failures.push_back({"|a_{i,k}|/|a_{i-1,k}| ratio law",
                                      "n=" + std::to_string(n) + ",i=" + std::to_string(i) +
                                          ",k=" + std::to_string(k),
                                      lhs.str(), rhs.str()});
        }
    }
    return r;
}

}  // namespace lebnorm
