#include "lebnorm/sequences.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace lebnorm {

namespace {

std::string loc_k(std::int64_t k) {
    return "k=" + std::to_string(k);
}

void require_nonnegative(std::int64_t k, const char* what) {
    if (k < 0) throw std::out_of_range(std::string(what) + ": negative index");
}

}  // namespace

SeqTable::SeqTable() : a_{Int(1)}, b_{Int(0)} {}

SeqTable::SeqTable(std::vector<Int> a_values, std::vector<Int> b_values)
    : a_(a_values.begin(), a_values.end()),
      b_(b_values.begin(), b_values.end()),
      extendable_(false) {
    if (a_.empty() || a_.size() != b_.size())
        throw std::invalid_argument("SeqTable: A and B value lists must be nonempty and equal-sized");
}

void SeqTable::extend_to(std::int64_t k) {
    require_nonnegative(k, "SeqTable::extend_to");
    if (k <= max_index()) return;
    if (!extendable_)
        throw std::out_of_range("SeqTable: index beyond fixed externally supplied values");
    while (max_index() < k) {
        a_.push_back(2 * a_.back() + 3 * b_.back());
        b_.push_back(a_[a_.size() - 2] + 2 * b_.back());
    }
}

const Int& SeqTable::A(std::int64_t k) {
    require_nonnegative(k, "SeqTable::A");
    extend_to(k);
    return a_[static_cast<std::size_t>(k)];
}

const Int& SeqTable::B(std::int64_t k) {
    require_nonnegative(k, "SeqTable::B");
    extend_to(k);
    return b_[static_cast<std::size_t>(k)];
}

SeqPair SeqTable::pair(std::int64_t k) {
    return SeqPair{k, A(k), B(k)};
}

SeqPair seq(std::int64_t k) {
    SeqTable t;
    return t.pair(k);
}

CheckReport check_growth_bounds(SeqTable& t, std::int64_t K) {
    if (K < 1) throw std::invalid_argument("check_growth_bounds: K must be >= 1");
    CheckReport r{.name = "growth-bounds", .range = "0<=k<=" + std::to_string(K)};
    t.extend_to(K + 1);
    for (std::int64_t k = 0; k <= K; ++k) {
        ++r.checked;
        if (t.A(k + 1) > 4 * t.A(k))
            r.failures.push_back({"A_{k+1} <= 4 A_k", loc_k(k), t.A(k + 1).get_str(),
                                  Int(4 * t.A(k)).get_str()});
    }
    for (std::int64_t k = 1; k <= K; ++k) {
        ++r.checked;
        if (t.B(k + 1) > 4 * t.B(k))
            r.failures.push_back({"B_{k+1} <= 4 B_k", loc_k(k), t.B(k + 1).get_str(),
                                  Int(4 * t.B(k)).get_str()});
    }
    return r;
}

CheckReport check_downward_recurrence(SeqTable& t, std::int64_t K) {
    if (K < 1) throw std::invalid_argument("check_downward_recurrence: K must be >= 1");
    CheckReport r{.name = "downward-recurrence", .range = "0<=k<=" + std::to_string(K)};
    t.extend_to(K + 1);
    for (std::int64_t k = 0; k <= K; ++k) {
        ++r.checked;
        const Int a_expect = 2 * t.A(k + 1) - 3 * t.B(k + 1);
        if (t.A(k) != a_expect)
            r.failures.push_back(
                {"A_k = 2 A_{k+1} - 3 B_{k+1}", loc_k(k), t.A(k).get_str(), a_expect.get_str()});
        const Int b_expect = 2 * t.B(k + 1) - t.A(k + 1);
        if (t.B(k) != b_expect)
            r.failures.push_back(
                {"B_k = 2 B_{k+1} - A_{k+1}", loc_k(k), t.B(k).get_str(), b_expect.get_str()});
    }
    return r;
}

CheckReport check_sum_identities(SeqTable& t, std::int64_t K) {
    if (K < 0) throw std::invalid_argument("check_sum_identities: K must be >= 0");
    CheckReport r{.name = "sum-identities", .range = "0<=m<=" + std::to_string(K)};
    t.extend_to(K + 1);
    Int sum_bb = 0;  // sum of B_k + B_{k+1}
    Int sum_a = 0;   // sum of A_k
    Int sum_aa = 0;  // sum of A_k + A_{k+1}
    Int sum_b = 0;   // sum of B_k
    for (std::int64_t m = 0; m <= K; ++m) {
        sum_bb += t.B(m) + t.B(m + 1);
        sum_a += t.A(m);
        sum_aa += t.A(m) + t.A(m + 1);
        sum_b += t.B(m);
        const std::string loc = "m=" + std::to_string(m);
        ++r.checked;
        if (sum_bb != t.A(m + 1) - 1)
            r.failures.push_back({"sum(B_k+B_{k+1}) = A_{m+1}-1", loc, sum_bb.get_str(),
                                  Int(t.A(m + 1) - 1).get_str()});
        ++r.checked;
        if (2 * sum_a != 3 * t.B(m + 1) - t.A(m + 1) + 1)
            r.failures.push_back({"2 sum(A_k) = 3 B_{m+1}-A_{m+1}+1", loc, Int(2 * sum_a).get_str(),
                                  Int(3 * t.B(m + 1) - t.A(m + 1) + 1).get_str()});
        ++r.checked;
        if (sum_aa != 3 * t.B(m + 1))
            r.failures.push_back({"sum(A_k+A_{k+1}) = 3 B_{m+1}", loc, sum_aa.get_str(),
                                  Int(3 * t.B(m + 1)).get_str()});
        ++r.checked;
        if (2 * sum_b != t.A(m + 1) - t.B(m + 1) - 1)
            r.failures.push_back({"2 sum(B_k) = A_{m+1}-B_{m+1}-1", loc, Int(2 * sum_b).get_str(),
                                  Int(t.A(m + 1) - t.B(m + 1) - 1).get_str()});
    }
    return r;
}

namespace {

void addition_identities_at(SeqTable& t, std::int64_t n, CheckReport& r) {
    for (std::int64_t k = 0; k <= n; ++k) {
        const Int& ak = t.A(k);
        const Int& bk = t.B(k);
        const Int& am = t.A(n - k);
        const Int& bm = t.B(n - k);
        const Int& an = t.A(n);
        const Int& bn = t.B(n);
        const std::string loc = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
        ++r.checked;
        if (bk * am + ak * bm != bn)
            r.failures.push_back({"B_k A_{n-k} + A_k B_{n-k} = B_n", loc,
                                  Int(bk * am + ak * bm).get_str(), bn.get_str()});
        ++r.checked;
        if (bn * am - bm * an != bk)
            r.failures.push_back({"B_n A_{n-k} - B_{n-k} A_n = B_k", loc,
                                  Int(bn * am - bm * an).get_str(), bk.get_str()});
        ++r.checked;
        if (ak * am + 3 * bm * bk != an)
            r.failures.push_back({"A_k A_{n-k} + 3 B_{n-k} B_k = A_n", loc,
                                  Int(ak * am + 3 * bm * bk).get_str(), an.get_str()});
        ++r.checked;
        if (an * am - 3 * bn * bm != ak)
            r.failures.push_back({"A_n A_{n-k} - 3 B_n B_{n-k} = A_k", loc,
                                  Int(an * am - 3 * bn * bm).get_str(), ak.get_str()});
    }
}

}  // namespace

CheckReport check_addition_identities(SeqTable& t, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("check_addition_identities: n must be >= 1");
    CheckReport r{.name = "addition-identities", .range = "n=" + std::to_string(n)};
    t.extend_to(n);
    addition_identities_at(t, n, r);
    return r;
}

CheckReport check_addition_identities_range(SeqTable& t, std::int64_t max_n) {
    if (max_n < 1) throw std::invalid_argument("check_addition_identities_range: max_n must be >= 1");
    CheckReport r{.name = "addition-identities", .range = "1<=n<=" + std::to_string(max_n)};
    t.extend_to(max_n);
    for (std::int64_t n = 1; n <= max_n; ++n) addition_identities_at(t, n, r);
    return r;
}

CheckReport check_pell(SeqTable& t, std::int64_t K) {
    if (K < 0) throw std::invalid_argument("check_pell: K must be >= 0");
    CheckReport r{.name = "pell-invariant", .range = "0<=k<=" + std::to_string(K)};
    t.extend_to(K);
    for (std::int64_t k = 0; k <= K; ++k) {
        ++r.checked;
        const Int lhs = t.A(k) * t.A(k) - 3 * t.B(k) * t.B(k);
        if (lhs != 1)
            r.failures.push_back({"A_k^2 - 3 B_k^2 = 1", loc_k(k), lhs.get_str(), "1"});
    }
    return r;
}

CheckReport check_lambda_powers(SeqTable& t, std::int64_t K) {
    if (K < 0) throw std::invalid_argument("check_lambda_powers: K must be >= 0");
    CheckReport r{.name = "lambda-power-agreement", .range = "0<=k<=" + std::to_string(K)};
    t.extend_to(K);
    for (std::int64_t k = 0; k <= K; ++k) {
        ++r.checked;
        const QuadInt p = quad_pow(quad_lambda(), k);
        if (p.a != t.A(k) || p.b != t.B(k))
            r.failures.push_back({"lambda^k = A_k + B_k sqrt(3)", loc_k(k),
                                  "(" + p.a.get_str() + ", " + p.b.get_str() + ")",
                                  "(" + t.A(k).get_str() + ", " + t.B(k).get_str() + ")"});
    }
    return r;
}

CheckReport check_growth_bounds(std::int64_t K) {
    SeqTable t;
    return check_growth_bounds(t, K);
}

CheckReport check_downward_recurrence(std::int64_t K) {
    SeqTable t;
    return check_downward_recurrence(t, K);
}

CheckReport check_sum_identities(std::int64_t K) {
    SeqTable t;
    return check_sum_identities(t, K);
}

CheckReport check_addition_identities(std::int64_t n) {
    SeqTable t;
    return check_addition_identities(t, n);
}

CheckReport check_addition_identities_range(std::int64_t max_n) {
    SeqTable t;
    return check_addition_identities_range(t, max_n);
}

CheckReport check_pell(std::int64_t K) {
    SeqTable t;
    return check_pell(t, K);
}

CheckReport check_lambda_powers(std::int64_t K) {
    SeqTable t;
    return check_lambda_powers(t, K);
}

}  // namespace lebnorm
