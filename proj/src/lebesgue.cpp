#include "lebnorm/lebesgue.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace lebnorm {

Rational phi(const Rational& t) {
    if (t == Rational(-1)) throw std::domain_error("phi: pole at t = -1");
    const Rational one_plus = 1 + t;
    return (1 + t * t) / (one_plus * one_plus);
}

double phi(double t) {
    return (1.0 + t * t) / ((1.0 + t) * (1.0 + t));
}

const Rational& LebesgueEval::prefix(std::int64_t m) {
    seqs_.extend_to(m);
    while (static_cast<std::int64_t>(prefix_.size()) <= m) {
        const std::int64_t j = static_cast<std::int64_t>(prefix_.size()) - 1;
        const Int& aj = seqs_.A(j);
        const Int& aj1 = seqs_.A(j + 1);
        prefix_.push_back(prefix_.back() + Rational(aj * aj + aj1 * aj1, aj + aj1));
    }
    return prefix_[static_cast<std::size_t>(m)];
}

Rational LebesgueEval::g(std::int64_t n, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("g: n must be >= 1");
    if (k < 0 || k > n) throw std::out_of_range("g: k must satisfy 0 <= k <= n");
    const Rational sum = Rational(seqs_.A(n - k)) * prefix(k) + Rational(seqs_.A(k)) * prefix(n - k);
    return sum / Rational(seqs_.B(n));
}

Rational LebesgueEval::g(const GramSpec& spec, std::int64_t k) {
    return g(spec.n(), k);
}

NormReport LebesgueEval::norm(std::int64_t n, bool with_per_k) {
    if (n < 1) throw std::invalid_argument("norm: n must be >= 1");
    NormReport report;
    report.n = n;
    // g_k = g_{n-k} termwise, so scanning k <= n/2 covers every value; the
    // mirror half is spot-checked below rather than assumed.
    Rational best = g(n, 0);
    std::vector<std::int64_t> argmax{0};
    for (std::int64_t k = 1; k <= n / 2; ++k) {
        const Rational v = g(n, k);
        if (v > best) {
            best = v;
            argmax.assign(1, k);
        } else if (v == best) {
            argmax.push_back(k);
        }
    }
    if (g(n, n) != g(n, 0)) throw std::logic_error("norm: symmetry spot-check failed at k = n");
    std::vector<std::int64_t> mirrored;
    for (std::int64_t k : argmax) {
        mirrored.push_back(k);
        if (k != n - k) mirrored.push_back(n - k);
    }
    std::sort(mirrored.begin(), mirrored.end());
    report.argmax_indices = std::move(mirrored);
    report.norm_exact = best;
    report.norm_float = to_double(best);
    report.gap = 2 - best;
    if (with_per_k) {
        std::vector<Rational> values;
        values.reserve(static_cast<std::size_t>(n) + 1);
        for (std::int64_t k = 0; k <= n; ++k) values.push_back(g(n, k));
        report.per_k = std::move(values);
    }
    return report;
}

Rational LebesgueEval::dg0(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("dg0: n must be >= 1");
    return g(n + 1, 0) - g(n, 0);
}

Rational LebesgueEval::h(std::int64_t n, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("h: n must be >= 1");
    if (k < 0 || k > n) throw std::out_of_range("h: k must satisfy 0 <= k <= n");
    return Rational(seqs_.B(n)) * (g(n, 0) - g(n, k));
}

Rational g(const GramSpec& spec, std::int64_t k) {
    LebesgueEval eval;
    return eval.g(spec, k);
}

Rational g_via_p(const GramSpec& spec, std::int64_t k) {
    const std::int64_t n = spec.n();
    if (k < 0 || k > n) throw std::out_of_range("g_via_p: k must satisfy 0 <= k <= n");
    const InverseGram inv(spec);
    const Rational half_mesh = spec.mesh() / 2;
    Rational total(0);
    for (std::int64_t i = 1; i <= n; ++i) {
        const Rational cur = abs(inv.entry(i, k));
        const Rational prev = abs(inv.entry(i - 1, k));
        if (prev.is_zero()) throw std::logic_error("g_via_p: zero inverse entry");
        const Rational p = half_mesh * (cur + prev);
        total += p * phi(cur / prev);
    }
    return total;
}

NormReport norm(std::int64_t n) {
    LebesgueEval eval;
    return eval.norm(n);
}

Rational dg0(std::int64_t n) {
    LebesgueEval eval;
    return eval.dg0(n);
}

Rational h(std::int64_t n, std::int64_t k) {
    LebesgueEval eval;
    return eval.h(n, k);
}

std::vector<CheckReport> verify_theorems(std::int64_t N) {
    if (N < 1) throw std::invalid_argument("verify_theorems: N must be >= 1");
    const std::string range = "1<=n<=" + std::to_string(N);
    CheckReport mono{.name = "monotonicity-g0", .range = range};
    CheckReport dom{.name = "dominance-g0", .range = range};
    CheckReport sym{.name = "knot-symmetry", .range = range};
    CheckReport bound{.name = "norm-bound", .range = range};
    CheckReport gaps{.name = "gap-decreasing", .range = range};

    LebesgueEval eval;
    Rational prev_gap;
    for (std::int64_t n = 1; n <= N + 1; ++n) {
        const std::string loc = "n=" + std::to_string(n);
        const Rational g0 = eval.g(n, 0);
        const Rational norm_n = eval.norm(n).norm_exact;  // honest max over k

        if (n <= N) {
            ++mono.checked;
            const Rational d = eval.g(n + 1, 0) - g0;
            if (d.sign() <= 0)
                mono.failures.push_back({"g_0(n+1) - g_0(n) > 0", loc, d.str(), "> 0"});

            for (std::int64_t k = 1; k <= n / 2; ++k) {
                ++dom.checked;
                const Rational gk = eval.g(n, k);
                if (gk >= g0)
                    dom.failures.push_back({"g_0(n) > g_k(n)",
                                            loc + ",k=" + std::to_string(k), g0.str(), gk.str()});
            }

            for (std::int64_t k = 0; k <= n; ++k) {
                ++sym.checked;
                const Rational lhs = eval.g(n, k);
                const Rational rhs = eval.g(n, n - k);
                if (lhs != rhs)
                    sym.failures.push_back({"g_k(n) = g_{n-k}(n)",
                                            loc + ",k=" + std::to_string(k), lhs.str(), rhs.str()});
            }

            ++bound.checked;
            if (norm_n >= 2)
                bound.failures.push_back({"||P_n||_1 < 2", loc, norm_n.str(), "2"});
        }

        const Rational gap = 2 - norm_n;
        if (n >= 2) {
            ++gaps.checked;
            if (gap >= prev_gap)
                gaps.failures.push_back({"gap(n+1) < gap(n)", "n=" + std::to_string(n - 1),
                                         gap.str(), prev_gap.str()});
        }
        prev_gap = gap;
    }
    return {mono, dom, sym, bound, gaps};
}

CheckReport check_g_routes(std::int64_t max_n) {
    if (max_n < 1) throw std::invalid_argument("check_g_routes: max_n must be >= 1");
    CheckReport r{.name = "g-route-equivalence", .range = "1<=n<=" + std::to_string(max_n)};
    LebesgueEval eval;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const GramSpec spec(n);
        for (std::int64_t k = 0; k <= n; ++k) {
            ++r.checked;
            const Rational lhs = eval.g(n, k);
            const Rational rhs = g_via_p(spec, k);
            if (lhs != rhs)
                r.failures.push_back({"g_k(n) = sum p_{i,k} phi(|a_{i,k}|/|a_{i-1,k}|)",
                                      "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                                      lhs.str(), rhs.str()});
        }
    }
    return r;
}

std::vector<LimitRow> limit_diagnostics(std::int64_t N) {
    if (N < 2) throw std::invalid_argument("limit_diagnostics: N must be >= 2");
    std::vector<LimitRow> rows;
    rows.reserve(static_cast<std::size_t>(N));
    LebesgueEval eval;
    Rational prev_gap;
    for (std::int64_t n = 1; n <= N; ++n) {
        const Rational gap = eval.norm(n).gap;
        LimitRow row{n, to_double(gap), std::nullopt};
        if (n >= 2) row.ratio = to_double(gap / prev_gap);
        rows.push_back(row);
        prev_gap = gap;
    }
    return rows;
}

}  // namespace lebnorm
