#include "lebnorm/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace lebnorm {

namespace {

void require_n(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("oracle: n must be >= 1");
}

// Integral of |affine| over an interval of width d with endpoint values a, b.
double abs_affine_integral(double a, double b, double d) {
    if (a * b >= 0.0) return 0.5 * d * (std::abs(a) + std::abs(b));
    // Opposite signs: the line crosses zero at fraction s = a / (a - b).
    const double s = a / (a - b);
    return 0.5 * d * (std::abs(a) * s + std::abs(b) * (1.0 - s));
}

}  // namespace

double hat(std::int64_t n, std::int64_t i, double x) {
    require_n(n);
    if (i < 0 || i > n) throw std::out_of_range("hat: index out of range");
    const double t = 1.0 - std::abs(static_cast<double>(n) * x - static_cast<double>(i));
    return t > 0.0 ? t : 0.0;
}

Eigen::MatrixXd numeric_gram(std::int64_t n) {
    require_n(n);
    const auto dim = static_cast<Eigen::Index>(n) + 1;
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
    const double d = 1.0 / static_cast<double>(n);
    const double offset = 0.5 / std::sqrt(3.0);  // 2-point Gauss on [0,1]
    const double nodes[2] = {0.5 - offset, 0.5 + offset};
    const double weight = 0.5 * d;
    for (std::int64_t m = 0; m < n; ++m) {
        for (const double s : nodes) {
            const double x = (static_cast<double>(m) + s) * d;
            // Only N_m and N_{m+1} are supported on this subinterval.
            const double vm = hat(n, m, x);
            const double vm1 = hat(n, m + 1, x);
            g(m, m) += weight * vm * vm;
            g(m, m + 1) += weight * vm * vm1;
            g(m + 1, m) += weight * vm1 * vm;
            g(m + 1, m + 1) += weight * vm1 * vm1;
        }
    }
    return g;
}

Oracle::Oracle(std::int64_t n) : n_(n), gram_(numeric_gram(n)) {
    // Unpivoted dense Cholesky: generic SPD factorization, no use of the
    // tridiagonal structure or of any closed form.
    const Eigen::LLT<Eigen::MatrixXd> llt(gram_);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("Oracle: Cholesky factorization failed");
    const auto dim = static_cast<Eigen::Index>(n_) + 1;
    inverse_ = llt.solve(Eigen::MatrixXd::Identity(dim, dim));
    gram_defect_ =
        (gram_ * inverse_ - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

double Oracle::lebesgue_function(double x) const {
    if (x < 0.0 || x > 1.0) throw std::out_of_range("lebesgue_function: x outside [0,1]");
    // Nodal values of K_n(x, .): c_k = sum_i a_{i,k} N_i(x); N_.(x) has at
    // most two nonzero entries, so c is a blend of two inverse rows.
    const double nd = static_cast<double>(n_);
    std::int64_t cell = static_cast<std::int64_t>(std::floor(x * nd));
    if (cell >= n_) cell = n_ - 1;
    const double w = x * nd - static_cast<double>(cell);
    const Eigen::VectorXd c =
        (1.0 - w) * inverse_.row(cell).transpose() + w * inverse_.row(cell + 1).transpose();
    const double d = 1.0 / nd;
    double total = 0.0;
    for (std::int64_t m = 0; m < n_; ++m) total += abs_affine_integral(c(m), c(m + 1), d);
    return total;
}

OracleResult Oracle::norm(std::int64_t grid) const {
    if (grid < 8 * n_) throw std::invalid_argument("Oracle::norm: grid must be >= 8n");
    const std::int64_t cells = ((grid + n_ - 1) / n_) * n_;  // knots land on samples
    OracleResult result;
    result.n = n_;
    result.grid_size = cells + 1;
    result.gram_defect = gram_defect_;
    for (std::int64_t j = 0; j <= cells; ++j) {
        const double x = static_cast<double>(j) / static_cast<double>(cells);
        const double v = lebesgue_function(x);
        if (v > result.norm_estimate) {
            result.norm_estimate = v;
            result.argmax_x = x;
        }
    }
    for (std::int64_t i = 0; i <= n_; ++i) {
        const double v = lebesgue_function(static_cast<double>(i) / static_cast<double>(n_));
        if (v > result.knot_max) result.knot_max = v;
    }
    return result;
}

double lebesgue_function(std::int64_t n, double x) {
    return Oracle(n).lebesgue_function(x);
}

OracleResult oracle_norm(std::int64_t n, std::int64_t grid) {
    return Oracle(n).norm(grid);
}

}  // namespace lebnorm
