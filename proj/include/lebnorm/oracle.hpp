#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace lebnorm {

/// Result of the floating-point brute force for one n.
struct OracleResult {
    std::int64_t n = 0;
    double norm_estimate = 0.0;  ///< sup of Lambda over the sample grid
    double argmax_x = 0.0;       ///< sample point attaining the sup
    double knot_max = 0.0;       ///< max of Lambda over the knots
    std::int64_t grid_size = 0;  ///< number of x samples
    double gram_defect = 0.0;    ///< max abs of (numeric gram * numeric inverse - I)
};

/// Hat function N_i on the uniform n-partition: 1 at t_i, 0 at other knots.
double hat(std::int64_t n, std::int64_t i, double x);

/// Gram matrix assembled by per-subinterval 2-point Gauss quadrature,
/// exact in exact arithmetic for the piecewise-quadratic integrands.
Eigen::MatrixXd numeric_gram(std::int64_t n);

/// Independent float pipeline: quadrature Gram, dense Cholesky inverse, and
/// the Lebesgue function Lambda(x) = int_0^1 |K_n(x,y)| dy integrated in
/// closed form per subinterval (K_n(x,.) is affine there; the sign change is
/// bracketed, no quadrature). Nothing here touches the closed-form inverse
/// or the g_k formula.
class Oracle {
public:
    explicit Oracle(std::int64_t n);

    std::int64_t n() const { return n_; }
    const Eigen::MatrixXd& gram() const { return gram_; }
    const Eigen::MatrixXd& inverse() const { return inverse_; }
    double gram_defect() const { return gram_defect_; }

    double lebesgue_function(double x) const;

    /// Sup of Lambda over a uniform grid; the grid count is rounded up to a
    /// multiple of n so every knot is a sample, and must be >= 8n.
    OracleResult norm(std::int64_t grid) const;

private:
    std::int64_t n_;
    Eigen::MatrixXd gram_;
    Eigen::MatrixXd inverse_;
    double gram_defect_;
};

double lebesgue_function(std::int64_t n, double x);
OracleResult oracle_norm(std::int64_t n, std::int64_t grid);

}  // namespace lebnorm
