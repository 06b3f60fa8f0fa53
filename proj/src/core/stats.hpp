#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace tailor::stats {

/// Conditional mean and covariance of the linear statistic
/// T = flatten(sum_i w_i g_i h_i^T) under the permutation null, with T
/// flattened row-major over (g component, h component). With that ordering
/// the covariance factors as Sigma = Cg (x) V where
///   Cg = w./(w.-1) * sum_i w_i g_i g_i^T - 1/(w.-1) * (sum w g)(sum w g)^T
///   V  = 1/w. * sum_i w_i (h_i - hbar)(h_i - hbar)^T
/// These are the exact moments over uniform permutations of the responses.
struct LinearStatistic {
    Eigen::VectorXd T;       // p*q, row-major (g,h)
    Eigen::VectorXd mu;      // p*q
    Eigen::MatrixXd sigma;   // (p*q) x (p*q), symmetric PSD
};

enum class TestKind { quadratic, maximum };
enum class PValueMethod { asymptotic, monte_carlo };

/// G: n x p covariate transform rows, H: n x q influence rows, w: n weights.
/// Requires sum(w) >= 2 after zero-weight rows are removed by the caller.
LinearStatistic linear_statistic(const Eigen::MatrixXd& G, const Eigen::MatrixXd& H,
                                 const Eigen::VectorXd& w);

/// Quadratic form c = (T-mu)^T Sigma^+ (T-mu) with the pseudo-inverse taken
/// by eigen-decomposition (eigenvalues below 1e-10 * lambda_max treated as
/// zero), or the maximum absolute standardized component. A covariance of
/// all zeros yields statistic 0.
double standardized_statistic(const Eigen::VectorXd& T, const Eigen::VectorXd& mu,
                              const Eigen::MatrixXd& sigma, TestKind kind);

/// Rank of a symmetric PSD matrix under the pseudo-inverse tolerance.
int sigma_rank(const Eigen::MatrixXd& sigma);

/// Asymptotic p-value: upper-tail chi-square with df = rank(Sigma) for the
/// quadratic statistic; min(1, 2K Phi(-c)) over the K positive-variance
/// components for the maximum statistic.
double p_value_asymptotic(double statistic, const Eigen::MatrixXd& sigma, TestKind kind);

/// Monte-Carlo p-value: permutes the response rows n_permutations times with
/// the given generator and reports (1 + #{stat_perm >= stat_obs}) / (B + 1).
double p_value_monte_carlo(const Eigen::MatrixXd& G, const Eigen::MatrixXd& H,
                           const Eigen::VectorXd& w, TestKind kind, int n_permutations,
                           std::mt19937_64& rng);

/// Upper tail of the chi-square distribution with (possibly fractional) df.
double chi_square_upper_tail(double x, double df);

/// Standard normal upper tail P(Z > z).
double normal_upper_tail(double z);

inline constexpr double kPseudoInverseTol = 1e-10;

}  // namespace tailor::stats
