#include "core/stats.hpp"

#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/common.hpp"

namespace tailor::stats {

LinearStatistic linear_statistic(const Eigen::MatrixXd& G, const Eigen::MatrixXd& H,
                                 const Eigen::VectorXd& w) {
    const Eigen::Index n = G.rows();
    const Eigen::Index p = G.cols();
    const Eigen::Index q = H.cols();
    if (H.rows() != n || w.size() != n)
        fail(ErrorCode::invalid_argument, "linear_statistic: row counts disagree");
    const double wsum = w.sum();
    if (!(wsum >= 2.0))
        fail(ErrorCode::invalid_argument,
             "linear_statistic: total weight must be at least 2, got " + format_double(wsum));

    const Eigen::VectorXd hbar = (H.transpose() * w) / wsum;
    const Eigen::MatrixXd Hc = H.rowwise() - hbar.transpose();
    const Eigen::MatrixXd V = (Hc.transpose() * w.asDiagonal() * Hc) / wsum;

    const Eigen::MatrixXd Tmat = G.transpose() * w.asDiagonal() * H;  // p x q
    const Eigen::VectorXd gsum = G.transpose() * w;
    const Eigen::MatrixXd gram = G.transpose() * w.asDiagonal() * G;
    const Eigen::MatrixXd Cg =
        (wsum / (wsum - 1.0)) * gram - (1.0 / (wsum - 1.0)) * (gsum * gsum.transpose());

    LinearStatistic out;
    out.T.resize(p * q);
    out.mu.resize(p * q);
    const Eigen::MatrixXd mu_mat = gsum * hbar.transpose();
    for (Eigen::Index a = 0; a < p; ++a) {
        for (Eigen::Index b = 0; b < q; ++b) {
            out.T(a * q + b) = Tmat(a, b);
            out.mu(a * q + b) = mu_mat(a, b);
        }
    }
    // Kronecker Cg (x) V matches the row-major (g,h) flattening above.
    out.sigma.resize(p * q, p * q);
    for (Eigen::Index a = 0; a < p; ++a)
        for (Eigen::Index c = 0; c < p; ++c)
            out.sigma.block(a * q, c * q, q, q) = Cg(a, c) * V;
    out.sigma = ((out.sigma + out.sigma.transpose()) / 2.0).eval();
    return out;
}

namespace {

struct SigmaEigen {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;
    int rank = 0;
    double lambda_max = 0;
};

SigmaEigen decompose(const Eigen::MatrixXd& sigma) {
    SigmaEigen e;
    const Eigen::MatrixXd sym = (sigma + sigma.transpose()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::internal, "eigen-decomposition of covariance failed");
    e.values = solver.eigenvalues();
    e.vectors = solver.eigenvectors();
    e.lambda_max = std::max(0.0, e.values.maxCoeff());
    if (e.lambda_max > 0) {
        const double cut = kPseudoInverseTol * e.lambda_max;
        for (Eigen::Index i = 0; i < e.values.size(); ++i)
            if (e.values(i) > cut) ++e.rank;
    }
    return e;
}

double quadratic_from(const SigmaEigen& e, const Eigen::VectorXd& d) {
    if (e.rank == 0) return 0.0;
    const double cut = kPseudoInverseTol * e.lambda_max;
    double stat = 0;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) {
        if (e.values(i) <= cut) continue;
        const double proj = e.vectors.col(i).dot(d);
        stat += proj * proj / e.values(i);
    }
    return stat;
}

double maximum_from(const Eigen::VectorXd& d, const Eigen::MatrixXd& sigma) {
    double stat = 0;
    bool any = false;
    for (Eigen::Index k = 0; k < d.size(); ++k) {
        const double var = sigma(k, k);
        if (var <= 0) continue;
        any = true;
        stat = std::max(stat, std::abs(d(k)) / std::sqrt(var));
    }
    return any ? stat : 0.0;
}

int positive_variance_count(const Eigen::MatrixXd& sigma) {
    int count = 0;
    for (Eigen::Index k = 0; k < sigma.rows(); ++k)
        if (sigma(k, k) > 0) ++count;
    return count;
}

}  // namespace

double standardized_statistic(const Eigen::VectorXd& T, const Eigen::VectorXd& mu,
                              const Eigen::MatrixXd& sigma, TestKind kind) {
    const Eigen::VectorXd d = T - mu;
    if (kind == TestKind::maximum) return maximum_from(d, sigma);
    return quadratic_from(decompose(sigma), d);
}

int sigma_rank(const Eigen::MatrixXd& sigma) { return decompose(sigma).rank; }

double p_value_asymptotic(double statistic, const Eigen::MatrixXd& sigma, TestKind kind) {
    if (kind == TestKind::quadratic) {
        const int df = sigma_rank(sigma);
        if (df == 0) return 1.0;
        return chi_square_upper_tail(statistic, static_cast<double>(df));
    }
    const int K = positive_variance_count(sigma);
    if (K == 0) return 1.0;
    return std::min(1.0, 2.0 * K * normal_upper_tail(statistic));
}

double p_value_monte_carlo(const Eigen::MatrixXd& G, const Eigen::MatrixXd& H,
                           const Eigen::VectorXd& w, TestKind kind, int n_permutations,
                           std::mt19937_64& rng) {
    if (n_permutations < 1)
        fail(ErrorCode::invalid_argument, "monte_carlo requires at least one permutation");
    const LinearStatistic obs = linear_statistic(G, H, w);
    const SigmaEigen eig = decompose(obs.sigma);
    const double observed = kind == TestKind::quadratic
                                ? quadratic_from(eig, obs.T - obs.mu)
                                : maximum_from(obs.T - obs.mu, obs.sigma);
    // mu and Sigma are invariant under the permutations sampled here; only T
    // needs recomputing per draw.
    const Eigen::Index n = G.rows();
    const Eigen::Index p = G.cols();
    const Eigen::Index q = H.cols();
    std::vector<Eigen::Index> perm(n);
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    const double threshold = observed - 1e-9 * std::max(1.0, std::abs(observed));

    int count = 0;
    Eigen::VectorXd Tp(p * q);
    for (int b = 0; b < n_permutations; ++b) {
        std::shuffle(perm.begin(), perm.end(), rng);
        Tp.setZero();
        for (Eigen::Index i = 0; i < n; ++i) {
            const double wi = w(i);
            if (wi == 0) continue;
            const auto h = H.row(perm[i]);
            for (Eigen::Index a = 0; a < p; ++a) {
                const double wg = wi * G(i, a);
                if (wg == 0) continue;
                for (Eigen::Index bq = 0; bq < q; ++bq) Tp(a * q + bq) += wg * h(bq);
            }
        }
        const double stat = kind == TestKind::quadratic
                                ? quadratic_from(eig, Tp - obs.mu)
                                : maximum_from(Tp - obs.mu, obs.sigma);
        if (stat >= threshold) ++count;
    }
    return (1.0 + count) / (n_permutations + 1.0);
}

double chi_square_upper_tail(double x, double df) {
    if (df <= 0) return 1.0;
    if (x <= 0) return 1.0;
    return gsl_sf_gamma_inc_Q(df / 2.0, x / 2.0);
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace tailor::stats
