#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "core/schema.hpp"
#include "core/stats.hpp"

namespace tailor::cit {

enum class Multiplicity { bonferroni, none };

/// Learner configuration. Defaults follow the conventional settings of
/// permutation-test tree induction: alpha 0.05 with Bonferroni adjustment,
/// quadratic test statistic, asymptotic p-values, min_split 20, min_bucket 7.
struct CitConfig {
    double alpha = 0.05;
    stats::TestKind test_statistic = stats::TestKind::quadratic;
    stats::PValueMethod p_value_method = stats::PValueMethod::asymptotic;
    int n_permutations = 9999;   // monte_carlo only
    Multiplicity multiplicity = Multiplicity::bonferroni;
    int min_split = 20;
    int min_bucket = 7;
    int max_depth = 0;           // 0 = unlimited
    int max_exhaustive_levels = 10;
    bool rank_numeric = false;   // use midranks for numeric covariates
    std::uint64_t seed = 0;

    void validate() const;
};

/// Binary split predicate. Numeric: go left iff value <= threshold. Nominal:
/// go left iff the level code is in `subset` (a proper nonempty subset of the
/// covariate's levels, stored ascending).
struct SplitRule {
    int covariate = -1;
    bool nominal = false;
    double threshold = 0.0;
    std::vector<int> subset;

    bool goes_left(const CovariateValue& v) const;
};

struct TreeNode {
    bool leaf = true;
    int depth = 1;  // root = 1

    // decision
    SplitRule split;
    double p_adjusted = 0.0;
    double statistic = 0.0;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;

    // leaf
    std::array<std::int64_t, kElementCount> counts{};
    std::int64_t total = 0;

    // number of training observations below this node; used for
    // majority-branch routing of unseen levels
    std::int64_t subtree_total = 0;
};

struct CitTree {
    std::unique_ptr<TreeNode> root;

    int leaf_count() const;
    int depth() const;
    /// Shallowest level (root = 1) at which each covariate splits; 0 = unused.
    std::vector<int> covariate_levels(size_t n_covariates) const;
};

/// Column store for one rank's observations against a frozen covariate
/// schema. Weights scale the test statistics only; node sizes and leaf counts
/// always count observations.
struct TrainingData {
    const CovariateSchema* schema = nullptr;
    std::vector<std::vector<int>> codes;      // per nominal covariate
    std::vector<std::vector<double>> values;  // per numeric covariate
    std::vector<int> response;                // canonical element indices
    std::vector<double> weights;

    explicit TrainingData(const CovariateSchema& s);
    void add_row(const std::vector<CovariateValue>& covariates, int response, double weight = 1.0);
    size_t size() const { return response.size(); }
};

/// One-hot encoding of the responses for the given rows (n x 21).
Eigen::MatrixXd influence_matrix(const TrainingData& data, std::span<const int> rows);

/// Covariate transform for the given rows: one-hot over the frozen levels for
/// nominal covariates (n x L), raw values or midranks for numeric ones (n x 1).
Eigen::MatrixXd covariate_transform(const TrainingData& data, int covariate,
                                    std::span<const int> rows, bool rank_numeric);

struct Selection {
    int covariate = -1;
    double p_adjusted = 1.0;
    double statistic = 0.0;
};

/// Tests each covariate's independence from the response at this node and
/// returns the strongest one if its adjusted p-value is at most alpha.
/// `node_id` keys the Monte-Carlo permutation stream (root 1, children 2i and
/// 2i+1) so training stays deterministic.
std::optional<Selection> select_covariate(const TrainingData& data, std::span<const int> rows,
                                          const CitConfig& config, std::uint64_t node_id = 1);

/// Maximizes the two-sample quadratic statistic of the split indicator
/// against the response over all feasible cutpoints of the selected
/// covariate. Nominal covariates with more than max_exhaustive_levels levels
/// are scanned in first-principal-coordinate order of their class
/// distributions instead of exhaustively.
std::optional<SplitRule> best_split(const TrainingData& data, std::span<const int> rows,
                                    int covariate, const CitConfig& config);

/// Recursive partitioning: stops on min_split, max_depth, a failed selection
/// test, or an infeasible split. Deterministic for a fixed config and
/// invariant to the input row order.
CitTree grow_tree(const TrainingData& data, const CitConfig& config);

/// Routes the covariate vector to a leaf and returns counts/total. Unseen
/// nominal levels are encoded as code -1: policy error rejects them, policy
/// majority_branch follows the child with the larger training total.
std::array<double, kElementCount> predict_distribution(const CitTree& tree,
                                                       const CovariateSchema& schema,
                                                       const std::vector<CovariateValue>& x,
                                                       UnseenLevelPolicy policy);

/// Like encode_query but marks unseen nominal levels with code -1 instead of
/// failing (majority-branch routing resolves them during prediction).
std::vector<CovariateValue> encode_query_lenient(const CovariateSchema& schema,
                                                 const Query& query);

}  // namespace tailor::cit
