#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dgad/features.hpp"
#include "dgad/label.hpp"

namespace dgad {

/// One training sample for the statistical baseline.
struct Sample {
    FeatureVector fv;
    Label label = Label::legit;
};

/// Flat node array; index 0 is the root. Internal nodes route
/// value <= threshold to `left`, otherwise `right`. Leaves carry the
/// class counts they were grown from.
struct TreeNode {
    int feature = -1; // 0 = entropy, 1 = length; -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::uint64_t n0 = 0;
    std::uint64_t n1 = 0;

    bool is_leaf() const { return feature < 0; }
};

struct DecisionTree {
    std::vector<TreeNode> nodes;
};

struct ForestConfig {
    std::size_t n_trees = 100;
    std::size_t max_depth = 8;
    std::uint64_t seed = 0;
};

/// Bagged ensemble of axis-aligned trees over (entropy, length).
struct ForestModel {
    std::vector<DecisionTree> trees;
    ForestConfig config;
};

inline constexpr const char* kFeatureNames[2] = {"entropy", "length"};

inline double feature_value(const FeatureVector& fv, int feature) {
    return feature == 0 ? fv.entropy : static_cast<double>(fv.length);
}

struct SplitChoice {
    double threshold = 0.0;
    double gain = 0.0;
};

/// CART split search on one feature: candidate thresholds are midpoints
/// between consecutive distinct sorted values; returns the candidate with
/// the highest Gini gain (smallest threshold on ties), or nothing when no
/// candidate has positive gain.
std::optional<SplitChoice> best_split(std::span<const Sample> samples, int feature);

/// Greedy recursive growth; stops at max_depth, a pure node, or when no
/// positive-gain split exists. Bootstrap resampling is the caller's job.
DecisionTree train_tree(std::span<const Sample> samples, std::size_t max_depth);

/// Tree t is grown on a bootstrap resample drawn with a generator seeded
/// seed XOR t, so results do not depend on training order.
ForestModel train_forest(std::span<const Sample> samples, const ForestConfig& config);

/// Fraction of trees whose reached leaf is majority class 1 (a tied leaf
/// votes class 0). Classify as DGA at score > 0.5.
double predict_forest(const ForestModel& model, const FeatureVector& fv);

} // namespace dgad
