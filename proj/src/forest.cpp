#include "dgad/forest.hpp"

#include <algorithm>

#include "dgad/error.hpp"
#include "dgad/prng.hpp"

namespace dgad {

namespace {

double gini(std::uint64_t n0, std::uint64_t n1) {
    const double n = static_cast<double>(n0 + n1);
    if (n == 0.0) return 0.0;
    const double p0 = static_cast<double>(n0) / n;
    const double p1 = static_cast<double>(n1) / n;
    return 1.0 - p0 * p0 - p1 * p1;
}

struct Builder {
    std::span<const Sample> samples;
    std::size_t max_depth;
    std::vector<TreeNode> nodes;

    int build(std::vector<std::uint32_t>& idx, std::size_t depth) {
        std::uint64_t n0 = 0, n1 = 0;
        for (auto i : idx) (samples[i].label == Label::legit ? n0 : n1)++;

        const int node_id = static_cast<int>(nodes.size());
        nodes.emplace_back();

        std::optional<SplitChoice> choice;
        int feature = -1;
        if (n0 != 0 && n1 != 0 && depth < max_depth) {
            std::vector<Sample> subset;
            subset.reserve(idx.size());
            for (auto i : idx) subset.push_back(samples[i]);
            for (int f = 0; f < 2; ++f) {
                auto c = best_split(subset, f);
                if (c && (!choice || c->gain > choice->gain)) {
                    choice = c;
                    feature = f;
                }
            }
        }

        if (!choice) {
            nodes[node_id].n0 = n0;
            nodes[node_id].n1 = n1;
            return node_id;
        }

        std::vector<std::uint32_t> left, right;
        left.reserve(idx.size());
        right.reserve(idx.size());
        for (auto i : idx)
            (feature_value(samples[i].fv, feature) <= choice->threshold ? left : right)
                .push_back(i);
        idx.clear();
        idx.shrink_to_fit();

        nodes[node_id].feature = feature;
        nodes[node_id].threshold = choice->threshold;
        const int l = build(left, depth + 1);
        const int r = build(right, depth + 1);
        nodes[node_id].left = l;
        nodes[node_id].right = r;
        return node_id;
    }
};

} // namespace

std::optional<SplitChoice> best_split(std::span<const Sample> samples, int feature) {
    std::vector<std::pair<double, Label>> points;
    points.reserve(samples.size());
    std::uint64_t total0 = 0, total1 = 0;
    for (const auto& s : samples) {
        points.emplace_back(feature_value(s.fv, feature), s.label);
        (s.label == Label::legit ? total0 : total1)++;
    }
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const double n = static_cast<double>(points.size());
    const double parent = gini(total0, total1);

    std::optional<SplitChoice> best;
    std::uint64_t left0 = 0, left1 = 0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        (points[i].second == Label::legit ? left0 : left1)++;
        if (points[i].first == points[i + 1].first) continue;

        const double threshold = points[i].first + (points[i + 1].first - points[i].first) / 2.0;
        const double nl = static_cast<double>(i + 1);
        const double nr = n - nl;
        const double gain = parent - (nl / n) * gini(left0, left1) -
                            (nr / n) * gini(total0 - left0, total1 - left1);
        if (gain > 0.0 && (!best || gain > best->gain)) best = SplitChoice{threshold, gain};
    }
    return best;
}

DecisionTree train_tree(std::span<const Sample> samples, std::size_t max_depth) {
    Builder builder{samples, max_depth, {}};
    std::vector<std::uint32_t> idx(samples.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
    builder.build(idx, 0);
    return DecisionTree{std::move(builder.nodes)};
}

ForestModel train_forest(std::span<const Sample> samples, const ForestConfig& config) {
    if (samples.empty()) fail(errc::empty_input, "no training samples");
    bool has0 = false, has1 = false;
    for (const auto& s : samples) (s.label == Label::legit ? has0 : has1) = true;
    if (!has0 || !has1) fail(errc::single_class_input, "need samples of both classes");

    ForestModel model;
    model.config = config;
    model.trees.reserve(config.n_trees);
    for (std::size_t t = 0; t < config.n_trees; ++t) {
        Prng rng(config.seed ^ static_cast<std::uint64_t>(t));
        std::vector<Sample> bootstrap;
        bootstrap.reserve(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i)
            bootstrap.push_back(samples[rng.next_below(samples.size())]);
        model.trees.push_back(train_tree(bootstrap, config.max_depth));
    }
    return model;
}

double predict_forest(const ForestModel& model, const FeatureVector& fv) {
    std::size_t votes1 = 0;
    for (const auto& tree : model.trees) {
        const TreeNode* node = &tree.nodes[0];
        while (!node->is_leaf()) {
            const int next =
                feature_value(fv, node->feature) <= node->threshold ? node->left : node->right;
            node = &tree.nodes[static_cast<std::size_t>(next)];
        }
        if (node->n1 > node->n0) ++votes1;
    }
    return static_cast<double>(votes1) / static_cast<double>(model.trees.size());
}

} // namespace dgad
