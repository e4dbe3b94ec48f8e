#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dgad/domain.hpp"
#include "dgad/label.hpp"

namespace dgad {

/// Lexical features of one root label: character-distribution entropy in
/// bits and the label's character count.
struct FeatureVector {
    double entropy = 0.0;
    int length = 0;
};

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t count_class0 = 0;
    std::uint64_t count_class1 = 0;
};

/// Per-class entropy distribution. Bins are contiguous, half-open
/// [lo, hi) except the last, which is closed at both ends.
struct Histogram {
    double bin_width = 0.0;
    std::vector<HistogramBin> bins;
};

/// Shannon entropy in bits over the character frequencies of `s`.
double shannon_entropy(std::string_view s);

/// Features are computed on the root label only; the public suffix never
/// reaches the classifiers.
FeatureVector extract_features(const ParsedDomain& d);

Histogram entropy_histogram(std::span<const std::pair<FeatureVector, Label>> records,
                            double bin_width);

} // namespace dgad
