#include "dgad/features.hpp"

#include <array>
#include <cmath>

#include "dgad/error.hpp"

namespace dgad {

double shannon_entropy(std::string_view s) {
    if (s.empty()) fail(errc::empty_input, "entropy of empty string");

    std::array<std::uint64_t, 256> freq{};
    for (unsigned char c : s) ++freq[c];

    const double n = static_cast<double>(s.size());
    double h = 0.0;
    for (std::uint64_t count : freq) {
        if (count == 0) continue;
        const double p = static_cast<double>(count) / n;
        h -= p * std::log2(p);
    }
    // -0.0 from the single-symbol case
    return h == 0.0 ? 0.0 : h;
}

FeatureVector extract_features(const ParsedDomain& d) {
    return FeatureVector{shannon_entropy(d.root), static_cast<int>(d.root.size())};
}

Histogram entropy_histogram(std::span<const std::pair<FeatureVector, Label>> records,
                            double bin_width) {
    if (records.empty()) fail(errc::empty_input, "histogram of no records");
    if (!(bin_width > 0.0)) fail(errc::non_positive_bin_width, "bin width must be > 0");

    double max_e = 0.0;
    for (const auto& [fv, label] : records) max_e = std::max(max_e, fv.entropy);

    auto n_bins = static_cast<std::size_t>(std::ceil(max_e / bin_width));
    if (n_bins == 0) n_bins = 1;

    Histogram hist;
    hist.bin_width = bin_width;
    hist.bins.resize(n_bins);
    for (std::size_t i = 0; i < n_bins; ++i) {
        hist.bins[i].lo = static_cast<double>(i) * bin_width;
        hist.bins[i].hi = static_cast<double>(i + 1) * bin_width;
    }

    for (const auto& [fv, label] : records) {
        auto idx = static_cast<std::size_t>(fv.entropy / bin_width);
        if (idx >= n_bins) idx = n_bins - 1; // top boundary closes the last bin
        if (label == Label::legit)
            ++hist.bins[idx].count_class0;
        else
            ++hist.bins[idx].count_class1;
    }
    return hist;
}

} // namespace dgad
