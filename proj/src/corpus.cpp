#include "dgad/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <unordered_set>

#include "dgad/error.hpp"
#include "dgad/prng.hpp"

namespace dgad {

namespace {

constexpr std::string_view kAlpha36 = "abcdefghijklmnopqrstuvwxyz0123456789";

LabeledDomain make_record(std::string root, std::string suffix, Label label,
                          std::string family) {
    LabeledDomain rec;
    rec.parsed.root = std::move(root);
    rec.parsed.suffix = std::move(suffix);
    rec.parsed.original = rec.parsed.root + "." + rec.parsed.suffix;
    rec.label = label;
    rec.family = std::move(family);
    return rec;
}

void check_wordlist(std::span<const std::string_view> words) {
    if (words.size() < 2) fail(errc::wordlist_too_small, "need at least 2 words");
    for (auto w : words) {
        bool ok = w.size() >= 3 && w.size() <= 10 &&
                  std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; });
        if (!ok) fail(errc::bad_word, "\"" + std::string(w) + "\" is not 3-10 lowercase letters");
    }
}

void fisher_yates(std::vector<std::size_t>& v, Prng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = rng.next_below(i);
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace

IngestResult ingest_tranco(std::istream& in, std::size_t limit, const SuffixTable& table) {
    IngestResult result;
    if (!in && !in.eof()) fail(errc::io_failure, "unreadable tranco stream");

    std::string line;
    int line_no = 0;
    while (result.records.size() < limit && std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            fail(errc::malformed_csv_line,
                 "line " + std::to_string(line_no) + ": expected \"rank,domain\"");

        try {
            ParsedDomain parsed = parse_domain(line.substr(comma + 1), table);
            result.records.push_back({std::move(parsed), Label::legit, "tranco"});
        } catch (const Error&) {
            ++result.skipped;
        }
    }
    return result;
}

IngestResult ingest_feed(std::istream& in, const std::string& family, const SuffixTable& table) {
    IngestResult result;
    if (!in && !in.eof()) fail(errc::io_failure, "unreadable feed stream");

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        try {
            ParsedDomain parsed = parse_domain(line, table);
            result.records.push_back({std::move(parsed), Label::dga, family});
        } catch (const Error&) {
            ++result.skipped;
        }
    }
    return result;
}

std::vector<LabeledDomain> gen_uniform_dga(std::uint64_t seed, std::size_t count,
                                           std::size_t min_len, std::size_t max_len) {
    if (min_len < 1 || min_len > max_len || max_len > 63)
        fail(errc::bad_length_range, "need 1 <= min_len <= max_len <= 63");

    static constexpr std::array<std::string_view, 5> suffixes = {"com", "net", "org", "info",
                                                                 "biz"};
    Prng rng(seed);
    std::vector<LabeledDomain> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t len = min_len + rng.next_below(max_len - min_len + 1);
        std::string root(len, '\0');
        for (std::size_t j = 0; j < len; ++j) {
            char c = kAlpha36[rng.next_below(36)];
            if (j == 0 && c >= '0' && c <= '9') c = kAlpha36[rng.next_below(26)];
            root[j] = c;
        }
        out.push_back(make_record(std::move(root), std::string(suffixes[i % suffixes.size()]),
                                  Label::dga, "uniform"));
    }
    return out;
}

std::vector<LabeledDomain> gen_arith_dga(Date seed_date, std::size_t count) {
    static constexpr std::array<int, 12> days = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    const auto [year, month, day] = seed_date;
    bool leap = year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
    int max_day = (month >= 1 && month <= 12) ? days[month - 1] + (month == 2 && leap ? 1 : 0) : 0;
    if (year < 1 || month < 1 || month > 12 || day < 1 || day > max_day)
        fail(errc::invalid_date, std::to_string(year) + "-" + std::to_string(month) + "-" +
                                     std::to_string(day));

    Prng rng(static_cast<std::uint64_t>(year) * 10000 + month * 100 + day);
    std::vector<LabeledDomain> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t len = 12 + rng.next_below(8);
        std::string root(len, '\0');
        for (auto& c : root) c = static_cast<char>('a' + rng.next_below(26));
        out.push_back(make_record(std::move(root), "com", Label::dga, "arith"));
    }
    return out;
}

std::vector<LabeledDomain> gen_dict_dga(std::uint64_t seed,
                                        std::span<const std::string_view> wordlist,
                                        std::size_t count) {
    check_wordlist(wordlist);

    Prng rng(seed);
    std::vector<LabeledDomain> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::string root(wordlist[rng.next_below(wordlist.size())]);
        root += wordlist[rng.next_below(wordlist.size())];
        out.push_back(make_record(std::move(root), "net", Label::dga, "dict"));
    }
    return out;
}

std::vector<LabeledDomain> gen_natural(std::uint64_t seed,
                                       std::span<const std::string_view> wordlist,
                                       std::size_t count) {
    check_wordlist(wordlist);

    static constexpr std::array<std::string_view, 3> suffixes = {"com", "org", "com.br"};
    Prng rng(seed);
    std::vector<LabeledDomain> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        bool single = rng.next_below(4) == 0;
        std::string root(wordlist[rng.next_below(wordlist.size())]);
        if (!single) root += wordlist[rng.next_below(wordlist.size())];
        out.push_back(make_record(std::move(root), std::string(suffixes[i % suffixes.size()]),
                                  Label::legit, "natural"));
    }
    return out;
}

DatasetSplit balance_and_split(std::vector<LabeledDomain> records, SplitRatios ratios,
                               std::uint64_t seed) {
    const double sum = ratios.train + ratios.validation + ratios.test;
    if (ratios.train < 0 || ratios.validation < 0 || ratios.test < 0 ||
        std::abs(sum - 1.0) > 1e-9)
        fail(errc::bad_ratios, "ratios must be non-negative and sum to 1");

    bool has0 = false, has1 = false;
    for (const auto& r : records) (r.label == Label::legit ? has0 : has1) = true;
    if (!has0 || !has1) fail(errc::single_class_input, "need records of both classes");

    // dedup by original, first occurrence wins
    std::unordered_set<std::string> seen;
    std::vector<LabeledDomain> unique;
    unique.reserve(records.size());
    for (auto& r : records)
        if (seen.insert(r.parsed.original).second) unique.push_back(std::move(r));

    std::vector<LabeledDomain> classes[2];
    for (auto& r : unique) classes[label_index(r.label)].push_back(std::move(r));

    Prng rng(seed);
    const std::size_t keep = std::min(classes[0].size(), classes[1].size());
    for (auto& cls : classes) {
        if (cls.size() == keep) continue;
        // uniform choice of `keep` survivors, input order preserved
        std::vector<std::size_t> idx(cls.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        for (std::size_t i = 0; i < keep; ++i) {
            std::size_t j = i + rng.next_below(idx.size() - i);
            std::swap(idx[i], idx[j]);
        }
        idx.resize(keep);
        std::sort(idx.begin(), idx.end());
        std::vector<LabeledDomain> kept;
        kept.reserve(keep);
        for (std::size_t i : idx) kept.push_back(std::move(cls[i]));
        cls = std::move(kept);
    }

    std::vector<LabeledDomain> combined;
    combined.reserve(2 * keep);
    for (auto& cls : classes)
        for (auto& r : cls) combined.push_back(std::move(r));

    std::vector<std::size_t> order(combined.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    fisher_yates(order, rng);

    const auto quota_val = static_cast<std::size_t>(std::floor(static_cast<double>(keep) *
                                                               ratios.validation));
    const auto quota_test = static_cast<std::size_t>(std::floor(static_cast<double>(keep) *
                                                                ratios.test));
    const std::size_t quota_train = keep - quota_val - quota_test;

    DatasetSplit split;
    split.seed = seed;
    split.ratios = ratios;
    std::size_t taken_train[2] = {0, 0}, taken_val[2] = {0, 0};
    for (std::size_t i : order) {
        auto& rec = combined[i];
        const int c = label_index(rec.label);
        if (taken_train[c] < quota_train) {
            ++taken_train[c];
            split.train.push_back(std::move(rec));
        } else if (taken_val[c] < quota_val) {
            ++taken_val[c];
            split.validation.push_back(std::move(rec));
        } else {
            split.test.push_back(std::move(rec));
        }
    }
    return split;
}

} // namespace dgad
