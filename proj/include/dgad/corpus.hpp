#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgad/domain.hpp"
#include "dgad/label.hpp"

namespace dgad {

/// One class-labeled domain record. `family` keeps provenance: "tranco",
/// "uniform", "arith", "dict", "natural" or "feed:<name>".
struct LabeledDomain {
    ParsedDomain parsed;
    Label label = Label::legit;
    std::string family;
};

struct SplitRatios {
    double train = 0.8;
    double validation = 0.1;
    double test = 0.1;
};

/// Stratified train/validation/test partition. The three lists are
/// disjoint by `parsed.original` and each preserves the overall class
/// ratio to within one record per class.
struct DatasetSplit {
    std::vector<LabeledDomain> train;
    std::vector<LabeledDomain> validation;
    std::vector<LabeledDomain> test;
    std::uint64_t seed = 0;
    SplitRatios ratios;
};

struct IngestResult {
    std::vector<LabeledDomain> records;
    std::size_t skipped = 0;
};

/// Tranco CSV: "rank,domain" per line, no header. Unparseable domains are
/// skipped and counted; a line without exactly one comma is fatal.
IngestResult ingest_tranco(std::istream& in, std::size_t limit, const SuffixTable& table);

/// Threat feed: one domain per line, '#' starts a comment line.
IngestResult ingest_feed(std::istream& in, const std::string& family, const SuffixTable& table);

struct Date {
    int year = 0;
    int month = 0;
    int day = 0;
};

/// High-entropy family: roots drawn uniformly from a-z0-9 (first character
/// forced alphabetic), lengths uniform in [min_len, max_len], suffixes
/// cycling com/net/org/info/biz.
std::vector<LabeledDomain> gen_uniform_dga(std::uint64_t seed, std::size_t count,
                                           std::size_t min_len, std::size_t max_len);

/// Date-seeded family: state = year*10000 + month*100 + day, lengths
/// 12..19, letters only, suffix "com".
std::vector<LabeledDomain> gen_arith_dga(Date seed_date, std::size_t count);

/// Dictionary family: two words concatenated, suffix "net". Low entropy on
/// purpose; this is the evasion case entropy thresholds miss.
std::vector<LabeledDomain> gen_dict_dga(std::uint64_t seed,
                                        std::span<const std::string_view> wordlist,
                                        std::size_t count);

/// Legitimate-looking stand-in for Tranco data: one word a quarter of the
/// time, otherwise two, suffixes cycling com/org/com.br.
std::vector<LabeledDomain> gen_natural(std::uint64_t seed,
                                       std::span<const std::string_view> wordlist,
                                       std::size_t count);

/// Deduplicate by original name (first occurrence wins), down-sample the
/// majority class to the minority size, shuffle once, then cut per class
/// by the given ratios with remainders going to train.
DatasetSplit balance_and_split(std::vector<LabeledDomain> records, SplitRatios ratios,
                               std::uint64_t seed);

} // namespace dgad
