#pragma once

#include <stdexcept>
#include <string>

namespace dgad {

/// Every failure condition the library reports.
enum class errc {
    empty_input,
    invalid_character,
    no_known_suffix,
    single_label,
    malformed_rule,
    malformed_csv_line,
    io_failure,
    bad_length_range,
    invalid_date,
    wordlist_too_small,
    bad_word,
    single_class_input,
    bad_ratios,
    non_positive_bin_width,
    empty_matrix,
    bad_magic,
    unsupported_version,
    corrupt_payload,
    network_failure,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::empty_input: return "EmptyInput";
        case errc::invalid_character: return "InvalidCharacter";
        case errc::no_known_suffix: return "NoKnownSuffix";
        case errc::single_label: return "SingleLabel";
        case errc::malformed_rule: return "MalformedRule";
        case errc::malformed_csv_line: return "MalformedCsvLine";
        case errc::io_failure: return "IoFailure";
        case errc::bad_length_range: return "BadLengthRange";
        case errc::invalid_date: return "InvalidDate";
        case errc::wordlist_too_small: return "WordlistTooSmall";
        case errc::bad_word: return "BadWord";
        case errc::single_class_input: return "SingleClassInput";
        case errc::bad_ratios: return "BadRatios";
        case errc::non_positive_bin_width: return "NonPositiveBinWidth";
        case errc::empty_matrix: return "EmptyMatrix";
        case errc::bad_magic: return "BadMagic";
        case errc::unsupported_version: return "UnsupportedVersion";
        case errc::corrupt_payload: return "CorruptPayload";
        case errc::network_failure: return "NetworkFailure";
    }
    return "UnknownError";
}

} // namespace dgad
