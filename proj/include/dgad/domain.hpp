#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

namespace dgad {

/// Public-suffix rules split by kind. Wildcard rules are stored without
/// their "*." prefix, exception rules without their "!" prefix; all labels
/// are lowercase LDH. Immutable after construction, safe for concurrent
/// reads.
struct SuffixTable {
    std::set<std::string> exact;
    std::set<std::string> wildcard;
    std::set<std::string> exception;
    std::string source_id;

    std::size_t rule_count() const { return exact.size() + wildcard.size() + exception.size(); }
};

/// A normalized domain name split at its public suffix.
/// Rejoining subdomain + "." + root + "." + suffix (omitting an empty
/// subdomain) reproduces `original` exactly.
struct ParsedDomain {
    std::string original;
    std::string subdomain;
    std::string root;
    std::string suffix;

    std::string rejoin() const {
        std::string s;
        if (!subdomain.empty()) s = subdomain + ".";
        return s + root + "." + suffix;
    }
};

/// Reduce arbitrary text to a lowercase host name: strips URL scheme,
/// path/query/fragment, port, surrounding whitespace and a trailing dot.
/// Punycode ("xn--") labels are kept literal. IPv4 literals and any
/// character outside lowercase LDH + dot are rejected.
std::string normalize(std::string_view raw);

/// The embedded snapshot of common public-suffix rules.
const SuffixTable& builtin_suffix_table();

/// One rule per line, "//" starts a comment line, blank lines ignored.
SuffixTable load_suffix_table(std::istream& in, std::string source_id);
SuffixTable load_suffix_table_file(const std::string& path);

/// Longest matching rule wins; the label immediately left of the matched
/// suffix becomes the root, anything further left the subdomain.
ParsedDomain split_public_suffix(const std::string& name, const SuffixTable& table);

/// normalize + split_public_suffix in one step.
ParsedDomain parse_domain(std::string_view raw, const SuffixTable& table);

} // namespace dgad
