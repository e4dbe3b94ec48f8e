#include "dgad/domain.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "dgad/error.hpp"

namespace dgad {

namespace {

bool is_ldh(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string> split_labels(std::string_view name) {
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (true) {
        std::size_t dot = name.find('.', start);
        if (dot == std::string_view::npos) {
            labels.emplace_back(name.substr(start));
            return labels;
        }
        labels.emplace_back(name.substr(start, dot - start));
        start = dot + 1;
    }
}

std::string join_labels(const std::vector<std::string>& labels, std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i < to; ++i) {
        if (!out.empty()) out += '.';
        out += labels[i];
    }
    return out;
}

} // namespace

std::string normalize(std::string_view raw) {
    std::string s(raw);

    auto not_space = [](unsigned char c) { return std::isspace(c) == 0; };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());

    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    if (auto scheme = s.find("://"); scheme != std::string::npos) s.erase(0, scheme + 3);
    if (auto cut = s.find_first_of("/?#"); cut != std::string::npos) s.erase(cut);

    // ":8080" style port suffix; a ':' followed by anything non-numeric is
    // left in place and caught by the character check below.
    if (auto colon = s.rfind(':'); colon != std::string::npos) {
        std::string_view tail = std::string_view(s).substr(colon + 1);
        if (tail.empty() || all_digits(tail)) s.erase(colon);
    }

    if (!s.empty() && s.back() == '.') s.pop_back();

    if (s.empty()) fail(errc::empty_input, "no host name left after normalization");

    for (char c : s) {
        if (!is_ldh(c) && c != '.')
            fail(errc::invalid_character, std::string("'") + c + "' in \"" + s + "\"");
    }

    auto labels = split_labels(s);
    bool numeric = true;
    for (const auto& label : labels) {
        if (label.empty()) fail(errc::invalid_character, "empty label in \"" + s + "\"");
        numeric = numeric && all_digits(label);
    }
    if (numeric && labels.size() > 1)
        fail(errc::invalid_character, "IP literal \"" + s + "\"");

    return s;
}

namespace {

std::string validate_rule(std::string line, int line_no) {
    std::transform(line.begin(), line.end(), line.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    std::string_view body = line;
    if (body.front() == '!') body.remove_prefix(1);
    if (body.empty()) fail(errc::malformed_rule, "line " + std::to_string(line_no) + ": bare '!'");

    auto labels = split_labels(body);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& label = labels[i];
        if (label == "*") {
            // wildcards only as the leftmost label, as in the public list
            if (i != 0 || line.front() == '!')
                fail(errc::malformed_rule, "line " + std::to_string(line_no) + ": misplaced '*'");
            continue;
        }
        if (label.empty() || !std::all_of(label.begin(), label.end(), is_ldh))
            fail(errc::malformed_rule, "line " + std::to_string(line_no) + ": \"" + line + "\"");
    }
    return line;
}

} // namespace

SuffixTable load_suffix_table(std::istream& in, std::string source_id) {
    SuffixTable table;
    table.source_id = std::move(source_id);

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t");
        line = line.substr(first, last - first + 1);
        if (line.rfind("//", 0) == 0) continue;

        std::string rule = validate_rule(line, line_no);
        if (rule.front() == '!')
            table.exception.insert(rule.substr(1));
        else if (rule.rfind("*.", 0) == 0)
            table.wildcard.insert(rule.substr(2));
        else
            table.exact.insert(rule);
    }
    return table;
}

SuffixTable load_suffix_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_failure, "cannot open suffix file \"" + path + "\"");
    return load_suffix_table(in, "file:" + path);
}

ParsedDomain split_public_suffix(const std::string& name, const SuffixTable& table) {
    auto labels = split_labels(name);
    const std::size_t n = labels.size();

    for (std::size_t i = 0; i < n; ++i) {
        std::string candidate = join_labels(labels, i, n);

        if (table.exception.count(candidate)) {
            // the exception's own first label is registrable
            ParsedDomain d;
            d.original = name;
            d.suffix = join_labels(labels, i + 1, n);
            d.root = labels[i];
            d.subdomain = join_labels(labels, 0, i);
            return d;
        }

        bool wildcard_hit =
            i + 1 < n && table.wildcard.count(join_labels(labels, i + 1, n)) > 0;
        if (table.exact.count(candidate) || wildcard_hit) {
            if (i == 0)
                fail(errc::no_known_suffix, "\"" + name + "\" is only a public suffix");
            ParsedDomain d;
            d.original = name;
            d.suffix = candidate;
            d.root = labels[i - 1];
            d.subdomain = join_labels(labels, 0, i - 1);
            return d;
        }
    }

    if (n == 1) fail(errc::single_label, "\"" + name + "\" has no dot and is not a rule");
    fail(errc::no_known_suffix, "no rule matches \"" + name + "\"");
}

ParsedDomain parse_domain(std::string_view raw, const SuffixTable& table) {
    return split_public_suffix(normalize(raw), table);
}

} // namespace dgad
