#include "iann/fri.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "text_util.hpp"

namespace iann {

FriVector FriVector::validated(std::vector<double> values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        const double v = values[k];
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            throw validation_error("FRI value at index " + std::to_string(k) + " is " + detail::format_double(v) +
                                   ", outside [0,1]");
        }
    }
    return FriVector(std::move(values));
}

FriVector FriVector::uniform(int n, double value) {
    if (n < 0) throw validation_error("FRI length must be non-negative");
    return validated(std::vector<double>(static_cast<std::size_t>(n), value));
}

FriVector validate_fri(std::vector<double> raw) {
    return FriVector::validated(std::move(raw));
}

void RuleCountTable::validate() const {
    if (counts.empty()) throw validation_error("rule count table needs at least one feature");
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] < 0) throw validation_error("rule count at index " + std::to_string(k) + " is negative");
    }
}

FriVector fri_from_rule_counts(const RuleCountTable& table) {
    table.validate();

    // Value per distinct positive count, descending: 0.9, 0.8, ... floored at 0.4.
    std::map<int, double, std::greater<int>> ladder;
    for (int c : table.counts)
        if (c > 0) ladder[c] = 0.0;
    double rung = 0.9;
    for (auto& [count, value] : ladder) {
        value = std::max(rung, 0.4);
        rung -= 0.1;
    }

    std::vector<double> fri(table.counts.size());
    for (std::size_t k = 0; k < table.counts.size(); ++k) {
        fri[k] = table.counts[k] == 0 ? 0.3 : ladder[table.counts[k]];
    }
    return FriVector::validated(std::move(fri));
}

namespace {

struct IndexedValue {
    long long index;
    std::string_view token;
    std::size_t line_no;
};

std::vector<IndexedValue> parse_index_value_lines(std::string_view text, std::string_view what) {
    std::vector<IndexedValue> entries;
    std::size_t line_no = 0;
    for (auto raw_line : detail::split(text, '\n')) {
        ++line_no;
        const auto line = detail::trim(detail::strip_comment(raw_line));
        if (line.empty()) continue;
        const auto tokens = detail::split_whitespace(line);
        if (tokens.size() != 2) {
            throw parse_error(std::string(what) + " line " + std::to_string(line_no) +
                              ": expected 'feature_index<TAB>value'");
        }
        long long index = 0;
        if (!detail::parse_int(tokens[0], index) || index < 0) {
            throw parse_error(std::string(what) + " line " + std::to_string(line_no) + ": bad feature index '" +
                              std::string(tokens[0]) + "'");
        }
        entries.push_back({index, tokens[1], line_no});
    }
    return entries;
}

// Places entries into a dense 0..n-1 vector, rejecting duplicates and gaps.
template <class T, class Convert>
std::vector<T> to_dense(const std::vector<IndexedValue>& entries, std::string_view what, Convert convert) {
    if (entries.empty()) throw parse_error(std::string(what) + ": no entries");
    long long max_index = 0;
    for (const auto& e : entries) max_index = std::max(max_index, e.index);
    std::vector<T> values(static_cast<std::size_t>(max_index) + 1);
    std::vector<bool> seen(values.size(), false);
    for (const auto& e : entries) {
        if (seen[static_cast<std::size_t>(e.index)]) {
            throw parse_error(std::string(what) + " line " + std::to_string(e.line_no) + ": duplicate feature index " +
                              std::to_string(e.index));
        }
        seen[static_cast<std::size_t>(e.index)] = true;
        values[static_cast<std::size_t>(e.index)] = convert(e);
    }
    for (std::size_t k = 0; k < seen.size(); ++k) {
        if (!seen[k]) throw parse_error(std::string(what) + ": missing feature index " + std::to_string(k));
    }
    return values;
}

}  // namespace

FriVector parse_fri_file(std::string_view text) {
    const auto entries = parse_index_value_lines(text, "FRI file");
    auto values = to_dense<double>(entries, "FRI file", [](const IndexedValue& e) {
        double v = 0.0;
        if (!detail::parse_double(e.token, v)) {
            throw parse_error("FRI file line " + std::to_string(e.line_no) + ": bad value '" + std::string(e.token) +
                              "'");
        }
        return v;
    });
    return FriVector::validated(std::move(values));
}

std::string emit_fri_file(const FriVector& fri) {
    std::string out;
    for (int k = 0; k < fri.size(); ++k) {
        out += std::to_string(k);
        out += '\t';
        out += detail::format_double(fri[k]);
        out += '\n';
    }
    return out;
}

RuleCountTable parse_rule_counts_file(std::string_view text) {
    const auto entries = parse_index_value_lines(text, "rule count file");
    auto counts = to_dense<int>(entries, "rule count file", [](const IndexedValue& e) {
        long long v = 0;
        if (!detail::parse_int(e.token, v) || v < 0) {
            throw parse_error("rule count file line " + std::to_string(e.line_no) + ": bad count '" +
                              std::string(e.token) + "'");
        }
        return static_cast<int>(v);
    });
    RuleCountTable table{std::move(counts)};
    table.validate();
    return table;
}

FriVector parse_fri_inline(std::string_view csv) {
    std::vector<double> values;
    for (auto field : detail::split(csv, ',')) {
        const auto token = detail::trim(field);
        double v = 0.0;
        if (!detail::parse_double(token, v)) {
            throw parse_error("inline FRI: bad value '" + std::string(token) + "'");
        }
        values.push_back(v);
    }
    return FriVector::validated(std::move(values));
}

}  // namespace iann
