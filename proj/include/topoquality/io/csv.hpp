#pragma once

// Point-cloud CSV and subset index files.

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "topoquality/errors.hpp"
#include "topoquality/rips.hpp"

namespace topoquality::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::optional<double> parse_double(std::string_view s) {
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

inline std::optional<std::size_t> parse_index(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

inline bool skippable(std::string_view line) {
    line = trim(line);
    return line.empty() || line.front() == '#';
}

}  // namespace detail

/// Comma-separated points, one per line. A header row is optional; it is
/// detected when the first row has a non-numeric coordinate field. The label
/// column, if any, is named by header name or zero-based index; every other
/// column is a coordinate.
inline PointCloud read_point_cloud(std::istream& in, const std::optional<std::string>& label_column = std::nullopt) {
    std::vector<std::vector<double>> points;
    std::vector<std::string> labels;
    std::optional<std::size_t> label_idx;
    std::optional<std::size_t> width;
    bool first_row = true;

    if (label_column) label_idx = detail::parse_index(*label_column);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::skippable(line)) continue;
        const auto fields = detail::split(line, ',');

        if (first_row) {
            first_row = false;
            bool numeric = true;
            for (std::size_t c = 0; c < fields.size(); ++c)
                if ((!label_idx || c != *label_idx) && !detail::parse_double(fields[c])) numeric = false;
            if (!numeric) {
                if (label_column && !label_idx) {
                    for (std::size_t c = 0; c < fields.size(); ++c)
                        if (fields[c] == *label_column) label_idx = c;
                    if (!label_idx) throw ParseError("label column '" + *label_column + "' not in header", line_no);
                }
                width = fields.size();
                continue;
            }
            if (label_column && !label_idx)
                throw ParseError("label column '" + *label_column + "' named but file has no header", line_no);
        }

        if (width && fields.size() != *width)
            throw ParseError("expected " + std::to_string(*width) + " fields, found " + std::to_string(fields.size()),
                             line_no);
        width = fields.size();
        if (label_idx && *label_idx >= fields.size()) throw ParseError("label column out of range", line_no);

        std::vector<double> p;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (label_idx && c == *label_idx) {
                labels.emplace_back(fields[c]);
                continue;
            }
            auto v = detail::parse_double(fields[c]);
            if (!v || !std::isfinite(*v))
                throw ParseError("field " + std::to_string(c + 1) + " is not a finite number: '" +
                                     std::string(fields[c]) + "'",
                                 line_no);
            p.push_back(*v);
        }
        points.push_back(std::move(p));
    }
    if (label_idx) return PointCloud(std::move(points), std::move(labels));
    return PointCloud(std::move(points));
}

inline PointCloud read_point_cloud_file(const std::string& path,
                                        const std::optional<std::string>& label_column = std::nullopt) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return read_point_cloud(in, label_column);
}

/// Nonnegative integers separated by commas or whitespace; '#' starts a comment.
inline std::vector<std::size_t> read_subset(std::istream& in) {
    std::vector<std::size_t> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body(line);
        body = body.substr(0, body.find('#'));
        std::string cleaned(body);
        for (char& ch : cleaned)
            if (ch == ',') ch = ' ';
        std::istringstream tokens(cleaned);
        std::string tok;
        while (tokens >> tok) {
            auto v = detail::parse_index(tok);
            if (!v) throw ParseError("invalid subset index '" + tok + "'", line_no);
            out.push_back(*v);
        }
    }
    return out;
}

inline std::vector<std::size_t> read_subset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return read_subset(in);
}

}  // namespace topoquality::io
