#pragma once

// Line-oriented tokenizer shared by the graph, family and circular-model formats.

#include <charconv>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "frankl/error.hpp"

namespace frankl::detail {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

// Non-blank, non-comment lines split on whitespace.
inline std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::istringstream ss(raw);
        Line line{number, {}};
        for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
        out.push_back(std::move(line));
    }
    return out;
}

inline std::uint64_t parse_unsigned(std::string_view tok, std::size_t line, std::uint64_t max = UINT32_MAX) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    if (value > max) throw ParseError(line, "value " + std::string(tok) + " out of range");
    return value;
}

}  // namespace frankl::detail
