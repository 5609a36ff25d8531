#ifndef FPURE_PROBLEM_HPP
#define FPURE_PROBLEM_HPP

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frobenius.hpp"
#include "parser.hpp"

// Problem files are flat "key = value" lines:
//
//   # Example: a quartic curve
//   p = 3
//   vars = x, y, z
//   gens = x^2*y^2 + y^2*z^2 + z^2*x^2
//
// Required keys: p, vars, gens (comma separated). Optional: window = T1, T2
// (degree window for verification) and max_q. '#' starts a comment.

namespace fpure {

struct SourceText {
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
};

struct ProblemFile {
    std::uint32_t p = 0;
    std::vector<std::string> vars;
    std::vector<SourceText> gens;
    std::optional<std::pair<std::int64_t, std::int64_t>> window;
    std::optional<std::int64_t> max_q;
};

namespace detail {

[[noreturn]] inline void problem_error(const std::string& msg, std::size_t line, std::size_t column) {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg, line, column);
}

// Splits on commas, trimming whitespace and tracking columns.
inline std::vector<SourceText> split_list(const std::string& value, std::size_t line, std::size_t column) {
    std::vector<SourceText> out;
    std::size_t start = 0;
    while (true) {
        auto end = value.find(',', start);
        auto piece_end = end == std::string::npos ? value.size() : end;
        auto b = start;
        while (b < piece_end && std::isspace(static_cast<unsigned char>(value[b]))) ++b;
        auto e = piece_end;
        while (e > b && std::isspace(static_cast<unsigned char>(value[e - 1]))) --e;
        if (b == e) problem_error("empty list entry", line, column + b);
        out.push_back({value.substr(b, e - b), line, column + b});
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

inline std::int64_t parse_integer(const SourceText& s) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.text.size() && (s.text[i] == '-' || s.text[i] == '+')) negative = s.text[i++] == '-';
    if (i == s.text.size()) problem_error("expected an integer", s.line, s.column);
    std::int64_t v = 0;
    for (; i < s.text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s.text[i]))) {
            problem_error("expected an integer", s.line, s.column + i);
        }
        v = v * 10 + (s.text[i] - '0');
        if (v > kMaxExponent) problem_error("integer out of range", s.line, s.column);
    }
    return negative ? -v : v;
}

}  // namespace detail

inline ProblemFile parse_problem(const std::string& text) {
    ProblemFile pf;
    bool have_p = false;
    bool have_vars = false;
    bool have_gens = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto hash = raw.find('#');
        std::string line = raw.substr(0, hash);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) detail::problem_error("expected 'key = value'", line_no, first + 1);
        auto key_end = eq;
        while (key_end > first && std::isspace(static_cast<unsigned char>(line[key_end - 1]))) --key_end;
        std::string key = line.substr(first, key_end - first);
        std::string value = line.substr(eq + 1);
        std::size_t value_col = eq + 2;
        if (value.find_first_not_of(" \t") == std::string::npos) {
            detail::problem_error("missing value for '" + key + "'", line_no, eq + 1);
        }
        auto items = detail::split_list(value, line_no, value_col);
        auto once = [&](bool& seen) {
            if (seen) detail::problem_error("duplicate key '" + key + "'", line_no, first + 1);
            seen = true;
        };
        if (key == "p") {
            once(have_p);
            if (items.size() != 1) detail::problem_error("p takes one value", line_no, value_col);
            auto v = detail::parse_integer(items[0]);
            if (v < 2 || !PrimeField::is_prime(static_cast<std::uint64_t>(v))) {
                detail::problem_error("p must be prime", items[0].line, items[0].column);
            }
            pf.p = static_cast<std::uint32_t>(v);
        } else if (key == "vars") {
            once(have_vars);
            for (auto& it : items) pf.vars.push_back(it.text);
        } else if (key == "gens") {
            once(have_gens);
            pf.gens = std::move(items);
        } else if (key == "window") {
            if (pf.window) detail::problem_error("duplicate key 'window'", line_no, first + 1);
            if (items.size() != 2) detail::problem_error("window takes two integers", line_no, value_col);
            pf.window = std::pair{detail::parse_integer(items[0]), detail::parse_integer(items[1])};
        } else if (key == "max_q") {
            if (pf.max_q) detail::problem_error("duplicate key 'max_q'", line_no, first + 1);
            if (items.size() != 1) detail::problem_error("max_q takes one value", line_no, value_col);
            pf.max_q = detail::parse_integer(items[0]);
        } else {
            detail::problem_error("unknown key '" + key + "'", line_no, first + 1);
        }
    }
    if (!have_p) detail::problem_error("missing key 'p'", line_no + 1, 1);
    if (!have_vars) detail::problem_error("missing key 'vars'", line_no + 1, 1);
    if (!have_gens) detail::problem_error("missing key 'gens'", line_no + 1, 1);
    return pf;
}

inline ProblemFile load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

/// Builds the ring and parses every generator, reporting file positions.
inline CompleteIntersection to_complete_intersection(const ProblemFile& pf) {
    RingPtr ring;
    try {
        ring = make_ring(pf.p, pf.vars);
    } catch (const DomainError& e) {
        throw ParseError(std::string("vars: ") + e.what(), 0, 0);
    }
    std::vector<Polynomial> forms;
    for (const auto& g : pf.gens) {
        try {
            forms.push_back(parse_polynomial(g.text, ring));
        } catch (const ParseError& e) {
            auto col = g.column + e.column() - 1;
            throw ParseError("line " + std::to_string(g.line) + ", column " + std::to_string(col) + ": " +
                                 std::string(e.what()).substr(std::string(e.what()).find(": ") + 2),
                             g.line, col);
        }
    }
    return CompleteIntersection(ring, std::move(forms));
}

}  // namespace fpure

#endif
