// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "maxplus/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "maxplus/errors.hpp"

namespace maxplus::io {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) {
            ++i;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return out;
}

bool is_neg_inf_token(std::string_view t) {
    if (t.size() != 4 || t[0] != '-') {
        return false;
    }
    std::string lower(t.substr(1));
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return lower == "inf";
}

// Returns nullopt when the token is not a well-formed finite number.
std::optional<mpq_class> read_number(std::string_view t) {
    std::size_t i = 0;
    bool negative = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
        negative = t[i] == '-';
        ++i;
    }
    std::string digits;
    std::size_t int_digits = 0;
    while (i < t.size() && is_digit(t[i])) {
        digits += t[i++];
        ++int_digits;
    }
    std::size_t frac_digits = 0;
    bool has_point = false;
    if (i < t.size() && t[i] == '.') {
        has_point = true;
        ++i;
        while (i < t.size() && is_digit(t[i])) {
            digits += t[i++];
            ++frac_digits;
        }
    }
    if (int_digits + frac_digits == 0) {
        return std::nullopt;
    }

    mpq_class value(mpz_class(digits, 10));
    if (has_point) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits);
        value /= scale;
    }

    if (i < t.size() && t[i] == '/') {
        if (has_point) {
            return std::nullopt;
        }
        ++i;
        std::string denominator;
        while (i < t.size() && is_digit(t[i])) {
            denominator += t[i++];
        }
        if (denominator.empty()) {
            return std::nullopt;
        }
        mpz_class den(denominator, 10);
        if (den == 0) {
            return std::nullopt;
        }
        value /= mpq_class(den);
    }
    if (i != t.size()) {
        return std::nullopt;
    }
    value.canonicalize();
    return negative ? mpq_class(-value) : value;
}

ExtReal parse_token(const Token& token, std::size_t line) {
    if (is_neg_inf_token(token.text)) {
        return kNegInf;
    }
    if (auto q = read_number(token.text)) {
        return ExtReal(*q);
    }
    throw ParseError("bad scalar '" + std::string(token.text) + "'", line, token.column);
}

}  // namespace

MpMatrix MatrixDocument::shifted() const {
    if (!lambda_shift) {
        return matrix;
    }
    return mat_scale(ExtReal(mpq_class(-*lambda_shift)), matrix);
}

ExtReal parse_scalar(std::string_view token) {
    const auto tokens = split(token);
    if (tokens.size() != 1) {
        throw ParseError("expected exactly one scalar, got '" + std::string(token) + "'", 1, 1);
    }
    return parse_token(tokens[0], 1);
}

mpq_class parse_rational(std::string_view token) {
    const ExtReal x = parse_scalar(token);
    if (x.is_neg_inf()) {
        throw ParseError("expected a finite value", 1, 1);
    }
    return x.value();
}

MatrixDocument parse_matrix(std::string_view text) {
    std::vector<std::vector<ExtReal>> rows;
    std::vector<std::size_t> row_lines;
    std::size_t line_no = 0;
    std::size_t width = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto tokens = split(line);
        if (tokens.empty()) {
            continue;
        }
        if (rows.empty()) {
            width = tokens.size();
        } else if (tokens.size() != width) {
            const std::size_t column = tokens.size() > width ? tokens[width].column : line.size() + 1;
            throw ParseError("row has " + std::to_string(tokens.size()) + " entries, expected " +
                                 std::to_string(width),
                             line_no, column);
        }
        std::vector<ExtReal> row;
        row.reserve(tokens.size());
        for (const auto& t : tokens) {
            row.push_back(parse_token(t, line_no));
        }
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
    }

    if (rows.empty()) {
        throw ParseError("empty matrix", line_no == 0 ? 1 : line_no, 1);
    }
    if (rows.size() != width) {
        throw ParseError("matrix is " + std::to_string(rows.size()) + "x" + std::to_string(width) +
                             ", expected a square matrix",
                         row_lines.back(), 1);
    }

    MatrixDocument doc;
    doc.matrix = MpMatrix(width, width);
    for (std::size_t i = 0; i < width; ++i) {
        for (std::size_t j = 0; j < width; ++j) {
            doc.matrix(i, j) = rows[i][j];
        }
    }
    return doc;
}

MpVector parse_vector(std::string_view text, std::size_t n) {
    const auto tokens = split(text);
    if (tokens.size() != n) {
        throw ParseError("vector has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(n),
                         1, 1);
    }
    MpVector v(n);
    for (std::size_t j = 0; j < n; ++j) {
        v[j] = parse_token(tokens[j], 1);
    }
    return v;
}

std::string format_scalar(const ExtReal& x) { return x.to_string(); }

std::string format_vector(const MpVector& v) {
    std::string out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j > 0) {
            out += ' ';
        }
        out += format_scalar(v[j]);
    }
    return out;
}

std::string render_matrix(const MpMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += format_vector(m.row(i));
        out += '\n';
    }
    return out;
}

std::string format_basis(const ScaledBasis& basis) {
    std::string out;
    for (const auto& v : basis) {
        out += format_vector(v);
        out += '\n';
    }
    return out;
}

}  // namespace maxplus::io
