// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "maxplus/linalg.hpp"
#include "maxplus/scaled_basis.hpp"

/// Text formats. Indices are 1-based in text and 0-based in memory.
///
/// Scalar tokens: an optional sign followed by an integer (`-3`), a decimal
/// (`2.5`) or a fraction (`5/4`), or `-inf` in any letter case. Decimals are
/// read exactly, so `2.5` is 5/2.
namespace maxplus::io {

struct MatrixDocument {
    MpMatrix matrix;
    /// Eigenvalue λ to divide out: the system A ⊗ x >= λ ⊗ x becomes
    /// ((-λ) ⊗ A) ⊗ x >= x.
    std::optional<mpq_class> lambda_shift;

    std::size_t dimension() const noexcept { return matrix.rows(); }
    /// (-λ) ⊗ A, or A when no shift is set.
    MpMatrix shifted() const;
};

/// Parses one scalar token. Throws ParseError (line 1) on bad input.
ExtReal parse_scalar(std::string_view token);

/// Parses a finite scalar. Throws ParseError for `-inf` or bad input.
mpq_class parse_rational(std::string_view token);

/// n non-blank lines of n whitespace-separated tokens. Blank lines are
/// skipped. Throws ParseError with line and column for ragged or non-square
/// input and for bad tokens.
MatrixDocument parse_matrix(std::string_view text);

/// Whitespace-separated entries of a vector of length n.
MpVector parse_vector(std::string_view text, std::size_t n);

/// `-inf`, an integer, or `p/q`.
std::string format_scalar(const ExtReal& x);

/// Entries separated by single spaces.
std::string format_vector(const MpVector& v);

/// One line per row, parseable by parse_matrix.
std::string render_matrix(const MpMatrix& m);

/// One vector per line in the basis order.
std::string format_basis(const ScaledBasis& basis);

}  // namespace maxplus::io
