// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "maxplus/ext_real.hpp"

namespace maxplus {

/// Dense vector over R ∪ {-inf}. Indices are 0-based.
class MpVector {
public:
    MpVector() = default;
    explicit MpVector(std::size_t n) : entries_(n) {}
    MpVector(std::initializer_list<ExtReal> entries) : entries_(entries) {}
    explicit MpVector(std::vector<ExtReal> entries) : entries_(std::move(entries)) {}

    /// The all -inf vector of length n.
    static MpVector neg_inf(std::size_t n) { return MpVector(n); }
    /// Tropical unit vector: 0 at i, -inf elsewhere.
    static MpVector unit(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return entries_.size(); }
    const ExtReal& operator[](std::size_t i) const { return entries_[i]; }
    ExtReal& operator[](std::size_t i) { return entries_[i]; }
    const ExtReal& at(std::size_t i) const;

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    const std::vector<ExtReal>& entries() const noexcept { return entries_; }

    /// True iff some entry is finite.
    bool is_proper() const;
    /// Indices of the finite entries, ascending.
    std::vector<std::size_t> support() const;
    /// max_i x_i (-inf for the -inf vector).
    ExtReal norm() const;

    friend bool operator==(const MpVector&, const MpVector&) = default;
    /// Lexicographic, -inf lowest.
    friend std::strong_ordering operator<=>(const MpVector& a, const MpVector& b);

private:
    std::vector<ExtReal> entries_;
};

std::ostream& operator<<(std::ostream& os, const MpVector& v);

/// Dense row-major matrix over R ∪ {-inf}.
class MpMatrix {
public:
    MpMatrix() = default;
    MpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    MpMatrix(std::initializer_list<std::initializer_list<ExtReal>> rows);

    static MpMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const ExtReal& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    ExtReal& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const ExtReal& at(std::size_t i, std::size_t j) const;

    MpVector row(std::size_t i) const;

    friend bool operator==(const MpMatrix&, const MpMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ExtReal> data_;
};

std::ostream& operator<<(std::ostream& os, const MpMatrix& m);

/// Entrywise max.
MpVector vec_join(const MpVector& x, const MpVector& y);

/// c ⊗ x.
MpVector vec_scale(const ExtReal& c, const MpVector& x);

/// (A ⊗ x)_i = max_k (a_ik + x_k).
MpVector mat_vec(const MpMatrix& a, const MpVector& x);

/// A_i ⊗ x for the i-th row of A.
ExtReal row_apply(const MpMatrix& a, std::size_t i, const MpVector& x);

/// c ⊗ A.
MpMatrix mat_scale(const ExtReal& c, const MpMatrix& a);

struct Scaled {
    ExtReal norm;
    MpVector vector;
};

/// Returns ‖x‖ and (-‖x‖) ⊗ x. Throws ImproperVectorError for x = -inf.
Scaled norm_and_scale(const MpVector& x);

/// Shorthand for norm_and_scale(x).vector.
MpVector scaled(const MpVector& x);

/// Largest α with α ⊗ w <= v; -inf when Supp(w) is not contained in Supp(v).
ExtReal residual(const MpVector& v, const MpVector& w);

/// Whether v is a max-combination of the vectors in `generators`.
///
/// Uses the principal solution: v ∈ span(W) iff ⊕_w residual(v, w) ⊗ w = v.
bool in_span(const MpVector& v, std::span<const MpVector> generators);

/// Entrywise x <= y.
bool dominated(const MpVector& x, const MpVector& y);

}  // namespace maxplus
