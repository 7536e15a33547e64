// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "maxplus/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

void require_same_size(const MpVector& x, const MpVector& y, const char* op) {
    if (x.size() != y.size()) {
        throw DimensionError(std::string(op) + ": length " + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()));
    }
}

}  // namespace

MpVector MpVector::unit(std::size_t n, std::size_t i) {
    if (i >= n) {
        throw IndexError("unit vector index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
    }
    MpVector e(n);
    e[i] = ExtReal(0);
    return e;
}

const ExtReal& MpVector::at(std::size_t i) const {
    if (i >= entries_.size()) {
        throw IndexError("vector index " + std::to_string(i) + " out of range");
    }
    return entries_[i];
}

bool MpVector::is_proper() const {
    return std::any_of(entries_.begin(), entries_.end(), [](const ExtReal& x) { return x.is_finite(); });
}

std::vector<std::size_t> MpVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (entries_[j].is_finite()) {
            out.push_back(j);
        }
    }
    return out;
}

ExtReal MpVector::norm() const {
    ExtReal best;
    for (const auto& x : entries_) {
        if (best < x) {
            best = x;
        }
    }
    return best;
}

std::strong_ordering operator<=>(const MpVector& a, const MpVector& b) {
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
}

std::ostream& operator<<(std::ostream& os, const MpVector& v) {
    os << '(';
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j > 0) {
            os << ", ";
        }
        os << v[j];
    }
    return os << ')';
}

MpMatrix::MpMatrix(std::initializer_list<std::initializer_list<ExtReal>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

MpMatrix MpMatrix::identity(std::size_t n) {
    MpMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = ExtReal(0);
    }
    return m;
}

const ExtReal& MpMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw IndexError("matrix index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    }
    return (*this)(i, j);
}

MpVector MpMatrix::row(std::size_t i) const {
    if (i >= rows_) {
        throw IndexError("row " + std::to_string(i) + " out of range");
    }
    return MpVector(std::vector<ExtReal>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

std::ostream& operator<<(std::ostream& os, const MpMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j ? " " : "") << m(i, j);
        }
        os << '\n';
    }
    return os;
}

MpVector vec_join(const MpVector& x, const MpVector& y) {
    require_same_size(x, y, "vec_join");
    MpVector out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = oplus(x[j], y[j]);
    }
    return out;
}

MpVector vec_scale(const ExtReal& c, const MpVector& x) {
    MpVector out(x.size());
    if (c.is_neg_inf()) {
        return out;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = otimes(c, x[j]);
    }
    return out;
}

ExtReal row_apply(const MpMatrix& a, std::size_t i, const MpVector& x) {
    if (i >= a.rows()) {
        throw IndexError("row " + std::to_string(i) + " out of range");
    }
    if (a.cols() != x.size()) {
        throw DimensionError("row_apply: matrix has " + std::to_string(a.cols()) + " columns, vector length " +
                             std::to_string(x.size()));
    }
    ExtReal best;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (a(i, k).is_finite() && x[k].is_finite()) {
            best = oplus(best, otimes(a(i, k), x[k]));
        }
    }
    return best;
}

MpVector mat_vec(const MpMatrix& a, const MpVector& x) {
    if (a.cols() != x.size()) {
        throw DimensionError("mat_vec: matrix has " + std::to_string(a.cols()) + " columns, vector length " +
                             std::to_string(x.size()));
    }
    MpVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out[i] = row_apply(a, i, x);
    }
    return out;
}

MpMatrix mat_scale(const ExtReal& c, const MpMatrix& a) {
    MpMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = otimes(c, a(i, j));
        }
    }
    return out;
}

Scaled norm_and_scale(const MpVector& x) {
    ExtReal n = x.norm();
    if (n.is_neg_inf()) {
        throw ImproperVectorError("cannot scale the -inf vector");
    }
    MpVector v = vec_scale(ExtReal(mpq_class(-n.value())), x);
    return {std::move(n), std::move(v)};
}

MpVector scaled(const MpVector& x) { return norm_and_scale(x).vector; }

ExtReal residual(const MpVector& v, const MpVector& w) {
    require_same_size(v, w, "residual");
    if (!w.is_proper()) {
        throw ImproperVectorError("residual by the -inf vector");
    }
    ExtReal best;
    bool first = true;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j].is_neg_inf()) {
            continue;
        }
        if (v[j].is_neg_inf()) {
            return kNegInf;
        }
        ExtReal d = minus(v[j], w[j]);
        if (first || d < best) {
            best = std::move(d);
            first = false;
        }
    }
    return best;
}

bool in_span(const MpVector& v, std::span<const MpVector> generators) {
    MpVector acc = MpVector::neg_inf(v.size());
    for (const auto& w : generators) {
        ExtReal alpha = residual(v, w);
        if (alpha.is_finite()) {
            acc = vec_join(acc, vec_scale(alpha, w));
        }
    }
    return acc == v;
}

bool dominated(const MpVector& x, const MpVector& y) {
    require_same_size(x, y, "dominated");
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (y[j] < x[j]) {
            return false;
        }
    }
    return true;
}

}  // namespace maxplus
