// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "maxplus/ext_real.hpp"

#include <ostream>

#include "maxplus/errors.hpp"

namespace maxplus {

const mpq_class& ExtReal::value() const {
    if (!finite_) {
        throw ImproperVectorError("value() of -inf");
    }
    return value_;
}

std::string ExtReal::to_string() const {
    if (!finite_) {
        return "-inf";
    }
    return value_.get_str();
}

bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.finite_ != b.finite_) {
        return false;
    }
    return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (!a.finite_ || !b.finite_) {
        return a.finite_ <=> b.finite_;
    }
    const int c = cmp(a.value_, b.value_);
    return c <=> 0;
}

ExtReal oplus(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

ExtReal otimes(const ExtReal& a, const ExtReal& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) {
        return kNegInf;
    }
    return ExtReal(mpq_class(a.value() + b.value()));
}

ExtReal minus(const ExtReal& a, const ExtReal& b) {
    return ExtReal(mpq_class(a.value() - b.value()));
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << x.to_string(); }

}  // namespace maxplus
