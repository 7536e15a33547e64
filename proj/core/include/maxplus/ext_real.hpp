// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace maxplus {

/// Element of the max-plus semiring R ∪ {-inf}.
///
/// Finite values are exact rationals. A default constructed ExtReal is -inf,
/// the neutral element of ⊕ (max) and the absorbing element of ⊗ (+).
/// The ordering is total with -inf below every finite value.
class ExtReal {
public:
    ExtReal() = default;
    ExtReal(const mpq_class& value) : finite_(true), value_(value) { value_.canonicalize(); }
    ExtReal(long value) : finite_(true), value_(value) {}
    ExtReal(int value) : ExtReal(static_cast<long>(value)) {}

    static ExtReal neg_inf() { return ExtReal(); }

    bool is_finite() const noexcept { return finite_; }
    bool is_neg_inf() const noexcept { return !finite_; }

    // Precondition: is_finite().
    const mpq_class& value() const;

    // "-inf", an integer, or "p/q" in lowest terms.
    std::string to_string() const;

    friend bool operator==(const ExtReal& a, const ExtReal& b);
    friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

private:
    bool finite_ = false;
    mpq_class value_;
};

inline const ExtReal kNegInf{};

/// a ⊕ b = max(a, b)
ExtReal oplus(const ExtReal& a, const ExtReal& b);

/// a ⊗ b = a + b, with -inf absorbing.
ExtReal otimes(const ExtReal& a, const ExtReal& b);

/// Ordinary difference a - b of two finite values.
ExtReal minus(const ExtReal& a, const ExtReal& b);

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

}  // namespace maxplus
