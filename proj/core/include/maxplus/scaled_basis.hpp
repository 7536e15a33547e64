// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "maxplus/linalg.hpp"

namespace maxplus {

/// Ordered set of scaled vectors (max entry 0), deduplicated by exact
/// equality and kept in ascending lexicographic order.
class ScaledBasis {
public:
    ScaledBasis() = default;

    /// Adds v. Throws ContractError if v is not scaled. Returns false when v
    /// was already present.
    bool insert(const MpVector& v);
    /// Scales x, then inserts it.
    bool insert_scaled(const MpVector& x);

    bool contains(const MpVector& v) const { return vectors_.count(v) != 0; }
    std::size_t size() const noexcept { return vectors_.size(); }
    bool empty() const noexcept { return vectors_.empty(); }

    auto begin() const { return vectors_.begin(); }
    auto end() const { return vectors_.end(); }
    std::vector<MpVector> to_vector() const { return {vectors_.begin(), vectors_.end()}; }

    friend bool operator==(const ScaledBasis&, const ScaledBasis&) = default;

private:
    std::set<MpVector> vectors_;
};

}  // namespace maxplus
