// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "maxplus/scaled_basis.hpp"

#include "maxplus/errors.hpp"

namespace maxplus {

bool ScaledBasis::insert(const MpVector& v) {
    if (v.norm() != ExtReal(0)) {
        throw ContractError("ScaledBasis holds scaled vectors only");
    }
    return vectors_.insert(v).second;
}

bool ScaledBasis::insert_scaled(const MpVector& x) { return vectors_.insert(scaled(x)).second; }

}  // namespace maxplus
