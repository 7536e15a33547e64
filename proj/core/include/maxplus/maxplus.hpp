// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "maxplus/errors.hpp"
#include "maxplus/ext_real.hpp"
#include "maxplus/graph.hpp"
#include "maxplus/io.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/oracle.hpp"
#include "maxplus/parallel.hpp"
#include "maxplus/scaled_basis.hpp"
#include "maxplus/supereig.hpp"
