// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

// STO-3G hydrogen 1s contraction (Basis Set Exchange, zeta = 1.24 scaling
// already folded into the exponents). Bump the version when values change.

#pragma once

#include <array>

namespace qcc::basis_data {

inline constexpr int kSto3gHydrogenVersion = 1;

inline constexpr std::array<double, 3> kSto3gHydrogenExponents{
    3.42525091, 0.62391373, 0.16885540};

inline constexpr std::array<double, 3> kSto3gHydrogenCoefficients{
    0.15432897, 0.53532814, 0.44463454};

}  // namespace qcc::basis_data
