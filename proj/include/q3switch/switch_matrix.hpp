// Copyright 2026 The q3switch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>

#include "q3switch/channel.hpp"
#include "q3switch/mat6.hpp"
#include "q3switch/order_config.hpp"

namespace q3switch {

/// Fixed 6x6 arrangement of block kinds for the three-channel switch.
/// Symmetric, diagonal all A. 1-based accessor to match order labels.
struct BlockPattern {
  std::array<BlockKind, 36> kinds{};

  BlockKind at(int i, int j) const {
    return kinds[static_cast<std::size_t>((i - 1) * 6 + (j - 1))];
  }
};

inline const BlockPattern& canonical_pattern() {
  static const BlockPattern pattern = [] {
    BlockPattern p;
    const BlockKind A = BlockKind::A;
    const BlockKind B = BlockKind::B;
    const BlockKind D = BlockKind::D;
    const BlockKind F = BlockKind::F;
    const std::array<std::array<BlockKind, 6>, 6> rows = {{
        {A, B, B, D, D, F},
        {B, A, D, F, B, D},
        {B, D, A, B, F, D},
        {D, F, B, A, D, B},
        {D, B, F, D, A, B},
        {F, D, D, B, B, A},
    }};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        p.kinds[static_cast<std::size_t>(i * 6 + j)] =
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return p;
  }();
  return pattern;
}

/// 6x6 scalar matrix whose eigenvalues are the switch-output eigenvalues on
/// the target branch k: entry (i,j) = sqrt(P_i P_j) * x_k(block(i,j)).
struct ReducedMatrix {
  Mat6 entries;
  int k = 1;
  ChannelParams params;
};

inline ReducedMatrix reduced_matrix(const OrderConfiguration& config,
                                    const ChannelParams& params, int k) {
  params.validate();
  if (k != 0 && k != 1)
    throw std::invalid_argument("reduced_matrix: k must be 0 or 1");
  const BlockPattern& pattern = canonical_pattern();
  const std::array<double, 4> branch = {
      eigen_branch_value(block_coefficients(BlockKind::A, params), k, params.d),
      eigen_branch_value(block_coefficients(BlockKind::B, params), k, params.d),
      eigen_branch_value(block_coefficients(BlockKind::D, params), k, params.d),
      eigen_branch_value(block_coefficients(BlockKind::F, params), k, params.d)};
  auto value_of = [&](BlockKind kind) {
    switch (kind) {
      case BlockKind::A: return branch[0];
      case BlockKind::B: return branch[1];
      case BlockKind::D: return branch[2];
      case BlockKind::F: return branch[3];
    }
    return 0.0;
  };
  ReducedMatrix out;
  out.k = k;
  out.params = params;
  const auto& probs = config.probs();
  for (int i = 1; i <= 6; ++i) {
    const double pi = probs[static_cast<std::size_t>(i - 1)];
    for (int j = i; j <= 6; ++j) {
      const double pj = probs[static_cast<std::size_t>(j - 1)];
      const double v =
          (pi == 0.0 || pj == 0.0) ? 0.0 : std::sqrt(pi * pj) * value_of(pattern.at(i, j));
      out.entries.at(i - 1, j - 1) = v;
      out.entries.at(j - 1, i - 1) = v;
    }
  }
  return out;
}

/// Output control state: entry (i,j) = sqrt(P_i P_j) * Tr-value of block(i,j).
/// Trace 1, positive semidefinite.
struct ControlMatrix {
  Mat6 entries;
};

inline ControlMatrix control_output(const OrderConfiguration& config,
                                    const ChannelParams& params) {
  params.validate();
  const BlockPattern& pattern = canonical_pattern();
  std::array<double, 4> trace_of = {
      control_trace_value(block_coefficients(BlockKind::A, params)),
      control_trace_value(block_coefficients(BlockKind::B, params)),
      control_trace_value(block_coefficients(BlockKind::D, params)),
      control_trace_value(block_coefficients(BlockKind::F, params))};
  auto value_of = [&](BlockKind kind) {
    switch (kind) {
      case BlockKind::A: return trace_of[0];
      case BlockKind::B: return trace_of[1];
      case BlockKind::D: return trace_of[2];
      case BlockKind::F: return trace_of[3];
    }
    return 0.0;
  };
  ControlMatrix out;
  const auto& probs = config.probs();
  for (int i = 1; i <= 6; ++i) {
    const double pi = probs[static_cast<std::size_t>(i - 1)];
    for (int j = i; j <= 6; ++j) {
      const double pj = probs[static_cast<std::size_t>(j - 1)];
      const double v =
          (pi == 0.0 || pj == 0.0) ? 0.0 : std::sqrt(pi * pj) * value_of(pattern.at(i, j));
      out.entries.at(i - 1, j - 1) = v;
      out.entries.at(j - 1, i - 1) = v;
    }
  }
  return out;
}

}  // namespace q3switch
