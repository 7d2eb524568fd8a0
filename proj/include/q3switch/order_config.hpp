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
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace q3switch {

inline constexpr int kNumOrders = 6;

/// A probability vector (P_1..P_6) over the six causal orders.
/// Order labels are 1-based: |1> -> N1.N2.N3, |2> -> N1.N3.N2,
/// |3> -> N2.N1.N3, |4> -> N2.N3.N1, |5> -> N3.N1.N2, |6> -> N3.N2.N1.
class OrderConfiguration {
 public:
  OrderConfiguration() { probs_[0] = 1.0; }

  static OrderConfiguration from_probs(const std::array<double, 6>& probs) {
    double sum = 0.0;
    for (double p : probs) {
      if (p < 0.0)
        throw std::invalid_argument(
            "OrderConfiguration: probabilities must be nonnegative");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument(
          "OrderConfiguration: probabilities must sum to 1, got " +
          std::to_string(sum));
    OrderConfiguration config;
    config.probs_ = probs;
    return config;
  }

  /// Equiprobable configuration on the given 1-based order labels.
  static OrderConfiguration equiprobable(const std::vector<int>& support) {
    if (support.empty() || support.size() > 6)
      throw std::invalid_argument("equiprobable: support size must be 1..6");
    std::array<double, 6> probs{};
    for (int label : support) {
      if (label < 1 || label > 6)
        throw std::invalid_argument("equiprobable: order labels are 1..6");
      if (probs[label - 1] != 0.0)
        throw std::invalid_argument("equiprobable: duplicate order label");
      probs[label - 1] = 1.0 / static_cast<double>(support.size());
    }
    OrderConfiguration config;
    config.probs_ = probs;
    return config;
  }

  const std::array<double, 6>& probs() const { return probs_; }
  double prob(int label) const { return probs_[label - 1]; }

  /// 1-based labels with P_k > 0.
  std::vector<int> support() const {
    std::vector<int> labels;
    for (int i = 0; i < kNumOrders; ++i)
      if (probs_[i] > 0.0) labels.push_back(i + 1);
    return labels;
  }

  int support_size() const {
    int m = 0;
    for (double p : probs_) m += (p > 0.0) ? 1 : 0;
    return m;
  }

 private:
  std::array<double, 6> probs_{};
};

/// All size-m subsets of {1..6} in lexicographic order. The position of a
/// support in this list (1-based) is the subscript used to name the
/// corresponding switch matrix S_i.
inline std::vector<std::vector<int>> lexicographic_supports(int m) {
  if (m < 1 || m > 6)
    throw std::invalid_argument("lexicographic_supports: m must be 1..6");
  std::vector<std::vector<int>> supports;
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i + 1;
  while (true) {
    supports.push_back(pick);
    int i = m - 1;
    while (i >= 0 && pick[i] == 6 - (m - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return supports;
}

/// All C(6,m) equiprobable configurations, in lexicographic support order.
inline std::vector<OrderConfiguration> enumerate_configs(int m) {
  std::vector<OrderConfiguration> configs;
  for (const auto& support : lexicographic_supports(m))
    configs.push_back(OrderConfiguration::equiprobable(support));
  return configs;
}

inline std::string support_label(const std::vector<int>& support) {
  std::string label = "{";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) label += ",";
    label += std::to_string(support[i]);
  }
  return label + "}";
}

}  // namespace q3switch
