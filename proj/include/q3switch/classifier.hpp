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

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "q3switch/holevo.hpp"
#include "q3switch/order_config.hpp"
#include "q3switch/spectrum.hpp"

namespace q3switch {

/// Partition of the C(6,m) equiprobable configurations into spectral
/// equivalence classes. Classes are ordered by descending chi at
/// (q=0.1, d=2), ties broken by smallest first member, so class indices are
/// reproducible across runs.
struct ClassTable {
  struct Class {
    std::vector<double> signature;
    std::vector<int> member_indices;              // 1-based lexicographic subscripts
    std::vector<std::vector<int>> member_supports;
    std::vector<int> representative;              // support of first member
    double chi_ref = 0.0;                         // chi at q=0.1, d=2
  };
  int m = 1;
  std::vector<Class> classes;
};

inline ClassTable classify(int m) {
  const auto supports = lexicographic_supports(m);
  std::map<std::vector<double>, std::vector<int>> groups;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    const auto config = OrderConfiguration::equiprobable(supports[i]);
    groups[invariant_signature(config)].push_back(static_cast<int>(i) + 1);
  }

  ClassTable table;
  table.m = m;
  for (const auto& [signature, indices] : groups) {
    ClassTable::Class cls;
    cls.signature = signature;
    cls.member_indices = indices;
    for (int idx : indices)
      cls.member_supports.push_back(supports[static_cast<std::size_t>(idx - 1)]);
    cls.representative = cls.member_supports.front();
    cls.chi_ref =
        holevo(OrderConfiguration::equiprobable(cls.representative),
               ChannelParams{0.1, 2})
            .chi;
    table.classes.push_back(std::move(cls));
  }
  std::sort(table.classes.begin(), table.classes.end(),
            [](const ClassTable::Class& a, const ClassTable::Class& b) {
              if (a.chi_ref != b.chi_ref) return a.chi_ref > b.chi_ref;
              return a.member_indices.front() < b.member_indices.front();
            });
  return table;
}

/// Reference class memberships (1-based lexicographic subscripts) that the
/// classifier must rediscover. Ground-truth test data, not an input to
/// classify().
inline std::vector<std::vector<int>> reference_class_members(int m) {
  switch (m) {
    case 1: return {{1, 2, 3, 4, 5, 6}};
    case 2: return {{1, 2, 8, 10, 14, 15}, {3, 4, 6, 9, 12, 13}, {5, 7, 11}};
    case 3:
      return {{1, 3, 5, 16, 18, 20},
              {2, 4, 6, 7, 9, 10, 11, 12, 14, 15, 17, 19},
              {8, 13}};
    case 4: return {{1, 2, 6, 8, 14, 15}, {3, 4, 7, 10, 12, 13}, {5, 9, 11}};
    case 5: return {{1, 2, 3, 4, 5, 6}};
    case 6: return {{1}};
    default:
      throw std::invalid_argument("reference_class_members: m must be 1..6");
  }
}

/// Result of comparing a computed partition with the reference one.
struct ClassTableReport {
  bool all_matched = false;
  /// reference class index (1-based) matched by each computed class;
  /// 0 when a computed class matches no reference class.
  std::vector<int> reference_class_of;
  std::vector<std::string> mismatches;
};

inline ClassTableReport verify_against_reference(const ClassTable& table) {
  const auto reference = reference_class_members(table.m);
  ClassTableReport report;
  report.all_matched = true;

  std::vector<std::set<int>> reference_sets;
  for (const auto& members : reference)
    reference_sets.emplace_back(members.begin(), members.end());

  std::vector<bool> used(reference_sets.size(), false);
  for (const auto& cls : table.classes) {
    const std::set<int> computed(cls.member_indices.begin(),
                                 cls.member_indices.end());
    int matched = 0;
    for (std::size_t r = 0; r < reference_sets.size(); ++r) {
      if (!used[r] && reference_sets[r] == computed) {
        matched = static_cast<int>(r) + 1;
        used[r] = true;
        break;
      }
    }
    report.reference_class_of.push_back(matched);
    if (matched == 0) {
      report.all_matched = false;
      std::string msg = "m=" + std::to_string(table.m) +
                        ": computed class with members {";
      for (std::size_t i = 0; i < cls.member_indices.size(); ++i) {
        if (i) msg += ",";
        msg += "S" + std::to_string(cls.member_indices[i]);
      }
      msg += "} matches no reference class";
      report.mismatches.push_back(msg);
    }
  }
  if (table.classes.size() != reference_sets.size()) {
    report.all_matched = false;
    report.mismatches.push_back(
        "m=" + std::to_string(table.m) + ": expected " +
        std::to_string(reference_sets.size()) + " classes, computed " +
        std::to_string(table.classes.size()));
  }
  return report;
}

}  // namespace q3switch
