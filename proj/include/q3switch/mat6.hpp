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
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace q3switch {

/// Dense symmetric 6x6 matrix of doubles, 0-based indexing.
struct Mat6 {
  std::array<double, 36> a{};

  double& at(int i, int j) { return a[static_cast<std::size_t>(i * 6 + j)]; }
  double at(int i, int j) const {
    return a[static_cast<std::size_t>(i * 6 + j)];
  }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < 6; ++i) t += at(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
  }

  double max_asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        m = std::max(m, std::abs(at(i, j) - at(j, i)));
    return m;
  }
};

/// Eigenvalues of a symmetric 6x6 matrix by cyclic Jacobi rotations,
/// returned in descending order. Sweeps until the largest off-diagonal
/// entry falls below 1e-14 relative to the matrix scale.
inline std::array<double, 6> jacobi_eigenvalues(Mat6 m) {
  constexpr int kMaxSweeps = 64;
  const double scale = std::max(m.max_abs(), 1.0);
  const double threshold = 1e-14 * scale;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) off = std::max(off, std::abs(m.at(p, q)));
    if (off <= threshold) {
      std::array<double, 6> eig;
      for (int i = 0; i < 6; ++i) eig[static_cast<std::size_t>(i)] = m.at(i, i);
      std::sort(eig.begin(), eig.end(), std::greater<double>());
      return eig;
    }
    for (int p = 0; p < 6; ++p) {
      for (int q = p + 1; q < 6; ++q) {
        const double apq = m.at(p, q);
        if (std::abs(apq) <= threshold) continue;
        const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = m.at(p, p);
        const double aqq = m.at(q, q);
        m.at(p, p) = app - t * apq;
        m.at(q, q) = aqq + t * apq;
        m.at(p, q) = 0.0;
        m.at(q, p) = 0.0;
        for (int r = 0; r < 6; ++r) {
          if (r == p || r == q) continue;
          const double arp = m.at(r, p);
          const double arq = m.at(r, q);
          m.at(r, p) = arp - s * (arq + tau * arp);
          m.at(p, r) = m.at(r, p);
          m.at(r, q) = arq + s * (arp - tau * arq);
          m.at(q, r) = m.at(r, q);
        }
      }
    }
  }
  throw std::runtime_error(
      "jacobi_eigenvalues: no convergence after bounded sweep count");
}

}  // namespace q3switch
