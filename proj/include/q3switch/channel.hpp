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

#include <stdexcept>
#include <string>

namespace q3switch {

/// Parameters of one depolarizing channel N(rho) = q*rho + (1-q)*I/d,
/// shared by all three channels in the switch.
struct ChannelParams {
  double q = 0.0;  ///< depolarization strength, 0 (fully noisy) .. 1 (transparent)
  int d = 2;       ///< target Hilbert-space dimension, >= 2

  void validate() const {
    if (!(q >= 0.0 && q <= 1.0))
      throw std::invalid_argument("ChannelParams: q must lie in [0,1], got " +
                                  std::to_string(q));
    if (d < 2)
      throw std::invalid_argument("ChannelParams: d must be >= 2, got " +
                                  std::to_string(d));
  }
};

/// The four distinct operator blocks appearing in the 6x6 switch matrix.
enum class BlockKind { A, B, D, F };

inline char block_kind_char(BlockKind kind) {
  switch (kind) {
    case BlockKind::A: return 'A';
    case BlockKind::B: return 'B';
    case BlockKind::D: return 'D';
    case BlockKind::F: return 'F';
  }
  return '?';
}

/// A block is a linear combination  rho_coeff * rho + id_coeff * I/d.
/// Every block of the switch output has this form, so all spectral work
/// reduces to these two scalars.
struct BlockCoefficients {
  double rho_coeff = 0.0;
  double id_coeff = 0.0;
};

/// Coefficient pair of the named block at (q, d).
///
/// A = q^3 rho + (1-q^3) I/d
/// D = rho/d^2 ((d^2+1)q^3 - q^2 - q + 1) + I/d (-2q^3 + q^2 + q)
/// B = q rho/d^2 ((d^2+1)q^2 - 2q + 1)
///     - I/d^3 (q-1)((d^2+1)q^2 + 2(d^2-1)q + 1)
/// F = rho/d^2 (d^2 q^3 + 3(q-1)^2 q)
///     + I/d^3 ((1-q)^3 - 3 d^2 (q-1) q^2)
inline BlockCoefficients block_coefficients(BlockKind kind,
                                            const ChannelParams& params) {
  params.validate();
  const double q = params.q;
  const double d = static_cast<double>(params.d);
  const double d2 = d * d;
  const double q2 = q * q;
  const double q3 = q2 * q;
  switch (kind) {
    case BlockKind::A:
      return {q3, 1.0 - q3};
    case BlockKind::D:
      return {((d2 + 1.0) * q3 - q2 - q + 1.0) / d2, -2.0 * q3 + q2 + q};
    case BlockKind::B:
      return {(q / d2) * ((d2 + 1.0) * q2 - 2.0 * q + 1.0),
              -(1.0 / d2) * (q - 1.0) *
                  ((d2 + 1.0) * q2 + 2.0 * (d2 - 1.0) * q + 1.0)};
    case BlockKind::F:
      return {(d2 * q3 + 3.0 * (q - 1.0) * (q - 1.0) * q) / d2,
              ((1.0 - q) * (1.0 - q) * (1.0 - q) - 3.0 * d2 * (q - 1.0) * q2) /
                  d2};
  }
  throw std::invalid_argument("block_coefficients: unknown block kind");
}

/// Scalar a block contributes on the common eigenvector where rho has
/// eigenvalue k in {0,1}: rho_coeff * k + id_coeff / d.
inline double eigen_branch_value(const BlockCoefficients& coeffs, int k,
                                 int d) {
  if (k != 0 && k != 1)
    throw std::invalid_argument("eigen_branch_value: k must be 0 or 1");
  return coeffs.rho_coeff * static_cast<double>(k) +
         coeffs.id_coeff / static_cast<double>(d);
}

/// Trace of the block over the target (Tr rho = 1, Tr I/d = 1), i.e. the
/// scalar the block contributes to the output control matrix.
inline double control_trace_value(const BlockCoefficients& coeffs) {
  return coeffs.rho_coeff + coeffs.id_coeff;
}

}  // namespace q3switch
