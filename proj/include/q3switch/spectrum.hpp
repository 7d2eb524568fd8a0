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
#include <optional>
#include <stdexcept>
#include <vector>

#include "q3switch/channel.hpp"
#include "q3switch/mat6.hpp"
#include "q3switch/order_config.hpp"
#include "q3switch/switch_matrix.hpp"

namespace q3switch {

/// Eigenvalues lambda_{s,k} of the switch output, indexed by control branch
/// s in 1..6 and target branch k in {0,1}. lambdas[k][s-1], each row sorted
/// descending.
struct SwitchSpectrum {
  std::array<std::array<double, 6>, 2> lambdas{};
  int d = 2;

  /// Multiplicity-weighted total sum_{s,k} (d-1)^{1-k} lambda_{s,k};
  /// equals 1 for a trace-preserving channel.
  double weighted_sum() const {
    double total = 0.0;
    for (int k = 0; k < 2; ++k) {
      const double w = (k == 0) ? static_cast<double>(d - 1) : 1.0;
      for (double lam : lambdas[static_cast<std::size_t>(k)]) total += w * lam;
    }
    return total;
  }
};

/// Six eigenvalues of a reduced matrix, descending.
inline std::array<double, 6> eigenvalues_numeric(const ReducedMatrix& mat) {
  if (mat.entries.max_asymmetry() > 1e-12)
    throw std::invalid_argument("eigenvalues_numeric: matrix not symmetric");
  return jacobi_eigenvalues(mat.entries);
}

inline SwitchSpectrum switch_spectrum(const OrderConfiguration& config,
                                      const ChannelParams& params) {
  SwitchSpectrum spectrum;
  spectrum.d = params.d;
  for (int k = 0; k < 2; ++k)
    spectrum.lambdas[static_cast<std::size_t>(k)] =
        eigenvalues_numeric(reduced_matrix(config, params, k));
  return spectrum;
}

/// Monic characteristic polynomial coefficients of a reduced matrix,
/// descending powers: c[0] lambda^6 + ... + c[6], c[0] = 1.
struct CharPolyCoeffs {
  std::array<double, 7> c{};
};

inline CharPolyCoeffs char_poly_from_eigenvalues(
    const std::array<double, 6>& eig) {
  CharPolyCoeffs poly;
  poly.c[0] = 1.0;
  int degree = 0;
  for (double root : eig) {
    ++degree;
    poly.c[static_cast<std::size_t>(degree)] = 0.0;
    for (int i = degree; i >= 1; --i)
      poly.c[static_cast<std::size_t>(i)] -=
          root * poly.c[static_cast<std::size_t>(i - 1)];
  }
  return poly;
}

inline CharPolyCoeffs char_poly(const ReducedMatrix& mat) {
  return char_poly_from_eigenvalues(eigenvalues_numeric(mat));
}

/// One of the equivalence classes of equiprobable configurations,
/// numbered as in the class table (per-m paper numbering).
struct ClassId {
  int m = 1;
  int class_index = 1;
};

/// First table entry of each class: the representative support.
inline std::vector<int> class_representative_support(ClassId id) {
  switch (id.m * 10 + id.class_index) {
    case 11: return {1};
    case 21: return {1, 2};        // pair joined by B
    case 22: return {1, 4};        // pair joined by D
    case 23: return {1, 6};        // pair joined by F
    case 31: return {1, 2, 3};     // blocks {B,B,D}
    case 32: return {1, 2, 4};     // blocks {B,D,F}
    case 33: return {1, 4, 5};     // blocks {D,D,D}
    case 41: return {1, 2, 3, 4};
    case 42: return {1, 2, 3, 6};
    case 43: return {1, 2, 4, 6};
    case 51: return {1, 2, 3, 4, 5};
    case 61: return {1, 2, 3, 4, 5, 6};
    default:
      throw std::invalid_argument("class_representative_support: unknown class");
  }
}

inline int class_count(int m) {
  switch (m) {
    case 1: return 1;
    case 2: return 3;
    case 3: return 3;
    case 4: return 3;
    case 5: return 1;
    case 6: return 1;
    default: throw std::invalid_argument("class_count: m must be 1..6");
  }
}

namespace detail {

struct BlockBranchValues {
  double A, B, D, F;
};

inline BlockBranchValues branch_values(const ChannelParams& params, int k) {
  return {eigen_branch_value(block_coefficients(BlockKind::A, params), k, params.d),
          eigen_branch_value(block_coefficients(BlockKind::B, params), k, params.d),
          eigen_branch_value(block_coefficients(BlockKind::D, params), k, params.d),
          eigen_branch_value(block_coefficients(BlockKind::F, params), k, params.d)};
}

inline double sqrt_nonneg(double x) { return std::sqrt(std::max(x, 0.0)); }

}  // namespace detail

/// Closed-form eigenvalues for the cataloged classes, descending order.
/// Returns nullopt for m=3 class 2, m=4 class 2 and m=5, whose roots have no
/// compact closed form; those cases take the numeric path and are checked
/// against their characteristic polynomials via char_poly_residual().
///
/// Note on m=4 class 1: the two quadratic factors of its characteristic
/// polynomial carry different radicals,
///   gamma_minus = sqrt(4D^2 + 5B^2 - 8DB - 2BF + F^2)  with the (2A-B-F) pair,
///   gamma_plus  = sqrt(4D^2 + 5B^2 + 8DB - 2BF + F^2)  with the (2A+B+F) pair.
inline std::optional<std::array<double, 6>> eigenvalues_analytic(
    ClassId id, const ChannelParams& params, int k) {
  params.validate();
  if (k != 0 && k != 1)
    throw std::invalid_argument("eigenvalues_analytic: k must be 0 or 1");
  if (id.m < 1 || id.m > 6 || id.class_index < 1 ||
      id.class_index > class_count(id.m))
    throw std::invalid_argument("eigenvalues_analytic: unknown class id");

  const auto v = detail::branch_values(params, k);
  std::array<double, 6> eig{};
  switch (id.m * 10 + id.class_index) {
    case 11:
      eig = {v.A, 0, 0, 0, 0, 0};
      break;
    case 21:
      eig = {(v.A - v.B) / 2, (v.A + v.B) / 2, 0, 0, 0, 0};
      break;
    case 22:
      eig = {(v.A - v.D) / 2, (v.A + v.D) / 2, 0, 0, 0, 0};
      break;
    case 23:
      eig = {(v.A - v.F) / 2, (v.A + v.F) / 2, 0, 0, 0, 0};
      break;
    case 31: {
      const double s = detail::sqrt_nonneg(v.D * v.D + 8.0 * v.B * v.B);
      eig = {(v.A - v.D) / 3, (2 * v.A + v.D - s) / 6, (2 * v.A + v.D + s) / 6,
             0, 0, 0};
      break;
    }
    case 33:
      eig = {(v.A - v.D) / 3, (v.A - v.D) / 3, (v.A + 2 * v.D) / 3, 0, 0, 0};
      break;
    case 41: {
      const double common =
          4 * v.D * v.D + 5 * v.B * v.B - 2 * v.B * v.F + v.F * v.F;
      const double gm = detail::sqrt_nonneg(common - 8 * v.D * v.B);
      const double gp = detail::sqrt_nonneg(common + 8 * v.D * v.B);
      eig = {(2 * v.A - v.B - v.F - gm) / 8, (2 * v.A - v.B - v.F + gm) / 8,
             (2 * v.A + v.B + v.F - gp) / 8, (2 * v.A + v.B + v.F + gp) / 8,
             0, 0};
      break;
    }
    case 43:
      eig = {(v.A - v.D + v.B - v.F) / 4, (v.A + v.D - v.B - v.F) / 4,
             (v.A - v.D - v.B + v.F) / 4, (v.A + v.D + v.B + v.F) / 4, 0, 0};
      break;
    case 61: {
      const double e1 = (v.A - v.D + v.B - v.F) / 6;
      const double e3 = (v.A + 2 * v.D - 2 * v.B - v.F) / 6;
      const double e4 = (v.A - v.D - v.B + v.F) / 6;
      const double e6 = (v.A + 2 * v.D + 2 * v.B + v.F) / 6;
      eig = {e1, e1, e3, e4, e4, e6};
      break;
    }
    case 32:
    case 42:
    case 51:
      return std::nullopt;
    default:
      return std::nullopt;
  }
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

/// Characteristic polynomial value P(lambda) for the three uncataloged
/// classes. Each numeric eigenvalue must be a root to within 1e-9.
inline std::optional<double> char_poly_residual(ClassId id,
                                                const ChannelParams& params,
                                                int k, double lambda) {
  params.validate();
  const auto v = detail::branch_values(params, k);
  const double A = v.A, B = v.B, D = v.D, F = v.F;
  const double L = lambda;
  switch (id.m * 10 + id.class_index) {
    case 32:
      return (1.0 / 27.0) * L * L * L *
             (-A * A * A + 9 * A * A * L +
              A * (D * D - 27 * L * L + B * B + F * F) + 27 * L * L * L -
              3 * L * (D * D + B * B + F * F) - 2 * D * B * F);
    case 42:
      return (1.0 / 256.0) * L * L * (A - D - 4 * L) *
             (A * A * A + A * A * (D - 12 * L) -
              A * (2 * D * D + 8 * D * L - 48 * L * L + 2 * B * B + F * F) +
              16 * D * L * L - 64 * L * L * L +
              4 * L * (2 * (D * D + B * B) + F * F) + D * F * (4 * B - F));
    case 51: {
      const double xi = A * A * A + 2 * A * A * D -
                        A * (D * D + 3 * B * B + 2 * B * F + F * F) +
                        2 * D * (-D * D + B * B + 2 * B * F);
      const double beta = -15 * A * A - 20 * A * D +
                          5 * (D * D + 3 * B * B + 2 * B * F + F * F);
      return -(1.0 / 3125.0) * L * (A - D - 5 * L + B - F) *
             (A - D - 5 * L - B + F) *
             (xi + L * beta + L * L * (75 * A + 50 * D) - 125 * L * L * L);
    }
    default:
      return std::nullopt;
  }
}

/// One evaluation point of the classification signature.
struct SamplePoint {
  double q;
  int d;
  int k;
};

/// Fixed generic sample points used for classification. Avoids q in {0,1}
/// where distinct classes can collide.
inline const std::vector<SamplePoint>& default_sample_points() {
  static const std::vector<SamplePoint> points = [] {
    std::vector<SamplePoint> pts;
    for (double q : {0.15, 0.45, 0.85})
      for (int d : {2, 3})
        for (int k : {0, 1}) pts.push_back({q, d, k});
    return pts;
  }();
  return points;
}

/// Round to 10 significant digits; magnitudes below 1e-11 count as zero so
/// that eigensolver noise on exact zeros cannot split a class.
inline double round_signature_value(double x) {
  if (std::abs(x) < 1e-11) return 0.0;
  const double exponent = std::floor(std::log10(std::abs(x)));
  const double scale = std::pow(10.0, 9.0 - exponent);
  return std::round(x * scale) / scale;
}

/// Concatenated rounded characteristic-polynomial coefficients at each
/// sample point. Two equiprobable configurations are spectrally equivalent
/// iff their signatures are equal.
inline std::vector<double> invariant_signature(
    const OrderConfiguration& config,
    const std::vector<SamplePoint>& points = default_sample_points()) {
  if (points.empty())
    throw std::invalid_argument("invariant_signature: no sample points");
  std::vector<double> signature;
  signature.reserve(points.size() * 7);
  for (const auto& pt : points) {
    const auto poly =
        char_poly(reduced_matrix(config, ChannelParams{pt.q, pt.d}, pt.k));
    for (double coeff : poly.c)
      signature.push_back(round_signature_value(coeff));
  }
  return signature;
}

}  // namespace q3switch
