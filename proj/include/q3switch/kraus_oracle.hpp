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

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "q3switch/channel.hpp"
#include "q3switch/holevo.hpp"
#include "q3switch/order_config.hpp"

// Brute-force validator for the block-coefficient pipeline. Builds the
// switch channel from explicit Kraus operators and permutations and produces
// the complete 6d x 6d output state. Complex arithmetic stays in this module.

namespace q3switch::oracle {

using Eigen::MatrixXcd;

/// Kraus operators of one depolarizing channel: a weighted identity plus the
/// d^2 - 1 nontrivial Heisenberg-Weyl unitaries, each scaled by
/// sqrt((1-q)/d^2).
struct KrausSet {
  std::vector<MatrixXcd> operators;
};

inline KrausSet depolarizing_kraus(const ChannelParams& params) {
  params.validate();
  const int d = params.d;
  const double q = params.q;
  const std::complex<double> omega =
      std::exp(std::complex<double>(0.0, 2.0 * M_PI / d));
  KrausSet set;
  set.operators.push_back(std::sqrt(q + (1.0 - q) / (d * d)) *
                          MatrixXcd::Identity(d, d));
  const double w = std::sqrt((1.0 - q) / (d * d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a == 0 && b == 0) continue;
      MatrixXcd weyl = MatrixXcd::Zero(d, d);
      for (int j = 0; j < d; ++j)
        weyl((j + a) % d, j) = std::pow(omega, j * b);
      set.operators.push_back(w * weyl);
    }
  }
  return set;
}

/// max |sum_i K_i^dag K_i - I| entry. For operators proportional to
/// unitaries this coincides with the condition on sum_i K_i K_i^dag.
inline double completeness_error(const KrausSet& set) {
  const auto d = set.operators.front().rows();
  MatrixXcd acc = MatrixXcd::Zero(d, d);
  for (const auto& op : set.operators) acc += op.adjoint() * op;
  return (acc - MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

/// The six causal orders as channel-label sequences in application order
/// (leftmost factor of the operator product). Control label n applies
/// channels orders()[n-1].
inline const std::array<std::array<int, 3>, 6>& permutation_table() {
  static const std::array<std::array<int, 3>, 6> orders = {{
      {1, 2, 3},  // |1>
      {1, 3, 2},  // |2>
      {2, 1, 3},  // |3>
      {2, 3, 1},  // |4>
      {3, 1, 2},  // |5>
      {3, 2, 1},  // |6>
  }};
  return orders;
}

/// Complete output state S(rho x |psi_c><psi_c|) with |psi_c> = sum sqrt(P_n)|n>.
/// Stored control-major: block (n,n') occupies rows/cols [(n-1)d, nd).
struct FullOutputState {
  MatrixXcd matrix;
  int d = 2;

  MatrixXcd block(int n, int n_prime) const {
    return matrix.block((n - 1) * d, (n_prime - 1) * d, d, d);
  }

  /// Partial trace over the target: 6x6 control marginal.
  Eigen::Matrix<std::complex<double>, 6, 6> control_marginal() const {
    Eigen::Matrix<std::complex<double>, 6, 6> ctrl;
    for (int n = 1; n <= 6; ++n)
      for (int np = 1; np <= 6; ++np) ctrl(n - 1, np - 1) = block(n, np).trace();
    return ctrl;
  }

  /// Partial trace over the control: d x d target marginal.
  MatrixXcd target_marginal() const {
    MatrixXcd out = MatrixXcd::Zero(d, d);
    for (int n = 1; n <= 6; ++n) out += block(n, n);
    return out;
  }
};

inline FullOutputState switch_output(const OrderConfiguration& config,
                                     const ChannelParams& params,
                                     const MatrixXcd& target,
                                     int dimension_cap = 4) {
  params.validate();
  const int d = params.d;
  if (d > dimension_cap)
    throw std::invalid_argument(
        "switch_output: d exceeds the brute-force dimension cap");
  if (target.rows() != d || target.cols() != d)
    throw std::invalid_argument("switch_output: target dimension mismatch");
  if ((target - target.adjoint()).cwiseAbs().maxCoeff() > 1e-10 ||
      std::abs(target.trace().real() - 1.0) > 1e-10)
    throw std::invalid_argument(
        "switch_output: target must be Hermitian with trace 1");

  const auto kraus = depolarizing_kraus(params).operators;
  const int n_ops = static_cast<int>(kraus.size());
  const auto& orders = permutation_table();
  const auto& probs = config.probs();
  std::array<double, 6> amp;
  for (int n = 0; n < 6; ++n)
    amp[static_cast<std::size_t>(n)] = std::sqrt(probs[static_cast<std::size_t>(n)]);

  FullOutputState out;
  out.d = d;
  out.matrix = MatrixXcd::Zero(6 * d, 6 * d);

  std::array<MatrixXcd, 6> product;
  std::array<MatrixXcd, 6> product_rho;
  for (int i = 0; i < n_ops; ++i) {
    for (int j = 0; j < n_ops; ++j) {
      for (int k = 0; k < n_ops; ++k) {
        const std::array<const MatrixXcd*, 4> by_channel = {nullptr, &kraus[i],
                                                            &kraus[j], &kraus[k]};
        for (int n = 0; n < 6; ++n) {
          const auto& ord = orders[static_cast<std::size_t>(n)];
          product[static_cast<std::size_t>(n)] = (*by_channel[ord[0]]) *
                                                 (*by_channel[ord[1]]) *
                                                 (*by_channel[ord[2]]);
          product_rho[static_cast<std::size_t>(n)] =
              product[static_cast<std::size_t>(n)] * target;
        }
        for (int n = 0; n < 6; ++n) {
          if (probs[static_cast<std::size_t>(n)] == 0.0) continue;
          for (int np = 0; np < 6; ++np) {
            if (probs[static_cast<std::size_t>(np)] == 0.0) continue;
            out.matrix.block(n * d, np * d, d, d) +=
                amp[static_cast<std::size_t>(n)] * amp[static_cast<std::size_t>(np)] *
                (product_rho[static_cast<std::size_t>(n)] *
                 product[static_cast<std::size_t>(np)].adjoint());
          }
        }
      }
    }
  }
  return out;
}

/// Holevo information from the full output states alone; H_min is the
/// smallest output entropy over the computational-basis pure inputs.
inline HolevoResult holevo_bruteforce(const OrderConfiguration& config,
                                      const ChannelParams& params,
                                      int dimension_cap = 3) {
  params.validate();
  const int d = params.d;
  if (d > dimension_cap)
    throw std::invalid_argument(
        "holevo_bruteforce: d exceeds the brute-force dimension cap");

  auto entropy_bits = [](const Eigen::VectorXd& eig) {
    double h = 0.0;
    for (int i = 0; i < eig.size(); ++i) {
      const double lam = eig[i];
      if (lam < -1e-10)
        throw std::runtime_error("holevo_bruteforce: negative eigenvalue");
      if (lam > 0.0) h -= lam * std::log2(lam);
    }
    return h;
  };

  double hmin = 0.0;
  Eigen::Matrix<std::complex<double>, 6, 6> ctrl;
  for (int b = 0; b < d; ++b) {
    MatrixXcd basis_state = MatrixXcd::Zero(d, d);
    basis_state(b, b) = 1.0;
    const auto out = switch_output(config, params, basis_state, dimension_cap);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(out.matrix,
                                                    Eigen::EigenvaluesOnly);
    const double h = entropy_bits(solver.eigenvalues());
    if (b == 0 || h < hmin) hmin = h;
    if (b == 0) ctrl = out.control_marginal();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<std::complex<double>, 6, 6>>
      ctrl_solver(ctrl, Eigen::EigenvaluesOnly);
  const double hctrl = entropy_bits(ctrl_solver.eigenvalues());
  return assemble_holevo(hmin, hctrl, params, config);
}

}  // namespace q3switch::oracle
