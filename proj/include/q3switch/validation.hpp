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

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "q3switch/fractional.hpp"
#include "q3switch/kraus_oracle.hpp"
#include "q3switch/switch_matrix.hpp"

namespace q3switch {

/// Outcome of the brute-force cross-checks: Kraus-built output blocks versus
/// the block-coefficient prediction, control marginal versus the control
/// matrix, and chi from both routes.
struct ValidationReport {
  bool passed = false;
  int configurations = 0;
  std::vector<int> dimensions;
  double max_block_deviation = 0.0;
  double max_control_deviation = 0.0;
  double max_chi_deviation = 0.0;
  double block_tolerance = 1e-10;
  double control_tolerance = 1e-10;
  double chi_tolerance = 1e-8;
  std::vector<std::string> failures;

  std::string to_string() const {
    std::ostringstream os;
    os << "validation over " << configurations << " random configurations, d in {";
    for (std::size_t i = 0; i < dimensions.size(); ++i)
      os << (i ? "," : "") << dimensions[i];
    os << "}\n";
    os << "  max block deviation:   " << max_block_deviation << " (tol "
       << block_tolerance << ")\n";
    os << "  max control deviation: " << max_control_deviation << " (tol "
       << control_tolerance << ")\n";
    os << "  max chi deviation:     " << max_chi_deviation << " (tol "
       << chi_tolerance << ")\n";
    for (const auto& f : failures) os << "  FAIL: " << f << "\n";
    os << (passed ? "  PASS" : "  FAIL") << "\n";
    return os.str();
  }
};

/// Runs the oracle comparison on `samples` random configurations per
/// dimension, at q in {0, 0.25, 0.5, 0.75, 1}. `corrupt_pattern` swaps two
/// block kinds in the predicted blocks; the report must then locate the
/// mismatch (negative control for the validator itself).
inline ValidationReport run_validation(const std::vector<int>& dimensions,
                                       int samples, std::uint64_t seed,
                                       bool corrupt_pattern = false,
                                       bool include_chi = true) {
  ValidationReport report;
  report.dimensions = dimensions;
  report.configurations = samples;
  const std::vector<double> q_values = {0.0, 0.25, 0.5, 0.75, 1.0};
  const BlockPattern& pattern = canonical_pattern();

  auto predicted_kind = [&](int i, int j) {
    BlockKind kind = pattern.at(i, j);
    if (!corrupt_pattern) return kind;
    // swap B and D off the diagonal
    if (kind == BlockKind::B) return BlockKind::D;
    if (kind == BlockKind::D) return BlockKind::B;
    return kind;
  };

  int config_index = 0;
  for (int s = 0; s < samples; ++s) {
    const auto config = sample_simplex_point(seed, static_cast<std::uint64_t>(s));
    for (int d : dimensions) {
      for (double q : q_values) {
        const ChannelParams params{q, d};
        // random pure target state, drawn from the same stream family
        std::mt19937_64 engine(
            rng::stream_seed(seed ^ 0xABCDEF1234567890ull,
                             static_cast<std::uint64_t>(config_index)));
        Eigen::VectorXcd vec(d);
        for (int i = 0; i < d; ++i)
          vec[i] = std::complex<double>(rng::uniform01(engine) - 0.5,
                                        rng::uniform01(engine) - 0.5);
        vec.normalize();
        const Eigen::MatrixXcd target = vec * vec.adjoint();
        const auto out = oracle::switch_output(config, params, target);

        const auto& probs = config.probs();
        for (int i = 1; i <= 6; ++i) {
          for (int j = 1; j <= 6; ++j) {
            const double pi = probs[static_cast<std::size_t>(i - 1)];
            const double pj = probs[static_cast<std::size_t>(j - 1)];
            const auto coeffs =
                block_coefficients(predicted_kind(i, j), params);
            const Eigen::MatrixXcd expected =
                std::sqrt(pi * pj) *
                (coeffs.rho_coeff * target +
                 (coeffs.id_coeff / d) * Eigen::MatrixXcd::Identity(d, d));
            const double dev =
                (out.block(i, j) - expected).cwiseAbs().maxCoeff();
            if (dev > report.max_block_deviation)
              report.max_block_deviation = dev;
            if (dev > report.block_tolerance &&
                report.failures.size() < 8) {
              std::ostringstream os;
              os << "block (" << i << "," << j << ") ["
                 << block_kind_char(pattern.at(i, j)) << "] deviates by "
                 << dev << " at q=" << q << ", d=" << d << ", config "
                 << support_label(config.support());
              report.failures.push_back(os.str());
            }
          }
        }

        const auto ctrl = out.control_marginal();
        const auto ctrl_expected = control_output(config, params);
        for (int i = 0; i < 6; ++i) {
          for (int j = 0; j < 6; ++j) {
            const double dev =
                std::abs(ctrl(i, j) - std::complex<double>(
                                          ctrl_expected.entries.at(i, j)));
            if (dev > report.max_control_deviation)
              report.max_control_deviation = dev;
          }
        }
        if (include_chi) {
          const double chi_pipeline = holevo(config, params).chi;
          const double chi_oracle =
              oracle::holevo_bruteforce(config, params).chi;
          const double dev = std::abs(chi_pipeline - chi_oracle);
          if (dev > report.max_chi_deviation) report.max_chi_deviation = dev;
        }
        ++config_index;
      }
    }
  }

  report.passed = report.max_block_deviation <= report.block_tolerance &&
                  report.max_control_deviation <= report.control_tolerance &&
                  report.max_chi_deviation <= report.chi_tolerance;
  return report;
}

}  // namespace q3switch
