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

#include <cmath>
#include <stdexcept>

#include "q3switch/channel.hpp"
#include "q3switch/order_config.hpp"
#include "q3switch/spectrum.hpp"
#include "q3switch/switch_matrix.hpp"

namespace q3switch {

namespace detail {

/// x * log2(x) with the continuity convention 0 log 0 = 0. Eigenvalues in
/// [-negative_tol, 0) are clamped to 0; anything more negative is a fault.
inline double plogp(double x, double negative_tol) {
  if (x <= 0.0) {
    if (x < -negative_tol)
      throw std::runtime_error("entropy: eigenvalue below -tolerance: " +
                               std::to_string(x));
    return 0.0;
  }
  return x * std::log2(x);
}

}  // namespace detail

/// Minimal output entropy in bits:
/// H_min = -sum_{s,k} (d-1)^{1-k} lambda_{s,k} log2 lambda_{s,k}.
inline double h_min(const SwitchSpectrum& spectrum) {
  double h = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double weight = (k == 0) ? static_cast<double>(spectrum.d - 1) : 1.0;
    for (double lam : spectrum.lambdas[static_cast<std::size_t>(k)])
      h -= weight * detail::plogp(lam, 1e-12);
  }
  return h;
}

/// Von Neumann entropy in bits of the 6x6 output control state.
inline double h_control(const ControlMatrix& control) {
  const double trace = control.entries.trace();
  if (std::abs(trace - 1.0) > 1e-10)
    throw std::runtime_error("h_control: control matrix trace != 1");
  double h = 0.0;
  for (double lam : jacobi_eigenvalues(control.entries))
    h -= detail::plogp(lam, 1e-10);
  return h;
}

/// Holevo information and its two entropy pieces at one evaluation point.
struct HolevoResult {
  double chi = 0.0;
  double h_min = 0.0;
  double h_control = 0.0;
  ChannelParams params;
  OrderConfiguration config;
};

inline HolevoResult assemble_holevo(double hmin, double hctrl,
                                    const ChannelParams& params,
                                    const OrderConfiguration& config) {
  HolevoResult result;
  result.h_min = hmin;
  result.h_control = hctrl;
  result.params = params;
  result.config = config;
  result.chi = std::log2(static_cast<double>(params.d)) + hctrl - hmin;
  if (result.chi < 0.0) {
    if (result.chi < -1e-9)
      throw std::runtime_error("holevo: chi below -1e-9: " +
                               std::to_string(result.chi));
    result.chi = 0.0;
  }
  return result;
}

/// chi = log2 d + H(control output) - H_min, all in bits.
inline HolevoResult holevo(const OrderConfiguration& config,
                           const ChannelParams& params) {
  params.validate();
  return assemble_holevo(h_min(switch_spectrum(config, params)),
                         h_control(control_output(config, params)), params,
                         config);
}

/// Closed-form H_min for the full equiprobable six-order superposition.
/// Each addend is (6 d^3 times) a multiplicity-weighted output eigenvalue
/// paired with its log.
inline double h_min_m6_analytic(const ChannelParams& params) {
  params.validate();
  const double q = params.q;
  const double d = static_cast<double>(params.d);
  const double d2 = d * d, d3 = d2 * d;
  const double u = 1.0 - q;
  const double u2 = u * u, u3 = u2 * u;
  auto term = [](double coeff, double arg) {
    return (coeff > 0.0 && arg > 0.0) ? coeff * std::log2(arg) : 0.0;
  };
  const double big = u * (d2 * (2 * q + 1) * (5 * q + 1) + 3 * u2);
  const double last =
      6 * d3 * q * q * q + d2 * (2 * q + 1) * (5 * q + 1) * u +
      d * (7 * q + 2) * u2 + 3 * u3;
  double total = 0.0;
  total += term((d - 1) * u2 * (d - 3 * q + 3),
                (d - 1) * u2 * (d - 3 * q + 3) / (6 * d3));
  total += term(2 * (d - 1) * d * u3, (d - 1) * u3 / (6 * d2));
  total += term(2 * (d - 1) * d2 * u3, u3 / (6 * d));
  total += term(2 * (d - 1) * d * (3 * q + 1) * u2,
                (d - 1) * u2 * (3 * q + 1) / (6 * d2));
  total += term(2 * (d - 1) * d2 * (3 * q + 1) * u2,
                u2 * (3 * q + 1) / (6 * d));
  total += term((d - 1) * u2 * (d2 + 3 * q - 3),
                u2 * (d2 + 3 * q - 3) / (6 * d3));
  total += term((d - 1) * big, big / (6 * d3));
  total += term(last, last / (6 * d3));
  return -total / (6 * d3);
}

/// Closed-form control-output entropy for the equiprobable six-order
/// superposition, from the closed-form control eigenvalues
///   (d^2-1)(1-q)^2 (3q+1) / (6 d^2)   twice,
///   (d^2-1)(1-q)^2 / (6 d^2),
///   (d^2-1)(1-q)^3 / (6 d^2)          twice,
///   ((1-q)^2 (4q+5)/d^2 - 4q^3 + 3q^2 + 6q + 1) / 6.
inline double h_control_m6_analytic(const ChannelParams& params) {
  params.validate();
  const double q = params.q;
  const double d = static_cast<double>(params.d);
  const double d2 = d * d;
  const double u = 1.0 - q;
  const double u2 = u * u;
  const double lam1 = (d2 - 1) * u2 * (3 * q + 1) / (6 * d2);
  const double lam3 = (d2 - 1) * u2 / (6 * d2);
  const double lam4 = (d2 - 1) * u2 * u / (6 * d2);
  const double lam6 =
      (u2 * (4 * q + 5) / d2 - 4 * q * q * q + 3 * q * q + 6 * q + 1) / 6.0;
  return -(2 * detail::plogp(lam1, 0.0) + detail::plogp(lam3, 0.0) +
           2 * detail::plogp(lam4, 0.0) + detail::plogp(lam6, 0.0));
}

/// Closed-form Holevo information for the equiprobable m=6 configuration.
/// Must agree with holevo() on that configuration; the two routes share no
/// code beyond the channel parameters.
inline HolevoResult holevo_m6_analytic(const ChannelParams& params) {
  const auto config =
      OrderConfiguration::equiprobable({1, 2, 3, 4, 5, 6});
  return assemble_holevo(h_min_m6_analytic(params),
                         h_control_m6_analytic(params), params, config);
}

}  // namespace q3switch
