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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "q3switch/fractional.hpp"
#include "q3switch/holevo.hpp"
#include "support/reference_formulas.hpp"

using namespace q3switch;

namespace {

const OrderConfiguration kFull =
    OrderConfiguration::equiprobable({1, 2, 3, 4, 5, 6});
const OrderConfiguration kCyclic = OrderConfiguration::equiprobable({1, 4, 5});

double entropy_bits(const std::vector<double>& lams) {
  double h = 0.0;
  for (double lam : lams)
    if (lam > 0.0) h -= lam * std::log2(lam);
  return h;
}

}  // namespace

TEST_CASE("minimal output entropy vanishes for transparent channels") {
  for (int m : {1, 3, 6}) {
    const auto config =
        OrderConfiguration::equiprobable(lexicographic_supports(m).front());
    CHECK(h_min(switch_spectrum(config, {1.0, 2})) ==
          Catch::Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("fully depolarized definite order maximizes the output entropy") {
  for (int d : {2, 3, 4, 5, 6}) {
    const auto spectrum =
        switch_spectrum(OrderConfiguration::equiprobable({1}), {0.0, d});
    CHECK(h_min(spectrum) == Catch::Approx(std::log2(d)).margin(1e-12));
  }
}

TEST_CASE("numeric h_min matches the closed form on the full superposition") {
  for (int qi = 0; qi <= 10; ++qi) {
    for (int d : {2, 3, 5}) {
      const ChannelParams params{qi / 10.0, d};
      CHECK(h_min(switch_spectrum(kFull, params)) ==
            Catch::Approx(h_min_m6_analytic(params)).margin(1e-10));
    }
  }
}

TEST_CASE("control entropy of pure control states is zero") {
  CHECK(h_control(control_output(kFull, {1.0, 2})) ==
        Catch::Approx(0.0).margin(1e-12));
  CHECK(h_control(control_output(OrderConfiguration::equiprobable({3}),
                                 {0.2, 3})) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("control eigenvalues match the entry combinations") {
  for (double q : {0.0, 0.3, 0.8}) {
    for (int d : {2, 4}) {
      auto expected = testrefs::control_eigenvalues_m6(q, d);
      std::sort(expected.begin(), expected.end(), std::greater<double>());
      const auto numeric =
          jacobi_eigenvalues(control_output(kFull, {q, d}).entries);
      for (int i = 0; i < 6; ++i)
        CHECK(numeric[static_cast<std::size_t>(i)] ==
              Catch::Approx(expected[static_cast<std::size_t>(i)])
                  .margin(1e-10));
    }
  }
}

TEST_CASE("control entropy closed form at q=0.5, d=2") {
  const ChannelParams params{0.5, 2};
  CHECK(h_control(control_output(kFull, params)) ==
        Catch::Approx(h_control_m6_analytic(params)).margin(1e-10));
}

TEST_CASE("transparent channels transmit log2 d bits") {
  for (const auto& support :
       {std::vector<int>{2}, std::vector<int>{1, 6}, std::vector<int>{2, 3, 6},
        std::vector<int>{1, 2, 3, 4, 5, 6}}) {
    const auto config = OrderConfiguration::equiprobable(support);
    CHECK(holevo(config, {1.0, 2}).chi == Catch::Approx(1.0).margin(1e-9));
    CHECK(holevo(config, {1.0, 5}).chi ==
          Catch::Approx(std::log2(5.0)).margin(1e-9));
  }
}

TEST_CASE("fully depolarized definite order transmits nothing") {
  for (int d : {2, 3, 6}) {
    CHECK(holevo(OrderConfiguration::equiprobable({4}), {0.0, d}).chi ==
          Catch::Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("pair classes at full noise: D-pairs transmit, B/F-pairs do not") {
  const ChannelParams params{0.0, 2};
  const double chi_b = holevo(OrderConfiguration::equiprobable({1, 2}), params).chi;
  const double chi_d = holevo(OrderConfiguration::equiprobable({1, 4}), params).chi;
  const double chi_f = holevo(OrderConfiguration::equiprobable({1, 6}), params).chi;
  CHECK(chi_b == Catch::Approx(0.0).margin(1e-12));
  CHECK(chi_f == Catch::Approx(0.0).margin(1e-12));
  CHECK(chi_d > 0.01);
  CHECK(chi_d == Catch::Approx(0.048794940695398).margin(1e-9));
}

TEST_CASE("cyclic triple at full noise matches its closed forms") {
  // chi assembled from the direct (q,d) reference eigenvalue expressions
  for (int d : {2, 3, 4}) {
    const ChannelParams params{0.0, d};
    const auto s1 = testrefs::switch_eigenvalues_m3_cyclic(0.0, d, 1);
    const auto s0 = testrefs::switch_eigenvalues_m3_cyclic(0.0, d, 0);
    double hmin_ref = entropy_bits({s1[0], s1[1], s1[2]});
    hmin_ref += (d - 1) * entropy_bits({s0[0], s0[1], s0[2]});
    const auto c = testrefs::control_eigenvalues_m3_cyclic(0.0, d);
    const double hc_ref = entropy_bits({c[0], c[1], c[2]});
    const double chi_ref = std::log2(d) + hc_ref - hmin_ref;

    const auto result = holevo(kCyclic, params);
    CHECK(result.chi == Catch::Approx(chi_ref).margin(1e-10));
    CHECK(result.h_min == Catch::Approx(hmin_ref).margin(1e-10));
    CHECK(result.h_control == Catch::Approx(hc_ref).margin(1e-10));
  }
  // frozen value for d=2
  CHECK(holevo(kCyclic, {0.0, 2}).chi ==
        Catch::Approx(0.081704165945510).margin(1e-9));
}

TEST_CASE("cyclic closed forms hold across the noise range") {
  for (int qi = 0; qi <= 10; ++qi) {
    const double q = qi / 10.0;
    for (int d : {2, 3}) {
      const auto s1 = testrefs::switch_eigenvalues_m3_cyclic(q, d, 1);
      const auto s0 = testrefs::switch_eigenvalues_m3_cyclic(q, d, 0);
      double hmin_ref = entropy_bits({s1[0], s1[1], s1[2]});
      hmin_ref += (d - 1) * entropy_bits({s0[0], s0[1], s0[2]});
      CHECK(holevo(kCyclic, {q, d}).h_min ==
            Catch::Approx(hmin_ref).margin(1e-10));
    }
  }
}

TEST_CASE("chi identity and bounds") {
  for (int s = 0; s < 15; ++s) {
    const auto config = sample_simplex_point(11, static_cast<std::uint64_t>(s));
    const ChannelParams params{(s % 6) / 5.0, 2 + s % 3};
    const auto result = holevo(config, params);
    CHECK(result.chi >= 0.0);
    CHECK(result.chi <=
          std::log2(params.d) + std::log2(6.0) + 1e-9);
    if (result.chi > 0.0)
      CHECK(result.chi == Catch::Approx(std::log2(params.d) +
                                        result.h_control - result.h_min)
                              .margin(1e-12));
  }
}

TEST_CASE("closed-form and pipeline chi agree on the full superposition") {
  for (int qi = 0; qi <= 20; ++qi) {
    for (int d = 2; d <= 6; ++d) {
      const ChannelParams params{qi / 20.0, d};
      const auto analytic = holevo_m6_analytic(params);
      const auto pipeline = holevo(kFull, params);
      INFO("q=" << params.q << " d=" << d);
      CHECK(analytic.chi == Catch::Approx(pipeline.chi).margin(1e-9));
    }
  }
  CHECK(holevo_m6_analytic({1.0, 3}).chi ==
        Catch::Approx(std::log2(3.0)).margin(1e-12));
}

TEST_CASE("full superposition at q=0, d=2 transmits about a tenth of a bit") {
  CHECK(holevo(kFull, {0.0, 2}).chi ==
        Catch::Approx(0.098069743463625).margin(1e-9));
}

TEST_CASE("members of one class share the chi curve") {
  // all twelve members of the largest m=3 class
  const std::vector<std::vector<int>> members = {
      {1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 6}, {1, 5, 6},
      {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 5}, {3, 5, 6}};
  for (double q : {0.05, 0.4, 0.75}) {
    const ChannelParams params{q, 2};
    const double reference =
        holevo(OrderConfiguration::equiprobable(members.front()), params).chi;
    for (const auto& support : members) {
      CHECK(holevo(OrderConfiguration::equiprobable(support), params).chi ==
            Catch::Approx(reference).margin(1e-10));
    }
  }
}

TEST_CASE("initial-value ordering of the m=2 and m=3 classes") {
  const ChannelParams params{0.0, 2};
  const double m3_bbd = holevo(OrderConfiguration::equiprobable({1, 2, 3}), params).chi;
  const double m3_bdf = holevo(OrderConfiguration::equiprobable({1, 2, 4}), params).chi;
  const double m3_ddd = holevo(kCyclic, params).chi;
  CHECK(m3_ddd > m3_bbd);
  CHECK(m3_ddd > m3_bdf);
  CHECK(m3_bbd > 0.0);
  CHECK(m3_bdf > 0.0);
  CHECK(m3_bbd == Catch::Approx(m3_bdf).margin(1e-10));
}
