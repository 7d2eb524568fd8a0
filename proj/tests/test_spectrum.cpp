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

#include <algorithm>
#include <random>

#include "q3switch/spectrum.hpp"
#include "support/reference_formulas.hpp"

using namespace q3switch;

namespace {

std::vector<ClassId> cataloged_classes() {
  return {{1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 1},
          {3, 3}, {4, 1}, {4, 3}, {6, 1}};
}

std::vector<ClassId> uncataloged_classes() {
  return {{3, 2}, {4, 2}, {5, 1}};
}

OrderConfiguration rep_config(ClassId id) {
  return OrderConfiguration::equiprobable(class_representative_support(id));
}

}  // namespace

TEST_CASE("rank-one matrix has spectrum {1, 0...}") {
  const auto config = OrderConfiguration::equiprobable({1, 2, 3, 4, 5, 6});
  const auto eig = eigenvalues_numeric(reduced_matrix(config, {1.0, 2}, 1));
  CHECK(eig[0] == Catch::Approx(1.0).margin(1e-12));
  for (int i = 1; i < 6; ++i) CHECK(eig[i] == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("definite-order spectrum is the A branch value") {
  for (double q : {0.0, 0.5, 1.0}) {
    for (int k : {0, 1}) {
      const auto config = OrderConfiguration::equiprobable({1});
      const auto eig = eigenvalues_numeric(reduced_matrix(config, {q, 3}, k));
      const double a_k =
          eigen_branch_value(block_coefficients(BlockKind::A, {q, 3}), k, 3);
      CHECK(eig[0] == Catch::Approx(a_k).margin(1e-14));
      for (int i = 1; i < 6; ++i) CHECK(eig[i] == 0.0);
    }
  }
}

TEST_CASE("full superposition at q=0, d=2, k=1: known rational spectrum") {
  const auto config = OrderConfiguration::equiprobable({1, 2, 3, 4, 5, 6});
  auto eig = eigenvalues_numeric(reduced_matrix(config, {0.0, 2}, 1));
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  const std::array<double, 6> expected = {11.0 / 48, 5.0 / 48, 1.0 / 24,
                                          1.0 / 24,  1.0 / 24, 1.0 / 24};
  for (int i = 0; i < 6; ++i)
    CHECK(eig[i] == Catch::Approx(expected[i]).margin(1e-12));

  // same multiset from the direct (q,d,k) reference expressions
  auto ref = testrefs::switch_eigenvalues_m6(0.0, 2.0, 1);
  std::sort(ref.begin(), ref.end(), std::greater<double>());
  for (int i = 0; i < 6; ++i)
    CHECK(ref[i] == Catch::Approx(expected[i]).margin(1e-15));
}

TEST_CASE("analytic catalog agrees with the numeric spectrum") {
  for (const auto id : cataloged_classes()) {
    const auto config = rep_config(id);
    for (int qi = 0; qi <= 10; ++qi) {
      for (int d : {2, 3, 4}) {
        for (int k : {0, 1}) {
          const ChannelParams params{qi / 10.0, d};
          const auto analytic = eigenvalues_analytic(id, params, k);
          REQUIRE(analytic.has_value());
          auto numeric = eigenvalues_numeric(reduced_matrix(config, params, k));
          for (int i = 0; i < 6; ++i) {
            INFO("class (" << id.m << "," << id.class_index << ") q="
                           << params.q << " d=" << d << " k=" << k);
            CHECK((*analytic)[static_cast<std::size_t>(i)] ==
                  Catch::Approx(numeric[static_cast<std::size_t>(i)])
                      .margin(1e-10));
          }
        }
      }
    }
  }
}

TEST_CASE("uncataloged classes return no closed form") {
  for (const auto id : uncataloged_classes())
    CHECK_FALSE(eigenvalues_analytic(id, {0.3, 2}, 1).has_value());
  CHECK_THROWS_AS((eigenvalues_analytic({7, 1}, {0.3, 2}, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS((eigenvalues_analytic({2, 4}, {0.3, 2}, 1)),
                  std::invalid_argument);
}

TEST_CASE("numeric eigenvalues are roots of the transcribed polynomials") {
  for (const auto id : uncataloged_classes()) {
    const auto config = rep_config(id);
    for (int qi = 0; qi <= 10; ++qi) {
      for (int d : {2, 3, 4}) {
        for (int k : {0, 1}) {
          const ChannelParams params{qi / 10.0, d};
          for (double lam :
               eigenvalues_numeric(reduced_matrix(config, params, k))) {
            const auto residual = char_poly_residual(id, params, k, lam);
            REQUIRE(residual.has_value());
            INFO("class (" << id.m << "," << id.class_index << ") q="
                           << params.q << " d=" << d << " k=" << k);
            CHECK(std::abs(*residual) < 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("full superposition spectrum carries two double eigenvalues") {
  const auto config = rep_config({6, 1});
  for (double q : {0.1, 0.6, 0.9}) {
    for (int d : {2, 4}) {
      for (int k : {0, 1}) {
        const ChannelParams params{q, d};
        const auto numeric =
            eigenvalues_numeric(reduced_matrix(config, params, k));
        const auto ref = testrefs::switch_eigenvalues_m6(q, d, k);
        for (double pair_value : {ref[0], ref[3]}) {
          const long hits = std::count_if(
              numeric.begin(), numeric.end(), [&](double lam) {
                return std::abs(lam - pair_value) < 1e-10;
              });
          CHECK(hits >= 2);
        }
      }
    }
  }
}

TEST_CASE("characteristic polynomial of the zero matrix") {
  const auto poly = char_poly_from_eigenvalues({0, 0, 0, 0, 0, 0});
  CHECK(poly.c[0] == 1.0);
  for (int i = 1; i <= 6; ++i) CHECK(poly.c[static_cast<std::size_t>(i)] == 0.0);
}

TEST_CASE("characteristic polynomial of a definite order") {
  const ChannelParams params{0.4, 3};
  const auto poly =
      char_poly(reduced_matrix(OrderConfiguration::equiprobable({1}), params, 1));
  const double a_1 =
      eigen_branch_value(block_coefficients(BlockKind::A, params), 1, 3);
  CHECK(poly.c[0] == 1.0);
  CHECK(poly.c[1] == Catch::Approx(-a_1).margin(1e-14));
  for (int i = 2; i <= 6; ++i)
    CHECK(poly.c[static_cast<std::size_t>(i)] ==
          Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("lambda^5 coefficient is minus the trace") {
  for (int s = 1; s <= 5; ++s) {
    const auto config =
        OrderConfiguration::equiprobable(lexicographic_supports(s).back());
    const auto mat = reduced_matrix(config, {0.45, 2}, 1);
    const auto poly = char_poly(mat);
    CHECK(poly.c[1] == Catch::Approx(-mat.entries.trace()).margin(1e-12));
  }
}

TEST_CASE("full-superposition polynomial matches its factored form") {
  // expand prod (lambda - root) with an independent convolution
  for (double q : {0.2, 0.7}) {
    for (int d : {2, 3}) {
      for (int k : {0, 1}) {
        const auto roots = testrefs::switch_eigenvalues_m6(q, d, k);
        std::vector<double> expanded = {1.0};
        for (double root : roots) {
          std::vector<double> next(expanded.size() + 1, 0.0);
          for (std::size_t i = 0; i < expanded.size(); ++i) {
            next[i] += expanded[i];
            next[i + 1] -= root * expanded[i];
          }
          expanded = next;
        }
        const auto poly = char_poly(reduced_matrix(
            rep_config({6, 1}), ChannelParams{q, d}, k));
        for (int i = 0; i <= 6; ++i)
          CHECK(poly.c[static_cast<std::size_t>(i)] ==
                Catch::Approx(expanded[static_cast<std::size_t>(i)])
                    .margin(1e-9));
      }
    }
  }
}

TEST_CASE("eigenvalues are invariant under control relabeling") {
  const auto config = OrderConfiguration::equiprobable({1, 3, 4, 6});
  const auto mat = reduced_matrix(config, {0.37, 3}, 1);
  std::mt19937_64 engine(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int a = static_cast<int>(engine() % 6);
    const int b = static_cast<int>(engine() % 6);
    Mat6 swapped = mat.entries;
    for (int c = 0; c < 6; ++c) std::swap(swapped.at(a, c), swapped.at(b, c));
    for (int c = 0; c < 6; ++c) std::swap(swapped.at(c, a), swapped.at(c, b));
    const auto original = jacobi_eigenvalues(mat.entries);
    const auto permuted = jacobi_eigenvalues(swapped);
    for (int i = 0; i < 6; ++i)
      CHECK(permuted[static_cast<std::size_t>(i)] ==
            Catch::Approx(original[static_cast<std::size_t>(i)]).margin(1e-12));
  }
}

TEST_CASE("signatures separate and join the pair configurations") {
  const auto sig_12 =
      invariant_signature(OrderConfiguration::equiprobable({1, 2}));
  const auto sig_13 =
      invariant_signature(OrderConfiguration::equiprobable({1, 3}));
  const auto sig_14 =
      invariant_signature(OrderConfiguration::equiprobable({1, 4}));
  const auto sig_16 =
      invariant_signature(OrderConfiguration::equiprobable({1, 6}));
  const auto sig_24 =
      invariant_signature(OrderConfiguration::equiprobable({2, 4}));

  CHECK(sig_12 == sig_13);   // both joined by B
  CHECK(sig_12 != sig_14);   // B-pair vs D-pair
  CHECK(sig_16 == sig_24);   // both joined by F
  CHECK(sig_14 != sig_16);
}

TEST_CASE("eigenvalue output is descending") {
  const auto eig = eigenvalues_numeric(
      reduced_matrix(OrderConfiguration::equiprobable({2, 3, 6}), {0.3, 2}, 0));
  for (int i = 0; i + 1 < 6; ++i)
    CHECK(eig[static_cast<std::size_t>(i)] >=
          eig[static_cast<std::size_t>(i + 1)]);
}
