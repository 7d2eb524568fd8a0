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
#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "q3switch/holevo.hpp"
#include "q3switch/order_config.hpp"

namespace q3switch {

/// Effective number of superposed orders, 1 / sum_k P_k^2 (the exponential
/// of the order-2 Renyi entropy of the probability vector). Equals m exactly
/// on an equiprobable support of size m; ranges over [1, 6].
inline double fractional_order(const OrderConfiguration& config) {
  double sum_sq = 0.0;
  for (double p : config.probs()) sum_sq += p * p;
  return 1.0 / sum_sq;
}

namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Stream rule: sample i draws from mt19937_64 seeded with
/// splitmix64(master_seed + i * 2^64/phi). Each sample owns its stream, so
/// results do not depend on how samples are divided among threads.
inline std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t i) {
  return splitmix64(master_seed + i * 0x9E3779B97F4A7C15ull);
}

/// Uniform double in [0,1) from the top 53 bits of the engine output.
/// Bit-reproducible across platforms (mt19937_64 is pinned by the standard;
/// no distribution object is used).
inline double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace rng

/// One point on the 5-simplex, sampled uniformly: six unit-rate exponential
/// variates normalized to sum 1.
inline OrderConfiguration sample_simplex_point(std::uint64_t master_seed,
                                               std::uint64_t index) {
  std::mt19937_64 engine(rng::stream_seed(master_seed, index));
  std::array<double, 6> probs{};
  double sum = 0.0;
  for (double& p : probs) {
    p = -std::log1p(-rng::uniform01(engine));
    sum += p;
  }
  if (sum <= 0.0) {
    probs.fill(1.0);
    sum = 6.0;
  }
  for (double& p : probs) p /= sum;
  return OrderConfiguration::from_probs(probs);
}

inline std::vector<OrderConfiguration> sample_simplex(int count,
                                                      std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_simplex: count must be >= 1");
  std::vector<OrderConfiguration> configs;
  configs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    configs.push_back(sample_simplex_point(seed, static_cast<std::uint64_t>(i)));
  return configs;
}

struct FractionalSample {
  OrderConfiguration config;
  double m_frac = 1.0;
  double chi = 0.0;
  int d = 2;
};

/// Uniform binning over [1,6]; density normalized so that
/// sum density * bin_width = 1.
struct Histogram {
  std::vector<double> edges;    // bins + 1 ascending edges
  std::vector<double> density;  // bins entries

  double bin_width() const { return edges[1] - edges[0]; }
};

inline Histogram make_histogram(const std::vector<double>& values, int bins,
                                double lo = 1.0, double hi = 6.0) {
  if (bins < 1) throw std::invalid_argument("make_histogram: bins must be >= 1");
  Histogram hist;
  const double width = (hi - lo) / bins;
  hist.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b)
    hist.edges[static_cast<std::size_t>(b)] = lo + width * b;
  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    int b = static_cast<int>((v - lo) / width);
    if (b < 0) b = 0;
    if (b >= bins) b = bins - 1;  // right edge lands in the last bin
    ++counts[static_cast<std::size_t>(b)];
  }
  hist.density.resize(static_cast<std::size_t>(bins));
  const double norm = static_cast<double>(values.size()) * width;
  for (int b = 0; b < bins; ++b)
    hist.density[static_cast<std::size_t>(b)] =
        norm > 0.0 ? static_cast<double>(counts[static_cast<std::size_t>(b)]) / norm : 0.0;
  return hist;
}

struct ScanResult {
  std::vector<FractionalSample> samples;
  Histogram histogram;
};

/// Monte-Carlo scan: samples `count` configurations uniformly on the
/// simplex, evaluates chi at (q, d) for each, and bins the fractional order.
/// Deterministic for fixed (count, d, q, seed, bins) regardless of the
/// number of worker threads.
inline ScanResult scan(int count, int d, double q, std::uint64_t seed,
                       int bins) {
  const ChannelParams params{q, d};
  params.validate();
  if (count < 1) throw std::invalid_argument("scan: count must be >= 1");

  ScanResult result;
  result.samples.resize(static_cast<std::size_t>(count));

  auto worker = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      FractionalSample& sample = result.samples[static_cast<std::size_t>(i)];
      sample.config = sample_simplex_point(seed, static_cast<std::uint64_t>(i));
      sample.m_frac = fractional_order(sample.config);
      sample.chi = holevo(sample.config, params).chi;
      sample.d = d;
    }
  };

  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int n_threads = std::max(1, std::min({hw, count, 16}));
  if (n_threads == 1) {
    worker(0, count);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (count + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      const int begin = t * chunk;
      const int end = std::min(count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<double> orders;
  orders.reserve(result.samples.size());
  for (const auto& s : result.samples) orders.push_back(s.m_frac);
  result.histogram = make_histogram(orders, bins);
  return result;
}

}  // namespace q3switch
