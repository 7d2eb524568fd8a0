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

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "q3switch/classifier.hpp"
#include "q3switch/csv.hpp"
#include "q3switch/fractional.hpp"
#include "q3switch/holevo.hpp"
#include "q3switch/svg.hpp"
#include "q3switch/validation.hpp"

namespace {

using nlohmann::json;
using namespace q3switch;

std::string join_command_line(int argc, char** argv) {
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += ' ';
    cmd += argv[i];
  }
  return cmd;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) values.push_back(std::stoi(item));
  }
  return values;
}

struct SweepSeries {
  int m;
  int class_index;  // computed (chi-ordered) index
  std::vector<int> representative;
  int d;
};

struct SweepOptions {
  std::string m = "all";
  std::string class_selector;
  std::string d_list;
  double q_min = 0.0;
  double q_max = 1.0;
  int q_steps = 101;
  std::string out = "sweep.csv";
  std::string svg;
};

int run_sweep(const SweepOptions& opt, const RunMetadata& metadata) {
  if (!(opt.q_min >= 0.0 && opt.q_max <= 1.0 && opt.q_min <= opt.q_max))
    throw std::runtime_error("sweep: q grid must lie within [0,1]");
  if (opt.q_steps < 2) throw std::runtime_error("sweep: q-steps must be >= 2");

  std::vector<int> m_values;
  if (opt.m == "all") {
    m_values = {1, 2, 3, 4, 5, 6};
  } else {
    m_values = {std::stoi(opt.m)};
    if (m_values[0] < 1 || m_values[0] > 6)
      throw std::runtime_error("sweep: m must be 1..6 or 'all'");
  }

  const bool explicit_d = !opt.d_list.empty();
  std::vector<int> d_values =
      explicit_d ? parse_int_list(opt.d_list) : std::vector<int>{2, 3, 4, 5, 6};
  for (int d : d_values)
    if (d < 2) throw std::runtime_error("sweep: dimensions must be >= 2");

  // Resolve classes per m. Without an explicit selector: every class at
  // d = 2, and additionally the best class (computed index 1) at d > 2.
  std::vector<SweepSeries> series;
  for (int m : m_values) {
    const ClassTable table = classify(m);
    std::vector<int> selected;
    if (!opt.class_selector.empty()) {
      bool matched = false;
      if (opt.class_selector.find(',') == std::string::npos &&
          opt.class_selector.size() == 1 &&
          std::isdigit(static_cast<unsigned char>(opt.class_selector[0]))) {
        const int idx = std::stoi(opt.class_selector);
        if (idx < 1 || idx > static_cast<int>(table.classes.size()))
          throw std::runtime_error("sweep: unknown class index for m=" +
                                   std::to_string(m));
        selected.push_back(idx);
        matched = true;
      } else {
        auto want = parse_int_list(opt.class_selector);
        std::sort(want.begin(), want.end());
        for (std::size_t c = 0; c < table.classes.size(); ++c) {
          for (auto sup : table.classes[c].member_supports) {
            if (sup == want) {
              selected.push_back(static_cast<int>(c) + 1);
              matched = true;
              break;
            }
          }
          if (matched) break;
        }
        if (!matched)
          throw std::runtime_error("sweep: class selector '" +
                                   opt.class_selector +
                                   "' names no configuration of m=" +
                                   std::to_string(m));
      }
    } else {
      for (std::size_t c = 0; c < table.classes.size(); ++c)
        selected.push_back(static_cast<int>(c) + 1);
    }
    for (int idx : selected) {
      const auto& cls = table.classes[static_cast<std::size_t>(idx - 1)];
      for (int d : d_values) {
        if (!explicit_d && d > 2 && idx != 1) continue;
        series.push_back({m, idx, cls.representative, d});
      }
    }
  }

  CsvWriter csv(opt.out, metadata,
                {"q", "d", "m", "class", "chi", "h_min", "h_control"});
  SvgLinePlot plot;
  for (const auto& s : series) {
    const auto config = OrderConfiguration::equiprobable(s.representative);
    std::vector<double> xs, ys;
    for (int step = 0; step < opt.q_steps; ++step) {
      const double q = opt.q_min + (opt.q_max - opt.q_min) * step /
                                       (opt.q_steps - 1);
      const auto result = holevo(config, ChannelParams{q, s.d});
      csv.row({format_double(q), std::to_string(s.d), std::to_string(s.m),
               std::to_string(s.class_index), format_double(result.chi),
               format_double(result.h_min), format_double(result.h_control)});
      xs.push_back(q);
      ys.push_back(result.chi);
    }
    if (!opt.svg.empty())
      plot.add_series("m=" + std::to_string(s.m) + " c" +
                          std::to_string(s.class_index) + " d=" +
                          std::to_string(s.d),
                      xs, ys);
  }
  csv.close();
  if (!opt.svg.empty()) {
    std::ofstream svg_file(opt.svg, std::ios::binary);
    if (!svg_file)
      throw std::runtime_error("cannot open output file: " + opt.svg);
    svg_file << plot.render("Holevo information vs depolarization",
                            "q", "chi [bits]");
  }
  std::cout << "wrote " << opt.out
            << (opt.svg.empty() ? "" : " and " + opt.svg) << "\n";
  return 0;
}

json class_table_to_json(const ClassTable& table) {
  const auto report = verify_against_reference(table);
  json classes = json::array();
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    const auto& cls = table.classes[c];
    json members = json::array();
    for (const auto& sup : cls.member_supports) members.push_back(sup);
    json subscripts = json::array();
    for (int idx : cls.member_indices) subscripts.push_back(idx);
    classes.push_back({{"index", c + 1},
                       {"size", cls.member_indices.size()},
                       {"chi_at_q0.1_d2", cls.chi_ref},
                       {"representative", cls.representative},
                       {"member_subscripts", subscripts},
                       {"members", members},
                       {"reference_class", report.reference_class_of[c]}});
  }
  return {{"m", table.m},
          {"classes", classes},
          {"reference_match", report.all_matched}};
}

void print_class_table(const ClassTable& table, std::ostream& os) {
  const auto report = verify_against_reference(table);
  os << "m = " << table.m << ": " << table.classes.size() << " class"
     << (table.classes.size() == 1 ? "" : "es") << "\n";
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    const auto& cls = table.classes[c];
    os << "  class " << (c + 1) << " (size " << cls.member_indices.size()
       << ", chi(q=0.1,d=2) = " << cls.chi_ref << ", reference class "
       << report.reference_class_of[c] << "): ";
    for (std::size_t i = 0; i < cls.member_indices.size(); ++i)
      os << (i ? ", " : "") << "S" << cls.member_indices[i];
    os << "\n";
  }
  os << "  reference match: " << (report.all_matched ? "yes" : "NO") << "\n";
  for (const auto& m : report.mismatches) os << "  mismatch: " << m << "\n";
}

int run_classify(const std::string& m_arg, const std::string& out_path) {
  std::vector<int> m_values;
  if (m_arg == "all")
    m_values = {1, 2, 3, 4, 5, 6};
  else
    m_values = {std::stoi(m_arg)};

  json all = json::array();
  bool matched = true;
  int total = 0;
  for (int m : m_values) {
    const ClassTable table = classify(m);
    print_class_table(table, std::cout);
    const json j = class_table_to_json(table);
    matched = matched && j["reference_match"].get<bool>();
    for (const auto& cls : table.classes)
      total += static_cast<int>(cls.member_indices.size());
    all.push_back(j);
  }
  std::cout << "total configurations: " << total << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << (m_values.size() == 1 ? all[0] : all).dump(2) << "\n";
    std::cout << "wrote " << out_path << "\n";
  }
  return matched ? 0 : 1;
}

int run_validate(const std::string& d_list, int samples, std::uint64_t seed,
                 bool corrupt) {
  const auto dims = d_list.empty() ? std::vector<int>{2, 3}
                                   : parse_int_list(d_list);
  for (int d : dims)
    if (d < 2 || d > 3)
      throw std::runtime_error(
          "validate: brute-force comparison supports d in {2,3}");
  const auto report = run_validation(dims, samples, seed, corrupt);
  std::cout << report.to_string();
  return report.passed ? 0 : 1;
}

struct FractionalOptions {
  int count = 10000;
  int d = 2;
  double q = 0.0;
  std::uint64_t seed = 1;
  int bins = 100;
  std::string out = "fractional";
  bool frontier = false;
};

int run_fractional(const FractionalOptions& opt, RunMetadata metadata) {
  metadata.seed = opt.seed;
  const ScanResult result = scan(opt.count, opt.d, opt.q, opt.seed, opt.bins);

  const std::string scatter_path = opt.out + "_scatter.csv";
  CsvWriter scatter(scatter_path, metadata,
                    {"m_frac", "chi", "P1", "P2", "P3", "P4", "P5", "P6"});
  for (const auto& s : result.samples) {
    std::vector<std::string> row = {format_double(s.m_frac),
                                    format_double(s.chi)};
    for (double p : s.config.probs()) row.push_back(format_double(p));
    scatter.row(row);
  }
  scatter.close();

  const std::string hist_path = opt.out + "_hist.csv";
  CsvWriter hist(hist_path, metadata, {"bin_lo", "bin_hi", "density"});
  for (std::size_t b = 0; b < result.histogram.density.size(); ++b)
    hist.row({format_double(result.histogram.edges[b]),
              format_double(result.histogram.edges[b + 1]),
              format_double(result.histogram.density[b])});
  hist.close();

  std::cout << "wrote " << scatter_path << " and " << hist_path << "\n";

  if (opt.frontier) {
    // post-processing option: per-bin minimum of chi over the m_frac bins
    const auto& edges = result.histogram.edges;
    const int bins = static_cast<int>(result.histogram.density.size());
    std::vector<double> chi_min(static_cast<std::size_t>(bins),
                                std::numeric_limits<double>::infinity());
    for (const auto& s : result.samples) {
      int b = static_cast<int>((s.m_frac - edges.front()) /
                               result.histogram.bin_width());
      b = std::clamp(b, 0, bins - 1);
      chi_min[static_cast<std::size_t>(b)] =
          std::min(chi_min[static_cast<std::size_t>(b)], s.chi);
    }
    const std::string frontier_path = opt.out + "_frontier.csv";
    CsvWriter frontier(frontier_path, metadata,
                       {"bin_lo", "bin_hi", "chi_min"});
    for (int b = 0; b < bins; ++b) {
      if (!std::isfinite(chi_min[static_cast<std::size_t>(b)])) continue;
      frontier.row({format_double(edges[static_cast<std::size_t>(b)]),
                    format_double(edges[static_cast<std::size_t>(b) + 1]),
                    format_double(chi_min[static_cast<std::size_t>(b)])});
    }
    frontier.close();
    std::cout << "wrote " << frontier_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holevo information of three depolarizing channels under "
               "coherent superpositions of causal orders"};
  app.set_config("--config", "",
                 "read options from an INI file; use a [subcommand] section "
                 "for subcommand flags (command-line flags take precedence)");
  app.require_subcommand(1);

  RunMetadata metadata;
  metadata.command_line = join_command_line(argc, argv);

  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand(
      "sweep", "chi(q) curves per equivalence class and dimension");
  sweep->add_option("--m", sweep_opt.m, "order count 1..6 or 'all'");
  sweep->add_option("--class", sweep_opt.class_selector,
                    "class index or representative support like 1,4,5");
  sweep->add_option("--d", sweep_opt.d_list,
                    "comma-separated target dimensions (default: 2 for all "
                    "classes plus 3..6 for the best class)");
  sweep->add_option("--q-min", sweep_opt.q_min, "grid start");
  sweep->add_option("--q-max", sweep_opt.q_max, "grid end");
  sweep->add_option("--q-steps", sweep_opt.q_steps, "grid points");
  sweep->add_option("--out", sweep_opt.out, "CSV output path");
  sweep->add_option("--svg", sweep_opt.svg, "optional SVG plot path");

  std::string classify_m = "all";
  std::string classify_out;
  auto* cls = app.add_subcommand(
      "classify", "partition configurations into equivalence classes");
  cls->add_option("--m", classify_m, "order count 1..6 or 'all'");
  cls->add_option("--out", classify_out, "JSON output path");

  std::string validate_d;
  int validate_samples = 50;
  std::uint64_t validate_seed = 20260809;
  bool validate_corrupt = false;
  auto* val = app.add_subcommand(
      "validate", "brute-force Kraus cross-check of the scalar pipeline");
  val->add_option("--d", validate_d, "dimensions (default 2,3)");
  val->add_option("--samples", validate_samples, "random configurations");
  val->add_option("--seed", validate_seed, "sampling seed");
  val->add_flag("--corrupt", validate_corrupt,
                "corrupt the predicted block pattern (validator self-test)");

  FractionalOptions frac_opt;
  auto* frac = app.add_subcommand(
      "fractional", "Monte-Carlo scan over the order simplex");
  frac->add_option("--count", frac_opt.count, "number of samples");
  frac->add_option("--d", frac_opt.d, "target dimension");
  frac->add_option("--q", frac_opt.q, "depolarization strength");
  frac->add_option("--seed", frac_opt.seed, "master seed");
  frac->add_option("--bins", frac_opt.bins, "histogram bins over [1,6]");
  frac->add_option("--out", frac_opt.out,
                   "output prefix (<prefix>_scatter.csv, <prefix>_hist.csv)");
  frac->add_flag("--frontier", frac_opt.frontier,
                 "also write <prefix>_frontier.csv with the per-bin minimum "
                 "of chi over the fractional-order bins");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) return run_sweep(sweep_opt, metadata);
    if (cls->parsed()) return run_classify(classify_m, classify_out);
    if (val->parsed())
      return run_validate(validate_d, validate_samples, validate_seed,
                          validate_corrupt);
    if (frac->parsed()) return run_fractional(frac_opt, metadata);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
