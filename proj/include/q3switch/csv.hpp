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

#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef Q3SWITCH_VERSION
#define Q3SWITCH_VERSION "0.0.0"
#endif
#ifndef Q3SWITCH_GIT_REVISION
#define Q3SWITCH_GIT_REVISION "unknown"
#endif

namespace q3switch {

/// Full double precision (17 significant digits), '.' decimal separator.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Provenance attached to every output file. Deliberately free of wall-clock
/// data so reruns with identical inputs produce identical bytes.
struct RunMetadata {
  std::string command_line;
  std::optional<std::uint64_t> seed;

  std::string header() const {
    std::string h;
    h += "# q3switch " Q3SWITCH_VERSION "\n";
    h += "# command: " + command_line + "\n";
    if (seed) h += "# seed: " + std::to_string(*seed) + "\n";
    h += "# git: " Q3SWITCH_GIT_REVISION "\n";
    return h;
  }
};

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const RunMetadata& metadata,
            const std::vector<std::string>& columns)
      : out_(path, std::ios::binary) {
    if (!out_)
      throw std::runtime_error("cannot open output file: " + path);
    out_ << metadata.header();
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out_ << ',';
      out_ << columns[i];
    }
    out_ << '\n';
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  void close() { out_.close(); }

 private:
  std::ofstream out_;
};

}  // namespace q3switch
