// Copyright 2026 The qdenoise Authors
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

#include "qdenoise/encoding/signal_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qdenoise/errors.hpp"

namespace qdenoise::encoding {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  return cells;
}

double parse_value(const std::string& text, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("line " + std::to_string(line_no) + ": cannot parse '" + text +
                    "' as a number");
}

}  // namespace

std::vector<double> read_signal(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  std::ptrdiff_t column = -1;  // -1: plain one-value-per-line
  bool header_checked = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (!header_checked) {
      header_checked = true;
      if (line.find(',') != std::string::npos || line == "value") {
        const auto cells = split_csv(line);
        const auto it = std::find(cells.begin(), cells.end(), "value");
        if (it == cells.end()) {
          throw DomainError("line " + std::to_string(line_no) +
                            ": CSV header has no 'value' column");
        }
        column = it - cells.begin();
        continue;
      }
    }
    if (column < 0) {
      values.push_back(parse_value(line, line_no));
    } else {
      const auto cells = split_csv(line);
      if (static_cast<std::size_t>(column) >= cells.size()) {
        throw DomainError("line " + std::to_string(line_no) + ": missing 'value' column");
      }
      values.push_back(parse_value(cells[static_cast<std::size_t>(column)], line_no));
    }
  }
  return values;
}

std::vector<double> read_signal(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open signal file " + path.string());
  return read_signal(in);
}

void write_signal(std::ostream& out, std::span<const double> values) {
  char buf[32];
  for (double v : values) {
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    out.write(buf, res.ptr - buf);
    out.put('\n');
  }
}

void write_signal(const std::filesystem::path& path, std::span<const double> values) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write signal file " + path.string());
  write_signal(out, values);
}

}  // namespace qdenoise::encoding
