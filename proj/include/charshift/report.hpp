// Copyright 2026 The Charshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "charshift/numtheory.hpp"

namespace charshift::report {

// Flat ordered key/value report. Rendering is fully deterministic: doubles
// are always printed with %.17g, so identical runs produce identical bytes.
class RunReport {
 public:
  void add(const std::string& key, const std::string& value) {
    entries_.push_back({key, value, quote(value)});
  }

  void add(const std::string& key, const char* value) {
    add(key, std::string(value));
  }

  void add(const std::string& key, std::int64_t value) {
    const std::string s = std::to_string(value);
    entries_.push_back({key, s, s});
  }

  void add(const std::string& key, std::uint64_t value) {
    const std::string s = std::to_string(value);
    entries_.push_back({key, s, s});
  }

  void add(const std::string& key, int value) {
    add(key, static_cast<std::int64_t>(value));
  }

  void add(const std::string& key, bool value) {
    const std::string s = value ? "true" : "false";
    entries_.push_back({key, s, s});
  }

  void add(const std::string& key, double value) {
    const std::string s = format_double(value);
    entries_.push_back({key, s, s});
  }

  void add(const std::string& key, const numtheory::Fraction& value) {
    const std::string s =
        std::to_string(value.num) + "/" + std::to_string(value.den);
    entries_.push_back({key, s, quote(s)});
  }

  void add(const std::string& key, const std::vector<std::int64_t>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(values[i]);
    }
    s += "]";
    entries_.push_back({key, s, s});
  }

  // Complex values render as [re, im] pairs at 17 significant digits.
  void add(const std::string& key, std::complex<double> value) {
    const std::string s =
        "[" + format_double(value.real()) + "," + format_double(value.imag()) +
        "]";
    entries_.push_back({key, s, s});
  }

  std::string to_line() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += " ";
      out += entries_[i].key + "=" + entries_[i].line_value;
    }
    out += "\n";
    return out;
  }

  std::string to_json() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ",";
      out += quote(entries_[i].key) + ":" + entries_[i].json_value;
    }
    out += "}\n";
    return out;
  }

  static std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
  }

 private:
  struct Entry {
    std::string key;
    std::string line_value;
    std::string json_value;
  };

  static std::string quote(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
      switch (c) {
        case '"':
          out += "\\\"";
          break;
        case '\\':
          out += "\\\\";
          break;
        case '\n':
          out += "\\n";
          break;
        default:
          out += c;
      }
    }
    out += "\"";
    return out;
  }

  std::vector<Entry> entries_;
};

}  // namespace charshift::report
