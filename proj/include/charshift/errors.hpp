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

#include <stdexcept>
#include <string>

namespace charshift {

// Input exceeds the desk-scale bounds this library is built for.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A computed candidate failed its verification check after exhausting the
// retry budget.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what)
      : std::runtime_error(what) {}
};

// An input function violates a promise the algorithm depends on
// (e.g. non-constant spectral magnitude).
class promise_violation : public std::runtime_error {
 public:
  explicit promise_violation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace charshift
