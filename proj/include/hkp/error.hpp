// Copyright 2026 The HKP Workbench Authors
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

#include <stdexcept>
#include <string>

namespace hkp {

// Precondition broken by the caller (arity mismatch, width mismatch, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed external input: JSON, unknown clone ids, out-of-range sizes.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that is not well-formed JSON.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A referenced file or named object does not exist.
class NotFound : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Requested size exceeds what the workbench enumerates or simulates.
class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotACongruence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No case of the classification matched the generator set.
class Unclassified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace hkp
