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

// Verification-only access to what an oracle hides. Solver code does not
// include this header.

#include "hkp/oracle.hpp"

namespace hkp::audit {

class Access {
 public:
  static const Congruence& hidden(const HiddenOracle& oracle) { return oracle.hidden_; }
};

inline const Congruence& hidden_congruence(const HiddenOracle& oracle) { return Access::hidden(oracle); }

}  // namespace hkp::audit
