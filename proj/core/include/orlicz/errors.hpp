// Copyright 2026 The orlicz-lab Authors
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

namespace orlicz {

// Bad user-facing configuration (CLI flags, suite parameters).
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A cost guard tripped (grid too large for a guarded operation, etc.).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation produced a non-finite or otherwise unusable value.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace orlicz
