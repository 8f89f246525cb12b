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

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace orlicz {

// One verification suite run: which inequality family to exercise, on what
// grid, over which deterministic test family. A fixed seed makes the report
// byte-identical up to the timestamp field.
struct SuiteConfig {
  std::string suite;
  std::string young = "power:p=2";
  int n = 1;
  int N = 2048;
  double L = 16.0;
  double s = 0.5;
  double s2 = 0.0;  // s' where applicable; 0 = unset
  double q = 2.0;
  int levels = 6;    // filter-bank K
  int i_max = 6;     // finest atomic scale
  int m = 2;         // atom regularity
  std::string family = "gaussians";
  int family_size = 10;
  std::uint64_t seed = 1;
  std::string out_dir;  // empty = no files written
  int threads = 1;
};

struct VerificationReport {
  bool pass = false;
  nlohmann::ordered_json json;  // {suite, config, rows[], summary{...}, pass, environment{...}}
  std::string csv;              // one row per case, fixed headers

  double constant(const std::string& key) const;  // summary.constants[key]
  double stability(const std::string& key) const; // summary.stability[key]
};

std::vector<std::string> list_suites();

// Runs the named suite, writes report.json / cases.csv into cfg.out_dir when
// set, and returns the report. Throws config_error / resource_error for bad
// configs and tripped guards.
VerificationReport run_suite(const SuiteConfig& cfg);

}  // namespace orlicz
