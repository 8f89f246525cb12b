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

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "orlicz/bessel.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/family.hpp"
#include "orlicz/suites.hpp"
#include "orlicz/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitGuard = 3;

int cmd_run(const orlicz::SuiteConfig& cfg) {
  const orlicz::VerificationReport rep = orlicz::run_suite(cfg);
  std::printf("%s: %s (max ratio %.6g)\n", cfg.suite.c_str(), rep.pass ? "PASS" : "FAIL",
              rep.json.at("summary").at("max_ratio").get<double>());
  if (!cfg.out_dir.empty()) {
    std::printf("report: %s/report.json\n", cfg.out_dir.c_str());
  }
  return rep.pass ? kExitPass : kExitFail;
}

int cmd_list() {
  for (const auto& name : orlicz::list_suites()) std::printf("%s\n", name.c_str());
  return kExitPass;
}

int cmd_kernel(double s, int n, int N, double L, const std::string& out, bool csv) {
  const orlicz::Grid grid = orlicz::Grid::make(n, N, L);
  const orlicz::BesselKernel k = orlicz::synthesize_kernel(s, grid);
  orlicz::write_field(k.samples, out);
  if (csv && n == 1) orlicz::write_field_csv(k.samples, out + ".csv");
  std::printf("kernel s=%g written to %s\n", s, out.c_str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orlicz-lab: numerical playground for Orlicz-space potential theory"};
  app.set_version_flag("--version", std::string(orlicz::kVersion));
  app.require_subcommand(1);

  orlicz::SuiteConfig cfg;
  auto* run = app.add_subcommand("run", "run a verification suite");
  run->add_option("suite", cfg.suite, "suite name (see list-suites)")->required();
  run->add_option("--young", cfg.young, "Young function, e.g. power:p=2 or zygmund:p=2,q=1,r=1");
  run->add_option("--n", cfg.n, "dimension (1, 2 or 3)");
  run->add_option("--grid", cfg.N, "points per axis (power of two)");
  run->add_option("--extent", cfg.L, "box half-extent L");
  run->add_option("--s", cfg.s, "order s (alpha for increment-kernel)");
  run->add_option("--s2", cfg.s2, "second order s' (gamma for increment-kernel)");
  run->add_option("--q", cfg.q, "ell-q aggregation exponent");
  run->add_option("--levels", cfg.levels, "filter-bank levels K");
  run->add_option("--imax", cfg.i_max, "finest atomic scale");
  run->add_option("--m", cfg.m, "atom regularity");
  std::string family_spec;
  run->add_option("--family", family_spec, "test family kind:size, e.g. gaussians:10");
  run->add_option("--seed", cfg.seed, "RNG seed");
  run->add_option("--out", cfg.out_dir, "output directory for report.json / cases.csv");
  run->add_option("--threads", cfg.threads, "worker threads for suite cases");

  auto* list = app.add_subcommand("list-suites", "list available suites");

  double ks = 1.0;
  int kn = 1, kN = 4096;
  double kL = 32.0;
  std::string kout = "kernel.bin";
  bool kcsv = false;
  auto* kernel = app.add_subcommand("kernel", "export a sampled Bessel kernel");
  kernel->add_option("--s", ks, "kernel order")->required();
  kernel->add_option("--n", kn, "dimension");
  kernel->add_option("--grid", kN, "points per axis");
  kernel->add_option("--extent", kL, "box half-extent");
  kernel->add_option("--out", kout, "output path (.bin, JSON header written alongside)");
  kernel->add_flag("--csv", kcsv, "also export CSV (n = 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return cmd_list();
    if (kernel->parsed()) return cmd_kernel(ks, kn, kN, kL, kout, kcsv);
    if (run->parsed()) {
      if (!family_spec.empty()) {
        const auto colon = family_spec.find(':');
        cfg.family = family_spec.substr(0, colon);
        if (colon != std::string::npos) {
          cfg.family_size = std::stoi(family_spec.substr(colon + 1));
        }
        orlicz::parse_family_kind(cfg.family);  // validate early
      }
      return cmd_run(cfg);
    }
  } catch (const orlicz::config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const orlicz::resource_error& e) {
    std::fprintf(stderr, "resource guard: %s\n", e.what());
    return kExitGuard;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitConfig;
}
