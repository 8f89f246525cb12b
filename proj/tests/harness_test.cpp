#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>

#include "orlicz/errors.hpp"
#include "orlicz/family.hpp"
#include "orlicz/field_ops.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/suites.hpp"

using namespace orlicz;

TEST_CASE("families: size, determinism, boundary decay") {
  const Grid g = Grid::make(1, 1024, 16.0);
  CHECK(make_family(FamilyKind::kGaussians, 0, 1, g).empty());

  const auto a = make_family(FamilyKind::kGaussians, 5, 7, g);
  const auto b = make_family(FamilyKind::kGaussians, 5, 7, g);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(max_abs(subtracted(a[i], b[i])) == 0.0);  // bitwise identical
    CHECK(boundary_max(a[i]) <= 1e-8);
  }

  const auto c = make_family(FamilyKind::kGaussians, 5, 8, g);
  CHECK(max_abs(subtracted(a[0], c[0])) > 0.0);  // different seed, different fields

  const auto bumps = make_family(FamilyKind::kBumps, 3, 9, g);
  for (const auto& u : bumps) CHECK(boundary_max(u) == 0.0);
}

TEST_CASE("bandlimited family: spectrum pinned below the cutoff") {
  const Grid g = Grid::make(1, 2048, 16.0);
  const double cutoff = 32.0;
  const auto fam = make_family(FamilyKind::kBandlimitedRandom, 3, 11, g, cutoff);
  for (const Field& u : fam) {
    // anything beyond the cutoff must be exactly projected away
    const Field tail = spectral_multiply(u, [cutoff](std::span<const double> xi) {
      return std::abs(xi[0]) > cutoff ? 1.0 : 0.0;
    });
    CHECK(max_abs(tail) <= 1e-14);
    CHECK(boundary_max(u) <= 1e-8);
    CHECK(max_abs(u) == doctest::Approx(1.0));  // normalized
  }
}

TEST_CASE("radial family and parse helpers") {
  const Grid g = Grid::make(2, 128, 16.0);
  const auto profiles = make_radial_family(4, 3, g);
  CHECK(profiles.size() == 4);
  for (const auto& p : profiles) CHECK(p.r_max >= std::sqrt(2.0) * g.L);

  CHECK(parse_family_kind("gaussians") == FamilyKind::kGaussians);
  CHECK(parse_family_kind("bandlimited-random") == FamilyKind::kBandlimitedRandom);
  CHECK_THROWS_AS(parse_family_kind("nonsense"), config_error);
}

TEST_CASE("list_suites names the ten suites") {
  const auto names = list_suites();
  CHECK(names.size() == 10);
  for (const char* expect :
       {"young-axioms", "orlicz-norms", "bessel-kernel", "calderon-s1", "embedding-s1",
        "embedding-s2", "increment-kernel", "lp-equivalence", "atoms", "strauss"}) {
    CHECK(std::find(names.begin(), names.end(), expect) != names.end());
  }
}

TEST_CASE("run_suite: unknown names and invalid configs are config errors") {
  SuiteConfig cfg;
  cfg.suite = "spectral-unicorns";
  CHECK_THROWS_AS(run_suite(cfg), config_error);

  cfg.suite = "embedding-s1";
  cfg.s = 0.6;
  cfg.s2 = 0.3;  // s' <= s
  CHECK_THROWS_AS(run_suite(cfg), config_error);
}

TEST_CASE("young-axioms suite passes and reports the indices") {
  SuiteConfig cfg;
  cfg.suite = "young-axioms";
  cfg.young = "power:p=2";
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.pass);
  CHECK(rep.constant("p_minus") == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(rep.constant("young_violation") <= 1e-9);
  CHECK(rep.json.at("rows").size() > 0);
  CHECK(rep.csv.find("case,left,right,ratio,pass") == 0);
}

TEST_CASE("suite reports are deterministic modulo the timestamp") {
  SuiteConfig cfg;
  cfg.suite = "orlicz-norms";
  cfg.young = "zygmund:p=2,q=1,r=1";
  cfg.N = 512;
  cfg.family_size = 4;
  cfg.seed = 99;
  VerificationReport r1 = run_suite(cfg);
  VerificationReport r2 = run_suite(cfg);
  r1.json["environment"].erase("timestamp");
  r2.json["environment"].erase("timestamp");
  CHECK(r1.json.dump() == r2.json.dump());
  CHECK(r1.csv == r2.csv);
}

TEST_CASE("suite writes report files when out_dir is set") {
  SuiteConfig cfg;
  cfg.suite = "young-axioms";
  cfg.young = "power:p=3";
  cfg.out_dir = "/tmp/orlicz_suite_out";
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.pass);
  std::ifstream jf("/tmp/orlicz_suite_out/report.json");
  CHECK(jf.good());
  std::ifstream cf("/tmp/orlicz_suite_out/cases.csv");
  CHECK(cf.good());
}
