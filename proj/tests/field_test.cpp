#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orlicz/errors.hpp"
#include "orlicz/field_ops.hpp"
#include "orlicz/bessel.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/rng.hpp"

using namespace orlicz;

namespace {

Field gaussian_1d(const Grid& g, double width = 1.0) {
  Field u(g);
  for (int j = 0; j < g.N; ++j) {
    const double x = g.coord(j);
    u.v[j] = std::exp(-x * x / (width * width));
  }
  return u;
}

Field random_field(const Grid& g, std::uint64_t seed) {
  Rng rng(seed);
  Field u(g);
  for (auto& x : u.v) x = rng.normal();
  return u;
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid::make(4, 64, 1.0), config_error);
  CHECK_THROWS_AS(Grid::make(1, 48, 1.0), config_error);
  CHECK_THROWS_AS(Grid::make(1, 4, 1.0), config_error);
  const Grid g = Grid::make(2, 64, 8.0);
  CHECK(g.h() == doctest::Approx(0.25));
  CHECK(g.size() == 4096);
  CHECK(g.omega_n() == doctest::Approx(std::numbers::pi));
}

TEST_CASE("integrate: constants exact, gaussian closed form") {
  const Grid g = Grid::make(1, 2048, 16.0);
  Field zero(g);
  CHECK(integrate(zero) == 0.0);

  Field c(g);
  for (auto& x : c.v) x = 3.25;
  CHECK(integrate(c) == doctest::Approx(3.25 * 32.0).epsilon(1e-14));

  CHECK(integrate(gaussian_1d(g)) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-10));
}

TEST_CASE("convolve: delta identity, gaussian closed form, positivity") {
  const Grid g = Grid::make(1, 1024, 16.0);
  const Field u = gaussian_1d(g);
  const Field d = delta_field(g);
  const Field conv = convolve(d, u);
  for (int j = 0; j < g.N; ++j) CHECK(conv.v[j] == doctest::Approx(u.v[j]).epsilon(1e-12));

  // e^{-x^2} * e^{-x^2} = sqrt(pi/2) e^{-x^2/2}
  const Field gg = convolve(u, u);
  for (int j = 0; j < g.N; j += 37) {
    const double x = g.coord(j);
    const double want = std::sqrt(std::numbers::pi / 2.0) * std::exp(-x * x / 2.0);
    CHECK(gg.v[j] == doctest::Approx(want).epsilon(1e-9));
  }

  // nonnegative inputs stay nonnegative up to roundoff
  Field a = random_field(g, 3), b = random_field(g, 4);
  for (auto& x : a.v) x = std::abs(x);
  for (auto& x : b.v) x = std::abs(x);
  const Field ab = convolve(a, b);
  for (double x : ab.v) CHECK(x >= -1e-12 * g.N);

  // commutative
  const Field ba = convolve(b, a);
  CHECK(max_abs(subtracted(ab, ba)) <= 1e-10 * max_abs(ab));
}

TEST_CASE("spectral_multiply: identity, composition, differentiation") {
  const Grid g = Grid::make(1, 512, 8.0);
  const Field u = gaussian_1d(g);
  const Field same = spectral_multiply(u, [](std::span<const double>) { return 1.0; });
  for (int j = 0; j < g.N; ++j) CHECK(same.v[j] == doctest::Approx(u.v[j]).epsilon(1e-13));

  // twice (1+|xi|^2)^{-1} equals once (1+|xi|^2)^{-2}
  const auto s1 = [](std::span<const double> xi) { return 1.0 / (1.0 + xi[0] * xi[0]); };
  const auto s2 = [](std::span<const double> xi) {
    return 1.0 / ((1.0 + xi[0] * xi[0]) * (1.0 + xi[0] * xi[0]));
  };
  const Field twice = spectral_multiply(spectral_multiply(u, s1), s1);
  const Field once = spectral_multiply(u, s2);
  CHECK(max_abs(subtracted(twice, once)) <= 1e-12);

  // derivative of a grid mode: sin(omega x) -> omega cos(omega x)
  const double omega = 4.0 * std::numbers::pi / g.L;
  Field sinf(g);
  for (int j = 0; j < g.N; ++j) sinf.v[j] = std::sin(omega * g.coord(j));
  const Field ds = derivative(sinf, 0);
  for (int j = 0; j < g.N; j += 11) {
    CHECK(ds.v[j] ==
          doctest::Approx(omega * std::cos(omega * g.coord(j))).epsilon(1e-10).scale(omega));
  }

  CHECK_THROWS_AS(spectral_multiply(u, [](std::span<const double>) { return NAN; }),
                  numeric_error);
}

TEST_CASE("gradient: constants, gaussian closed form, zero mean") {
  const Grid g = Grid::make(1, 2048, 16.0);
  Field c(g);
  for (auto& x : c.v) x = 2.0;
  CHECK(max_abs(gradient(c)[0]) <= 1e-12);

  const Field u = gaussian_1d(g);
  const Field du = gradient(u)[0];
  for (int j = 0; j < g.N; j += 61) {
    const double x = g.coord(j);
    CHECK(du.v[j] == doctest::Approx(-2.0 * x * std::exp(-x * x)).epsilon(1e-8).scale(1.0));
  }
  CHECK(std::abs(integrate(du)) <= 1e-10);

  const Field r = random_field(g, 9);
  CHECK(std::abs(integrate(derivative(r, 0))) <= 1e-10 * max_abs(r) * g.N);
}

TEST_CASE("parseval identity") {
  const Grid g = Grid::make(1, 1024, 8.0);
  const Field u = random_field(g, 5);
  double direct = 0.0;
  for (double x : u.v) direct += x * x;
  direct *= g.h();
  CHECK(parseval_energy(u) == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("shift and roll agree on whole cells") {
  const Grid g = Grid::make(1, 256, 8.0);
  const Field u = gaussian_1d(g);
  const double delta[1] = {5 * g.h()};
  const int cells[1] = {5};
  const Field a = shift(u, std::span<const double>(delta, 1));
  const Field b = roll(u, std::span<const int>(cells, 1));
  CHECK(max_abs(subtracted(a, b)) <= 1e-10);
}

TEST_CASE("maximal function: constants, domination, interval indicator") {
  const Grid g = Grid::make(1, 1024, 16.0);
  Field c(g);
  for (auto& x : c.v) x = -1.5;
  const Field mc = maximal_function(c);
  for (double x : mc.v) CHECK(x == doctest::Approx(1.5).epsilon(1e-12));

  Field u = gaussian_1d(g);
  const Field mu = maximal_function(u);
  for (int j = 0; j < g.N; ++j) CHECK(mu.v[j] >= u.v[j] - 1e-12);

  // indicator of [-1, 1] at x = 3: dyadic-centered value within a factor 2
  // of 1/3
  Field ind(g);
  for (int j = 0; j < g.N; ++j) ind.v[j] = std::abs(g.coord(j)) <= 1.0 ? 1.0 : 0.0;
  const Field mi = maximal_function(ind);
  const int j3 = g.origin_index() + static_cast<int>(std::round(3.0 / g.h()));
  CHECK(mi.v[j3] >= 1.0 / 6.0);
  CHECK(mi.v[j3] <= 2.0 / 3.0);
}

TEST_CASE("maximal function sublinearity") {
  const Grid g = Grid::make(1, 512, 8.0);
  const Field u = random_field(g, 21), v = random_field(g, 22);
  const Field muv = maximal_function(added(u, v));
  const Field mu = maximal_function(u), mv = maximal_function(v);
  for (std::size_t i = 0; i < muv.v.size(); ++i) {
    CHECK(muv.v[i] <= mu.v[i] + mv.v[i] + 1e-12 * g.N);
  }
}

TEST_CASE("product_weighted_pair: zero, separable closed form, linearity") {
  const Grid g = Grid::make(1, 64, 4.0);
  ProductField v(g, g);
  Field w(g);
  for (int j = 0; j < g.N; ++j) w.v[j] = std::abs(g.coord(j) + 0.5) < 0.5 ? 1.0 : 0.0;
  const auto K0 = [](double, double, double) { return 1.0; };
  CHECK(product_weighted_pair(v, K0, w) == 0.0);

  // K = 1 on 1 <= |t| <= 2, v = 1, w = indicator of [-1, 1):
  // (int_{1<=|t|<=2} dt/|t|) * (2L) * 2 = 2 log 2 * 2L * 2
  ProductField v1(g, g);
  for (auto& x : v1.v) x = 1.0;
  Field w1(g);
  for (int j = 0; j < g.N; ++j) w1.v[j] = g.coord(j) >= -1.0 && g.coord(j) < 1.0 ? 1.0 : 0.0;
  const auto K1 = [](double, double, double t) {
    return std::abs(t) >= 1.0 && std::abs(t) <= 2.0 ? 1.0 : 0.0;
  };
  const double got = product_weighted_pair(v1, K1, w1);
  // exact discrete factorization: the t-sum splits off
  double t_factor = 0.0;
  for (int it = 0; it < g.N; ++it) {
    const double t = g.coord(it);
    if (t != 0.0 && std::abs(t) >= 1.0 && std::abs(t) <= 2.0) t_factor += g.h() / std::abs(t);
  }
  CHECK(got == doctest::Approx(t_factor * (2.0 * g.L) * 2.0).epsilon(1e-12));
  // continuum value 2 log 2 (2L) 2, up to the sharp-indicator cell quantization
  const double want = 2.0 * std::log(2.0) * (2.0 * g.L) * 2.0;
  CHECK(got == doctest::Approx(want).epsilon(0.15));

  const double doubled = product_weighted_pair(v1, K1, scaled(w1, 2.0));
  CHECK(doubled == doctest::Approx(2.0 * got).epsilon(1e-12));

  const Grid big = Grid::make(1, 256, 4.0);
  ProductField vb(big, big);
  CHECK_THROWS_AS(product_weighted_pair(vb, K0, Field(big)), resource_error);
}

TEST_CASE("field io round-trip") {
  const Grid g = Grid::make(1, 64, 2.0);
  const Field u = random_field(g, 33);
  write_field(u, "/tmp/orlicz_field_test.bin");
  const Field back = read_field("/tmp/orlicz_field_test.json");
  CHECK(back.grid == u.grid);
  CHECK(max_abs(subtracted(back, u)) == 0.0);
  write_field_csv(u, "/tmp/orlicz_field_test.csv");
}

TEST_CASE("boundary_max sees the outermost layer") {
  const Grid g = Grid::make(2, 16, 1.0);
  Field u(g);
  u.v[u.flat(0, 7)] = 4.0;
  CHECK(boundary_max(u) == 4.0);
}

TEST_CASE("convolve is bilinear") {
  const Grid g = Grid::make(1, 256, 8.0);
  const Field a = random_field(g, 51), b = random_field(g, 52), c = random_field(g, 53);
  const Field lhs = convolve(added(scaled(a, 2.0), b), c);
  const Field rhs = added(scaled(convolve(a, c), 2.0), convolve(b, c));
  CHECK(max_abs(subtracted(lhs, rhs)) <= 1e-11 * std::max(1.0, max_abs(lhs)) * g.N);
}

TEST_CASE("2d and 3d paths: delta identity, gradient, integrate, maximal") {
  // 2d convolution against the delta
  const Grid g2 = Grid::make(2, 64, 4.0);
  Field u2(g2);
  for (int a = 0; a < g2.N; ++a) {
    for (int b = 0; b < g2.N; ++b) {
      const double x = g2.coord(a), y = g2.coord(b);
      u2.v[u2.flat(a, b)] = std::exp(-x * x - 2.0 * y * y);
    }
  }
  const Field conv2 = convolve(delta_field(g2), u2);
  CHECK(max_abs(subtracted(conv2, u2)) <= 1e-11);

  // 2d gradient of a separable product of grid modes
  const double om = 2.0 * std::numbers::pi / g2.L;
  Field m2(g2);
  for (int a = 0; a < g2.N; ++a) {
    for (int b = 0; b < g2.N; ++b) {
      m2.v[m2.flat(a, b)] = std::sin(om * g2.coord(a)) * std::cos(om * g2.coord(b));
    }
  }
  const auto grad2 = gradient(m2);
  REQUIRE(grad2.size() == 2);
  for (int a = 0; a < g2.N; a += 5) {
    for (int b = 0; b < g2.N; b += 7) {
      const double x = g2.coord(a), y = g2.coord(b);
      CHECK(grad2[0].v[grad2[0].flat(a, b)] ==
            doctest::Approx(om * std::cos(om * x) * std::cos(om * y)).epsilon(1e-9).scale(om));
      CHECK(grad2[1].v[grad2[1].flat(a, b)] ==
            doctest::Approx(-om * std::sin(om * x) * std::sin(om * y)).epsilon(1e-9).scale(om));
    }
  }

  // 2d maximal function of a constant, and domination
  Field c2(g2);
  for (auto& x : c2.v) x = 0.7;
  const Field mc2 = maximal_function(c2);
  for (double x : mc2.v) CHECK(x == doctest::Approx(0.7).epsilon(1e-12));
  const Field mu2 = maximal_function(u2);
  for (std::size_t i = 0; i < u2.v.size(); ++i) CHECK(mu2.v[i] >= u2.v[i] - 1e-12);

  // 3d integrate: gaussian closed form and parseval
  const Grid g3 = Grid::make(3, 32, 6.0);
  Field u3(g3);
  for (int a = 0; a < g3.N; ++a) {
    for (int b = 0; b < g3.N; ++b) {
      for (int c = 0; c < g3.N; ++c) {
        const double r2 = g3.coord(a) * g3.coord(a) + g3.coord(b) * g3.coord(b) +
                          g3.coord(c) * g3.coord(c);
        u3.v[u3.flat(a, b, c)] = std::exp(-r2);
      }
    }
  }
  const double want3 = std::pow(std::numbers::pi, 1.5);
  CHECK(integrate(u3) == doctest::Approx(want3).epsilon(1e-10));
  double direct = 0.0;
  for (double x : u3.v) direct += x * x;
  direct *= std::pow(g3.h(), 3);
  CHECK(parseval_energy(u3) == doctest::Approx(direct).epsilon(1e-10));

  // 3d spectral shift round trip
  const double delta3[3] = {3 * g3.h(), -2 * g3.h(), 5 * g3.h()};
  const int cells3[3] = {3, -2, 5};
  const Field s_spec = shift(u3, std::span<const double>(delta3, 3));
  const Field s_roll = roll(u3, std::span<const int>(cells3, 3));
  CHECK(max_abs(subtracted(s_spec, s_roll)) <= 1e-9);
}

TEST_CASE("2d bessel kernel mass and potential round trip") {
  const Grid g = Grid::make(2, 128, 8.0);
  Field f(g);
  for (int a = 0; a < g.N; ++a) {
    for (int b = 0; b < g.N; ++b) {
      const double r2 = g.coord(a) * g.coord(a) + g.coord(b) * g.coord(b);
      f.v[f.flat(a, b)] = std::exp(-r2);
    }
  }
  const Field u = orlicz::potential(0.7, f);
  const Field back = orlicz::bessel_inverse(0.7, u);
  CHECK(max_abs(subtracted(back, f)) <= 1e-10);
}
