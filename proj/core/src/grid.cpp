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

#include "orlicz/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "orlicz/errors.hpp"

namespace orlicz {

double Grid::omega_n() const {
  switch (n) {
    case 1: return 2.0;
    case 2: return std::numbers::pi;
    case 3: return 4.0 * std::numbers::pi / 3.0;
  }
  return 0.0;
}

double Grid::box_volume() const { return std::pow(2.0 * L, n); }

double Grid::freq(int k) const { return std::numbers::pi * signed_index(k) / L; }

Grid Grid::make(int n, int N, double L) {
  if (n < 1 || n > 3) throw config_error("grid: dimension must be 1, 2 or 3");
  if (N < 8 || (N & (N - 1)) != 0) throw config_error("grid: N must be a power of two >= 8");
  if (!(L > 0.0)) throw config_error("grid: L must be positive");
  return Grid{n, N, L};
}

ProductField::ProductField(const Grid& gx, const Grid& gt) : grid_x(gx), grid_t(gt) {
  if (gx.n != 1 || gt.n != 1) throw config_error("product field: only n = 1 is supported");
  v.assign(static_cast<std::size_t>(gx.N) * gt.N, 0.0);
}

Field delta_field(const Grid& g) {
  Field f(g);
  const double w = 1.0 / std::pow(g.h(), g.n);
  std::size_t idx = 0;
  for (int d = 0; d < g.n; ++d) idx = idx * g.N + g.origin_index();
  f.v[idx] = w;
  return f;
}

double boundary_max(const Field& u) {
  const Grid& g = u.grid;
  double m = 0.0;
  const auto upd = [&](std::size_t flat) { m = std::max(m, std::abs(u.v[flat])); };
  if (g.n == 1) {
    upd(0);
  } else if (g.n == 2) {
    for (int i = 0; i < g.N; ++i) {
      upd(u.flat(0, i));
      upd(u.flat(i, 0));
    }
  } else {
    for (int i = 0; i < g.N; ++i) {
      for (int j = 0; j < g.N; ++j) {
        upd(u.flat(0, i, j));
        upd(u.flat(i, 0, j));
        upd(u.flat(i, j, 0));
      }
    }
  }
  return m;
}

namespace {

void split_path(const std::string& path, std::string& bin, std::string& json) {
  const auto ends_with = [&](const char* suf) {
    const std::string s(suf);
    return path.size() > s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".bin")) {
    bin = path;
    json = path.substr(0, path.size() - 4) + ".json";
  } else if (ends_with(".json")) {
    json = path;
    bin = path.substr(0, path.size() - 5) + ".bin";
  } else {
    bin = path + ".bin";
    json = path + ".json";
  }
}

std::string basename_of(const std::string& path) {
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

}  // namespace

void write_field(const Field& u, const std::string& path) {
  std::string bin, json_path;
  split_path(path, bin, json_path);
  nlohmann::ordered_json header;
  header["n"] = u.grid.n;
  header["N"] = u.grid.N;
  header["L"] = u.grid.L;
  header["samples"] = basename_of(bin);
  header["dtype"] = "float64";
  header["order"] = "row-major";
  std::ofstream jf(json_path);
  if (!jf) throw std::runtime_error("write_field: cannot open " + json_path);
  jf << header.dump(2) << "\n";
  std::ofstream bf(bin, std::ios::binary);
  if (!bf) throw std::runtime_error("write_field: cannot open " + bin);
  bf.write(reinterpret_cast<const char*>(u.v.data()),
           static_cast<std::streamsize>(u.v.size() * sizeof(double)));
}

Field read_field(const std::string& path) {
  std::string bin, json_path;
  split_path(path, bin, json_path);
  std::ifstream jf(json_path);
  if (!jf) throw std::runtime_error("read_field: cannot open " + json_path);
  nlohmann::json header;
  jf >> header;
  Grid g = Grid::make(header.at("n").get<int>(), header.at("N").get<int>(),
                      header.at("L").get<double>());
  Field u(g);
  std::ifstream bf(bin, std::ios::binary);
  if (!bf) throw std::runtime_error("read_field: cannot open " + bin);
  bf.read(reinterpret_cast<char*>(u.v.data()),
          static_cast<std::streamsize>(u.v.size() * sizeof(double)));
  if (static_cast<std::size_t>(bf.gcount()) != u.v.size() * sizeof(double)) {
    throw std::runtime_error("read_field: short read from " + bin);
  }
  return u;
}

void write_field_csv(const Field& u, const std::string& path) {
  if (u.grid.n != 1) throw config_error("field csv export: only n = 1");
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_field_csv: cannot open " + path);
  f << "x,value\n";
  char buf[64];
  for (int j = 0; j < u.grid.N; ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", u.grid.coord(j), u.v[j]);
    f << buf;
  }
}

}  // namespace orlicz
