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

#include "orlicz/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace orlicz {

namespace {
std::mutex plan_mutex;  // FFTW plan creation is not thread-safe
}

void fft_nd(std::vector<std::complex<double>>& a, const std::vector<int>& shape, bool inverse) {
  std::size_t total = 1;
  for (int d : shape) total *= static_cast<std::size_t>(d);
  if (total != a.size()) throw std::invalid_argument("fft_nd: shape/size mismatch");

  auto* data = reinterpret_cast<fftw_complex*>(a.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    plan = fftw_plan_dft(static_cast<int>(shape.size()), shape.data(), data, data,
                         inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fft_nd: plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(plan);
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(total);
    for (auto& z : a) z *= scale;
  }
}

}  // namespace orlicz
