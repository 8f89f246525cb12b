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

#include <complex>
#include <vector>

namespace orlicz {

// In-place complex DFT over an n-dimensional row-major array with the given
// per-axis extents. The inverse transform is normalized by 1/prod(shape).
// Deterministic across runs (FFTW estimate-mode plans).
void fft_nd(std::vector<std::complex<double>>& a, const std::vector<int>& shape, bool inverse);

}  // namespace orlicz
