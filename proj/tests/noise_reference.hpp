// Copyright 2026 The gravmediate Authors
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

// Time-ordered reference propagator for the noisy, pulsed model. Each sector
// block is integrated directly from its time-dependent Hamiltonian in the
// frame rotating with omega_tilde n; nothing from the closed form is used.

#include <algorithm>
#include <array>

#include "gravmediate/noisedd.hpp"
#include "gravmediate/oracle.hpp"
#include "gravmediate/quadrature.hpp"

namespace gm::test {

inline std::array<CMatrix, 4> reference_noisy_blocks(const ModelParams& p,
                                                     const NoiseRealization& noise,
                                                     const PulseSequence& Fa,
                                                     const PulseSequence& Fb, double t,
                                                     double max_step, Index columns) {
  std::vector<double> pts = noise.breakpoints();
  pts.insert(pts.end(), Fa.flip_times.begin(), Fa.flip_times.end());
  pts.insert(pts.end(), Fb.flip_times.begin(), Fb.flip_times.end());
  const std::vector<double> bp = quad::merge_breakpoints(pts, t);
  std::array<CMatrix, 4> out;
  for (int k = 0; k < 4; ++k) {
    const double sa = k / 2 == 0 ? 1.0 : -1.0;
    const double sb = k % 2 == 0 ? 1.0 : -1.0;
    SectorDrive drive;
    drive.breakpoints = bp;
    drive.mu = [&, sa, sb](double s, std::size_t piece) {
      const double mid = 0.5 * (bp[piece] + bp[piece + 1]);
      return p.g_a * sa * Fa.F(mid) + p.g_b * sb * Fb.F(mid) + noise.eta_c.value(s, mid);
    };
    drive.scalar = [&, sa, sb](double s, std::size_t piece) {
      const double mid = 0.5 * (bp[piece] + bp[piece + 1]);
      return sa * Fa.F(mid) * (p.omega_a + noise.eta_a.value(s, mid)) +
             sb * Fb.F(mid) * (p.omega_b + noise.eta_b.value(s, mid));
    };
    out[static_cast<std::size_t>(k)] =
        time_ordered_propagator(p.omega_tilde, p.N, drive, max_step, columns, Frame::Interaction);
  }
  return out;
}

// Largest operator-norm difference over the four sector blocks, restricted to
// the first `columns` Fock columns.
inline double block_distance(const std::array<CMatrix, 4>& ref, const CMatrix& u, Index n) {
  double worst = 0.0;
  for (Index k = 0; k < 4; ++k) {
    const Index cols = ref[static_cast<std::size_t>(k)].cols();
    worst = std::max(worst, operator_norm(ref[static_cast<std::size_t>(k)] -
                                          u.block(k * n, k * n, n, cols)));
  }
  return worst;
}

}  // namespace gm::test
