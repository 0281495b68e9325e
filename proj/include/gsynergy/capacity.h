// Copyright 2026 The gsynergy Authors
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

#ifndef GSYNERGY_CAPACITY_H
#define GSYNERGY_CAPACITY_H

#include <cstddef>
#include <functional>
#include <vector>

#include "gsynergy/channel.h"
#include "gsynergy/dilation.h"
#include "gsynergy/symplectic.h"

namespace gsynergy {

/// sqrt(7/sqrt2 + 2 sqrt3 +- 1/2).
double eq3_alpha_plus();
double eq3_alpha_minus();

/// Largest family parameter accepted by default; cosh(12) ~ 8e4.
inline constexpr double kDefaultMaxC = 12.0;

/// Three-mode input family with a thermal-like mode 0 coupled to a
/// two-mode-squeezed pair (modes 1, 2). Built entry by entry.
CovarianceMatrix eq3_state(double c, double c_max = kDefaultMaxC);

/// Routing of eq3_state modes onto the inputs of channels::eq2_combined:
/// eq3 modes 1, 2 feed the PPT channel and eq3 mode 0 feeds the attenuator.
inline const std::vector<std::size_t> kEq2Routing{1, 2, 0};

/// eq3_state(c) with modes reordered by kEq2Routing.
CovarianceMatrix eq2_input(double c, double c_max = kDefaultMaxC);

/// Mean photon number summed over all modes, (tr gamma + |d|^2 - 2m) / 4.
double photon_number(const CovarianceMatrix &state);

struct CoherentInfoResult {
    double value = 0;  // bits
    double output_entropy = 0;
    double environment_entropy = 0;
    double photon_number = 0;
};

/// H(B) - H(E) with B = ch(input), E = complement(input).
CoherentInfoResult coherent_information(const GaussianChannel &ch,
                                        const GaussianChannel &complement,
                                        const CovarianceMatrix &input,
                                        const Tolerances &tol = {});

/// H(B) - H(RB) where R purifies the input. Never touches the complement;
/// `dilation` must induce `ch` (checked with verify_extension) so that
/// H(RB) = H(E) for the environment of that dilation. In this path
/// environment_entropy holds H(RB).
CoherentInfoResult coherent_information_via_purification(const GaussianChannel &ch,
                                                         const ChannelDilation &dilation,
                                                         const CovarianceMatrix &input,
                                                         const Tolerances &tol = {});

using InputFamily = std::function<CovarianceMatrix(double)>;

struct MaximizeOptions {
    double c_max = kDefaultMaxC;
    Tolerances tol;
};

struct MaximizeResult {
    double c = 0;
    CoherentInfoResult result;
    std::size_t evaluations = 0;
};

/// Grid scan over [lo, hi] followed by golden-section refinement around the
/// best grid point. Uses at most `budget` evaluations; ties go to the smaller c.
MaximizeResult maximize_over_c(const GaussianChannel &ch,
                               const GaussianChannel &complement,
                               const InputFamily &family,
                               double lo,
                               double hi,
                               std::size_t budget,
                               const MaximizeOptions &options = {});

}  // namespace gsynergy

#endif
