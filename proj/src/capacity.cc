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

#include "gsynergy/capacity.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace gsynergy {

double eq3_alpha_plus() {
    return std::sqrt(7.0 / std::sqrt(2.0) + 2.0 * std::sqrt(3.0) + 0.5);
}

double eq3_alpha_minus() {
    return std::sqrt(7.0 / std::sqrt(2.0) + 2.0 * std::sqrt(3.0) - 0.5);
}

CovarianceMatrix eq3_state(double c, double c_max) {
    if (!(c >= 0.0) || !(c <= c_max)) {
        throw GaussianError(ErrorCode::kInvalidArgument,
                            "family parameter c = " + std::to_string(c) + " outside [0, " + std::to_string(c_max) + "]");
    }
    const double ch = std::cosh(c);
    const double sh = std::sinh(c);
    const double ap = eq3_alpha_plus() * sh;
    const double am = eq3_alpha_minus() * sh;
    const double r2 = std::sqrt(2.0) * ch;
    Matrix g(6, 6);
    g << 7 * ch, 0, ap, 0, am, 0,  //
        0, 7 * ch, 0, -ap, 0, am,  //
        ap, 0, r2, 0, ch, 0,       //
        0, -ap, 0, r2, 0, -ch,     //
        am, 0, ch, 0, r2, 0,       //
        0, am, 0, -ch, 0, r2;
    return CovarianceMatrix::create(std::move(g));
}

CovarianceMatrix eq2_input(double c, double c_max) {
    return reorder_modes(eq3_state(c, c_max), kEq2Routing);
}

double photon_number(const CovarianceMatrix &state) {
    const double m = static_cast<double>(state.modes());
    return (state.gamma().trace() + state.displacement().squaredNorm() - 2.0 * m) / 4.0;
}

CoherentInfoResult coherent_information(const GaussianChannel &ch,
                                        const GaussianChannel &complement,
                                        const CovarianceMatrix &input,
                                        const Tolerances &tol) {
    if (complement.input_modes() != ch.input_modes()) {
        throw GaussianError(ErrorCode::kInvalidShape, "channel and complement act on different input spaces");
    }
    CoherentInfoResult r;
    r.output_entropy = entropy(apply(ch, input), tol);
    r.environment_entropy = entropy(apply(complement, input), tol);
    r.value = r.output_entropy - r.environment_entropy;
    r.photon_number = photon_number(input);
    return r;
}

CoherentInfoResult coherent_information_via_purification(const GaussianChannel &ch,
                                                         const ChannelDilation &dilation,
                                                         const CovarianceMatrix &input,
                                                         const Tolerances &tol) {
    if (input.modes() != ch.input_modes()) {
        throw GaussianError(ErrorCode::kInvalidShape, "input does not match the channel");
    }
    if (!verify_extension(ch, dilation.s().matrix(), dilation.partition(), tol)) {
        throw GaussianError(ErrorCode::kInvalidArgument, "dilation does not induce the channel");
    }
    const std::size_t m = input.modes();
    const CovarianceMatrix purified = purify(input, tol);
    // Purified modes are (A', R); the channel acts on A' and R is kept.
    const CovarianceMatrix joint = apply(tensor(ch, channels::identity(m)), purified);
    std::vector<std::size_t> b_modes(ch.output_modes());
    std::iota(b_modes.begin(), b_modes.end(), 0);

    CoherentInfoResult r;
    r.output_entropy = entropy(joint.reduce(b_modes), tol);
    r.environment_entropy = entropy(joint, tol);
    r.value = r.output_entropy - r.environment_entropy;
    r.photon_number = photon_number(input);
    return r;
}

namespace {

struct Probe {
    double c;
    CoherentInfoResult r;
};

bool better(const Probe &a, const Probe &b) {
    if (a.r.value != b.r.value) {
        return a.r.value > b.r.value;
    }
    return a.c < b.c;
}

}  // namespace

MaximizeResult maximize_over_c(const GaussianChannel &ch,
                               const GaussianChannel &complement,
                               const InputFamily &family,
                               double lo,
                               double hi,
                               std::size_t budget,
                               const MaximizeOptions &options) {
    if (budget < 3) {
        throw GaussianError(ErrorCode::kInvalidArgument, "maximize_over_c needs a budget of at least 3");
    }
    if (!(lo >= 0.0) || !(hi <= options.c_max) || !(lo <= hi)) {
        throw GaussianError(ErrorCode::kInvalidArgument, "c range must satisfy 0 <= lo <= hi <= c_max");
    }
    std::size_t used = 0;
    auto eval = [&](double c) {
        used++;
        return Probe{c, coherent_information(ch, complement, family(c), options.tol)};
    };

    if (lo == hi) {
        const Probe p = eval(lo);
        return {p.c, p.r, used};
    }

    // Half of the budget (at least 3 points) goes to the coarse grid.
    const std::size_t grid = std::max<std::size_t>(3, budget / 2);
    std::vector<Probe> probes;
    probes.reserve(grid);
    for (std::size_t i = 0; i < grid; i++) {
        const double c = (i + 1 == grid) ? hi : lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(grid - 1);
        probes.push_back(eval(c));
    }
    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < probes.size(); i++) {
        if (better(probes[i], probes[best_idx])) {
            best_idx = i;
        }
    }
    Probe best = probes[best_idx];

    double a = probes[best_idx == 0 ? 0 : best_idx - 1].c;
    double b = probes[std::min(best_idx + 1, probes.size() - 1)].c;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    if (used + 2 <= budget && b > a) {
        Probe left = eval(b - inv_phi * (b - a));
        Probe right = eval(a + inv_phi * (b - a));
        for (const Probe *p : {&left, &right}) {
            if (better(*p, best)) {
                best = *p;
            }
        }
        while (used < budget) {
            if (left.r.value >= right.r.value) {
                b = right.c;
                right = left;
                left = eval(b - inv_phi * (b - a));
                if (better(left, best)) {
                    best = left;
                }
            } else {
                a = left.c;
                left = right;
                right = eval(a + inv_phi * (b - a));
                if (better(right, best)) {
                    best = right;
                }
            }
        }
    }
    return {best.c, best.r, used};
}

}  // namespace gsynergy
