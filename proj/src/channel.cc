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

#include "gsynergy/channel.h"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace gsynergy {

GaussianChannel GaussianChannel::create(Matrix x, Matrix y, std::string name) {
    if (x.rows() % 2 != 0 || x.cols() % 2 != 0) {
        throw GaussianError(ErrorCode::kInvalidShape, "X must have even dimensions");
    }
    if (y.rows() != x.rows() || y.cols() != x.rows()) {
        throw GaussianError(ErrorCode::kInvalidShape, "Y must be square with as many rows as X");
    }
    if (y.rows() > 0 && (y - y.transpose()).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, y.cwiseAbs().maxCoeff())) {
        throw GaussianError(ErrorCode::kInvalidShape, "Y is not symmetric");
    }
    Matrix y_sym = 0.5 * (y + y.transpose());
    return GaussianChannel(std::move(x), std::move(y_sym), std::move(name));
}

GaussianChannel GaussianChannel::renamed(std::string name) const {
    return GaussianChannel(x_, y_, std::move(name));
}

namespace {

PsdReport psd_report(const GaussianChannel &ch, double sign, double tol) {
    if (tol < 0) {
        throw GaussianError(ErrorCode::kInvalidArgument, "negative tolerance");
    }
    if (ch.output_modes() == 0) {
        return {true, 0, {}};
    }
    const Matrix j_in = symplectic_form(ch.input_modes());
    const Matrix j_out = symplectic_form(ch.output_modes());
    Matrix im = j_out + sign * ch.x() * j_in * ch.x().transpose();
    im = 0.5 * (im - im.transpose());
    PsdReport report;
    report.spectrum = hermitian_eigenvalues(ch.y(), im);
    report.min_eigenvalue = report.spectrum.front();
    report.ok = report.min_eigenvalue >= -tol;
    return report;
}

}  // namespace

PsdReport physicality_report(const GaussianChannel &ch, double tol) {
    return psd_report(ch, -1.0, tol);
}

bool validate_channel(const GaussianChannel &ch, double tol) {
    return physicality_report(ch, tol).ok;
}

PptVerdict ppt_check(const GaussianChannel &ch, double tol) {
    return psd_report(ch, +1.0, tol);
}

CovarianceMatrix apply(const GaussianChannel &ch, const CovarianceMatrix &state) {
    if (state.modes() != ch.input_modes()) {
        throw GaussianError(ErrorCode::kInvalidShape,
                            "channel expects " + std::to_string(ch.input_modes()) + " input modes, state has " +
                                std::to_string(state.modes()));
    }
    return CovarianceMatrix::unchecked(ch.x() * state.gamma() * ch.x().transpose() + ch.y(),
                                       ch.x() * state.displacement());
}

CovarianceMatrix apply_partial(const GaussianChannel &ch,
                               const CovarianceMatrix &state,
                               const std::vector<std::size_t> &target_modes) {
    const std::size_t m = state.modes();
    if (ch.input_modes() != ch.output_modes()) {
        throw GaussianError(ErrorCode::kInvalidArgument, "apply_partial needs a channel with equal input and output modes");
    }
    if (target_modes.size() != ch.input_modes()) {
        throw GaussianError(ErrorCode::kInvalidArgument, "target mode count does not match the channel");
    }
    std::vector<bool> is_target(m, false);
    for (std::size_t mode : target_modes) {
        if (mode >= m || is_target[mode]) {
            throw GaussianError(ErrorCode::kInvalidArgument, "target modes must be distinct and in range");
        }
        is_target[mode] = true;
    }
    // Untouched modes first (in order), then the targets in the caller's order.
    std::vector<std::size_t> order;
    order.reserve(m);
    for (std::size_t k = 0; k < m; k++) {
        if (!is_target[k]) {
            order.push_back(k);
        }
    }
    order.insert(order.end(), target_modes.begin(), target_modes.end());
    const Matrix p = mode_permutation(order);

    const auto rest = static_cast<Eigen::Index>(2 * (m - target_modes.size()));
    const GaussianChannel lifted =
        GaussianChannel::create(direct_sum(Matrix::Identity(rest, rest), ch.x()),
                                direct_sum(Matrix::Zero(rest, rest), ch.y()));
    const Matrix x = p.transpose() * lifted.x() * p;
    const Matrix y = p.transpose() * lifted.y() * p;
    return CovarianceMatrix::unchecked(x * state.gamma() * x.transpose() + y, x * state.displacement());
}

GaussianChannel tensor(const GaussianChannel &first, const GaussianChannel &second) {
    std::string name;
    if (!first.name().empty() || !second.name().empty()) {
        name = first.name() + "(x)" + second.name();
    }
    return GaussianChannel::create(direct_sum(first.x(), second.x()), direct_sum(first.y(), second.y()), name);
}

GaussianChannel compose(const GaussianChannel &first, const GaussianChannel &second) {
    if (second.input_modes() != first.output_modes()) {
        throw GaussianError(ErrorCode::kInvalidShape, "cannot compose channels with mismatched modes");
    }
    return GaussianChannel::create(second.x() * first.x(),
                                   second.x() * first.y() * second.x().transpose() + second.y());
}

GaussianChannel compose_symplectic(const GaussianChannel &ch, const Matrix &s_in, const Matrix &s_out, bool negate) {
    if (s_in.rows() != s_in.cols() || s_in.rows() != ch.x().cols()) {
        throw GaussianError(ErrorCode::kInvalidShape, "input transformation does not match the channel input");
    }
    if (s_out.rows() != s_out.cols() || s_out.rows() != ch.x().rows()) {
        throw GaussianError(ErrorCode::kInvalidShape, "output transformation does not match the channel output");
    }
    const double sign = negate ? -1.0 : 1.0;
    return GaussianChannel::create(sign * s_out * ch.x() * s_in, s_out * ch.y() * s_out.transpose(), ch.name());
}

GaussianChannel compose_symplectic(const GaussianChannel &ch,
                                   const SymplecticMatrix &s_in,
                                   const SymplecticMatrix &s_out,
                                   bool negate) {
    return compose_symplectic(ch, s_in.matrix(), s_out.matrix(), negate);
}

namespace channels {

GaussianChannel identity(std::size_t modes) {
    const auto n = static_cast<Eigen::Index>(2 * modes);
    return GaussianChannel::create(Matrix::Identity(n, n), Matrix::Zero(n, n), "identity");
}

GaussianChannel attenuation(double t, std::size_t modes) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw GaussianError(ErrorCode::kInvalidArgument, "attenuation parameter must lie in [0, 1]");
    }
    const auto n = static_cast<Eigen::Index>(2 * modes);
    return GaussianChannel::create(std::sqrt(1.0 - t) * Matrix::Identity(n, n), t * Matrix::Identity(n, n),
                                   "attenuation(" + std::to_string(t) + ")");
}

GaussianChannel eq1_ppt() {
    Matrix x(4, 4);
    x << -1, 0, 0, 0,  //
        0, 0, 0, 1,    //
        0, 0, 1, 0,    //
        0, 1, 0, 0;
    return GaussianChannel::create(std::move(x), std::sqrt(2.0) * Matrix::Identity(4, 4), "eq1_ppt");
}

GaussianChannel eq4_ppt_prime() {
    const double r2 = std::sqrt(2.0);
    Matrix x(4, 4);
    x << r2, 0, 1, 0,  //
        0, -r2, 0, 1,  //
        -1, 0, 0, 0,   //
        0, -1, 0, 0;
    Matrix y(4, 4);
    y << 2, 0, -r2, 0,  //
        0, 2, 0, r2,    //
        -r2, 0, 2, 0,   //
        0, r2, 0, 2;
    return GaussianChannel::create(std::move(x), std::move(y), "eq4_ppt_prime");
}

GaussianChannel eq2_combined() {
    return tensor(eq1_ppt(), attenuation(0.5)).renamed("eq2_combined");
}

}  // namespace channels

}  // namespace gsynergy
