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

#ifndef GSYNERGY_CHANNEL_H
#define GSYNERGY_CHANNEL_H

#include <cstddef>
#include <string>
#include <vector>

#include "gsynergy/symplectic.h"

namespace gsynergy {

/// Covariance-level Gaussian channel gamma -> X gamma X^T + Y.
///
/// Construction only checks shapes and the symmetry of Y. Physicality is a
/// separate question answered by validate_channel, so unphysical (X, Y) pairs
/// can still be represented and reported on.
class GaussianChannel {
   public:
    static GaussianChannel create(Matrix x, Matrix y, std::string name = "");

    std::size_t input_modes() const {
        return static_cast<std::size_t>(x_.cols() / 2);
    }
    std::size_t output_modes() const {
        return static_cast<std::size_t>(x_.rows() / 2);
    }
    const Matrix &x() const {
        return x_;
    }
    const Matrix &y() const {
        return y_;
    }
    const std::string &name() const {
        return name_;
    }

    GaussianChannel renamed(std::string name) const;

   private:
    GaussianChannel(Matrix x, Matrix y, std::string name) : x_(std::move(x)), y_(std::move(y)), name_(std::move(name)) {
    }

    Matrix x_;
    Matrix y_;
    std::string name_;
};

/// Result of a Hermitian PSD test on Y + i(J_out -+ X J_in X^T).
struct PsdReport {
    bool ok = false;
    double min_eigenvalue = 0;
    std::vector<double> spectrum;  // ascending
};

using PptVerdict = PsdReport;

/// Spectrum of Y + i(J_out - X J_in X^T).
PsdReport physicality_report(const GaussianChannel &ch, double tol);
bool validate_channel(const GaussianChannel &ch, double tol);

/// Spectrum of Y + i(J_out + X J_in X^T); the channel is PPT iff it is PSD.
PptVerdict ppt_check(const GaussianChannel &ch, double tol);

CovarianceMatrix apply(const GaussianChannel &ch, const CovarianceMatrix &state);

/// Apply ch to the listed modes of state, acting as the identity elsewhere.
/// Requires ch.input_modes() == ch.output_modes(); the output occupies the
/// same mode slots as the input it replaced.
CovarianceMatrix apply_partial(const GaussianChannel &ch,
                               const CovarianceMatrix &state,
                               const std::vector<std::size_t> &target_modes);

/// Parallel use: (X1 (+) X2, Y1 (+) Y2).
GaussianChannel tensor(const GaussianChannel &first, const GaussianChannel &second);

/// Sequential use: `second` after `first`.
GaussianChannel compose(const GaussianChannel &first, const GaussianChannel &second);

/// (+-S_out X S_in, S_out Y S_out^T).
GaussianChannel compose_symplectic(const GaussianChannel &ch,
                                   const Matrix &s_in,
                                   const Matrix &s_out,
                                   bool negate);
GaussianChannel compose_symplectic(const GaussianChannel &ch,
                                   const SymplecticMatrix &s_in,
                                   const SymplecticMatrix &s_out,
                                   bool negate);

namespace channels {

GaussianChannel identity(std::size_t modes);

/// t in [0, 1] is the fraction of power lost: X = sqrt(1-t) I, Y = t I per mode.
GaussianChannel attenuation(double t, std::size_t modes = 1);

/// The boundary PPT channel on two modes: orthogonal X, Y = sqrt(2) I.
GaussianChannel eq1_ppt();

/// The equivalent (a, b) = (sqrt3 + sqrt2, (sqrt3 + 1)/sqrt2) representative.
GaussianChannel eq4_ppt_prime();

/// eq1_ppt (x) attenuation(1/2), three modes.
GaussianChannel eq2_combined();

}  // namespace channels

}  // namespace gsynergy

#endif
