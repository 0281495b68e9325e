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

#ifndef GSYNERGY_DILATION_H
#define GSYNERGY_DILATION_H

#include <cstddef>
#include <vector>

#include "gsynergy/channel.h"
#include "gsynergy/symplectic.h"

namespace gsynergy {

/// Which modes of a dilating symplectic S play which role.
///
/// Columns of S are indexed by (inputs, ancillas) and rows by (outputs,
/// environment); each pair must cover every mode of S exactly once. Ancillas
/// start in the vacuum.
struct ModePartition {
    std::vector<std::size_t> inputs;
    std::vector<std::size_t> ancillas;
    std::vector<std::size_t> outputs;
    std::vector<std::size_t> environment;
};

/// Throws kInvalidArgument unless `p` partitions the modes of an N-mode S.
void validate_partition(const ModePartition &p, std::size_t modes);

/// Sub-block of a phase-space matrix picking the given row and column modes.
Matrix mode_block(const Matrix &m, const std::vector<std::size_t> &row_modes, const std::vector<std::size_t> &col_modes);

class ChannelDilation {
   public:
    static ChannelDilation create(SymplecticMatrix s, ModePartition partition);

    const SymplecticMatrix &s() const {
        return s_;
    }
    const ModePartition &partition() const {
        return partition_;
    }

   private:
    ChannelDilation(SymplecticMatrix s, ModePartition partition) : s_(std::move(s)), partition_(std::move(partition)) {
    }

    SymplecticMatrix s_;
    ModePartition partition_;
};

/// X = S[B, A'], Y = S[B, E'] S[B, E']^T.
GaussianChannel induced_channel(const ChannelDilation &d);

/// X_E = S[E, A'], Y_E = S[E, E'] S[E, E']^T.
GaussianChannel complement(const ChannelDilation &d);

/// True iff s is symplectic and the (X, Y) it induces under `partition`
/// match ch entrywise within tol.psd (relative to max(1, largest entry)).
bool verify_extension(const GaussianChannel &ch,
                      const Matrix &s,
                      const ModePartition &partition,
                      const Tolerances &tol = {});

/// Parallel dilation; the second dilation's modes are shifted past the first.
ChannelDilation tensor(const ChannelDilation &first, const ChannelDilation &second);

namespace dilations {

/// S = I on 2m modes: inputs pass to outputs, vacuum ancillas to environment.
ChannelDilation identity(std::size_t modes);

/// [[X, Z], [Z, X]] for the eq1_ppt channel; modes 0,1 are A'/B and 2,3 are E'/E.
ChannelDilation appendix_extension();

/// Two-mode squeezer-like block used by appendix_extension.
Matrix appendix_z();

}  // namespace dilations

}  // namespace gsynergy

#endif
