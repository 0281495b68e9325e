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

#ifndef GSYNERGY_CIRCUIT_H
#define GSYNERGY_CIRCUIT_H

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include "gsynergy/channel.h"
#include "gsynergy/dilation.h"
#include "gsynergy/symplectic.h"

namespace gsynergy {

/// Sign placement of the reflected amplitude in the 4x4 beamsplitter block,
/// with c = sqrt(1 - t), s = sqrt(t):
///   kRotation           [[cI,  sI], [-sI, cI]]
///   kRotationTransposed [[cI, -sI], [ sI, cI]]
///   kSymmetric          [[cI,  sI], [ sI, -cI]]
/// All three are symplectic and give the same channel entropies.
enum class BeamsplitterConvention { kRotation, kRotationTransposed, kSymmetric };

/// The convention under which -S X' S^{-1} T maps eq4_ppt_prime onto eq1_ppt.
inline constexpr BeamsplitterConvention kEquivalenceBeamsplitter = BeamsplitterConvention::kSymmetric;

struct CircuitConventions {
    BeamsplitterConvention beamsplitter = BeamsplitterConvention::kRotation;
};

/// t is the reflectivity; the transmissivity is 1 - t.
struct Beamsplitter {
    double t = 0.5;
    std::array<std::size_t, 2> modes{0, 1};
};

/// (q, p) -> (q / s, s p).
struct Squeezer {
    double s = 1.0;
    std::size_t mode = 0;
};

/// Phase rotation by pi + phase; phase = 0 gives diag(-1, -1).
struct HalfWavePlate {
    std::size_t mode = 0;
    double phase = 0.0;
};

/// Two-mode squeezing with tanh(r) = k^2, |k| < 1.
struct TwoModeSqueezer {
    double k = 0.0;
    std::array<std::size_t, 2> modes{0, 1};
};

using Gate = std::variant<Beamsplitter, Squeezer, HalfWavePlate, TwoModeSqueezer>;

struct OpticalCircuit {
    std::size_t modes = 0;
    std::vector<Gate> gates;  // application order
};

Matrix beamsplitter_matrix(double t, BeamsplitterConvention convention = BeamsplitterConvention::kRotation);
Matrix squeezer_matrix(double s);
Matrix halfwave_matrix(double phase = 0.0);
Matrix two_mode_squeezer_matrix(double k);

/// Throws kInvalidArgument on out-of-range modes or parameters.
void validate_circuit(const OpticalCircuit &circuit);

/// Product of the gate matrices, last gate leftmost.
SymplecticMatrix compile(const OpticalCircuit &circuit, const CircuitConventions &conventions = {});

struct ChannelPair {
    GaussianChannel channel;
    GaussianChannel complement;
};

ChannelPair channel_from_circuit(const OpticalCircuit &circuit,
                                 const ModePartition &partition,
                                 const CircuitConventions &conventions = {});

ChannelDilation dilation_from_circuit(const OpticalCircuit &circuit,
                                      const ModePartition &partition,
                                      const CircuitConventions &conventions = {});

namespace dilations {

/// Attenuation(t) as a single beamsplitter: mode 0 is A'/B, mode 1 is E'/E.
ChannelDilation beamsplitter(double t, BeamsplitterConvention convention = BeamsplitterConvention::kRotationTransposed);

/// appendix_extension (x) beamsplitter(1/2); dilates channels::eq2_combined.
ChannelDilation eq2_combined();

}  // namespace dilations

/// 1/2 R^T M R with M real symmetric.
class QuadraticHamiltonian {
   public:
    static QuadraticHamiltonian create(Matrix m);

    std::size_t modes() const {
        return static_cast<std::size_t>(m_.rows() / 2);
    }
    const Matrix &matrix() const {
        return m_;
    }

   private:
    explicit QuadraticHamiltonian(Matrix m) : m_(std::move(m)) {
    }
    Matrix m_;
};

/// exp(time J M). Accuracy degrades once ||time J M|| grows past ~20.
SymplecticMatrix evolve(const QuadraticHamiltonian &h, double time);

/// Whether ||time J M|| stays below the threshold where evolve is accurate to ~1e-12.
bool evolution_well_conditioned(const QuadraticHamiltonian &h, double time, double norm_limit = 20.0);

}  // namespace gsynergy

#endif
