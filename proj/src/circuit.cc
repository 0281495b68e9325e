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

#include "gsynergy/circuit.h"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace gsynergy {

Matrix beamsplitter_matrix(double t, BeamsplitterConvention convention) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw GaussianError(ErrorCode::kInvalidArgument, "beamsplitter t must lie in [0, 1]");
    }
    const double c = std::sqrt(1.0 - t);
    const double s = std::sqrt(t);
    const Matrix i2 = Matrix::Identity(2, 2);
    Matrix out(4, 4);
    switch (convention) {
        case BeamsplitterConvention::kRotation:
            out << c * i2, s * i2, -s * i2, c * i2;
            break;
        case BeamsplitterConvention::kRotationTransposed:
            out << c * i2, -s * i2, s * i2, c * i2;
            break;
        case BeamsplitterConvention::kSymmetric:
            out << c * i2, s * i2, s * i2, -c * i2;
            break;
    }
    return out;
}

Matrix squeezer_matrix(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw GaussianError(ErrorCode::kInvalidArgument, "squeezer parameter must be positive");
    }
    Matrix out = Matrix::Zero(2, 2);
    out(0, 0) = 1.0 / s;
    out(1, 1) = s;
    return out;
}

Matrix halfwave_matrix(double phase) {
    const double angle = M_PI + phase;
    Matrix out(2, 2);
    out << std::cos(angle), std::sin(angle), -std::sin(angle), std::cos(angle);
    return out;
}

Matrix two_mode_squeezer_matrix(double k) {
    const double k2 = k * k;
    if (!(k2 < 1.0)) {
        throw GaussianError(ErrorCode::kInvalidArgument, "two-mode squeezer needs |k| < 1");
    }
    const double norm = std::sqrt(1.0 - k2 * k2);
    const double plus = 1.0 / norm;
    const double minus = k2 / norm;
    Matrix out(4, 4);
    out << plus, 0, minus, 0,  //
        0, plus, 0, -minus,    //
        minus, 0, plus, 0,     //
        0, -minus, 0, plus;
    return out;
}

namespace {

void require_mode(std::size_t mode, std::size_t modes) {
    if (mode >= modes) {
        throw GaussianError(ErrorCode::kInvalidArgument,
                            "gate mode " + std::to_string(mode) + " out of range for " + std::to_string(modes) + " modes");
    }
}

void require_pair(const std::array<std::size_t, 2> &pair, std::size_t modes) {
    require_mode(pair[0], modes);
    require_mode(pair[1], modes);
    if (pair[0] == pair[1]) {
        throw GaussianError(ErrorCode::kInvalidArgument, "two-mode gate needs distinct modes");
    }
}

struct Placed {
    Matrix block;
    std::vector<std::size_t> modes;
};

Placed gate_block(const Gate &gate, const CircuitConventions &conventions) {
    return std::visit(
        [&](const auto &g) -> Placed {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Beamsplitter>) {
                return {beamsplitter_matrix(g.t, conventions.beamsplitter), {g.modes[0], g.modes[1]}};
            } else if constexpr (std::is_same_v<G, Squeezer>) {
                return {squeezer_matrix(g.s), {g.mode}};
            } else if constexpr (std::is_same_v<G, HalfWavePlate>) {
                return {halfwave_matrix(g.phase), {g.mode}};
            } else {
                return {two_mode_squeezer_matrix(g.k), {g.modes[0], g.modes[1]}};
            }
        },
        gate);
}

}  // namespace

void validate_circuit(const OpticalCircuit &circuit) {
    if (circuit.modes == 0) {
        throw GaussianError(ErrorCode::kInvalidArgument, "circuit needs at least one mode");
    }
    for (const Gate &gate : circuit.gates) {
        std::visit(
            [&](const auto &g) {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, Beamsplitter>) {
                    require_pair(g.modes, circuit.modes);
                    beamsplitter_matrix(g.t);
                } else if constexpr (std::is_same_v<G, Squeezer>) {
                    require_mode(g.mode, circuit.modes);
                    squeezer_matrix(g.s);
                } else if constexpr (std::is_same_v<G, HalfWavePlate>) {
                    require_mode(g.mode, circuit.modes);
                    if (!std::isfinite(g.phase)) {
                        throw GaussianError(ErrorCode::kInvalidArgument, "half-wave phase must be finite");
                    }
                } else {
                    require_pair(g.modes, circuit.modes);
                    two_mode_squeezer_matrix(g.k);
                }
            },
            gate);
    }
}

SymplecticMatrix compile(const OpticalCircuit &circuit, const CircuitConventions &conventions) {
    validate_circuit(circuit);
    const auto n = static_cast<Eigen::Index>(2 * circuit.modes);
    Matrix total = Matrix::Identity(n, n);
    for (const Gate &gate : circuit.gates) {
        const Placed placed = gate_block(gate, conventions);
        std::vector<Eigen::Index> idx;
        for (std::size_t mode : placed.modes) {
            idx.push_back(static_cast<Eigen::Index>(2 * mode));
            idx.push_back(static_cast<Eigen::Index>(2 * mode + 1));
        }
        // Only the touched rows of the running product change.
        Matrix rows(static_cast<Eigen::Index>(idx.size()), n);
        for (std::size_t r = 0; r < idx.size(); r++) {
            rows.row(static_cast<Eigen::Index>(r)) = total.row(idx[r]);
        }
        const Matrix updated = placed.block * rows;
        for (std::size_t r = 0; r < idx.size(); r++) {
            total.row(idx[r]) = updated.row(static_cast<Eigen::Index>(r));
        }
    }
    const double scale = std::max(1.0, total.cwiseAbs().maxCoeff());
    return SymplecticMatrix::create(std::move(total), Tolerances{1e-9, 1e-10 * scale * scale, 1e-8});
}

ChannelDilation dilation_from_circuit(const OpticalCircuit &circuit,
                                      const ModePartition &partition,
                                      const CircuitConventions &conventions) {
    return ChannelDilation::create(compile(circuit, conventions), partition);
}

ChannelPair channel_from_circuit(const OpticalCircuit &circuit,
                                 const ModePartition &partition,
                                 const CircuitConventions &conventions) {
    const ChannelDilation d = dilation_from_circuit(circuit, partition, conventions);
    return {induced_channel(d), complement(d)};
}

namespace dilations {

ChannelDilation beamsplitter(double t, BeamsplitterConvention convention) {
    return ChannelDilation::create(SymplecticMatrix::create(beamsplitter_matrix(t, convention)),
                                   ModePartition{{0}, {1}, {0}, {1}});
}

ChannelDilation eq2_combined() {
    return tensor(appendix_extension(), beamsplitter(0.5));
}

}  // namespace dilations

QuadraticHamiltonian QuadraticHamiltonian::create(Matrix m) {
    require_symmetric_phase_space(m, 1e-9 * std::max(1.0, m.size() ? m.cwiseAbs().maxCoeff() : 1.0), "hamiltonian");
    Matrix sym = 0.5 * (m + m.transpose());
    return QuadraticHamiltonian(std::move(sym));
}

SymplecticMatrix evolve(const QuadraticHamiltonian &h, double time) {
    const Matrix generator = time * symplectic_form(h.modes()) * h.matrix();
    Matrix s = generator.exp();
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    return SymplecticMatrix::create(std::move(s), Tolerances{1e-9, 1e-10 * scale * scale, 1e-8});
}

bool evolution_well_conditioned(const QuadraticHamiltonian &h, double time, double norm_limit) {
    const Matrix generator = time * symplectic_form(h.modes()) * h.matrix();
    return generator.norm() <= norm_limit;
}

}  // namespace gsynergy
