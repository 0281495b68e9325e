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

#include "gsynergy/dilation.h"

#include <cmath>
#include <numeric>

namespace gsynergy {

namespace {

void require_cover(const std::vector<std::size_t> &a,
                   const std::vector<std::size_t> &b,
                   std::size_t modes,
                   const char *what) {
    std::vector<int> count(modes, 0);
    for (const auto *list : {&a, &b}) {
        for (std::size_t k : *list) {
            if (k >= modes) {
                throw GaussianError(ErrorCode::kInvalidArgument, std::string(what) + ": mode index out of range");
            }
            count[k]++;
        }
    }
    for (int c : count) {
        if (c != 1) {
            throw GaussianError(ErrorCode::kInvalidArgument,
                                std::string(what) + " must cover every mode exactly once");
        }
    }
}

std::vector<std::size_t> shifted(const std::vector<std::size_t> &v, std::size_t offset) {
    std::vector<std::size_t> out(v);
    for (auto &k : out) {
        k += offset;
    }
    return out;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

void validate_partition(const ModePartition &p, std::size_t modes) {
    require_cover(p.inputs, p.ancillas, modes, "inputs and ancillas");
    require_cover(p.outputs, p.environment, modes, "outputs and environment");
}

Matrix mode_block(const Matrix &m, const std::vector<std::size_t> &row_modes, const std::vector<std::size_t> &col_modes) {
    Matrix out(static_cast<Eigen::Index>(2 * row_modes.size()), static_cast<Eigen::Index>(2 * col_modes.size()));
    for (std::size_t r = 0; r < row_modes.size(); r++) {
        for (std::size_t c = 0; c < col_modes.size(); c++) {
            out.block<2, 2>(2 * r, 2 * c) = m.block<2, 2>(2 * row_modes[r], 2 * col_modes[c]);
        }
    }
    return out;
}

ChannelDilation ChannelDilation::create(SymplecticMatrix s, ModePartition partition) {
    validate_partition(partition, s.modes());
    return ChannelDilation(std::move(s), std::move(partition));
}

GaussianChannel induced_channel(const ChannelDilation &d) {
    const auto &p = d.partition();
    const Matrix noise = mode_block(d.s().matrix(), p.outputs, p.ancillas);
    return GaussianChannel::create(mode_block(d.s().matrix(), p.outputs, p.inputs), noise * noise.transpose());
}

GaussianChannel complement(const ChannelDilation &d) {
    const auto &p = d.partition();
    const Matrix noise = mode_block(d.s().matrix(), p.environment, p.ancillas);
    return GaussianChannel::create(mode_block(d.s().matrix(), p.environment, p.inputs), noise * noise.transpose(),
                                   "complement");
}

bool verify_extension(const GaussianChannel &ch, const Matrix &s, const ModePartition &partition, const Tolerances &tol) {
    if (!is_symplectic(s, tol.symplectic)) {
        return false;
    }
    const std::size_t modes = static_cast<std::size_t>(s.rows() / 2);
    try {
        validate_partition(partition, modes);
    } catch (const GaussianError &) {
        return false;
    }
    if (partition.inputs.size() != ch.input_modes() || partition.outputs.size() != ch.output_modes()) {
        return false;
    }
    const Matrix x = mode_block(s, partition.outputs, partition.inputs);
    const Matrix noise = mode_block(s, partition.outputs, partition.ancillas);
    const Matrix y = noise * noise.transpose();
    const double scale = std::max({1.0, ch.x().cwiseAbs().maxCoeff(), ch.y().cwiseAbs().maxCoeff()});
    const double limit = tol.psd * scale;
    return (x - ch.x()).cwiseAbs().maxCoeff() <= limit && (y - ch.y()).cwiseAbs().maxCoeff() <= limit;
}

ChannelDilation tensor(const ChannelDilation &first, const ChannelDilation &second) {
    const std::size_t offset = first.s().modes();
    const auto &a = first.partition();
    const auto &b = second.partition();
    ModePartition p{concat(a.inputs, shifted(b.inputs, offset)), concat(a.ancillas, shifted(b.ancillas, offset)),
                    concat(a.outputs, shifted(b.outputs, offset)),
                    concat(a.environment, shifted(b.environment, offset))};
    const Matrix s = direct_sum(first.s().matrix(), second.s().matrix());
    return ChannelDilation::create(SymplecticMatrix::create(s, Tolerances{1e-9, 1e-9, 1e-8}), std::move(p));
}

namespace dilations {

ChannelDilation identity(std::size_t modes) {
    ModePartition p;
    p.inputs.resize(modes);
    std::iota(p.inputs.begin(), p.inputs.end(), 0);
    p.ancillas = shifted(p.inputs, modes);
    p.outputs = p.inputs;
    p.environment = p.ancillas;
    return ChannelDilation::create(SymplecticMatrix::identity(2 * modes), std::move(p));
}

Matrix appendix_z() {
    const double bp = std::sqrt(1.0 / std::sqrt(2.0) + 0.5);
    const double bm = std::sqrt(1.0 / std::sqrt(2.0) - 0.5);
    Matrix z(4, 4);
    z << bp, 0, bm, 0,  //
        0, bm, 0, bp,   //
        bm, 0, -bp, 0,  //
        0, bp, 0, -bm;
    return z;
}

ChannelDilation appendix_extension() {
    const Matrix x = channels::eq1_ppt().x();
    const Matrix z = appendix_z();
    Matrix s(8, 8);
    s << x, z, z, x;
    return ChannelDilation::create(SymplecticMatrix::create(std::move(s)), ModePartition{{0, 1}, {2, 3}, {0, 1}, {2, 3}});
}

}  // namespace dilations

}  // namespace gsynergy
