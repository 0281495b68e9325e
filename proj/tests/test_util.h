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

#ifndef GSYNERGY_TESTS_TEST_UTIL_H
#define GSYNERGY_TESTS_TEST_UTIL_H

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gsynergy/circuit.h"
#include "gsynergy/symplectic.h"

namespace gsynergy::testing {

/// Minimum eigenvalue of re + i*im by a direct complex Hermitian eigensolve.
inline double complex_min_eigenvalue(const Matrix &re, const Matrix &im) {
    Eigen::MatrixXcd h = re.cast<std::complex<double>>() + std::complex<double>(0, 1) * im.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

/// Symplectic eigenvalues as the positive eigenvalues of the Hermitian
/// gamma^{1/2} (iJ) gamma^{1/2}, sorted descending.
inline std::vector<double> oracle_symplectic_eigenvalues(const Matrix &gamma) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(gamma);
    const Matrix root = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
    const std::size_t m = static_cast<std::size_t>(gamma.rows() / 2);
    Eigen::MatrixXcd h = std::complex<double>(0, 1) * (root * symplectic_form(m) * root).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(h, Eigen::EigenvaluesOnly);
    std::vector<double> out;
    for (Eigen::Index k = hs.eigenvalues().size() - 1; k >= static_cast<Eigen::Index>(m); k--) {
        out.push_back(hs.eigenvalues()(k));
    }
    return out;
}

/// Random circuit over the full gate set with squeezing bounded by max_s.
inline OpticalCircuit random_circuit(std::mt19937_64 &rng, std::size_t modes, std::size_t gates, double max_s = std::sqrt(10.0)) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, modes - 1);
    std::uniform_int_distribution<int> kind(modes > 1 ? 0 : 1, modes > 1 ? 3 : 2);
    OpticalCircuit c{modes, {}};
    auto pair = [&] {
        std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        while (b == a) {
            b = pick(rng);
        }
        return std::array<std::size_t, 2>{a, b};
    };
    for (std::size_t g = 0; g < gates; g++) {
        switch (kind(rng)) {
            case 0:
                c.gates.emplace_back(Beamsplitter{unit(rng), pair()});
                break;
            case 1:
                c.gates.emplace_back(Squeezer{std::pow(max_s, 2.0 * unit(rng) - 1.0), pick(rng)});
                break;
            case 2:
                c.gates.emplace_back(HalfWavePlate{pick(rng), 2.0 * std::numbers::pi * unit(rng)});
                break;
            default:
                c.gates.emplace_back(TwoModeSqueezer{0.8 * (2.0 * unit(rng) - 1.0), pair()});
                break;
        }
    }
    return c;
}

/// Random valid mixed state: thermal product conjugated by a random symplectic.
inline CovarianceMatrix random_state(std::mt19937_64 &rng, std::size_t modes, double max_photons = 5.0) {
    std::uniform_real_distribution<double> photons(0.0, max_photons);
    std::vector<double> n(modes);
    for (auto &v : n) {
        v = photons(rng);
    }
    const Matrix s = compile(random_circuit(rng, modes, 3 * modes + 2)).matrix();
    const CovarianceMatrix thermal = CovarianceMatrix::thermal(n);
    return CovarianceMatrix::create(s * thermal.gamma() * s.transpose());
}

/// Appends gates realizing the passive map O (+) O on (q, p), where O is a real
/// orthogonal matrix on mode space. Givens rotations become beamsplitters;
/// sign flips and rotation quadrants are fixed up with half-wave plates.
inline void append_orthogonal(OpticalCircuit &c, Matrix o) {
    const Eigen::Index n = o.rows();
    struct Rot {
        std::size_t a, b;
        double phi;
    };
    std::vector<Rot> rots;
    for (Eigen::Index j = 0; j < n; j++) {
        for (Eigen::Index i = n - 1; i > j; i--) {
            const double xa = o(j, j), xb = o(i, j);
            if (std::abs(xb) < 1e-300) {
                continue;
            }
            const double phi = std::atan2(xb, xa);
            const double cs = std::cos(phi), sn = std::sin(phi);
            const Eigen::RowVectorXd ra = o.row(j), rb = o.row(i);
            o.row(j) = cs * ra + sn * rb;
            o.row(i) = -sn * ra + cs * rb;
            rots.push_back({static_cast<std::size_t>(j), static_cast<std::size_t>(i), phi});
        }
    }
    // o is now diagonal +-1 and the original O = G_1^T ... G_K^T D.
    for (Eigen::Index k = 0; k < n; k++) {
        if (o(k, k) < 0) {
            c.gates.emplace_back(HalfWavePlate{static_cast<std::size_t>(k), 0.0});
        }
    }
    for (auto it = rots.rbegin(); it != rots.rend(); ++it) {
        double phi = -it->phi;  // G^T = R(-phi)
        if (phi > std::numbers::pi / 2) {
            c.gates.emplace_back(HalfWavePlate{it->a, 0.0});
            c.gates.emplace_back(HalfWavePlate{it->b, 0.0});
            phi -= std::numbers::pi;
        } else if (phi < -std::numbers::pi / 2) {
            c.gates.emplace_back(HalfWavePlate{it->a, 0.0});
            c.gates.emplace_back(HalfWavePlate{it->b, 0.0});
            phi += std::numbers::pi;
        }
        const double t = std::pow(std::sin(phi), 2);
        if (phi >= 0) {
            c.gates.emplace_back(Beamsplitter{t, {it->a, it->b}});
        } else {
            c.gates.emplace_back(HalfWavePlate{it->b, 0.0});
            c.gates.emplace_back(Beamsplitter{t, {it->a, it->b}});
            c.gates.emplace_back(HalfWavePlate{it->b, 0.0});
        }
    }
}

/// Gate list whose compiled matrix equals a symplectic S that never mixes q
/// with p quadratures: S_q = U diag(sigma) V^T becomes V^T, squeezers, U.
inline OpticalCircuit synthesize_quadrature_preserving(const Matrix &s) {
    const Eigen::Index m = s.rows() / 2;
    Matrix sq(m, m);
    for (Eigen::Index i = 0; i < m; i++) {
        for (Eigen::Index j = 0; j < m; j++) {
            sq(i, j) = s(2 * i, 2 * j);
        }
    }
    Eigen::JacobiSVD<Matrix> svd(sq, Eigen::ComputeFullU | Eigen::ComputeFullV);
    OpticalCircuit c{static_cast<std::size_t>(m), {}};
    append_orthogonal(c, svd.matrixV().transpose());
    for (Eigen::Index k = 0; k < m; k++) {
        c.gates.emplace_back(Squeezer{1.0 / svd.singularValues()(k), static_cast<std::size_t>(k)});
    }
    append_orthogonal(c, svd.matrixU());
    return c;
}

inline double max_abs_diff(const Matrix &a, const Matrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace gsynergy::testing

#endif
