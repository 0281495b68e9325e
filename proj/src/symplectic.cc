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

#include "gsynergy/symplectic.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

namespace gsynergy {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidShape:
            return "invalid shape";
        case ErrorCode::kInvalidArgument:
            return "invalid argument";
        case ErrorCode::kNumericalDegeneracy:
            return "numerical degeneracy";
        case ErrorCode::kDecompositionFailure:
            return "decomposition failure";
        case ErrorCode::kInvalidSpectrum:
            return "invalid spectrum";
        case ErrorCode::kEmptySummary:
            return "empty summary";
        case ErrorCode::kParse:
            return "parse error";
    }
    return "unknown error";
}

Matrix symplectic_form(std::size_t modes) {
    Matrix j = Matrix::Zero(2 * modes, 2 * modes);
    for (std::size_t k = 0; k < modes; k++) {
        j(2 * k, 2 * k + 1) = 1;
        j(2 * k + 1, 2 * k) = -1;
    }
    return j;
}

std::vector<double> hermitian_eigenvalues(const Matrix &re, const Matrix &im) {
    const Eigen::Index n = re.rows();
    Matrix embedded(2 * n, 2 * n);
    embedded << re, -im, im, re;
    // Symmetrize away rounding so the solver sees an exactly symmetric input.
    Matrix sym = 0.5 * (embedded + embedded.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw GaussianError(ErrorCode::kNumericalDegeneracy, "hermitian eigensolver did not converge");
    }
    const Vector &all = solver.eigenvalues();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; k++) {
        out.push_back(0.5 * (all(2 * k) + all(2 * k + 1)));
    }
    return out;
}

void require_symmetric_phase_space(const Matrix &m, double tol, const char *what) {
    if (m.rows() != m.cols()) {
        throw GaussianError(ErrorCode::kInvalidShape, std::string(what) + " is not square");
    }
    if (m.rows() % 2 != 0) {
        throw GaussianError(ErrorCode::kInvalidShape, std::string(what) + " has odd dimension");
    }
    if (m.rows() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > tol) {
        throw GaussianError(ErrorCode::kInvalidShape, std::string(what) + " is not symmetric");
    }
}

bool check_uncertainty(const Matrix &gamma, double tol) {
    if (tol < 0) {
        throw GaussianError(ErrorCode::kInvalidArgument, "negative tolerance");
    }
    require_symmetric_phase_space(gamma, 1e-9 * std::max(1.0, gamma.cwiseAbs().maxCoeff()), "gamma");
    if (gamma.rows() == 0) {
        return true;
    }
    const auto spectrum = hermitian_eigenvalues(gamma, symplectic_form(static_cast<std::size_t>(gamma.rows() / 2)));
    return spectrum.front() >= -tol;
}

// ---------------------------------------------------------------------------
// CovarianceMatrix

CovarianceMatrix CovarianceMatrix::create(Matrix gamma, const Tolerances &tol) {
    const Eigen::Index n = gamma.rows();
    return create(std::move(gamma), Vector::Zero(n), tol);
}

CovarianceMatrix CovarianceMatrix::create(Matrix gamma, Vector displacement, const Tolerances &tol) {
    if (!check_uncertainty(gamma, tol.psd)) {
        throw GaussianError(ErrorCode::kInvalidArgument, "covariance matrix violates gamma + iJ >= 0");
    }
    return unchecked(std::move(gamma), std::move(displacement));
}

CovarianceMatrix CovarianceMatrix::unchecked(Matrix gamma, Vector displacement) {
    if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0) {
        throw GaussianError(ErrorCode::kInvalidShape, "gamma must be square with even dimension");
    }
    if (displacement.size() != gamma.rows()) {
        throw GaussianError(ErrorCode::kInvalidShape, "displacement length does not match gamma");
    }
    Matrix sym = 0.5 * (gamma + gamma.transpose());
    return CovarianceMatrix(std::move(sym), std::move(displacement));
}

CovarianceMatrix CovarianceMatrix::vacuum(std::size_t modes) {
    const auto n = static_cast<Eigen::Index>(2 * modes);
    return CovarianceMatrix(Matrix::Identity(n, n), Vector::Zero(n));
}

CovarianceMatrix CovarianceMatrix::thermal(const std::vector<double> &photons) {
    const auto n = static_cast<Eigen::Index>(2 * photons.size());
    Matrix g = Matrix::Zero(n, n);
    for (std::size_t k = 0; k < photons.size(); k++) {
        if (!(photons[k] >= 0)) {
            throw GaussianError(ErrorCode::kInvalidArgument, "negative thermal photon number");
        }
        g(2 * k, 2 * k) = g(2 * k + 1, 2 * k + 1) = 2 * photons[k] + 1;
    }
    return CovarianceMatrix(std::move(g), Vector::Zero(n));
}

CovarianceMatrix CovarianceMatrix::reduce(const std::vector<std::size_t> &modes) const {
    const auto n = static_cast<Eigen::Index>(2 * modes.size());
    Matrix g(n, n);
    Vector d(n);
    for (std::size_t a = 0; a < modes.size(); a++) {
        if (modes[a] >= this->modes()) {
            throw GaussianError(ErrorCode::kInvalidArgument, "mode index out of range");
        }
        for (std::size_t b = 0; b < modes.size(); b++) {
            g.block<2, 2>(2 * a, 2 * b) = gamma_.block<2, 2>(2 * modes[a], 2 * modes[b]);
        }
        d.segment<2>(2 * a) = displacement_.segment<2>(2 * modes[a]);
    }
    return CovarianceMatrix(std::move(g), std::move(d));
}

// ---------------------------------------------------------------------------
// SymplecticMatrix

double symplectic_defect(const Matrix &s) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0) {
        throw GaussianError(ErrorCode::kInvalidShape, "symplectic matrix must be square with even dimension");
    }
    if (s.rows() == 0) {
        return 0;
    }
    const Matrix j = symplectic_form(static_cast<std::size_t>(s.rows() / 2));
    return (s * j * s.transpose() - j).cwiseAbs().maxCoeff();
}

bool is_symplectic(const Matrix &s, double tol) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0) {
        return false;
    }
    return symplectic_defect(s) <= tol;
}

SymplecticMatrix SymplecticMatrix::create(Matrix s, const Tolerances &tol) {
    const double defect = symplectic_defect(s);
    if (defect > tol.symplectic) {
        throw GaussianError(ErrorCode::kInvalidShape,
                            "matrix is not symplectic (max |SJS^T - J| = " + std::to_string(defect) + ")");
    }
    return SymplecticMatrix(std::move(s));
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t modes) {
    const auto n = static_cast<Eigen::Index>(2 * modes);
    return SymplecticMatrix(Matrix::Identity(n, n));
}

Matrix SymplecticMatrix::inverse() const {
    const Matrix j = symplectic_form(modes());
    return -j * s_.transpose() * j;
}

SymplecticMatrix SymplecticMatrix::then_after(const SymplecticMatrix &other) const {
    if (other.modes() != modes()) {
        throw GaussianError(ErrorCode::kInvalidShape, "symplectic product of mismatched sizes");
    }
    return SymplecticMatrix(s_ * other.s_);
}

// ---------------------------------------------------------------------------
// Spectra

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix &state, const Tolerances &tol) {
    const std::size_t m = state.modes();
    if (m == 0) {
        return {};
    }
    const Matrix jg = symplectic_form(m) * state.gamma();
    Eigen::EigenSolver<Matrix> solver(jg, false);
    if (solver.info() != Eigen::Success) {
        throw GaussianError(ErrorCode::kNumericalDegeneracy, "eigensolver for J gamma did not converge");
    }
    std::vector<double> imag;
    imag.reserve(2 * m);
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); k++) {
        const auto ev = solver.eigenvalues()(k);
        if (std::abs(ev.real()) > tol.pairing * std::max(1.0, std::abs(ev.imag()))) {
            throw GaussianError(ErrorCode::kNumericalDegeneracy,
                                "J gamma has an eigenvalue with real part " + std::to_string(ev.real()));
        }
        imag.push_back(ev.imag());
    }
    std::sort(imag.begin(), imag.end(), std::greater<>());
    SymplecticSpectrum out;
    out.values.reserve(m);
    for (std::size_t k = 0; k < m; k++) {
        const double up = imag[k];
        const double down = -imag[2 * m - 1 - k];
        if (std::abs(up - down) > tol.pairing * std::max(1.0, std::abs(up))) {
            throw GaussianError(ErrorCode::kNumericalDegeneracy, "eigenvalues of J gamma do not pair as +-i lambda");
        }
        out.values.push_back(0.5 * (up + down));
    }
    return out;
}

namespace {

struct SymmetricRoots {
    Matrix sqrt;
    Matrix inv_sqrt;
};

SymmetricRoots positive_roots(const Matrix &gamma, double tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(gamma);
    if (solver.info() != Eigen::Success) {
        throw GaussianError(ErrorCode::kDecompositionFailure, "eigensolver for gamma did not converge");
    }
    const Vector &w = solver.eigenvalues();
    if (w.minCoeff() <= tol) {
        throw GaussianError(ErrorCode::kDecompositionFailure, "gamma is not strictly positive definite");
    }
    const Matrix &v = solver.eigenvectors();
    return {v * w.cwiseSqrt().asDiagonal() * v.transpose(),
            v * w.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose()};
}

}  // namespace

WilliamsonDecomposition williamson(const CovarianceMatrix &state, const Tolerances &tol) {
    const std::size_t m = state.modes();
    const auto n = static_cast<Eigen::Index>(2 * m);
    const SymmetricRoots roots = positive_roots(state.gamma(), tol.psd);

    // A is antisymmetric and similar to J gamma. Its real Schur form is block
    // diagonal with 2x2 blocks [[0, l], [-l, 0]].
    Matrix a = roots.sqrt * symplectic_form(m) * roots.sqrt;
    a = 0.5 * (a - a.transpose());
    Eigen::RealSchur<Matrix> schur(a);
    if (schur.info() != Eigen::Success) {
        throw GaussianError(ErrorCode::kDecompositionFailure, "real Schur decomposition did not converge");
    }
    const Matrix &t = schur.matrixT();
    const Matrix &q = schur.matrixU();

    struct Pair {
        double lambda;
        Vector u;
        Vector v;
    };
    std::vector<Pair> pairs;
    Eigen::Index k = 0;
    while (k < n) {
        if (k + 1 >= n || std::abs(t(k + 1, k)) == 0.0) {
            throw GaussianError(ErrorCode::kDecompositionFailure, "real eigenvalue in symplectic decomposition");
        }
        const double upper = t(k, k + 1);
        if (upper > 0) {
            pairs.push_back({0.5 * (upper - t(k + 1, k)), q.col(k), q.col(k + 1)});
        } else {
            pairs.push_back({0.5 * (t(k + 1, k) - upper), q.col(k + 1), q.col(k)});
        }
        k += 2;
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair &x, const Pair &y) { return x.lambda > y.lambda; });

    Matrix o(n, n);
    Vector scale(n);
    SymplecticSpectrum spectrum;
    for (std::size_t j = 0; j < m; j++) {
        o.col(static_cast<Eigen::Index>(2 * j)) = pairs[j].u;
        o.col(static_cast<Eigen::Index>(2 * j + 1)) = pairs[j].v;
        scale(static_cast<Eigen::Index>(2 * j)) = scale(static_cast<Eigen::Index>(2 * j + 1)) = std::sqrt(pairs[j].lambda);
        spectrum.values.push_back(pairs[j].lambda);
    }
    Matrix s = scale.asDiagonal() * o.transpose() * roots.inv_sqrt;

    const double defect = symplectic_defect(s);
    const double scale_ref = std::max(1.0, spectrum.values.empty() ? 1.0 : spectrum.values.front());
    if (defect > 1e-6 * scale_ref) {
        throw GaussianError(ErrorCode::kDecompositionFailure,
                            "assembled Williamson matrix is not symplectic (defect " + std::to_string(defect) + ")");
    }
    return {SymplecticMatrix::create(std::move(s), Tolerances{tol.psd, std::max(tol.symplectic, defect), tol.pairing}),
            std::move(spectrum)};
}

double mode_entropy(double lambda) {
    if (lambda <= 1.0) {
        return 0.0;
    }
    const double plus = 0.5 * (lambda + 1.0);
    const double minus = 0.5 * (lambda - 1.0);
    return plus * std::log2(plus) - minus * std::log2(minus);
}

double entropy(const SymplecticSpectrum &spectrum, const Tolerances &tol) {
    double total = 0;
    for (double lambda : spectrum.values) {
        if (!(lambda >= 1.0 - tol.psd)) {
            throw GaussianError(ErrorCode::kInvalidSpectrum,
                                "symplectic eigenvalue " + std::to_string(lambda) + " below 1");
        }
        total += mode_entropy(lambda);
    }
    return total;
}

double entropy(const CovarianceMatrix &state, const Tolerances &tol) {
    return entropy(symplectic_eigenvalues(state, tol), tol);
}

CovarianceMatrix purify(const CovarianceMatrix &state, const Tolerances &tol) {
    const std::size_t m = state.modes();
    const auto n = static_cast<Eigen::Index>(2 * m);
    const WilliamsonDecomposition wd = williamson(state, tol);

    // Thermal modes j and reference modes m + j form two-mode squeezed vacua.
    Matrix global = Matrix::Zero(2 * n, 2 * n);
    for (std::size_t j = 0; j < m; j++) {
        const double lambda = std::max(1.0, wd.spectrum.values[j]);
        const double cross = std::sqrt(lambda * lambda - 1.0);
        const auto a = static_cast<Eigen::Index>(2 * j);
        const auto r = static_cast<Eigen::Index>(2 * (m + j));
        global(a, a) = global(a + 1, a + 1) = lambda;
        global(r, r) = global(r + 1, r + 1) = lambda;
        global(a, r) = global(r, a) = cross;
        global(a + 1, r + 1) = global(r + 1, a + 1) = -cross;
    }
    Matrix lift = Matrix::Identity(2 * n, 2 * n);
    lift.topLeftCorner(n, n) = wd.s.inverse();
    Matrix gamma = lift * global * lift.transpose();
    Vector d = Vector::Zero(2 * n);
    d.head(n) = state.displacement();
    return CovarianceMatrix::unchecked(std::move(gamma), std::move(d));
}

Matrix mode_permutation(const std::vector<std::size_t> &order) {
    const std::size_t m = order.size();
    std::vector<bool> seen(m, false);
    Matrix p = Matrix::Zero(static_cast<Eigen::Index>(2 * m), static_cast<Eigen::Index>(2 * m));
    for (std::size_t i = 0; i < m; i++) {
        if (order[i] >= m || seen[order[i]]) {
            throw GaussianError(ErrorCode::kInvalidArgument, "mode order is not a permutation");
        }
        seen[order[i]] = true;
        p(2 * i, 2 * order[i]) = 1;
        p(2 * i + 1, 2 * order[i] + 1) = 1;
    }
    return p;
}

CovarianceMatrix reorder_modes(const CovarianceMatrix &state, const std::vector<std::size_t> &order) {
    if (order.size() != state.modes()) {
        throw GaussianError(ErrorCode::kInvalidArgument, "mode order length does not match the state");
    }
    const Matrix p = mode_permutation(order);
    return CovarianceMatrix::unchecked(p * state.gamma() * p.transpose(), p * state.displacement());
}

Matrix direct_sum(const Matrix &a, const Matrix &b) {
    Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

}  // namespace gsynergy
