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

#ifndef GSYNERGY_SYMPLECTIC_H
#define GSYNERGY_SYMPLECTIC_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "gsynergy/error.h"

namespace gsynergy {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Numerical tolerances shared by all phase-space checks.
struct Tolerances {
    /// Absolute slack on the minimum eigenvalue of Hermitian PSD tests.
    double psd = 1e-9;
    /// Max-abs entry of S J S^T - J.
    double symplectic = 1e-10;
    /// Relative slack when pairing the +i lambda / -i lambda eigenvalues of J gamma.
    double pairing = 1e-8;
};

/// Phase space uses interleaved (q1, p1, ..., qm, pm) ordering throughout.
/// J is block diagonal with m copies of [[0, 1], [-1, 0]].
Matrix symplectic_form(std::size_t modes);

/// Eigenvalues (ascending) of the Hermitian matrix re + i*im, computed through
/// the real embedding [[re, -im], [im, re]]. The embedding duplicates every
/// eigenvalue, so every other entry of its sorted spectrum is kept.
std::vector<double> hermitian_eigenvalues(const Matrix &re, const Matrix &im);

/// Throws kInvalidShape unless m is square with even dimension and symmetric
/// to within tol (max-abs entry of m - m^T).
void require_symmetric_phase_space(const Matrix &m, double tol, const char *what);

/// Second moments (and first moments) of an m-mode Gaussian state, vacuum = I.
class CovarianceMatrix {
   public:
    /// Validates symmetry and the uncertainty relation gamma + iJ >= 0.
    static CovarianceMatrix create(Matrix gamma, const Tolerances &tol = {});
    static CovarianceMatrix create(Matrix gamma, Vector displacement, const Tolerances &tol = {});
    /// Skips the uncertainty check (shape and symmetry are still enforced).
    /// Used for intermediate results whose validity follows from construction.
    static CovarianceMatrix unchecked(Matrix gamma, Vector displacement);

    static CovarianceMatrix vacuum(std::size_t modes);
    /// Product of thermal states with the given mean photon numbers.
    static CovarianceMatrix thermal(const std::vector<double> &photons);

    std::size_t modes() const {
        return static_cast<std::size_t>(gamma_.rows() / 2);
    }
    const Matrix &gamma() const {
        return gamma_;
    }
    const Vector &displacement() const {
        return displacement_;
    }

    /// Reduced state on the listed modes, in the listed order.
    CovarianceMatrix reduce(const std::vector<std::size_t> &modes) const;

   private:
    CovarianceMatrix(Matrix gamma, Vector displacement)
        : gamma_(std::move(gamma)), displacement_(std::move(displacement)) {
    }

    Matrix gamma_;
    Vector displacement_;
};

/// Symplectic eigenvalues, sorted descending.
struct SymplecticSpectrum {
    std::vector<double> values;
};

/// A canonical transformation S with S J S^T = J.
class SymplecticMatrix {
   public:
    /// Throws kInvalidShape if S is not square/even or fails the symplectic condition.
    static SymplecticMatrix create(Matrix s, const Tolerances &tol = {});
    static SymplecticMatrix identity(std::size_t modes);

    std::size_t modes() const {
        return static_cast<std::size_t>(s_.rows() / 2);
    }
    const Matrix &matrix() const {
        return s_;
    }
    /// S^{-1} = -J S^T J, exact for symplectic matrices.
    Matrix inverse() const;

    /// this * other (other acts first).
    SymplecticMatrix then_after(const SymplecticMatrix &other) const;

   private:
    explicit SymplecticMatrix(Matrix s) : s_(std::move(s)) {
    }
    Matrix s_;
};

/// Max-abs entry of S J S^T - J.
double symplectic_defect(const Matrix &s);
bool is_symplectic(const Matrix &s, double tol);

/// True iff the minimum eigenvalue of gamma + iJ is >= -tol.
bool check_uncertainty(const Matrix &gamma, double tol);

/// Absolute imaginary parts of the eigenvalues of J gamma, one per +-i lambda pair.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix &state, const Tolerances &tol = {});

struct WilliamsonDecomposition {
    SymplecticMatrix s;
    SymplecticSpectrum spectrum;
};

/// S gamma S^T = diag(l1, l1, ..., lm, lm) with l1 >= ... >= lm.
WilliamsonDecomposition williamson(const CovarianceMatrix &state, const Tolerances &tol = {});

/// g(l) = ((l+1)/2) log2((l+1)/2) - ((l-1)/2) log2((l-1)/2).
double mode_entropy(double lambda);

/// Von Neumann entropy in bits. Eigenvalues in [1 - psd, 1] count as exactly 1.
double entropy(const SymplecticSpectrum &spectrum, const Tolerances &tol = {});

/// Entropy of a state, shorthand for entropy(symplectic_eigenvalues(state)).
double entropy(const CovarianceMatrix &state, const Tolerances &tol = {});

/// 2m-mode pure state whose first m modes reduce to the input. The extra
/// modes are the purifying reference, one per input mode.
CovarianceMatrix purify(const CovarianceMatrix &state, const Tolerances &tol = {});

/// Covariance with modes rearranged so that new mode i is old mode order[i].
/// order must be a permutation.
CovarianceMatrix reorder_modes(const CovarianceMatrix &state, const std::vector<std::size_t> &order);

/// Phase-space permutation matrix P with (P v) picking mode order[i] into slot i.
Matrix mode_permutation(const std::vector<std::size_t> &order);

/// Block diagonal a (+) b.
Matrix direct_sum(const Matrix &a, const Matrix &b);

}  // namespace gsynergy

#endif
