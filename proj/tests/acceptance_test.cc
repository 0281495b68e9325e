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

// Acceptance suite: prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gsynergy/capacity.h"
#include "gsynergy/channel.h"
#include "gsynergy/circuit.h"
#include "gsynergy/dilation.h"
#include "gsynergy/error.h"
#include "gsynergy/sweep.h"
#include "gsynergy/symplectic.h"
#include "test_util.h"

using namespace gsynergy;
using gsynergy::testing::max_abs_diff;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Eigenvalues of re + i*im from a direct complex solve, ascending.
std::vector<double> complex_spectrum(const Matrix &re, const Matrix &im) {
    Eigen::MatrixXcd h = re.cast<std::complex<double>>() + std::complex<double>(0, 1) * im.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd v = es.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

Outcome criterion1() {
    const GaussianChannel ch = channels::eq1_ppt();
    const Matrix j = symplectic_form(2);
    const Matrix xjx = ch.x() * j * ch.x().transpose();
    const double r8 = 2.0 * std::sqrt(2.0);
    const std::vector<double> want{0, 0, r8, r8};
    double dev = 0;
    for (const Matrix &im : {Matrix(j - xjx), Matrix(j + xjx)}) {
        const auto got = complex_spectrum(ch.y(), im);
        for (std::size_t k = 0; k < 4; k++) {
            dev = std::max(dev, std::abs(got[k] - want[k]));
        }
    }
    // The library's own reports must agree.
    const PsdReport phys = physicality_report(ch, 1e-9);
    const PptVerdict ppt = ppt_check(ch, 1e-9);
    for (std::size_t k = 0; k < 4; k++) {
        dev = std::max(dev, std::abs(phys.spectrum[k] - want[k]));
        dev = std::max(dev, std::abs(ppt.spectrum[k] - want[k]));
    }
    return {dev <= 1e-9 && phys.ok && ppt.ok, "spectra {0,0,2sqrt2,2sqrt2}, max deviation " + fmt("%.3g", dev)};
}

Outcome criterion2() {
    const Matrix s = dilations::appendix_extension().s().matrix();
    const Matrix j = symplectic_form(4);
    const double defect = (s * j * s.transpose() - j).cwiseAbs().maxCoeff();
    const double bp = std::sqrt(1.0 / std::sqrt(2.0) + 0.5);
    const double bm = std::sqrt(1.0 / std::sqrt(2.0) - 0.5);
    Matrix z(4, 4);
    z << bp, 0, bm, 0,  //
        0, bm, 0, bp,   //
        bm, 0, -bp, 0,  //
        0, bp, 0, -bm;
    const Matrix x = channels::eq1_ppt().x();
    Matrix want(8, 8);
    want << x, z, z, x;
    const double layout = max_abs_diff(s, want);
    // Dilation block formulas: X = S[B,A'], Y = S[B,E'] S[B,E']^T.
    const Matrix xb = s.block(0, 0, 4, 4);
    const Matrix yb = s.block(0, 4, 4, 4) * s.block(0, 4, 4, 4).transpose();
    const double induced =
        std::max(max_abs_diff(xb, x), max_abs_diff(yb, std::sqrt(2.0) * Matrix::Identity(4, 4)));
    const bool lib = verify_extension(channels::eq1_ppt(), s, dilations::appendix_extension().partition());
    return {defect <= 1e-10 && layout <= 1e-15 && induced <= 1e-12 && lib,
            "|SJS^T - J| = " + fmt("%.3g", defect) + ", induced (X, Y) deviation " + fmt("%.3g", induced)};
}

CoherentInfoResult combined_at(double c) {
    return coherent_information(channels::eq2_combined(), complement(dilations::eq2_combined()), eq2_input(c));
}

Outcome criterion3() {
    const CoherentInfoResult r = combined_at(3.19);
    return {std::abs(r.value - 0.05) <= 0.005 && std::abs(r.photon_number - 58.2) <= 1.0,
            "c = 3.19: " + fmt("%.6f", r.value) + " bits at " + fmt("%.3f", r.photon_number) + " photons"};
}

Outcome criterion4() {
    const CoherentInfoResult r = combined_at(5.8);
    return {std::abs(r.value - 0.06) <= 0.005 && r.photon_number >= 780 && r.photon_number <= 830,
            "c = 5.8: " + fmt("%.6f", r.value) + " bits at " + fmt("%.3f", r.photon_number) + " photons"};
}

std::vector<CovarianceMatrix> zero_capacity_inputs(std::mt19937_64 &rng, std::size_t modes) {
    std::vector<CovarianceMatrix> out;
    for (int k = 0; k < 50; k++) {
        // Pure states from circuits whose squeezers stay within 10 dB.
        const Matrix s = compile(gsynergy::testing::random_circuit(rng, modes, 4 * modes + 2, std::sqrt(10.0))).matrix();
        out.push_back(CovarianceMatrix::create(s * s.transpose()));
    }
    std::uniform_real_distribution<double> photons(0.0, 20.0);
    for (int k = 0; k < 50; k++) {
        std::vector<double> n(modes);
        for (auto &v : n) {
            v = photons(rng);
        }
        out.push_back(CovarianceMatrix::thermal(n));
    }
    return out;
}

Outcome criterion5() {
    std::mt19937_64 rng(5);
    const GaussianChannel eq1 = channels::eq1_ppt();
    const GaussianChannel eq1_c = complement(dilations::appendix_extension());
    const GaussianChannel att = channels::attenuation(0.5);
    const GaussianChannel att_c = complement(dilations::beamsplitter(0.5));

    double worst_eq1 = -INFINITY, worst_att = -INFINITY;
    std::size_t evaluated = 0;
    for (const auto &in : zero_capacity_inputs(rng, 2)) {
        worst_eq1 = std::max(worst_eq1, coherent_information(eq1, eq1_c, in).value);
        evaluated++;
    }
    for (const auto &in : zero_capacity_inputs(rng, 1)) {
        worst_att = std::max(worst_att, coherent_information(att, att_c, in).value);
        evaluated++;
    }
    for (int c = 0; c <= 6; c++) {
        const CovarianceMatrix full = eq3_state(c);
        worst_eq1 = std::max(worst_eq1, coherent_information(eq1, eq1_c, full.reduce({1, 2})).value);
        worst_att = std::max(worst_att, coherent_information(att, att_c, full.reduce({0})).value);
        evaluated += 2;
    }
    return {worst_eq1 <= 1e-9 && worst_att <= 1e-9,
            std::to_string(evaluated) + " inputs, max Ic: eq1 " + fmt("%.3g", worst_eq1) + ", attenuation " +
                fmt("%.3g", worst_att)};
}

Outcome criterion6() {
    // Two-mode squeezer with the same beta+- as the extension's Z block.
    const double bp = std::sqrt(1.0 / std::sqrt(2.0) + 0.5);
    const double bm = std::sqrt(1.0 / std::sqrt(2.0) - 0.5);
    Matrix s(4, 4);
    s << bp, 0, bm, 0,  //
        0, bp, 0, -bm,  //
        bm, 0, bp, 0,   //
        0, -bm, 0, bp;
    const double fixed = max_abs_diff(s, two_mode_squeezer_matrix(std::sqrt(std::sqrt(2.0) - 1.0)));
    const Matrix t = beamsplitter_matrix(0.5, kEquivalenceBeamsplitter);
    const Matrix j = symplectic_form(2);
    const Matrix s_inv = -j * s.transpose() * j;
    const GaussianChannel prime = channels::eq4_ppt_prime();
    const GaussianChannel target = channels::eq1_ppt();
    const Matrix x = -s * prime.x() * s_inv * t;
    const Matrix y = s * prime.y() * s.transpose();
    const double dev = std::max(max_abs_diff(x, target.x()), max_abs_diff(y, target.y()));
    return {dev <= 1e-9 && fixed <= 1e-12, "symmetric 50% beamsplitter, max deviation " + fmt("%.3g", dev)};
}

Outcome criterion7() {
    double worst = 0;
    const GaussianChannel ch = channels::eq2_combined();
    const ChannelDilation d = dilations::eq2_combined();
    const GaussianChannel comp = complement(d);
    const SweepAxis grid{"c", 0.0, 6.0, 61};
    for (std::size_t i = 0; i < grid.steps; i++) {
        const CovarianceMatrix in = eq2_input(grid.value(i));
        const double a = coherent_information(ch, comp, in).value;
        const double b = coherent_information_via_purification(ch, d, in).value;
        worst = std::max(worst, std::abs(a - b));
    }
    std::mt19937_64 rng(7);
    const std::vector<ModePartition> partitions{
        {{0}, {1, 2}, {0}, {1, 2}}, {{0, 1}, {2}, {0}, {1, 2}}, {{0, 1}, {2}, {0, 2}, {1}}, {{0, 1, 2}, {}, {0, 1}, {2}}};
    for (int k = 0; k < 50; k++) {
        const ModePartition &part = partitions[static_cast<std::size_t>(k) % partitions.size()];
        const ChannelDilation rd =
            ChannelDilation::create(compile(gsynergy::testing::random_circuit(rng, 3, 8)), part);
        const GaussianChannel rch = induced_channel(rd);
        const CovarianceMatrix in = gsynergy::testing::random_state(rng, part.inputs.size());
        const double a = coherent_information(rch, complement(rd), in).value;
        const double b = coherent_information_via_purification(rch, rd, in).value;
        worst = std::max(worst, std::abs(a - b));
    }
    return {worst <= 1e-8, "61 grid points + 50 circuit pairs, max path difference " + fmt("%.3g", worst)};
}

Outcome criterion8() {
    std::mt19937_64 rng(8);
    std::vector<std::string> failures;

    double spectrum_dev = 0;
    for (int k = 0; k < 50; k++) {
        const std::size_t m = 1 + static_cast<std::size_t>(k % 4);
        const CovarianceMatrix st = gsynergy::testing::random_state(rng, m);
        const Matrix s = compile(gsynergy::testing::random_circuit(rng, m, 3 * m + 2)).matrix();
        const auto a = symplectic_eigenvalues(st).values;
        const auto b = symplectic_eigenvalues(CovarianceMatrix::create(s * st.gamma() * s.transpose())).values;
        for (std::size_t i = 0; i < m; i++) {
            spectrum_dev = std::max(spectrum_dev, std::abs(a[i] - b[i]) / a[i]);
        }
    }
    if (spectrum_dev > 1e-8) {
        failures.push_back("spectrum invariance " + fmt("%.3g", spectrum_dev));
    }

    int violations = 0;
    for (int k = 0; k < 50; k++) {
        const ChannelDilation d = ChannelDilation::create(compile(gsynergy::testing::random_circuit(rng, 3, 8)),
                                                          ModePartition{{0, 1}, {2}, {0, 2}, {1}});
        const CovarianceMatrix out = apply(induced_channel(d), gsynergy::testing::random_state(rng, 2));
        violations += check_uncertainty(out.gamma(), 1e-9) ? 0 : 1;
    }
    if (violations > 0) {
        failures.push_back(std::to_string(violations) + " uncertainty violations");
    }

    double roundtrip = 0;
    for (int k = 0; k < 50; k++) {
        const std::size_t m = 1 + static_cast<std::size_t>(k % 4);
        const CovarianceMatrix st = gsynergy::testing::random_state(rng, m);
        const WilliamsonDecomposition w = williamson(st);
        Vector diag(2 * m);
        for (std::size_t i = 0; i < m; i++) {
            diag(static_cast<Eigen::Index>(2 * i)) = diag(static_cast<Eigen::Index>(2 * i + 1)) = w.spectrum.values[i];
        }
        const Matrix si = w.s.inverse();
        const Matrix back = si * diag.asDiagonal() * si.transpose();
        roundtrip = std::max(roundtrip, max_abs_diff(back, st.gamma()) / std::max(1.0, st.gamma().cwiseAbs().maxCoeff()));
    }
    if (roundtrip > 1e-8) {
        failures.push_back("williamson round trip " + fmt("%.3g", roundtrip));
    }

    double group = 0;
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int k = 0; k < 30; k++) {
        const Eigen::Index n = 2 * (1 + k % 3);
        Matrix a(n, n);
        for (Eigen::Index i = 0; i < n; i++) {
            for (Eigen::Index jj = 0; jj < n; jj++) {
                a(i, jj) = unit(rng);
            }
        }
        const QuadraticHamiltonian h = QuadraticHamiltonian::create(0.5 * (a + a.transpose()));
        const double t1 = unit(rng), t2 = unit(rng);
        const Matrix lhs = evolve(h, t1 + t2).matrix();
        const Matrix rhs = evolve(h, t1).matrix() * evolve(h, t2).matrix();
        group = std::max(group, max_abs_diff(lhs, rhs));
    }
    if (group > 1e-9) {
        failures.push_back("evolve group law " + fmt("%.3g", group));
    }

    SweepSpec spec;
    spec.binding = "eq3-c-sweep";
    spec.axes.push_back({"c", 0.0, 6.0, 61});
    auto csv = [&](std::size_t threads) {
        std::ostringstream os;
        write_csv(os, spec, run_sweep(spec, threads));
        return os.str();
    };
    const std::string first = csv(1);
    const bool deterministic = first == csv(1) && first == csv(4) && first == csv(8);
    if (!deterministic) {
        failures.push_back("sweep output depends on run or thread count");
    }

    std::string detail = "spectrum " + fmt("%.2g", spectrum_dev) + ", round trip " + fmt("%.2g", roundtrip) +
                         ", group law " + fmt("%.2g", group) + ", sweeps byte-identical";
    for (const auto &f : failures) {
        detail += "; " + f;
    }
    return {failures.empty(), detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"boundary spectrum of the PPT channel", criterion1},
        {"symplectic extension of the PPT channel", criterion2},
        {"superactivation at c = 3.19", criterion3},
        {"superactivation at c = 5.8", criterion4},
        {"zero-capacity sanity", criterion5},
        {"squeezer/beamsplitter equivalence", criterion6},
        {"direct vs purified coherent information", criterion7},
        {"property suites", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %zu: %s (%s) [%.3fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), secs);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
