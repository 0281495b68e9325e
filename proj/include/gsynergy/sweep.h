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

#ifndef GSYNERGY_SWEEP_H
#define GSYNERGY_SWEEP_H

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gsynergy/circuit.h"
#include "gsynergy/symplectic.h"

namespace gsynergy {

struct SweepAxis {
    std::string name;
    double min = 0;
    double max = 0;
    std::size_t steps = 1;

    /// min + i (max - min) / (steps - 1); the single point min when steps == 1.
    double value(std::size_t i) const;
};

/// Channel, dilation and input used by the `circuit` binding.
///
/// Axes named `gate<i>.<field>` override field t, s, k or phase of gate i;
/// an axis named `n` makes the input a product of thermal states with n
/// photons per input mode. Without `n`, `input` is used, or the vacuum.
struct CircuitBinding {
    OpticalCircuit circuit;
    ModePartition partition;
    CircuitConventions conventions;
    std::optional<CovarianceMatrix> input;
};

struct SweepSpec {
    /// `eq3-c-sweep`, `eq2-fixed-input` or `circuit`.
    std::string binding;
    std::vector<SweepAxis> axes;
    Tolerances tol;
    std::optional<CircuitBinding> circuit;
};

struct SweepRecord {
    std::vector<double> coordinates;
    double value = 0;  // bits; NaN on error
    double photon_number = 0;
    std::string status = "ok";

    bool ok() const {
        return status == "ok";
    }
};

/// Throws kInvalidArgument for unknown bindings or malformed axes.
void validate_sweep(const SweepSpec &spec);

/// One record per grid point in row-major order (last axis fastest).
/// Per-point failures become records with an error status.
std::vector<SweepRecord> run_sweep(const SweepSpec &spec, std::size_t threads = 1);

struct SweepSummary {
    double max_value = 0;
    std::vector<double> argmax;
    double positive_fraction = 0;  // over ok records, value > zero_tol
    std::size_t ok_records = 0;
};

/// Throws kEmptySummary when there are no ok records.
/// Ties on the maximum go to the lexicographically smallest coordinates.
SweepSummary summarize(const std::vector<SweepRecord> &records, double zero_tol = 1e-9);

void write_csv(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRecord> &records);
void write_json(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRecord> &records);

/// "%.12g"; non-finite values print as nan/inf/-inf.
std::string format_number(double v);

}  // namespace gsynergy

#endif
