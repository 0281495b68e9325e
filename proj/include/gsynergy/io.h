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

#ifndef GSYNERGY_IO_H
#define GSYNERGY_IO_H

#include <string>

#include "json.hpp"

#include "gsynergy/channel.h"
#include "gsynergy/circuit.h"
#include "gsynergy/dilation.h"
#include "gsynergy/sweep.h"
#include "gsynergy/symplectic.h"

// JSON readers for the file formats accepted by the command line tool.
// Malformed documents raise GaussianError with ErrorCode::kParse.

namespace gsynergy::io {

using Json = nlohmann::json;

Json load_json_file(const std::string &path);

Matrix matrix_from_json(const Json &j, const char *what);
Json matrix_to_json(const Matrix &m);

/// {"input_modes", "output_modes", "X", "Y", optional "name"}
GaussianChannel channel_from_json(const Json &j);
Json channel_to_json(const GaussianChannel &ch);

/// {"modes": N, "gates": [{"kind": "beamsplitter", "t", "modes": [a, b]}, ...]}
OpticalCircuit circuit_from_json(const Json &j);

/// {"inputs": [...], "ancillas": [...], "outputs": [...], "environment": [...]}
ModePartition partition_from_json(const Json &j);

/// "rotation" | "rotation_transposed" | "symmetric"
BeamsplitterConvention beamsplitter_convention_from_string(const std::string &s);

/// {"modes": m, "gamma": [[...]], "d": [...]}; "d" is optional.
CovarianceMatrix covariance_from_json(const Json &j, const Tolerances &tol = {});

/// Either {"S": [[...]], "partition": {...}} or {"circuit": {...},
/// "partition": {...}, optional "beamsplitter_convention"}.
ChannelDilation dilation_from_json(const Json &j, const Tolerances &tol = {});

/// {"binding", "parameters": [{"name", "min", "max", "steps"}], optional
/// "tolerances", and for the circuit binding "circuit", "partition",
/// optional "beamsplitter_convention" and "input"}.
SweepSpec sweep_spec_from_json(const Json &j);

}  // namespace gsynergy::io

#endif
