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

#include "gsynergy/io.h"

#include <fstream>
#include <sstream>

namespace gsynergy::io {

namespace {

[[noreturn]] void parse_fail(const std::string &msg) {
    throw GaussianError(ErrorCode::kParse, msg);
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        parse_fail(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

double number(const Json &j, const char *what) {
    if (!j.is_number()) {
        parse_fail(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

std::size_t index(const Json &j, const char *what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        parse_fail(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

std::vector<std::size_t> index_list(const Json &j, const char *what) {
    if (!j.is_array()) {
        parse_fail(std::string(what) + " must be an array");
    }
    std::vector<std::size_t> out;
    for (const Json &e : j) {
        out.push_back(index(e, what));
    }
    return out;
}

std::array<std::size_t, 2> mode_pair(const Json &g) {
    const auto list = index_list(field(g, "modes"), "gate modes");
    if (list.size() != 2) {
        parse_fail("two-mode gate needs exactly two modes");
    }
    return {list[0], list[1]};
}

Tolerances tolerances_from_json(const Json &j) {
    Tolerances tol;
    if (j.contains("psd")) {
        tol.psd = number(j.at("psd"), "psd tolerance");
    }
    if (j.contains("symplectic")) {
        tol.symplectic = number(j.at("symplectic"), "symplectic tolerance");
    }
    if (j.contains("pairing")) {
        tol.pairing = number(j.at("pairing"), "pairing tolerance");
    }
    if (!(tol.psd > 0 && tol.symplectic > 0 && tol.pairing > 0)) {
        parse_fail("tolerances must be positive");
    }
    return tol;
}

}  // namespace

Json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        parse_fail("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception &e) {
        parse_fail("'" + path + "': " + e.what());
    }
}

Matrix matrix_from_json(const Json &j, const char *what) {
    if (!j.is_array()) {
        parse_fail(std::string(what) + " must be a 2D array");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).is_array() ? j.at(0).size() : 0);
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; r++) {
        const Json &row = j.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            parse_fail(std::string(what) + " rows must be arrays of equal length");
        }
        for (Eigen::Index c = 0; c < cols; c++) {
            m(r, c) = number(row.at(static_cast<std::size_t>(c)), what);
        }
    }
    return m;
}

Json matrix_to_json(const Matrix &m) {
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(m(r, c));
        }
        out.push_back(std::move(row));
    }
    return out;
}

GaussianChannel channel_from_json(const Json &j) {
    const std::size_t in = index(field(j, "input_modes"), "input_modes");
    const std::size_t out = index(field(j, "output_modes"), "output_modes");
    Matrix x = matrix_from_json(field(j, "X"), "X");
    Matrix y = matrix_from_json(field(j, "Y"), "Y");
    if (x.rows() != static_cast<Eigen::Index>(2 * out) || x.cols() != static_cast<Eigen::Index>(2 * in)) {
        throw GaussianError(ErrorCode::kInvalidShape, "X must be 2*output_modes by 2*input_modes");
    }
    std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
    return GaussianChannel::create(std::move(x), std::move(y), std::move(name));
}

Json channel_to_json(const GaussianChannel &ch) {
    Json j;
    j["input_modes"] = ch.input_modes();
    j["output_modes"] = ch.output_modes();
    j["X"] = matrix_to_json(ch.x());
    j["Y"] = matrix_to_json(ch.y());
    if (!ch.name().empty()) {
        j["name"] = ch.name();
    }
    return j;
}

OpticalCircuit circuit_from_json(const Json &j) {
    OpticalCircuit c;
    c.modes = index(field(j, "modes"), "modes");
    const Json &gates = field(j, "gates");
    if (!gates.is_array()) {
        parse_fail("gates must be an array");
    }
    for (const Json &g : gates) {
        const Json &kind_j = field(g, "kind");
        if (!kind_j.is_string()) {
            parse_fail("gate kind must be a string");
        }
        const std::string kind = kind_j.get<std::string>();
        if (kind == "beamsplitter") {
            c.gates.emplace_back(Beamsplitter{number(field(g, "t"), "t"), mode_pair(g)});
        } else if (kind == "squeezer") {
            c.gates.emplace_back(Squeezer{number(field(g, "s"), "s"), index(field(g, "mode"), "mode")});
        } else if (kind == "halfwave") {
            const double phase = g.contains("phase") ? number(g.at("phase"), "phase") : 0.0;
            c.gates.emplace_back(HalfWavePlate{index(field(g, "mode"), "mode"), phase});
        } else if (kind == "two_mode_squeezer") {
            c.gates.emplace_back(TwoModeSqueezer{number(field(g, "k"), "k"), mode_pair(g)});
        } else {
            parse_fail("unknown gate kind '" + kind + "'");
        }
    }
    validate_circuit(c);
    return c;
}

ModePartition partition_from_json(const Json &j) {
    return ModePartition{index_list(field(j, "inputs"), "inputs"), index_list(field(j, "ancillas"), "ancillas"),
                         index_list(field(j, "outputs"), "outputs"),
                         index_list(field(j, "environment"), "environment")};
}

BeamsplitterConvention beamsplitter_convention_from_string(const std::string &s) {
    if (s == "rotation") {
        return BeamsplitterConvention::kRotation;
    }
    if (s == "rotation_transposed") {
        return BeamsplitterConvention::kRotationTransposed;
    }
    if (s == "symmetric") {
        return BeamsplitterConvention::kSymmetric;
    }
    parse_fail("unknown beamsplitter convention '" + s + "'");
}

CovarianceMatrix covariance_from_json(const Json &j, const Tolerances &tol) {
    const std::size_t m = index(field(j, "modes"), "modes");
    Matrix g = matrix_from_json(field(j, "gamma"), "gamma");
    if (g.rows() != static_cast<Eigen::Index>(2 * m) || g.cols() != g.rows()) {
        throw GaussianError(ErrorCode::kInvalidShape, "gamma must be 2*modes square");
    }
    Vector d = Vector::Zero(g.rows());
    if (j.contains("d")) {
        const Json &dj = j.at("d");
        if (!dj.is_array() || static_cast<Eigen::Index>(dj.size()) != g.rows()) {
            parse_fail("d must be an array of length 2*modes");
        }
        for (std::size_t k = 0; k < dj.size(); k++) {
            d(static_cast<Eigen::Index>(k)) = number(dj.at(k), "d");
        }
    }
    require_symmetric_phase_space(g, 1e-9 * std::max(1.0, g.size() ? g.cwiseAbs().maxCoeff() : 1.0), "gamma");
    return CovarianceMatrix::create(std::move(g), std::move(d), tol);
}

ChannelDilation dilation_from_json(const Json &j, const Tolerances &tol) {
    const ModePartition partition = partition_from_json(field(j, "partition"));
    if (j.contains("S")) {
        return ChannelDilation::create(SymplecticMatrix::create(matrix_from_json(j.at("S"), "S"), tol), partition);
    }
    CircuitConventions conv;
    if (j.contains("beamsplitter_convention")) {
        conv.beamsplitter = beamsplitter_convention_from_string(j.at("beamsplitter_convention").get<std::string>());
    }
    return dilation_from_circuit(circuit_from_json(field(j, "circuit")), partition, conv);
}

SweepSpec sweep_spec_from_json(const Json &j) {
    SweepSpec spec;
    const Json &binding = field(j, "binding");
    if (!binding.is_string()) {
        parse_fail("binding must be a string");
    }
    spec.binding = binding.get<std::string>();
    const Json &params = field(j, "parameters");
    if (!params.is_array()) {
        parse_fail("parameters must be an array");
    }
    for (const Json &p : params) {
        SweepAxis axis;
        const Json &name = field(p, "name");
        if (!name.is_string()) {
            parse_fail("parameter name must be a string");
        }
        axis.name = name.get<std::string>();
        axis.min = number(field(p, "min"), "min");
        axis.max = number(field(p, "max"), "max");
        axis.steps = index(field(p, "steps"), "steps");
        spec.axes.push_back(std::move(axis));
    }
    if (j.contains("tolerances")) {
        spec.tol = tolerances_from_json(j.at("tolerances"));
    }
    if (j.contains("circuit")) {
        CircuitBinding cb{circuit_from_json(j.at("circuit")), partition_from_json(field(j, "partition")), {}, std::nullopt};
        if (j.contains("beamsplitter_convention")) {
            cb.conventions.beamsplitter =
                beamsplitter_convention_from_string(j.at("beamsplitter_convention").get<std::string>());
        }
        if (j.contains("input")) {
            cb.input = covariance_from_json(j.at("input"), spec.tol);
        }
        spec.circuit = std::move(cb);
    }
    return spec;
}

}  // namespace gsynergy::io
