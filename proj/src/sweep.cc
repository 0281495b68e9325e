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

#include "gsynergy/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <thread>

#include "json.hpp"

#include "gsynergy/capacity.h"
#include "gsynergy/channel.h"
#include "gsynergy/dilation.h"

namespace gsynergy {

double SweepAxis::value(std::size_t i) const {
    if (steps <= 1) {
        return min;
    }
    if (i + 1 == steps) {
        return max;
    }
    return min + static_cast<double>(i) * (max - min) / static_cast<double>(steps - 1);
}

namespace {

bool is_c_binding(const std::string &binding) {
    return binding == "eq3-c-sweep" || binding == "eq2-fixed-input";
}

struct GateField {
    std::size_t gate;
    std::string field;
};

std::optional<GateField> parse_gate_axis(const std::string &name) {
    if (name.rfind("gate", 0) != 0) {
        return std::nullopt;
    }
    const auto dot = name.find('.');
    if (dot == std::string::npos || dot == 4) {
        return std::nullopt;
    }
    const std::string index = name.substr(4, dot - 4);
    if (index.find_first_not_of("0123456789") != std::string::npos) {
        return std::nullopt;
    }
    return GateField{static_cast<std::size_t>(std::stoul(index)), name.substr(dot + 1)};
}

void set_gate_field(Gate &gate, const std::string &field, double v) {
    const bool ok = std::visit(
        [&](auto &g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Beamsplitter>) {
                if (field == "t") {
                    g.t = v;
                    return true;
                }
            } else if constexpr (std::is_same_v<G, Squeezer>) {
                if (field == "s") {
                    g.s = v;
                    return true;
                }
            } else if constexpr (std::is_same_v<G, HalfWavePlate>) {
                if (field == "phase") {
                    g.phase = v;
                    return true;
                }
            } else {
                if (field == "k") {
                    g.k = v;
                    return true;
                }
            }
            return false;
        },
        gate);
    if (!ok) {
        throw GaussianError(ErrorCode::kInvalidArgument, "gate has no parameter '" + field + "'");
    }
}

CoherentInfoResult evaluate_point(const SweepSpec &spec, const std::vector<double> &coords) {
    if (spec.binding == "eq3-c-sweep") {
        return coherent_information(channels::eq2_combined(), complement(dilations::eq2_combined()),
                                    eq2_input(coords[0]), spec.tol);
    }
    if (spec.binding == "eq2-fixed-input") {
        const CovarianceMatrix full = eq3_state(coords[0]);
        const CoherentInfoResult ppt = coherent_information(
            channels::eq1_ppt(), complement(dilations::appendix_extension()), full.reduce({1, 2}), spec.tol);
        const CoherentInfoResult att = coherent_information(
            channels::attenuation(0.5), complement(dilations::beamsplitter(0.5)), full.reduce({0}), spec.tol);
        CoherentInfoResult r;
        r.output_entropy = ppt.output_entropy + att.output_entropy;
        r.environment_entropy = ppt.environment_entropy + att.environment_entropy;
        r.value = ppt.value + att.value;
        r.photon_number = photon_number(full);
        return r;
    }
    // circuit
    const CircuitBinding &cb = *spec.circuit;
    OpticalCircuit circuit = cb.circuit;
    std::optional<double> photons;
    for (std::size_t a = 0; a < spec.axes.size(); a++) {
        if (spec.axes[a].name == "n") {
            photons = coords[a];
            continue;
        }
        const GateField gf = *parse_gate_axis(spec.axes[a].name);
        set_gate_field(circuit.gates[gf.gate], gf.field, coords[a]);
    }
    const ChannelPair pair = channel_from_circuit(circuit, cb.partition, cb.conventions);
    const std::size_t m = pair.channel.input_modes();
    CovarianceMatrix input = CovarianceMatrix::vacuum(m);
    if (photons) {
        input = CovarianceMatrix::thermal(std::vector<double>(m, *photons));
    } else if (cb.input) {
        input = *cb.input;
    }
    return coherent_information(pair.channel, pair.complement, input, spec.tol);
}

std::vector<double> coordinates_of(const SweepSpec &spec, std::size_t flat) {
    std::vector<double> coords(spec.axes.size());
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
        const std::size_t steps = spec.axes[a].steps;
        coords[a] = spec.axes[a].value(flat % steps);
        flat /= steps;
    }
    return coords;
}

}  // namespace

void validate_sweep(const SweepSpec &spec) {
    if (spec.axes.empty()) {
        throw GaussianError(ErrorCode::kInvalidArgument, "sweep needs at least one parameter");
    }
    for (const SweepAxis &axis : spec.axes) {
        if (axis.steps < 1) {
            throw GaussianError(ErrorCode::kInvalidArgument, "parameter '" + axis.name + "' needs steps >= 1");
        }
        if (!(axis.min <= axis.max)) {
            throw GaussianError(ErrorCode::kInvalidArgument, "parameter '" + axis.name + "' needs min <= max");
        }
    }
    if (is_c_binding(spec.binding)) {
        if (spec.axes.size() != 1 || spec.axes[0].name != "c") {
            throw GaussianError(ErrorCode::kInvalidArgument, "binding '" + spec.binding + "' sweeps exactly one parameter named c");
        }
        return;
    }
    if (spec.binding == "circuit") {
        if (!spec.circuit) {
            throw GaussianError(ErrorCode::kInvalidArgument, "circuit binding needs a circuit and partition");
        }
        validate_circuit(spec.circuit->circuit);
        validate_partition(spec.circuit->partition, spec.circuit->circuit.modes);
        for (const SweepAxis &axis : spec.axes) {
            if (axis.name == "n") {
                continue;
            }
            const auto gf = parse_gate_axis(axis.name);
            if (!gf || gf->gate >= spec.circuit->circuit.gates.size()) {
                throw GaussianError(ErrorCode::kInvalidArgument, "unknown circuit parameter '" + axis.name + "'");
            }
            Gate probe = spec.circuit->circuit.gates[gf->gate];
            set_gate_field(probe, gf->field, 0.0);
        }
        return;
    }
    throw GaussianError(ErrorCode::kInvalidArgument, "unknown sweep binding '" + spec.binding + "'");
}

std::vector<SweepRecord> run_sweep(const SweepSpec &spec, std::size_t threads) {
    validate_sweep(spec);
    std::size_t total = 1;
    for (const SweepAxis &axis : spec.axes) {
        total *= axis.steps;
    }
    std::vector<SweepRecord> records(total);

    auto work = [&](std::size_t flat) {
        SweepRecord &rec = records[flat];
        rec.coordinates = coordinates_of(spec, flat);
        try {
            const CoherentInfoResult r = evaluate_point(spec, rec.coordinates);
            rec.value = r.value;
            rec.photon_number = r.photon_number;
        } catch (const GaussianError &e) {
            rec.value = std::numeric_limits<double>::quiet_NaN();
            rec.photon_number = std::numeric_limits<double>::quiet_NaN();
            std::string tag = error_code_name(e.code());
            std::replace(tag.begin(), tag.end(), ' ', '-');
            rec.status = "error:" + tag;
        }
    };

    threads = std::max<std::size_t>(1, std::min(threads, total));
    if (threads == 1) {
        for (std::size_t i = 0; i < total; i++) {
            work(i);
        }
        return records;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; t++) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < total; i = next++) {
                work(i);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    return records;
}

SweepSummary summarize(const std::vector<SweepRecord> &records, double zero_tol) {
    SweepSummary s;
    std::size_t positive = 0;
    const SweepRecord *best = nullptr;
    for (const SweepRecord &r : records) {
        if (!r.ok()) {
            continue;
        }
        s.ok_records++;
        if (r.value > zero_tol) {
            positive++;
        }
        if (best == nullptr || r.value > best->value ||
            (r.value == best->value && r.coordinates < best->coordinates)) {
            best = &r;
        }
    }
    if (best == nullptr) {
        throw GaussianError(ErrorCode::kEmptySummary, "no successfully evaluated sweep points");
    }
    s.max_value = best->value;
    s.argmax = best->coordinates;
    s.positive_fraction = static_cast<double>(positive) / static_cast<double>(s.ok_records);
    return s;
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_csv(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRecord> &records) {
    for (const SweepAxis &axis : spec.axes) {
        out << axis.name << ',';
    }
    out << "coherent_info_bits,photon_number,status\n";
    for (const SweepRecord &r : records) {
        for (double c : r.coordinates) {
            out << format_number(c) << ',';
        }
        out << format_number(r.value) << ',' << format_number(r.photon_number) << ',' << r.status << '\n';
    }
}

void write_json(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRecord> &records) {
    // Numbers go through format_number so CSV and JSON carry identical digits.
    auto number = [](double v) -> nlohmann::ordered_json {
        if (!std::isfinite(v)) {
            return nullptr;
        }
        return std::stod(format_number(v));
    };
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRecord &r : records) {
        nlohmann::ordered_json obj;
        for (std::size_t a = 0; a < spec.axes.size(); a++) {
            obj[spec.axes[a].name] = number(r.coordinates[a]);
        }
        obj["coherent_info_bits"] = number(r.value);
        obj["photon_number"] = number(r.photon_number);
        obj["status"] = r.status;
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace gsynergy
