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

#include "gsynergy/cli.h"

#include <cmath>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsynergy/capacity.h"
#include "gsynergy/channel.h"
#include "gsynergy/circuit.h"
#include "gsynergy/dilation.h"
#include "gsynergy/io.h"
#include "gsynergy/reproduce.h"
#include "gsynergy/sweep.h"

namespace gsynergy {

namespace {

using OJson = nlohmann::ordered_json;

struct Options {
    double tol_psd = 1e-9;
    double tol_symplectic = 1e-10;
    double tol_pairing = 1e-8;
    std::string format;  // empty: human-readable text
    std::string out_path;
    std::size_t threads = 1;
    int verbosity = 0;

    Tolerances tolerances() const {
        return {tol_psd, tol_symplectic, tol_pairing};
    }
};

/// A channel argument resolved to a concrete channel and, when known, a dilation.
struct ResolvedChannel {
    GaussianChannel channel;
    std::optional<ChannelDilation> dilation;
    /// Which eq3_state modes feed this channel for `--c`, in input order.
    std::optional<std::vector<std::size_t>> eq3_modes;
};

ResolvedChannel resolve_channel(const std::string &arg) {
    static const std::regex attenuation_re(R"(attenuation(?:\(([0-9eE.+-]+)\))?)");
    static const std::regex identity_re(R"(identity(?:\(([0-9]+)\))?)");
    std::smatch m;
    if (arg == "eq1_ppt") {
        return {channels::eq1_ppt(), dilations::appendix_extension(), std::vector<std::size_t>{1, 2}};
    }
    if (arg == "eq2_combined") {
        return {channels::eq2_combined(), dilations::eq2_combined(), kEq2Routing};
    }
    if (arg == "eq4_ppt_prime") {
        return {channels::eq4_ppt_prime(), std::nullopt, std::nullopt};
    }
    if (std::regex_match(arg, m, attenuation_re)) {
        double t = 0.5;
        if (m[1].matched) {
            try {
                t = std::stod(m[1].str());
            } catch (const std::exception &) {
                throw GaussianError(ErrorCode::kParse, "bad attenuation parameter in '" + arg + "'");
            }
        }
        return {channels::attenuation(t), dilations::beamsplitter(t), std::vector<std::size_t>{0}};
    }
    if (std::regex_match(arg, m, identity_re)) {
        const std::size_t modes = m[1].matched ? std::stoul(m[1].str()) : 1;
        return {channels::identity(modes), dilations::identity(modes), std::nullopt};
    }
    return {io::channel_from_json(io::load_json_file(arg)), std::nullopt, std::nullopt};
}

std::string display_name(const ResolvedChannel &rc, const std::string &arg) {
    return rc.channel.name().empty() ? arg : rc.channel.name();
}

void emit(std::ostream &out, const Options &opt, const OJson &report) {
    if (opt.format == "json") {
        out << report.dump(2) << '\n';
        return;
    }
    const char *sep = opt.format == "csv" ? "," : ": ";
    for (const auto &[key, value] : report.items()) {
        out << key << sep;
        if (value.is_array()) {
            bool first = true;
            for (const auto &v : value) {
                out << (first ? "" : " ") << (v.is_number() ? format_number(v.get<double>()) : v.dump());
                first = false;
            }
        } else if (value.is_number_float()) {
            out << format_number(value.get<double>());
        } else if (value.is_string()) {
            out << value.get<std::string>();
        } else {
            out << value.dump();
        }
        out << '\n';
    }
}

int cmd_validate(const std::string &arg, const Options &opt, std::ostream &out) {
    const ResolvedChannel rc = resolve_channel(arg);
    const PsdReport rep = physicality_report(rc.channel, opt.tol_psd);
    OJson j;
    j["command"] = "validate";
    j["channel"] = display_name(rc, arg);
    j["valid"] = rep.ok;
    j["min_eigenvalue"] = rep.min_eigenvalue;
    j["spectrum"] = rep.spectrum;
    emit(out, opt, j);
    return rep.ok ? kExitOk : kExitFalse;
}

int cmd_ppt(const std::string &arg, const Options &opt, std::ostream &out) {
    const ResolvedChannel rc = resolve_channel(arg);
    const PptVerdict v = ppt_check(rc.channel, opt.tol_psd);
    OJson j;
    j["command"] = "ppt";
    j["channel"] = display_name(rc, arg);
    j["ppt"] = v.ok;
    j["min_eigenvalue"] = v.min_eigenvalue;
    std::size_t zeros = 0;
    for (double e : v.spectrum) {
        zeros += std::abs(e) <= opt.tol_psd ? 1 : 0;
    }
    j["boundary_zero_eigenvalues"] = zeros;
    j["spectrum"] = v.spectrum;
    emit(out, opt, j);
    return v.ok ? kExitOk : kExitFalse;
}

int cmd_cohinfo(const std::string &arg,
                std::optional<double> c,
                const std::string &input_path,
                const std::string &dilation_path,
                bool check_purification,
                const Options &opt,
                std::ostream &out,
                std::ostream &err) {
    const Tolerances tol = opt.tolerances();
    ResolvedChannel rc = resolve_channel(arg);
    if (!dilation_path.empty()) {
        ChannelDilation d = io::dilation_from_json(io::load_json_file(dilation_path), tol);
        if (!verify_extension(rc.channel, d.s().matrix(), d.partition(), tol)) {
            err << "error: dilation in '" << dilation_path << "' does not induce the channel\n";
            return kExitUsage;
        }
        rc.dilation = std::move(d);
    }
    if (!rc.dilation) {
        err << "error: no complementary channel known for '" << arg
            << "'; pass --dilation FILE with a symplectic extension of the channel\n";
        return kExitUsage;
    }

    std::optional<CovarianceMatrix> input;
    if (!input_path.empty()) {
        input = io::covariance_from_json(io::load_json_file(input_path), tol);
    } else if (c) {
        if (!rc.eq3_modes) {
            err << "error: --c selects the built-in input family, which has no routing for '" << arg
                << "'; pass --input FILE instead\n";
            return kExitUsage;
        }
        const CovarianceMatrix family = eq3_state(*c);
        input = rc.eq3_modes->size() == family.modes() ? reorder_modes(family, *rc.eq3_modes)
                                                        : family.reduce(*rc.eq3_modes);
    } else {
        err << "error: give either --c or --input\n";
        return kExitUsage;
    }

    const GaussianChannel comp = complement(*rc.dilation);
    const CoherentInfoResult r = coherent_information(rc.channel, comp, *input, tol);
    OJson j;
    j["command"] = "cohinfo";
    j["channel"] = display_name(rc, arg);
    if (c && input_path.empty()) {
        j["c"] = *c;
    }
    j["coherent_info_bits"] = r.value;
    j["output_entropy_bits"] = r.output_entropy;
    j["environment_entropy_bits"] = r.environment_entropy;
    j["photon_number"] = r.photon_number;
    if (check_purification) {
        const CoherentInfoResult p = coherent_information_via_purification(rc.channel, *rc.dilation, *input, tol);
        j["purified_coherent_info_bits"] = p.value;
        j["path_difference"] = std::abs(p.value - r.value);
    }
    if (opt.verbosity > 0) {
        j["output_spectrum"] = symplectic_eigenvalues(apply(rc.channel, *input), tol).values;
        j["environment_spectrum"] = symplectic_eigenvalues(apply(comp, *input), tol).values;
    }
    emit(out, opt, j);
    return kExitOk;
}

bool write_records(const std::string &path,
                   const std::string &format,
                   const SweepSpec &spec,
                   const std::vector<SweepRecord> &records,
                   std::ostream &out,
                   std::ostream &err) {
    std::ofstream file;
    std::ostream *dst = &out;
    if (!path.empty()) {
        file.open(path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << path << "'\n";
            return false;
        }
        dst = &file;
    }
    if (format == "json") {
        write_json(*dst, spec, records);
    } else {
        write_csv(*dst, spec, records);
    }
    dst->flush();
    if (!*dst) {
        err << "error: write to '" << (path.empty() ? "stdout" : path) << "' failed\n";
        return false;
    }
    return true;
}

int cmd_sweep(const std::string &spec_path, const Options &opt, std::ostream &out, std::ostream &err) {
    const SweepSpec spec = io::sweep_spec_from_json(io::load_json_file(spec_path));
    const std::vector<SweepRecord> records = run_sweep(spec, opt.threads);
    if (!write_records(opt.out_path, opt.format, spec, records, out, err)) {
        return kExitUsage;
    }
    if (!opt.out_path.empty() && opt.verbosity > 0) {
        try {
            const SweepSummary s = summarize(records);
            err << "points: " << records.size() << ", max: " << format_number(s.max_value)
                << ", positive fraction: " << format_number(s.positive_fraction) << '\n';
        } catch (const GaussianError &e) {
            err << e.what() << '\n';
        }
    }
    return kExitOk;
}

int cmd_reproduce(const std::string &target, const Options &opt, std::ostream &out, std::ostream &err) {
    const RecipeResult r = run_recipe(target, opt.tolerances(), opt.threads);
    if (!r.records.empty() && !opt.out_path.empty()) {
        if (!write_records(opt.out_path, opt.format, r.sweep, r.records, out, err)) {
            return kExitUsage;
        }
    }
    OJson j;
    j["command"] = "reproduce";
    j["target"] = r.target;
    j["result"] = r.pass ? "PASS" : "FAIL";
    for (const auto &[k, v] : r.details.items()) {
        j[k] = v;
    }
    emit(out, opt, j);
    return r.pass ? kExitOk : kExitFalse;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gaussian channel toolkit: physicality, PPT, coherent information and sweeps", "gsyn"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a TOML/INI file (flags take precedence)");

    Options opt;
    app.add_option("--tol-psd", opt.tol_psd, "Tolerance on Hermitian PSD tests")->check(CLI::PositiveNumber);
    app.add_option("--tol-symplectic", opt.tol_symplectic, "Tolerance on |SJS^T - J|")->check(CLI::PositiveNumber);
    app.add_option("--tol-pairing", opt.tol_pairing, "Relative tolerance pairing +-i lambda")->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", opt.out_path, "Output file for sweep data");
    app.add_option("--threads", opt.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_flag("-v,--verbose", opt.verbosity, "More output");

    std::string channel_arg;
    auto *validate = app.add_subcommand("validate", "Check Y + i(J - XJX^T) >= 0");
    validate->add_option("channel", channel_arg, "Channel JSON file or built-in name")->required();
    auto *ppt = app.add_subcommand("ppt", "Check Y + i(J + XJX^T) >= 0");
    ppt->add_option("channel", channel_arg, "Channel JSON file or built-in name")->required();

    auto *cohinfo = app.add_subcommand("cohinfo", "Coherent information H(B) - H(E)");
    cohinfo->add_option("channel", channel_arg, "Channel JSON file or built-in name")->required();
    double c_value = 0;
    auto *c_opt = cohinfo->add_option("--c", c_value, "Parameter of the built-in three-mode input family");
    std::string input_path;
    auto *input_opt = cohinfo->add_option("--input", input_path, "Covariance JSON file");
    c_opt->excludes(input_opt);
    std::string dilation_path;
    cohinfo->add_option("--dilation", dilation_path, "Dilation JSON file (symplectic extension)");
    bool check_purification = false;
    cohinfo->add_flag("--check-purification", check_purification, "Also evaluate via a purified input");

    std::string spec_path;
    auto *sweep = app.add_subcommand("sweep", "Evaluate a parameter grid");
    sweep->add_option("spec", spec_path, "Sweep specification JSON")->required();

    std::string target;
    auto *reproduce = app.add_subcommand("reproduce", "Run a built-in reproduction recipe");
    reproduce->add_option("target", target, "Recipe name")->required()->check(CLI::IsMember(recipe_names()));

    try {
        // CLI11 consumes the vector from the back.
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(channel_arg, opt, out);
        }
        if (ppt->parsed()) {
            return cmd_ppt(channel_arg, opt, out);
        }
        if (cohinfo->parsed()) {
            std::optional<double> c;
            if (c_opt->count() > 0) {
                c = c_value;
            }
            return cmd_cohinfo(channel_arg, c, input_path, dilation_path, check_purification, opt, out, err);
        }
        if (sweep->parsed()) {
            return cmd_sweep(spec_path, opt, out, err);
        }
        if (reproduce->parsed()) {
            return cmd_reproduce(target, opt, out, err);
        }
    } catch (const GaussianError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace gsynergy
