#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symdec/codes.hpp"
#include "symdec/harness.hpp"
#include "symdec/matching.hpp"
#include "symdec/serialize.hpp"
#include "symdec/symmetry.hpp"

using namespace symdec;

namespace {

int cmd_sweep(const std::string& config_path, int workers_override,
              const std::string& out_override, bool timing) {
    ExperimentConfig config = config_from_json(load_json_file(config_path));
    if (workers_override > 0) config.workers = workers_override;
    if (!out_override.empty()) config.out = out_override;
    if (timing) config.timing = true;
    if (const char* env_seed = std::getenv("SYMDEC_SEED")) {
        config.seed = std::stoull(env_seed);
    }

    std::ofstream file;
    std::ostream* csv = &std::cout;
    if (!config.out.empty()) {
        file.open(config.out);
        if (!file) {
            std::cerr << "cannot open output file " << config.out << "\n";
            return 1;
        }
        csv = &file;
    }
    std::vector<ResultRow> rows = run_sweep(config, csv);

    if (config.sizes.size() >= 2 && config.rates.size() >= 3) {
        for (const CrossingEstimate& est : find_crossing(rows)) {
            if (est.found) {
                std::cerr << "crossing d=" << est.d_small << "/d=" << est.d_large
                          << " near p=" << est.p
                          << (est.resolved ? "" : " (intervals overlap; unresolved)") << "\n";
            } else {
                std::cerr << "crossing d=" << est.d_small << "/d=" << est.d_large
                          << ": none in range\n";
            }
            if (est.monotonicity_warning) {
                std::cerr << "warning: failure rate is non-monotone in p beyond noise\n";
            }
        }
    }
    return 0;
}

int cmd_decode(const std::string& code_path, const std::string& channel_path,
               const std::string& events_path, const std::string& decoder_name) {
    StabilizerCode code = code_from_json(load_json_file(code_path));
    NoiseModel channel = channel_from_json(load_json_file(channel_path));
    DetectionEvents events = events_from_json(load_json_file(events_path));

    DecodeOptions options;
    options.decoder = decoder_name == "unionfind" ? DecoderKind::unionfind : DecoderKind::mwpm;
    Decoder decoder(code, channel, options);
    PauliString correction = decoder.decode(events);
    std::cout << correction.to_literal() << "\n";

    LogicalClass cls = logical_class(code, correction);
    std::cout << "logical_class:";
    if (!cls.in_normalizer) {
        std::cout << " not-in-normalizer";
    } else {
        for (Pauli p : cls.labels) std::cout << ' ' << pauli_char(p);
    }
    std::cout << "\n";
    return 0;
}

int cmd_verify_symmetry(const std::string& code_path, const std::string& symmetry_path) {
    StabilizerCode code = code_from_json(load_json_file(code_path));
    Symmetry sigma = symmetry_from_json(load_json_file(symmetry_path), code.n);
    bool materialised = verify_materialised(code, sigma);
    bool system = sigma.restriction.empty()
                      ? materialised
                      : verify_system(code, sigma, sigma.restriction);
    if (materialised) {
        std::cout << "pass: materialised symmetry (product is the identity)\n";
        return 0;
    }
    if (system) {
        std::cout << "pass: system symmetry (product commutes with the error model)\n";
        return 0;
    }
    std::cout << "fail: product = " << sigma.product(code).to_literal() << "\n";
    return 1;
}

CodeFamily parse_family(const std::string& family_name) {
    if (family_name == "surface") return CodeFamily::surface;
    if (family_name == "xzzx") return CodeFamily::xzzx;
    if (family_name == "toric") return CodeFamily::toric;
    if (family_name == "repetition") return CodeFamily::repetition;
    throw std::invalid_argument("unknown family " + family_name);
}

int cmd_export_code(const std::string& family_name, int d, const std::string& out_path) {
    StabilizerCode code = build_code(parse_family(family_name), d);
    nlohmann::json j = code_to_json(code);
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open " << out_path << "\n";
            return 1;
        }
        out << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_params(const std::string& family_name, int d, size_t max_weight) {
    StabilizerCode code = build_code(parse_family(family_name), d);
    CodeParameters params = code_parameters(code, max_weight);
    std::cout << "n=" << params.n << " k=" << params.k << " d=";
    if (params.exact) {
        std::cout << params.d;
    } else {
        std::cout << ">" << max_weight;
    }
    std::cout << "\n";
    if (code.is_css()) {
        CodeParameters dx = code_parameters(code, max_weight, DistanceSearch::pure_x);
        CodeParameters dz = code_parameters(code, max_weight, DistanceSearch::pure_z);
        std::cout << "d_x=" << (dx.exact ? std::to_string(dx.d) : ">" + std::to_string(max_weight))
                  << " d_z="
                  << (dz.exact ? std::to_string(dz.d) : ">" + std::to_string(max_weight))
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symdec: symmetry-based decoders for stabilizer codes"};
    app.require_subcommand(1);

    auto* sweep = app.add_subcommand("sweep", "Monte Carlo failure-rate sweep");
    std::string config_path;
    int workers = 0;
    std::string out_path;
    bool timing = false;
    sweep->add_option("--config", config_path, "experiment config JSON")->required();
    sweep->add_option("--workers", workers, "worker thread count override");
    sweep->add_option("--out", out_path, "output CSV path override");
    sweep->add_flag("--timing", timing, "record wall time per shot (non-deterministic CSV)");

    auto* decode = app.add_subcommand("decode", "decode one detection-event set");
    std::string code_path, channel_path, events_path, decoder_name = "mwpm";
    decode->add_option("--code", code_path, "code JSON")->required();
    decode->add_option("--channel", channel_path, "channel JSON")->required();
    decode->add_option("--events", events_path, "events JSON")->required();
    decode->add_option("--decoder", decoder_name, "mwpm | unionfind");

    auto* verify = app.add_subcommand("verify-symmetry", "check a symmetry file");
    std::string sym_code_path, symmetry_path;
    verify->add_option("--code", sym_code_path, "code JSON")->required();
    verify->add_option("--symmetry", symmetry_path, "symmetry JSON")->required();

    auto* params = app.add_subcommand("params", "report [[n,k,d]] for a built-in family");
    std::string family = "surface";
    int d = 3;
    size_t max_weight = 4;
    params->add_option("--code", family, "surface | xzzx | toric | repetition")->required();
    params->add_option("--d", d, "code size")->required();
    params->add_option("--max-weight", max_weight, "distance search cutoff");

    auto* export_code = app.add_subcommand("export-code", "write a built-in code as JSON");
    std::string export_family = "surface";
    int export_d = 3;
    std::string export_out;
    export_code->add_option("--code", export_family, "surface | xzzx | toric | repetition")
        ->required();
    export_code->add_option("--d", export_d, "code size")->required();
    export_code->add_option("--out", export_out, "output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return cmd_sweep(config_path, workers, out_path, timing);
        if (decode->parsed()) return cmd_decode(code_path, channel_path, events_path, decoder_name);
        if (verify->parsed()) return cmd_verify_symmetry(sym_code_path, symmetry_path);
        if (params->parsed()) return cmd_params(family, d, max_weight);
        if (export_code->parsed()) return cmd_export_code(export_family, export_d, export_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
