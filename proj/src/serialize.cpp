#include "symdec/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace symdec {

using nlohmann::json;

namespace {

std::string family_name(CodeFamily family) {
    switch (family) {
        case CodeFamily::surface: return "surface";
        case CodeFamily::xzzx: return "xzzx";
        case CodeFamily::toric: return "toric";
        case CodeFamily::repetition: return "repetition";
        case CodeFamily::custom: return "custom";
    }
    return "custom";
}

CodeFamily family_from_name(const std::string& name) {
    if (name == "surface") return CodeFamily::surface;
    if (name == "xzzx") return CodeFamily::xzzx;
    if (name == "toric") return CodeFamily::toric;
    if (name == "repetition") return CodeFamily::repetition;
    if (name == "custom") return CodeFamily::custom;
    throw std::invalid_argument("unknown code family: " + name);
}

std::string boundary_kind_name(BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::x_type: return "X";
        case BoundaryKind::z_type: return "Z";
        case BoundaryKind::periodic: return "periodic";
    }
    return "periodic";
}

BoundaryKind boundary_kind_from_name(const std::string& name) {
    if (name == "X") return BoundaryKind::x_type;
    if (name == "Z") return BoundaryKind::z_type;
    if (name == "periodic") return BoundaryKind::periodic;
    throw std::invalid_argument("unknown boundary kind: " + name);
}

}  // namespace

json code_to_json(const StabilizerCode& code) {
    json j;
    j["n"] = code.n;
    j["family"] = family_name(code.family);
    j["lattice_size"] = code.lattice_size;
    j["periodic"] = {{"rows", code.periodic_rows}, {"cols", code.periodic_cols}};
    json gens = json::array();
    for (const PauliString& g : code.generators) gens.push_back(g.to_literal());
    j["generators"] = gens;
    json lx = json::array(), lz = json::array();
    for (const auto& [x, z] : code.logical_pairs) {
        lx.push_back(x.to_literal());
        lz.push_back(z.to_literal());
    }
    j["logical_x"] = lx;
    j["logical_z"] = lz;
    json coords = json::array();
    for (const Coord& c : code.qubit_coords) coords.push_back({c.row, c.col});
    j["coords"] = coords;
    json bounds = json::array();
    for (const BoundarySegment& seg : code.boundaries) {
        bounds.push_back({{"kind", boundary_kind_name(seg.kind)},
                          {"name", seg.name},
                          {"qubits", seg.qubits}});
    }
    j["boundaries"] = bounds;
    if (!code.face_meta.empty()) {
        json faces = json::array();
        for (const FaceMeta& f : code.face_meta) {
            faces.push_back({{"row", f.row},
                             {"col", f.col},
                             {"light", f.light},
                             {"boundary", f.boundary},
                             {"diag", f.diag}});
        }
        j["face_meta"] = faces;
    }
    return j;
}

StabilizerCode code_from_json(const json& j) {
    StabilizerCode code;
    code.n = j.at("n").get<size_t>();
    code.family = j.contains("family") ? family_from_name(j["family"].get<std::string>())
                                       : CodeFamily::custom;
    code.lattice_size = j.value("lattice_size", 0);
    if (j.contains("periodic")) {
        code.periodic_rows = j["periodic"].value("rows", false);
        code.periodic_cols = j["periodic"].value("cols", false);
    }
    for (const auto& lit : j.at("generators")) {
        code.generators.push_back(PauliString::parse(lit.get<std::string>(), code.n));
    }
    const json& lx = j.at("logical_x");
    const json& lz = j.at("logical_z");
    if (lx.size() != lz.size()) {
        throw std::invalid_argument("logical_x and logical_z lengths differ");
    }
    for (size_t i = 0; i < lx.size(); i++) {
        code.logical_pairs.emplace_back(PauliString::parse(lx[i].get<std::string>(), code.n),
                                        PauliString::parse(lz[i].get<std::string>(), code.n));
    }
    if (j.contains("coords")) {
        for (const auto& c : j["coords"]) {
            code.qubit_coords.push_back({c[0].get<double>(), c[1].get<double>()});
        }
    } else {
        code.qubit_coords.resize(code.n);
        for (size_t q = 0; q < code.n; q++) {
            code.qubit_coords[q] = {0.0, static_cast<double>(q)};
        }
    }
    if (j.contains("boundaries")) {
        for (const auto& b : j["boundaries"]) {
            BoundarySegment seg;
            seg.kind = boundary_kind_from_name(b.at("kind").get<std::string>());
            seg.name = b.value("name", "");
            if (b.contains("qubits")) {
                seg.qubits = b["qubits"].get<std::vector<size_t>>();
            }
            code.boundaries.push_back(std::move(seg));
        }
    }
    if (j.contains("face_meta")) {
        for (const auto& f : j["face_meta"]) {
            code.face_meta.push_back({f.at("row").get<double>(), f.at("col").get<double>(),
                                      f.value("light", false), f.value("boundary", false),
                                      f.value("diag", 0)});
        }
    }
    code.finalize();
    return code;
}

json channel_to_json(const NoiseModel& model) {
    switch (model.kind) {
        case NoiseKind::bitflip:
            return {{"kind", "bitflip"}, {"p", model.p}};
        case NoiseKind::biased:
            return {{"kind", "biased"}, {"px", model.px}, {"py", model.py}, {"pz", model.pz}};
        case NoiseKind::phenomenological:
            return {{"kind", "phenomenological"},
                    {"p", model.p},
                    {"q", model.measurement_flip_rate()},
                    {"rounds", model.rounds}};
        case NoiseKind::ballistic:
            return {{"kind", "ballistic"}, {"p_string", model.p_string}, {"xi", model.xi}};
    }
    throw std::logic_error("unreachable");
}

NoiseModel channel_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "bitflip") {
        return NoiseModel::bitflip(j.at("p").get<double>());
    }
    if (kind == "biased") {
        return NoiseModel::biased(j.at("px").get<double>(), j.at("py").get<double>(),
                                  j.at("pz").get<double>());
    }
    if (kind == "phenomenological") {
        return NoiseModel::phenomenological(j.at("p").get<double>(), j.value("q", -1.0),
                                            j.at("rounds").get<int>());
    }
    if (kind == "ballistic") {
        return NoiseModel::ballistic(j.at("p_string").get<double>(), j.at("xi").get<int>());
    }
    throw std::invalid_argument("unknown channel kind: " + kind);
}

json symmetry_to_json(const Symmetry& sigma) {
    json j;
    json members = json::array();
    std::string aux;
    for (const StabRef& m : sigma.members) {
        if (m.is_aux()) {
            aux = m.aux.to_literal();
        } else {
            members.push_back(m.generator_index);
        }
    }
    j["members"] = members;
    if (!aux.empty()) j["aux"] = aux;
    if (sigma.boundary_member >= 0) j["boundary_member"] = sigma.boundary_member;
    if (!sigma.restriction.empty()) {
        json res = json::array();
        for (const PauliString& p : sigma.restriction) res.push_back(p.to_literal());
        j["restriction"] = res;
    }
    return j;
}

Symmetry symmetry_from_json(const json& j, size_t n) {
    Symmetry sigma;
    const json& members = j.is_array() ? j : j.at("members");
    for (const auto& m : members) {
        sigma.members.push_back(StabRef::gen(m.get<size_t>()));
    }
    if (j.is_object() && j.contains("aux")) {
        sigma.members.push_back(
            StabRef::auxiliary(PauliString::parse(j["aux"].get<std::string>(), n)));
        sigma.boundary_member = static_cast<int>(sigma.members.size()) - 1;
    }
    if (j.is_object() && j.contains("boundary_member")) {
        sigma.boundary_member = j["boundary_member"].get<int>();
    }
    if (j.is_object() && j.contains("restriction")) {
        for (const auto& r : j["restriction"]) {
            sigma.restriction.push_back(PauliString::parse(r.get<std::string>(), n));
        }
    }
    return sigma;
}

json events_to_json(const DetectionEvents& events) {
    json list = json::array();
    for (const auto& [g, t] : events.events) {
        list.push_back({g, t});
    }
    return {{"rounds", events.rounds}, {"events", list}};
}

DetectionEvents events_from_json(const json& j) {
    DetectionEvents out;
    const json& list = j.is_array() ? j : j.at("events");
    int max_round = 0;
    for (const auto& e : list) {
        size_t g = e[0].get<size_t>();
        int t = e[1].get<int>();
        out.events.emplace_back(g, t);
        max_round = std::max(max_round, t);
    }
    out.rounds = j.is_object() && j.contains("rounds") ? j["rounds"].get<int>()
                                                       : max_round + 1;
    std::sort(out.events.begin(), out.events.end(),
              [](const auto& a, const auto& b) {
                  return a.second != b.second ? a.second < b.second : a.first < b.first;
              });
    return out;
}

ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig config;
    const json& code = j.at("code");
    config.family = family_from_name(code.at("family").get<std::string>());
    config.sizes = code.at("sizes").get<std::vector<int>>();
    config.channel = channel_from_json(j.at("channel"));
    if (j.contains("rates")) {
        config.rates = j["rates"].get<std::vector<double>>();
    } else {
        config.rates = {config.channel.rate()};
    }
    std::string decoder = j.value("decoder", "mwpm");
    if (decoder == "mwpm") {
        config.decoder = DecoderKind::mwpm;
    } else if (decoder == "unionfind") {
        config.decoder = DecoderKind::unionfind;
    } else {
        throw std::invalid_argument("unknown decoder: " + decoder);
    }
    config.shots = j.value("shots", 1000L);
    config.seed = j.value("seed", 0ULL);
    config.workers = j.value("workers", 1);
    config.out = j.value("out", "");
    config.timing = j.value("timing", false);
    config.truncation = j.value("truncation", 20);
    return config;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    json j;
    in >> j;
    return j;
}

}  // namespace symdec
