#include "ddradar/scenario_io.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace ddradar {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("scenario: " + path + ": " + what);
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(path, "expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : obj.items())
        if (!ok.count(key)) fail(path.empty() ? key : path + "." + key, "unknown key");
}

double get_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

int get_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
}

std::string get_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

FrameConfig parse_frame(const json& f) {
    check_keys(f, "frame", {"M", "N", "delta_f_hz", "carrier_hz", "modulation"});
    const FrameConfig defaults = ScenarioConfig{}.frame;
    const int M = f.contains("M") ? get_int(f["M"], "frame.M") : defaults.M();
    const int N = f.contains("N") ? get_int(f["N"], "frame.N") : defaults.N();
    const double df = f.contains("delta_f_hz") ? get_number(f["delta_f_hz"], "frame.delta_f_hz") : defaults.delta_f();
    const double fc = f.contains("carrier_hz") ? get_number(f["carrier_hz"], "frame.carrier_hz") : defaults.f_c();
    Modulation mod = Modulation::qpsk;
    if (f.contains("modulation")) {
        try {
            mod = modulation_from_string(get_string(f["modulation"], "frame.modulation"));
        } catch (const std::invalid_argument& e) {
            fail("frame.modulation", e.what());
        }
    }
    try {
        return FrameConfig(M, N, df, fc, mod);
    } catch (const std::invalid_argument& e) {
        fail("frame", e.what());
    }
}

GainSpec parse_gain(const json& g, const std::string& path) {
    check_keys(g, path, {"magnitude", "phase"});
    GainSpec out;
    if (g.contains("magnitude")) out.magnitude = get_number(g["magnitude"], path + ".magnitude");
    if (g.contains("phase")) {
        const auto& p = g["phase"];
        if (p.is_string()) {
            if (p.get<std::string>() != "random") fail(path + ".phase", "expected \"random\" or radians");
        } else {
            out.phase_rad = get_number(p, path + ".phase");
        }
    }
    return out;
}

TargetSpec parse_target(const json& t, const std::string& path) {
    check_keys(t, path, {"range_m", "velocity_mps", "l_tau", "k_nu", "gain"});
    const bool physical = t.contains("range_m") || t.contains("velocity_mps");
    const bool index = t.contains("l_tau") || t.contains("k_nu");
    if (physical == index) fail(path, "give either range_m/velocity_mps or l_tau/k_nu");
    const GainSpec gain = t.contains("gain") ? parse_gain(t["gain"], path + ".gain") : GainSpec{};
    if (physical) {
        if (!t.contains("range_m") || !t.contains("velocity_mps")) fail(path, "range_m and velocity_mps both required");
        return TargetSpec::physical(get_number(t["range_m"], path + ".range_m"),
                                    get_number(t["velocity_mps"], path + ".velocity_mps"), gain);
    }
    if (!t.contains("l_tau") || !t.contains("k_nu")) fail(path, "l_tau and k_nu both required");
    return TargetSpec::indices(get_number(t["l_tau"], path + ".l_tau"), get_number(t["k_nu"], path + ".k_nu"), gain);
}

unsigned parse_parallel(const json& p) {
    if (p.is_string()) {
        if (p.get<std::string>() != "auto") fail("parallel", "expected an integer or \"auto\"");
        return std::max(1u, std::thread::hardware_concurrency());
    }
    const int n = get_int(p, "parallel");
    if (n < 1) fail("parallel", "must be >= 1");
    return static_cast<unsigned>(n);
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario: malformed JSON: ") + e.what());
    }
    check_keys(doc, "", {"schema_version", "frame", "targets", "snr_db", "trials", "seed", "modes", "parallel", "ofdm",
                         "dump", "allow_shared_delay", "description"});
    if (!doc.contains("schema_version")) fail("schema_version", "missing");
    if (get_int(doc["schema_version"], "schema_version") != kScenarioSchemaVersion)
        fail("schema_version", "unsupported version (expected 1)");

    ScenarioConfig cfg;
    if (doc.contains("description")) get_string(doc["description"], "description");
    if (doc.contains("frame")) cfg.frame = parse_frame(doc["frame"]);

    if (!doc.contains("targets") || !doc["targets"].is_array()) fail("targets", "expected an array");
    for (std::size_t i = 0; i < doc["targets"].size(); ++i)
        cfg.targets.push_back(parse_target(doc["targets"][i], "targets[" + std::to_string(i) + "]"));

    if (doc.contains("snr_db")) {
        const auto& s = doc["snr_db"];
        cfg.snr_db.clear();
        if (s.is_number()) {
            cfg.snr_db.push_back(s.get<double>());
        } else {
            if (!s.is_array()) fail("snr_db", "expected a number or an array");
            for (std::size_t i = 0; i < s.size(); ++i)
                cfg.snr_db.push_back(get_number(s[i], "snr_db[" + std::to_string(i) + "]"));
        }
    }
    if (doc.contains("trials")) cfg.trials = get_int(doc["trials"], "trials");
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) fail("seed", "expected a non-negative integer");
        cfg.master_seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("modes")) {
        const auto& m = doc["modes"];
        if (!m.is_array()) fail("modes", "expected an array");
        cfg.modes.clear();
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto path = "modes[" + std::to_string(i) + "]";
            try {
                cfg.modes.push_back(estimator_mode_from_string(get_string(m[i], path)));
            } catch (const std::invalid_argument& e) {
                fail(path, e.what());
            }
        }
    }
    if (doc.contains("parallel")) cfg.parallel = parse_parallel(doc["parallel"]);
    if (doc.contains("ofdm")) {
        const auto& o = doc["ofdm"];
        check_keys(o, "ofdm", {"cp_len", "zero_pad"});
        if (o.contains("cp_len")) {
            if (o["cp_len"].is_string()) {
                if (o["cp_len"].get<std::string>() != "auto") fail("ofdm.cp_len", "expected an integer or \"auto\"");
                cfg.ofdm.cp_len = -1;
            } else {
                cfg.ofdm.cp_len = get_int(o["cp_len"], "ofdm.cp_len");
                if (cfg.ofdm.cp_len < 0) fail("ofdm.cp_len", "must be >= 0");
            }
        }
        if (o.contains("zero_pad")) cfg.ofdm.zero_pad = get_int(o["zero_pad"], "ofdm.zero_pad");
    }
    if (doc.contains("dump")) {
        const auto& d = doc["dump"];
        if (!d.is_array()) fail("dump", "expected an array");
        for (const auto& item : d) {
            const auto name = get_string(item, "dump");
            if (name == "dd") cfg.dump.dd = true;
            else if (name == "corr") cfg.dump.corr = true;
            else if (name == "fasttime") cfg.dump.fasttime = true;
            else if (name == "periodogram") cfg.dump.periodogram = true;
            else fail("dump", "unknown item '" + name + "'");
        }
    }
    if (doc.contains("allow_shared_delay")) {
        if (!doc["allow_shared_delay"].is_boolean()) fail("allow_shared_delay", "expected a boolean");
        cfg.allow_shared_delay = doc["allow_shared_delay"].get<bool>();
    }

    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string canonical_json(const ScenarioConfig& cfg) {
    // nlohmann::ordered_json keeps insertion order.
    nlohmann::ordered_json doc;
    doc["schema_version"] = kScenarioSchemaVersion;
    doc["frame"] = {{"M", cfg.frame.M()},
                    {"N", cfg.frame.N()},
                    {"delta_f_hz", cfg.frame.delta_f()},
                    {"carrier_hz", cfg.frame.f_c()},
                    {"modulation", to_string(cfg.frame.modulation())}};
    auto targets = nlohmann::ordered_json::array();
    for (const auto& t : cfg.targets) {
        nlohmann::ordered_json j;
        if (t.kind == TargetSpec::Kind::physical) {
            j["range_m"] = t.range_m;
            j["velocity_mps"] = t.velocity_mps;
        } else {
            j["l_tau"] = t.l_tau;
            j["k_nu"] = t.k_nu;
        }
        j["gain"]["magnitude"] = t.gain.magnitude;
        if (t.gain.phase_rad) j["gain"]["phase"] = *t.gain.phase_rad;
        else j["gain"]["phase"] = "random";
        targets.push_back(j);
    }
    doc["targets"] = targets;
    doc["snr_db"] = cfg.snr_db;
    doc["trials"] = cfg.trials;
    doc["seed"] = cfg.master_seed;
    auto modes = nlohmann::ordered_json::array();
    for (auto m : cfg.modes) modes.push_back(to_string(m));
    doc["modes"] = modes;
    doc["ofdm"] = {{"cp_len", cfg.cp_len()}, {"zero_pad", cfg.ofdm.zero_pad}};
    doc["allow_shared_delay"] = cfg.allow_shared_delay;
    return doc.dump();
}

std::uint64_t config_hash(const ScenarioConfig& cfg) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_json(cfg)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash_hex(const ScenarioConfig& cfg) { return hex64(config_hash(cfg)); }

}  // namespace ddradar
