#include <filesystem>

#include "doctest.h"

#include "ddradar/scenario_io.hpp"

using namespace ddradar;

namespace {

const char* kMinimal = R"({
  "schema_version": 1,
  "frame": {"M": 64, "N": 32},
  "targets": [{"l_tau": 5.25, "k_nu": -2.5}]
})";

}  // namespace

TEST_SUITE("scenario_io") {

TEST_CASE("minimal document fills defaults") {
    const auto cfg = parse_scenario(kMinimal);
    CHECK(cfg.frame.M() == 64);
    CHECK(cfg.frame.N() == 32);
    CHECK(cfg.frame.delta_f() == 39e3);
    CHECK(cfg.frame.f_c() == 24e9);
    REQUIRE(cfg.targets.size() == 1);
    CHECK(cfg.targets[0].kind == TargetSpec::Kind::index);
    CHECK(cfg.targets[0].l_tau == 5.25);
    CHECK_FALSE(cfg.targets[0].gain.phase_rad.has_value());
    CHECK(cfg.trials == 100);
    CHECK(cfg.snr_db.size() == 7);
}

TEST_CASE("full document") {
    const auto cfg = parse_scenario(R"({
      "schema_version": 1,
      "description": "x",
      "frame": {"M": 128, "N": 64, "delta_f_hz": 39000, "carrier_hz": 24e9, "modulation": "qpsk"},
      "targets": [
        {"range_m": 300, "velocity_mps": -20, "gain": {"magnitude": 0.5, "phase": 1.25}},
        {"l_tau": 40.5, "k_nu": 3, "gain": {"phase": "random"}}
      ],
      "snr_db": 5,
      "trials": 9,
      "seed": 18446744073709551615,
      "modes": ["integer", "ofdm"],
      "parallel": 3,
      "ofdm": {"cp_len": 12, "zero_pad": 2},
      "dump": ["dd", "corr", "fasttime", "periodogram"],
      "allow_shared_delay": true
    })");
    CHECK(cfg.targets[0].kind == TargetSpec::Kind::physical);
    CHECK(cfg.targets[0].gain.magnitude == 0.5);
    CHECK(cfg.targets[0].gain.phase_rad.value() == 1.25);
    CHECK_FALSE(cfg.targets[1].gain.phase_rad.has_value());
    CHECK(cfg.snr_db == std::vector<double>{5});
    CHECK(cfg.trials == 9);
    CHECK(cfg.master_seed == 18446744073709551615ULL);
    CHECK(cfg.modes == std::vector<EstimatorMode>{EstimatorMode::integer_only, EstimatorMode::ofdm_baseline});
    CHECK(cfg.parallel == 3);
    CHECK(cfg.ofdm.cp_len == 12);
    CHECK(cfg.ofdm.zero_pad == 2);
    CHECK(cfg.dump.dd);
    CHECK(cfg.dump.periodogram);
    CHECK(cfg.allow_shared_delay);
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_scenario("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"frame": {}, "targets": []})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 2, "targets": [{"l_tau": 1, "k_nu": 0}]})"),
                    std::invalid_argument);
    try {
        parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "k_nu": 0}], "frame": {"M": 8, "Nn": 8}})");
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("frame.Nn") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "k_nu": 0}], "extra": 1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "range_m": 0}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1}]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "k_nu": 0}], "trials": 0})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "k_nu": 0}], "trials": 1.5})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "k_nu": 0}], "seed": -1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "k_nu": 0}], "modes": ["x"]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "k_nu": 0}], "dump": ["v"]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "k_nu": 0, "gain": {"phase": "r"}}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1, "targets": [{"range_m": 10, "velocity_mps": 500}]})"),
                    std::domain_error);
    CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "k_nu": 0}], "parallel": 0})"),
                    std::invalid_argument);
}

TEST_CASE("parallel auto resolves to at least one worker") {
    const auto cfg = parse_scenario(R"({"schema_version": 1, "targets": [{"l_tau": 1, "k_nu": 0}], "parallel": "auto"})");
    CHECK(cfg.parallel >= 1);
}

TEST_CASE("config hash ignores worker count and dumps but tracks the rest") {
    auto a = parse_scenario(kMinimal);
    auto b = a;
    b.parallel = 8;
    b.dump.corr = true;
    CHECK(config_hash(a) == config_hash(b));
    CHECK(canonical_json(a) == canonical_json(b));
    b.master_seed = 2;
    CHECK(config_hash(a) != config_hash(b));
    CHECK(config_hash_hex(a).size() == 16);
    // canonical JSON parses back to the same config
    CHECK(config_hash(parse_scenario(canonical_json(a))) == config_hash(a));
}

TEST_CASE("shipped scenario files load") {
    int n = 0;
    for (const auto& entry : std::filesystem::directory_iterator(DDRADAR_CONFIG_DIR)) {
        if (entry.path().extension() != ".json") continue;
        CAPTURE(entry.path().string());
        CHECK_NOTHROW(load_scenario(entry.path()));
        ++n;
    }
    CHECK(n >= 2);
    CHECK_THROWS(load_scenario("/nonexistent/scenario.json"));
}

}  // TEST_SUITE
