#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "cli_harness.hpp"

using cliharness::fresh_scratch;
using cliharness::read_file;
using cliharness::run_cli;
using cliharness::write_file;
using nlohmann::json;

namespace {

std::vector<std::pair<double, double>> parse_polyline(const std::string& csv) {
  std::vector<std::pair<double, double>> rows;
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  REQUIRE(line == "x,y");
  while (std::getline(is, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

}  // namespace

TEST_CASE("certify exit codes and verdicts") {
  const auto scratch = fresh_scratch("blowup_cli_certify");

  auto ok = run_cli("certify scalar --a 1 --b 2 --q 1.5 --v0 0 --v1 1", scratch);
  CHECK(ok.exit_code == 0);
  const json v = json::parse(ok.output);
  CHECK(v["certified"] == true);
  CHECK(v["t_star"] == 2.0);
  CHECK(v["epsilon"] == 0.5);
  CHECK(v["region"]["kind"] == "sub_quadratic");

  auto inconclusive =
      run_cli("certify scalar --a 1 --b 2 --q 1.5 --v0 100 --v1 0.1", scratch);
  CHECK(inconclusive.exit_code == 3);
  CHECK(json::parse(inconclusive.output)["certified"] == false);

  auto invalid = run_cli("certify scalar --a 1 --b 2 --q 0.5 --v0 0 --v1 1", scratch);
  CHECK(invalid.exit_code == 2);

  auto missing = run_cli("certify scalar --a 1", scratch);
  CHECK(missing.exit_code == 2);

  auto hyp = run_cli(
      "certify parabolic --lambda 1 --q 1.5 --beta 0.5 --m 1 --p 1 --U0 1 --V0 0.5 --U1 3",
      scratch);
  CHECK(hyp.exit_code == 3);
  CHECK(json::parse(hyp.output)["status"] == "hypothesis_violated");

  auto wave = run_cli("certify wave --lambda 1 --C 2 --q 1.5 --v0 0 --v1 1", scratch);
  CHECK(wave.exit_code == 0);
  CHECK(json::parse(wave.output)["l1_factor"] == 2.0);
}

TEST_CASE("region polylines") {
  const auto scratch = fresh_scratch("blowup_cli_region");

  auto subq = run_cli("region --kind subq --a 1 --b 2 --q 1.5 --range -1 3 --samples 400",
                      scratch);
  REQUIRE(subq.exit_code == 0);
  const auto rows = parse_polyline(subq.output);
  REQUIRE(rows.size() == 401);
  CHECK(rows.front().second == 0.0);  // flat piece left of the rise
  // Plateau value appears over [0, x2].
  bool plateau_seen = false;
  for (const auto& [x, y] : rows)
    if (x >= 0.0 && x <= 0.54 && std::abs(y - 2.0 / 3.0) < 1e-12) plateau_seen = true;
  CHECK(plateau_seen);
  CHECK(rows.back().second == doctest::Approx(std::pow(3.0, 2.0 / 3.0)).epsilon(1e-12));
  // Nondecreasing everywhere.
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].second >= rows[i - 1].second);

  auto superq = run_cli(
      "region --kind superq --a 1 --b 1 --q 2.5 --v0 0 --v1 1 --range 0 3 --samples 100",
      scratch);
  REQUIRE(superq.exit_code == 0);
  const auto srows = parse_polyline(superq.output);
  CHECK(srows.front().second == doctest::Approx(1.0).epsilon(1e-13));
  for (size_t i = 1; i < srows.size(); ++i) CHECK(srows[i].second > srows[i - 1].second);

  auto levine =
      run_cli("region --kind levine --lambda 1 --C 1 --q 2 --range 1 5 --samples 4", scratch);
  REQUIRE(levine.exit_code == 0);
  const auto lrows = parse_polyline(levine.output);
  CHECK(lrows[0].second == 2.0);  // wedge floor s0
  CHECK(lrows.back().second == 5.0);

  auto system = run_cli("region --kind system --a 1 --p 1.5 --range 0 3 --samples 10", scratch);
  REQUIRE(system.exit_code == 0);
  const auto yrows = parse_polyline(system.output);
  CHECK(yrows.front().second == 0.0);
  CHECK(yrows.back().second == doctest::Approx(2.924017738212866).epsilon(1e-12));

  CHECK(run_cli("region --kind subq --a 1 --b 2 --q 1.5 --range 3 -1", scratch).exit_code == 2);
  CHECK(run_cli("region --kind nope --range 0 1", scratch).exit_code == 2);
}

TEST_CASE("simulate odi: files, verdicts, determinism, round-trip") {
  const auto scratch = fresh_scratch("blowup_cli_simulate");
  const auto cfg_path = scratch / "cfg.json";
  write_file(cfg_path, R"({
    "odi": {"a": 1, "b": 2, "q": 1.5, "v0": 0, "v1": 1},
    "slack": 0.0,
    "output_dir": ")" + (scratch / "run1").string() + R"("
  })");

  auto first = run_cli("simulate odi --config " + cfg_path.string(), scratch);
  REQUIRE(first.exit_code == 0);
  const json echo = json::parse(first.output);
  CHECK(echo["odi"]["q"] == 1.5);
  CHECK(echo["integrator"]["horizon"] == 4.0);  // defaulted to 2 t_star
  CHECK(echo["integrator"]["rel_tol"] == 1e-9);

  const json report = json::parse(read_file(scratch / "run1" / "report.json"));
  CHECK(report["pass"] == true);
  CHECK(report["termination"]["kind"] == "blown_up");
  CHECK(report["envelope_check"]["pass"] == true);
  const std::string traj = read_file(scratch / "run1" / "trajectory.csv");
  CHECK(traj.rfind("t,y0,y1,h\n", 0) == 0);

  // Same config, second directory: byte-identical outputs.
  auto second = run_cli("simulate odi --config " + cfg_path.string() + " --out " +
                            (scratch / "run2").string(),
                        scratch);
  REQUIRE(second.exit_code == 0);
  CHECK(read_file(scratch / "run2" / "trajectory.csv") == traj);
  CHECK(read_file(scratch / "run2" / "report.json") ==
        read_file(scratch / "run1" / "report.json"));

  // Round-trip: the echoed config reproduces the run.
  auto third = run_cli("simulate odi --config " +
                           (scratch / "run1" / "config_echo.json").string() + " --out " +
                           (scratch / "run3").string(),
                       scratch);
  REQUIRE(third.exit_code == 0);
  CHECK(read_file(scratch / "run3" / "trajectory.csv") == traj);

  // Inconclusive data exits 3 and writes nothing.
  write_file(scratch / "bad.json", R"({
    "odi": {"a": 1, "b": 2, "q": 1.5, "v0": 100, "v1": 0.1},
    "output_dir": ")" + (scratch / "none").string() + R"("
  })");
  auto bad = run_cli("simulate odi --config " + (scratch / "bad.json").string(), scratch);
  CHECK(bad.exit_code == 3);
  CHECK_FALSE(std::filesystem::exists(scratch / "none"));

  // Unknown keys are rejected.
  write_file(scratch / "unknown.json", R"({
    "odi": {"a": 1, "b": 2, "q": 1.5, "v0": 0, "v1": 1, "extra": 7}
  })");
  CHECK(run_cli("simulate odi --config " + (scratch / "unknown.json").string(), scratch)
            .exit_code == 2);

  // Malformed JSON is invalid input.
  write_file(scratch / "mangled.json", "{ not json");
  CHECK(run_cli("simulate odi --config " + (scratch / "mangled.json").string(), scratch)
            .exit_code == 2);

  // A horizon too short to reach blow-up is a verification failure (4),
  // distinct from invalid input (2) and inconclusive certificates (3).
  write_file(scratch / "short.json", R"({
    "odi": {"a": 1, "b": 2, "q": 1.5, "v0": 0, "v1": 1},
    "integrator": {"horizon": 0.2},
    "output_dir": ")" + (scratch / "short").string() + R"("
  })");
  auto short_run =
      run_cli("simulate odi --config " + (scratch / "short.json").string(), scratch);
  CHECK(short_run.exit_code == 4);
  const json short_report = json::parse(read_file(scratch / "short" / "report.json"));
  CHECK(short_report["pass"] == false);
  CHECK(short_report["termination"]["kind"] == "survived");
}

TEST_CASE("simulate wave writes the spectral trajectory schema") {
  const auto scratch = fresh_scratch("blowup_cli_wave");
  write_file(scratch / "cfg.json", R"({
    "spectral": {"problem": "single_wave", "n_modes": 8, "n_quad": 32, "C": 2, "q": 1.5,
                 "horizon": 2.0, "u1_modes": [2.0]},
    "slack": 0.05,
    "dump_modal": true,
    "output_dir": ")" + (scratch / "out").string() + R"("
  })");
  auto res = run_cli("simulate wave --config " + (scratch / "cfg.json").string(), scratch);
  REQUIRE(res.exit_code == 0);
  const std::string traj = read_file(scratch / "out" / "trajectory.csv");
  CHECK(traj.rfind("t,v,v_prime,ut_l1,jensen,tail\n", 0) == 0);
  CHECK(std::filesystem::exists(scratch / "out" / "modal.json"));
  const json report = json::parse(read_file(scratch / "out" / "report.json"));
  CHECK(report["pass"] == true);
  CHECK(report["theorem_check"]["min_jensen"].get<double>() >= -1e-8);

  // integrator.horizon conflicts with the spectral block.
  write_file(scratch / "cfg2.json", R"({
    "spectral": {"problem": "single_wave", "n_modes": 8, "n_quad": 32, "C": 2, "q": 1.5,
                 "horizon": 2.0, "u1_modes": [2.0]},
    "integrator": {"horizon": 1.0}
  })");
  CHECK(run_cli("simulate wave --config " + (scratch / "cfg2.json").string(), scratch)
            .exit_code == 2);
}

TEST_CASE("compare-levine output") {
  const auto scratch = fresh_scratch("blowup_cli_levine");
  auto res = run_cli("compare-levine --lambda 1 --C 1 --q 1.5 --samples 1000 --seed 7",
                     scratch);
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j["levine_in_ours"]["count"] == 1000);
  CHECK(j["levine_in_ours"]["total"] == 1000);
  CHECK(j["ours_not_levine"]["count"].get<long long>() > 0);
  bool negative_witness = false;
  for (const auto& w : j["witnesses"])
    if (w["v0"].get<double>() < 0.0) negative_witness = true;
  CHECK(negative_witness);
  CHECK(j["s0"] == 4.0);

  auto empty = run_cli("compare-levine --lambda 1 --C 1 --q 1.5 --samples 0", scratch);
  CHECK(empty.exit_code == 0);
  const json e = json::parse(empty.output);
  CHECK(e["levine_in_ours"]["count"] == 0);
  CHECK(e["levine_in_ours"]["total"] == 0);

  // Determinism of the sampler.
  auto again = run_cli("compare-levine --lambda 1 --C 1 --q 1.5 --samples 1000 --seed 7",
                       scratch);
  CHECK(again.output == res.output);
}
