#include "cli_runner.hpp"
#include "support.hpp"

#include "symwalk/io.hpp"
#include "symwalk/montecarlo.hpp"
#include "symwalk/walks.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace symwalk;
using symwalk::testing::data_path;
using symwalk::testing::run_cli;
using symwalk::testing::scratch_dir;

namespace {

std::string q(int i) { return "file:" + data_path("q" + std::to_string(i) + ".json"); }

std::vector<std::pair<int, double>> read_curve(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "N,bound");
  std::vector<std::pair<int, double>> out;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    out.emplace_back(std::stoi(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return out;
}

std::string tmp(const std::string& name) { return (scratch_dir() / name).string(); }

}  // namespace

TEST(Cli, UniformBoundIsZero) {
  const auto r = run_cli("bounds --space group --n 3 --dist uniform --N 1");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["upper_avg"].get<double>(), 0.0);
}

TEST(Cli, ExhaustiveCheckOnlyAddsFields) {
  const auto plain = run_cli("bounds --tabloids 2+1 --dist " + q(1) + " --N 2");
  const auto checked = run_cli("bounds --tabloids 2+1 --dist " + q(1) + " --N 2 --exhaustive-check");
  ASSERT_EQ(plain.code, 0) << plain.err;
  ASSERT_EQ(checked.code, 0) << checked.err;
  auto a = Json::parse(plain.out);
  auto b = Json::parse(checked.out);
  EXPECT_TRUE(b["exhaustive_inside"].get<bool>());
  const double ex = b["exhaustive_avg_tv_sq"].get<double>();
  EXPECT_LE(b["lower_avg"].get<double>(), ex);
  EXPECT_LE(ex, b["upper_avg"].get<double>());
  b.erase("exhaustive_inside");
  b.erase("exhaustive_avg_tv_sq");
  // q1 has start-independent norms on these tabloids
  EXPECT_TRUE(b["start_independent"].get<bool>());
  EXPECT_EQ(b["start_independent_reason"], "exhaustive");
  EXPECT_EQ(b["every_start_upper"].get<double>(), b["upper_avg"].get<double>());
  for (const char* k : {"start_independent", "start_independent_reason", "every_start_upper"}) b.erase(k);
  EXPECT_EQ(a.dump(), b.dump());
  const auto m2 = run_cli("bounds --tabloids 2+1 --dist " + q(2) + " --N 2 --exhaustive-check");
  ASSERT_EQ(m2.code, 0) << m2.err;
  const auto c = Json::parse(m2.out);
  EXPECT_FALSE(c["start_independent"].get<bool>());
  EXPECT_FALSE(c.contains("every_start_upper"));
}

TEST(Cli, BoundReportRoundTrips) {
  const auto r = run_cli("bounds --tabloids 3+2 --dist lazy_transposition:5 --N 4");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  const BoundReport rep = bound_report_from_json(j);
  const Json back = to_json(rep);
  for (const auto& [k, v] : back.items()) EXPECT_EQ(v, j[k]) << k;
}

TEST(Cli, TabloidSweepMatchesTheCommittedBaseline) {
  for (int k = 2; k <= 5; ++k) {
    const auto r = run_cli("bounds --tabloids 26+26 --class-cycle " + std::to_string(k) +
                           " --sweep-N 1:400");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto now = read_curve(r.out);
    const auto base = read_curve(symwalk::testing::slurp(
        data_path("sweep_26_26_k" + std::to_string(k) + ".csv")));
    ASSERT_EQ(now.size(), 400u);
    ASSERT_EQ(now.size(), base.size());
    for (std::size_t i = 0; i < now.size(); ++i) {
      EXPECT_EQ(now[i].first, base[i].first);
      EXPECT_NEAR(now[i].second, base[i].second, 1e-12 * base[i].second) << k << " " << i;
      if (i > 0) EXPECT_LT(now[i].second, now[i - 1].second);
    }
  }
}

TEST(Cli, SweepWritesCsvFile) {
  const auto path = tmp("sweep.csv");
  const auto r = run_cli("bounds --tabloids 4+2 --class-cycle 3 --sweep-N 0:5 --csv " + path);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto curve = read_curve(symwalk::testing::slurp(path));
  ASSERT_EQ(curve.size(), 6u);
  for (const auto& [N, b] : curve) {
    EXPECT_NEAR(b, tabloid_cycle_bound(6, 4, 2, 3, N), 1e-12 * std::max(1.0, b));
  }
}

TEST(Cli, JsrOfTheExamplePair) {
  const auto cert = tmp("example.cert.json");
  const auto r = run_cli("jsr --space group:3 --dist " + q(1) + " --dist " + q(2) +
                         " --degrees 2 3 --cert " + cert);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_LE(j["upper"].get<double>(), 0.2501);
  EXPECT_GE(j["lower"].get<double>(), 0.1767);
  EXPECT_EQ(j["verdict"], "mixes");
  EXPECT_FALSE(j.contains("warning"));

  const auto v = run_cli("verify-cert " + cert + " --matrices " + tmp("example.matrices.json"));
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_TRUE(Json::parse(v.out)["passed"].get<bool>());

  // lowering gamma below the attained rate must fail verification
  auto c = read_json_file(cert);
  c["gamma"] = 0.2;
  write_text_file(tmp("tampered.cert.json"), c.dump());
  const auto bad = run_cli("verify-cert " + tmp("tampered.cert.json") + " --matrices " +
                           tmp("example.matrices.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(Json::parse(bad.out)["passed"].get<bool>());
}

TEST(Cli, JsrOfUniformIsZero) {
  const auto r = run_cli("jsr --space group:4 --dist uniform");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["upper"].get<double>(), 0.0);
  EXPECT_EQ(j["verdict"], "mixes");
}

TEST(Cli, JsrBudgetExhaustionIsFlagged) {
  const auto r = run_cli("jsr --space group:3 --dist " + q(1) + " --dist " + q(2) +
                         " --depth 12 --budget 20");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["budget_exhausted"].get<bool>());
  EXPECT_TRUE(j.contains("warning"));
  EXPECT_LE(j["lower"].get<double>(), j["upper"].get<double>());
}

TEST(Cli, SimulationIsCloseToExactAndReproducible) {
  const std::string args = "simulate --tabloids 2+1 --dist " + q(1) + " --N 3 --M 100000 --seed 7";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_LE(Json::parse(a.out)["tv_to_exact"].get<double>(), 0.02);
  const auto c = run_cli("simulate --tabloids 2+1 --dist " + q(1) + " --N 3 --M 100000 --seed 8");
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, EstimateOnToursAtInfiniteTemperature) {
  const auto inst = load_tour_csv(data_path("tour5.csv"));
  const double exact = exact_gibbs_average(inst, 0.0);
  const std::string args =
      "estimate --tours 5 --matrix " + data_path("tour5.csv") + " --beta 0 --dist uniform --N 1 --seed 11";
  const auto r = run_cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_NEAR(j["estimate"].get<double>(), exact, 0.1);
  EXPECT_EQ(run_cli(args).out, r.out);
  const auto back = annealing_estimate_from_json(j);
  EXPECT_EQ(back.lbar_hat, j["estimate"].get<double>());
  EXPECT_EQ(back.M, j["M"].get<std::uint64_t>());
}

TEST(Cli, InfeasiblePlanNamesTheMinimalN) {
  const auto r = run_cli("estimate --tours 5 --matrix " + data_path("tour5.csv") +
                         " --beta 0.1 --dist lazy_transposition:5 --N 3");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("minimal feasible N is"), std::string::npos) << r.err;
  // the named N must itself be feasible
  const auto pos = r.err.find("is ", r.err.find("minimal"));
  const int n_min = std::stoi(r.err.substr(pos + 3));
  const auto ok = run_cli("estimate --tours 5 --matrix " + data_path("tour5.csv") +
                          " --beta 0.1 --dist lazy_transposition:5 --M 1000 --N " +
                          std::to_string(n_min));
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto before = run_cli("estimate --tours 5 --matrix " + data_path("tour5.csv") +
                              " --beta 0.1 --dist lazy_transposition:5 --M 1000 --N " +
                              std::to_string(n_min - 1));
  EXPECT_EQ(before.code, 3);
}

TEST(Cli, IndicatorEstimate) {
  const auto r = run_cli("estimate --tabloids 3+1 --dist lazy_transposition:4 --N 6 --seed 4");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_NEAR(j["estimate"].get<double>(), 0.25, 0.1);
  const auto e = mean_estimate_from_json(j);
  EXPECT_EQ(e.plan.M, hoeffding_sample_size(0.1, 0.05, e.plan.tv_bound));
}

TEST(Cli, ConfigOverridesFlagsAndRejectsUnknownKeys) {
  write_text_file(tmp("cfg.json"), R"({"N": 3, "dist": "uniform"})");
  const auto r = run_cli("bounds --tabloids 2+1 --dist lazy_transposition:3 --N 1 --config " +
                         tmp("cfg.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["N"], 3);
  EXPECT_EQ(j["distribution"], "uniform");

  write_text_file(tmp("bad.json"), R"({"N": 3, "steps": 4})");
  const auto bad = run_cli("bounds --tabloids 2+1 --dist uniform --config " + tmp("bad.json"));
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("steps"), std::string::npos);

  write_text_file(tmp("wrongsub.json"), R"({"seed": 3})");
  EXPECT_EQ(run_cli("bounds --tabloids 2+1 --dist uniform --N 1 --config " + tmp("wrongsub.json")).code, 2);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli("bounds --tabloids 2+1 --N 1").code, 2);
  EXPECT_EQ(run_cli("bounds --tabloids 2+1 --tours 3 --dist uniform --N 1").code, 2);
  EXPECT_EQ(run_cli("bounds --tabloids 2+1 --dist uniform --sweep-N 5:1").code, 2);
  EXPECT_EQ(run_cli("bounds --tabloids 1+2 --dist uniform --N 1").code, 2);
  EXPECT_NE(run_cli("nonsense").code, 0);
  EXPECT_EQ(run_cli("verify-cert " + tmp("missing.json") + " --matrices x").code, 2);
}

TEST(Cli, CharacterTableAndFourierDump) {
  const auto c = run_cli("chars --n 4");
  ASSERT_EQ(c.code, 0) << c.err;
  const auto j = Json::parse(c.out);
  EXPECT_EQ(j["shapes"].size(), 5u);
  EXPECT_EQ(j["classes"].size(), 5u);

  const auto f = run_cli("fourier --n 3 --dist " + q(1) + " --shape 1+1+1");
  ASSERT_EQ(f.code, 0) << f.err;
  const auto fj = Json::parse(f.out);
  ASSERT_EQ(fj["transforms"].size(), 1u);
  EXPECT_NEAR(fj["transforms"][0]["matrix"][0][0].get<double>(), 0.25, 1e-12);

  const auto g = run_cli("fourier --n 3 --dist " + q(1) + " --shape 2+1");
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_NEAR(Json::parse(g.out)["transforms"][0]["spectral_radius"].get<double>(), 0.125, 1e-9);

  const auto s = run_cli("fourier --n 52 --class-cycle 2 --shape 26+26");
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(Json::parse(s.out)["transforms"][0]["route"], "class");
}
