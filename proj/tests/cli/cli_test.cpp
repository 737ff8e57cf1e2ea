#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "ellcomb/exact_scalar.hpp"
#include "ellcomb/q_objects.hpp"

using namespace ellcomb;

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string command = std::string("\"") + ELLCOMB_CLI + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  CliRun r{-1, {}};
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, StirlingRowFour) {
  const CliRun r = cli("table --family stirling --n 4 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("4,1,1\n4,2,7\n4,3,6\n4,4,1\n"), std::string::npos) << r.out;
}

TEST(Cli, ExactValuesRoundTrip) {
  for (const char* family : {"qstirling", "qeulerian", "qlah", "qwhitney --m 2 --r 1", "qrweulerian --m 2 --r 1"}) {
    const CliRun r = cli(std::string("table --family ") + family + " --n 5 --format json");
    ASSERT_EQ(r.status, 0) << family;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["schema_version"], 1);
    for (const auto& row : doc["rows"]) {
      const std::string text = row["value"];
      EXPECT_EQ(ExactScalar::parse(text).to_string(), text) << family;
    }
  }
  const auto doc = nlohmann::json::parse(cli("table --family qeulerian --n 3 --format json").out);
  for (const auto& row : doc["rows"])
    if (row["n"] == 3 && row["k"] == 2)
      EXPECT_EQ(ExactScalar::parse(row["value"].get<std::string>()), ExactScalar(2) * ExactScalar::parse("q") * q_number(2));
}

TEST(Cli, NumericValuesAsPairs) {
  const CliRun r = cli("table --family estirling --n 3 --seed 4 --format json");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["family"], "estirling");
  EXPECT_TRUE(doc["params"].contains("a"));
  for (const auto& row : doc["rows"]) {
    EXPECT_TRUE(row["value"].contains("re"));
    EXPECT_TRUE(row["value"].contains("im"));
  }
}

TEST(Cli, DegenerateParametersMatchQEulerian) {
  const CliRun e = cli("table --family eeulerian --n 4 --a 0 --b 0 --p 0 --q 0.5,0.25 --format json");
  ASSERT_EQ(e.status, 0);
  const CliRun q = cli("table --family qeulerian --n 4 --format json");
  const auto ed = nlohmann::json::parse(e.out);
  const auto qd = nlohmann::json::parse(q.out);
  ASSERT_EQ(ed["rows"].size(), qd["rows"].size());
  for (std::size_t i = 0; i < ed["rows"].size(); ++i) {
    const Complex expected = ExactScalar::parse(qd["rows"][i]["value"].get<std::string>()).evaluate({0.5, 0.25});
    const Complex got(ed["rows"][i]["value"]["re"].get<double>(), ed["rows"][i]["value"]["im"].get<double>());
    EXPECT_LE(std::abs(got - expected), 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(Cli, SameSeedSameDocument) {
  EXPECT_EQ(cli("table --family eeulerian --n 4 --seed 11 --format csv").out,
            cli("table --family eeulerian --n 4 --seed 11 --format csv").out);
  EXPECT_NE(cli("table --family eeulerian --n 4 --seed 11 --format csv").out,
            cli("table --family eeulerian --n 4 --seed 12 --format csv").out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("table --family nothing --n 3").status, 2);
  EXPECT_EQ(cli("table --family stirling").status, 2);
  EXPECT_EQ(cli("table --family stirling --n 3 --board 1,2").status, 2);
  EXPECT_EQ(cli("table --family estirling --n 3 --route carlitz").status, 2);
  EXPECT_EQ(cli("table --family estirling --n 3 --q 1.5,x").status, 2);
  EXPECT_EQ(cli("check --suite nothing").status, 2);
  // p = 0 with a = q^-1 puts a zero factor theta(a q) in every denominator.
  EXPECT_EQ(cli("table --family estirling --n 3 --p 0 --q 0.5 --a 2 --b 0.3").status, 3);
}

TEST(Cli, CheckReports) {
  const CliRun vacuous = cli("check --suite worpitzky --trials 0");
  EXPECT_EQ(vacuous.status, 0);
  EXPECT_NE(vacuous.out.find("PASS"), std::string::npos);
  const CliRun theta = cli("check --suite theta --trials 100 --seed 7");
  EXPECT_EQ(theta.status, 0);
  EXPECT_NE(theta.out.find("theta                     100      100"), std::string::npos) << theta.out;
  EXPECT_NE(theta.out.find("seed 7"), std::string::npos);
  // A tolerance nothing can meet reports failures with their parameters.
  const CliRun strict = cli("check --suite theta --trials 3 --seed 7 --tol 1e-300");
  EXPECT_EQ(strict.status, 1);
  EXPECT_NE(strict.out.find("FAIL theta trial 0"), std::string::npos) << strict.out;
  EXPECT_NE(strict.out.find("  p = "), std::string::npos);
}

TEST(Cli, DegenerateChains) {
  EXPECT_EQ(cli("degenerate --family stirling --n 7").status, 0);
  EXPECT_EQ(cli("degenerate --family eulerian --n 6").status, 0);
  const CliRun lah = cli("degenerate --family lah --n 6 --format json");
  ASSERT_EQ(lah.status, 0);
  const auto doc = nlohmann::json::parse(lah.out);
  EXPECT_TRUE(doc["q_one_matches_classical"].get<bool>());
  EXPECT_EQ(cli("degenerate --family qstirling --n 3").status, 2);
}
