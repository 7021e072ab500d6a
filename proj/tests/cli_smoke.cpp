// End-to-end checks of the command-line tool: exit codes, JSON round-trip,
// CSV shape. Drives the built binary through popen.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef ROMPOLY_CLI_PATH
#error "ROMPOLY_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ROMPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("classify succeeds and reports the Romanovski weight") {
  const auto r = run_cli("classify --a 1 --b 0 --c 1 --d -1 --e -4");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["rows"][0][0] == "ComplexRoots");
  CHECK(doc["rows"][0][1] == "Romanovski");
  CHECK(doc["rows"][0][8] == "3/2"); // p
  CHECK(doc["rows"][0][9] == "-4");  // q
}

TEST_CASE("classify of sigma = 0 exits with the usage code") {
  const auto r = run_cli("classify --a 0 --b 0 --c 0 --d 1 --e 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("unknown flags exit with the usage code") {
  const auto r = run_cli("classify --nope 3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("bad family parameters exit with the domain code") {
  const auto r = run_cli("poly --family nosuch --n 0..2");
  CHECK(r.exit_code == 3);
  const auto r2 = run_cli("spectrum --potential scarf2 --params a=10,b=5 --nmax 99");
  CHECK(r2.exit_code == 3);
}

TEST_CASE("hermite table matches the classical coefficients") {
  const auto r = run_cli("poly --family hermite --n 0..4");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  REQUIRE(doc["rows"].size() == 5);
  const auto& h4 = doc["rows"][4][1];
  CHECK(h4[0] == "12");
  CHECK(h4[2] == "-48");
  CHECK(h4[4] == "16");
}

TEST_CASE("json output round-trips byte-identically") {
  const auto r = run_cli("poly --family romanovski --params p=7/2,q=-4 --n 0..3");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("csv output carries a stable header") {
  const auto r =
      run_cli("--format csv spectrum --potential scarf2 --params a=10,b=5,alpha=1 "
              "--nmax 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,energy,energy_alt", 0) == 0);
  // e_1 = 19 somewhere in the table
  CHECK(r.out.find("19") != std::string::npos);
}

TEST_CASE("spectrum emits both Scarf II conventions") {
  const auto r =
      run_cli("spectrum --potential scarf2 --params a=10,b=5,alpha=1 --nmax 9");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  REQUIRE(doc["rows"].size() == 10);
  CHECK(doc["rows"][1][1].get<double>() == doctest::Approx(19.0));
  CHECK(doc["rows"][1][2].get<double>() == doctest::Approx(-81.0));
}

TEST_CASE("wavefunction grids carry small residuals") {
  const auto r = run_cli(
      "wavefunction --potential scarf2 --params a=10,b=5 --n 2 --grid -2:2:21");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  REQUIRE(doc["rows"].size() == 21);
  for (const auto& row : doc["rows"])
    CHECK(row[4].get<double>() < 1e-8);
}

TEST_CASE("angular grid clamps theta and emits the no-counterpart case") {
  const auto r = run_cli("angular --l 1 --m 2 --theta-grid 0.01:3.13:99");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["rows"].size() == 99);
}

TEST_CASE("kg command reports consistent roots") {
  const auto r = run_cli("kg --A 1 --B 1 --mu 1 --n 1");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  for (const auto& row : doc["rows"])
    CHECK(row[5].get<double>() < 1e-9);
}

TEST_CASE("check subcommand runs a single green suite") {
  const auto r = run_cli("check --suite angular");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  for (const auto& row : doc["rows"])
    CHECK(row[2].get<bool>());
}

}
