#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "tra/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tra-spectra");
  std::vector<const char*> argv;
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out, err;
  const int code = tra::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) {
    v.push_back(l);
  }
  return v;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tra_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("spectrum table") {
    const Run r = run({"spectrum", "--v0", "10", "--vplus", "-80"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 6);
    CHECK(l[0] == "level,N=10,N=30,N=50,N=100,exact");
    CHECK(l[5].find("0.178285719098717") != std::string::npos);
    CHECK(l[5].find("0.179109341547431") != std::string::npos);
    // deterministic
    CHECK(run({"spectrum", "--v0", "10", "--vplus", "-80"}).out == r.out);
  }

  TEST_CASE("text layout and single N") {
    const Run r = run({"spectrum", "--v0", "10", "--vplus", "-80", "--N", "30", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("19.564814269481  19.564814269481") != std::string::npos);
  }

  TEST_CASE("dimensionless units flip the sign of the energies") {
    const Run r = run({"spectrum", "--v0", "10", "--vplus", "-80", "--N", "30", "--units", "dimensionless"});
    CHECK(r.code == 0);
    CHECK(lines(r.out)[1].find(",-19.56481426948") != std::string::npos);
  }

  TEST_CASE("empty spectrum is not an error") {
    const Run r = run({"spectrum", "--v0", "0", "--vplus", "0"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 1);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"spectrum", "--v0", "abc"}).code == 2);
    CHECK(run({"spectrum", "--bogus"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    const Run bad = run({"spectrum", "--v0", "10", "--vplus", "-80", "--lambda", "-1", "--units", "kelvin"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("configuration error") != std::string::npos);
    CHECK(run({"spectrum", "--v0", "10", "--vplus", "-80", "--N", "10", "--nu", "-12"}).code != 0);
  }

  TEST_CASE("family B root switch") {
    const Run neg = run({"spectrum", "--family", "B", "--v0", "400", "--vminus", "150", "--N", "9"});
    CHECK(neg.code == 0);
    CHECK(lines(neg.out).size() == 6);
    const Run pos = run({"spectrum", "--family", "B", "--v0", "400", "--vminus", "150", "--N", "9", "--nu-root", "positive"});
    CHECK(pos.code == 2);
    CHECK(pos.err.find("no admissible mu") != std::string::npos);
    CHECK(run({"spectrum", "--family", "B", "--v0", "400", "--vminus", "150", "--nu-root", "up"}).code == 2);
  }

  TEST_CASE("config file with command-line override") {
    const auto path = temp_file("config.json");
    {
      std::ofstream f(path);
      f << R"({"v0": 10, "vplus": -80, "N": [30], "format": "csv"})";
    }
    const Run from_file = run({"spectrum", "--config", path.string()});
    CHECK(from_file.code == 0);
    CHECK(lines(from_file.out)[0] == "level,N=30,exact");
    const Run override = run({"spectrum", "--config", path.string(), "--N", "10"});
    CHECK(lines(override.out)[0] == "level,N=10,exact");
    {
      std::ofstream f(path);
      f << R"({"v0": 10, "colour": 3})";
    }
    CHECK(run({"spectrum", "--config", path.string()}).code == 2);
    std::filesystem::remove(path);
  }

  TEST_CASE("json report") {
    const auto path = temp_file("spec.json");
    const Run r = run({"spectrum", "--v0", "10", "--vplus", "-80", "--N", "10,30", "--json", path.string()});
    CHECK(r.code == 0);
    std::ifstream f(path);
    const nlohmann::json j = nlohmann::json::parse(f);
    CHECK(j.contains("runs"));
    CHECK(j["runs"].size() == 2);
    std::filesystem::remove(path);
  }

  TEST_CASE("phase shift columns") {
    const Run r = run({"phase-shift", "--v0", "10", "--vplus", "-80", "--points", "50", "--unwrap"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l.size() == 51);
    CHECK(l[0] == "eps,E,delta_rad,delta_unwrapped");
    CHECK(l[1].rfind("0.01,0.005,", 0) == 0);
    const Run plain = run({"phase-shift", "--v0", "10", "--vplus", "-80", "--points", "5"});
    CHECK(lines(plain.out)[0] == "eps,E,delta_rad");
    CHECK(run({"phase-shift", "--v0", "10", "--vplus", "-80", "--eps-min", "-1"}).code == 2);
  }

  TEST_CASE("wavefunction columns") {
    const Run r = run({"wavefunction", "--v0", "10", "--vplus", "-80", "--points", "100"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l.size() == 101);
    CHECK(l[0] == "r,psi_0,psi_1,psi_2,psi_3,psi_4");
    const Run two = run({"wavefunction", "--v0", "10", "--vplus", "-80", "--levels", "1,3", "--points", "10"});
    CHECK(lines(two.out)[0] == "r,psi_1,psi_3");
    CHECK(run({"wavefunction", "--v0", "10", "--vplus", "-80", "--levels", "7"}).code == 2);
  }

  TEST_CASE("verify and scan-plateau") {
    const Run v = run({"verify", "--v0", "10", "--vplus", "-80", "--N", "30", "--quick"});
    CHECK(v.code == 0);
    CHECK(v.out.find("FAIL") == std::string::npos);
    const Run bad = run({"verify", "--v0", "10", "--vplus", "-80", "--N", "10", "--nu", "-12", "--quick"});
    CHECK(bad.code == 1);
    const Run s = run({"scan-plateau", "--v0", "10", "--vplus", "-80", "--N", "10", "--points", "21"});
    CHECK(s.code == 0);
    CHECK(lines(s.out).size() == 22);
    CHECK(lines(s.out)[0].rfind("nu,level_0", 0) == 0);
  }
}
