#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eufro/cli.hpp"

using namespace eufro;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("table reproduces the symbolic triangle") {
  auto r = run({"table", "--n-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "0:  1\n"
        "1:  rho  1-rho\n"
        "2:  rho^2  1+2rho-2rho^2  1-2rho+rho^2\n"
        "3:  rho^3  1+3rho+3rho^2-3rho^3  4-6rho^2+3rho^3  1-3rho+3rho^2-rho^3\n");
}

TEST_CASE("table at rho = 1 and type B") {
  auto j = run_json({"table", "--n-max", "7", "--rho", "1"});
  CHECK(j["command"] == "table");
  std::vector<std::string> row7;
  for (const auto& r : j["rows"])
    if (r["n"] == 7) row7.push_back(r["value"]);
  CHECK(row7 == std::vector<std::string>{"1", "120", "1191", "2416", "1191", "120", "1", "0"});

  auto b = run({"table", "--n-max", "6", "--type-b"});
  CHECK(b.out.find("6:  1  722  10543  23548  10543  722  1\n") != std::string::npos);
}

TEST_CASE("pmf, cdf and moments") {
  auto j = run_json({"pmf", "--n", "3", "--rho", "1/2"});
  std::vector<std::string> p;
  for (const auto& r : j["rows"]) p.push_back(r["probability"]);
  CHECK(p == std::vector<std::string>{"1/48", "23/48", "23/48", "1/48"});
  CHECK(j["rows"][0]["k"] == 0);

  auto m = run_json({"moments", "--n", "5", "--rho", "0", "--m", "1"});
  CHECK(m["rows"][0]["moment"] == "3");

  auto c = run_json({"cdf", "--n", "2", "--rho", "0", "--k", "2"});
  CHECK(c["rows"][0]["cdf"] == "1");

  auto f = run_json({"pmf", "--n", "2", "--rho", "0.5", "--float"});
  CHECK(f["rows"][1]["probability"] == "3/4");
  CHECK(f["rows"][1]["probability_float"] == 0.75);
}

TEST_CASE("llt and ldev tables") {
  auto j = run_json({"llt", "--n", "11", "--rho", "0", "--ell", "0"});
  double approx = j["rows"][6]["approx"];
  CHECK(approx == doctest::Approx(0.3989423).epsilon(1e-6));
  CHECK(j["summary"].contains("max_abs_error"));

  auto l = run_json({"llt", "--n", "32", "--rho", "0.5", "--ell", "2"});
  CHECK(l["rows"].size() == 33);
  CHECK(double(l["summary"]["max_abs_error"]) < 1e-5);

  auto d = run_json({"ldev", "--n", "32", "--rho", "0.5"});
  for (const auto& r : d["rows"]) CHECK(std::abs(double(r["ratio"]) - 1) < 0.2);
}

TEST_CASE("apportion commands") {
  CHECK(run({"apportion", "hare", "0.5", "0.3", "0.2", "--seats", "7"}).out == "4 2 1\n");
  CHECK(run({"apportion", "divisor", "--rho", "1", "5", "3", "1", "--seats", "3"}).out == "2 1 0\n");
  auto tie = run({"apportion", "divisor", "6", "6", "--seats", "3"});
  CHECK(tie.code == exit_tie);
  CHECK(tie.err.find("tie") != std::string::npos);
  CHECK(tie.err.find("1, 2") != std::string::npos);
  CHECK(run({"apportion", "sainte-lague", "5", "3", "1", "--seats", "3"}).out ==
        run({"apportion", "divisor", "--rho", "1/2", "5", "3", "1", "--seats", "3"}).out);
  CHECK(run({"apportion", "dhondt", "5", "3", "1", "--seats", "3"}).out == "1 1 1\n");
  CHECK(run({"apportion", "dhondt", "--alias", "dhondt=1", "5", "3", "1", "--seats", "3"}).out == "2 1 0\n");
  auto j = run_json({"apportion", "droop", "5", "3", "2", "--seats", "7"});
  CHECK(j["summary"]["method"] == "droop");
  CHECK(j["rows"][0]["seats"] == 4);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"bogus"}).code == exit_usage);
  CHECK(run({"pmf"}).code == exit_usage);
  CHECK(run({"pmf", "--n", "0"}).code == exit_usage);
  CHECK(run({"pmf", "--n", "3", "--rho", "x/y"}).code == exit_usage);
  CHECK(run({"table", "--format", "yaml"}).code == exit_usage);
  CHECK(run({"apportion", "nosuch", "1", "--seats", "2"}).code == exit_usage);
  auto h = run({"--help"});
  CHECK(h.code == exit_ok);
  CHECK(h.out.find("simulate") != std::string::npos);
  CHECK(run({"selftest", "--quick"}).code == exit_ok);
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (auto args : std::vector<std::vector<std::string>>{{"pmf", "--n", "4", "--rho", "2/7", "--float"},
                                                         {"llt", "--n", "16", "--rho", "1/3"},
                                                         {"table", "--n-max", "4"}}) {
    args.insert(args.end(), {"--format", "json"});
    auto r = run(args);
    REQUIRE(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
    CHECK(parsed["schema_version"] == "1");
  }
}

TEST_CASE("CSV output") {
  auto r = run({"pmf", "--n", "2", "--rho", "1/2", "--format", "csv"});
  CHECK(r.out == "k,probability\r\n0,1/8\r\n1,3/4\r\n2,1/8\r\n");
  auto s = run({"selftest", "--quick", "--format", "csv"});
  CHECK(s.out.rfind("check,passed,detail\r\n", 0) == 0);
}

TEST_CASE("simulate is deterministic and honours config files and the sample default") {
  std::vector<std::string> args{"simulate", "round", "--n", "3", "--rho", "0.25", "--samples", "20000", "--seed", "9",
                                "--format", "json"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(double(j["summary"]["tv_distance"]) < 0.03);
  CHECK(j["rows"][0].contains("stderr"));

  auto path = std::filesystem::temp_directory_path() / "eufro_cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"n": 3, "rho": 0.5, "gamma": 0, "N": 10000, "samples": 20000, "seed": 5})";
  }
  auto c = run({"simulate", "discrepancy", "--config", path.string(), "--format", "json"});
  REQUIRE(c.code == 0);
  auto cj = json::parse(c.out);
  CHECK(cj["params"]["samples"] == 20000);
  for (const auto& row : cj["rows"])
    if (row["k"] == 0) CHECK(std::abs(double(row["empirical"]) - 0.75) < 0.02);
  auto over = run({"simulate", "discrepancy", "--config", path.string(), "--samples", "1000", "--format", "json"});
  CHECK(json::parse(over.out)["params"]["samples"] == 1000);
  std::filesystem::remove(path);

  setenv("EUFRO_DEFAULT_SAMPLES", "1234", 1);
  auto e = run({"simulate", "symmetric", "--n", "2", "--format", "json"});
  unsetenv("EUFRO_DEFAULT_SAMPLES");
  CHECK(json::parse(e.out)["params"]["samples"] == 1234);

  auto sb = run({"simulate", "seat-bias", "--n", "3", "--p1", "0.37", "--N", "1000,10000", "--samples", "5000",
                 "--format", "csv"});
  CHECK(sb.code == 0);
  CHECK(sb.out.rfind("N,k,excess,empirical,theoretical,stderr\r\n", 0) == 0);
  CHECK(run({"simulate", "teleport"}).code == exit_usage);
}
