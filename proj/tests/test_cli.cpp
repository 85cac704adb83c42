#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpcert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lpcert::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "lpcert_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gegenbauer table") {
  const auto r = run({"--format", "table", "gegenbauer", "--dim", "48", "--max-degree", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(48t²−1)/47") != std::string::npos);
  const auto zero = run({"--format", "table", "gegenbauer", "--dim", "48", "--max-degree", "0"});
  CHECK(zero.out == "P_0  1\n");
  const auto bad = run({"gegenbauer", "--dim", "2", "--max-degree", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("dimension must be ≥ 3") != std::string::npos);
}

TEST_CASE("expand") {
  const auto r = run({"expand", "--dim", "48", "--poly", "[0,0,1]"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coeffs"] == nlohmann::json::array({"1/48", "0", "47/48"}));
  CHECK(run({"expand", "--poly", "[1,x]"}).code == 2);
}

TEST_CASE("partial products") {
  const auto t1 = run({"partial-products", "--avoid", "T1", "--bound", "lower"});
  REQUIRE(t1.code == 0);
  const auto j = nlohmann::json::parse(t1.out);
  REQUIRE(j.size() == 11);
  CHECK(j[9]["coeffs"][10] == "3260719/7364608");
  const auto t2 = nlohmann::json::parse(run({"partial-products", "--avoid", "T2", "--bound", "lower"}).out);
  CHECK(t2[8]["coeffs"][0] == "7903/40435200");
  CHECK(run({"partial-products", "--avoid", "T3", "--bound", "lower"}).code == 2);
  CHECK(run({"partial-products", "--avoid", "T1", "--bound", "upper"}).code == 0);
}

TEST_CASE("distribution solve exit codes") {
  const auto ok = run({"distribution", "solve", "--support", "-1,-1/2,1/2,-1/3,1/3,-1/6,1/6,0", "--N", "52416000",
                       "--strength", "11", "--antipodal"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["entries"][4]["A"] == 23766960);
  CHECK(run({"distribution", "solve", "--N", "1000"}).code == 3);
  CHECK(run({"distribution", "solve", "--strength", "3"}).code == 2);
}

TEST_CASE("energy, moments and quadrature") {
  const auto e = nlohmann::json::parse(run({"energy", "--potential", "riesz:s=2"}).out);
  CHECK(e["energy"] == "22503930761/840");
  const auto m = nlohmann::json::parse(run({"moments", "--max-degree", "14"}).out);
  CHECK(m["moments"][12]["M_over_N"] != "0");
  CHECK(m["moments"][14]["M_over_N"] == "0");
  const auto qd = nlohmann::json::parse(run({"quadrature-check", "--max-degree", "12"}).out);
  CHECK(qd["exactness"] == 11);
  CHECK(qd["weight_sum"] == "1");
  CHECK(qd["monomial_residuals"][11]["residual"] == "0");
  CHECK(qd["monomial_residuals"][12]["residual"] != "0");

  const fs::path dist = scratch("pair.json");
  std::ofstream(dist) << R"({"N":2,"antipodal":true,"entries":[{"t":"-1","A":1}]})";
  const auto pair = nlohmann::json::parse(run({"quadrature-check", "--distribution", dist.string(), "--max-degree", "2"}).out);
  CHECK(pair["exactness"] == 1);
  CHECK(run({"energy", "--potential", "riesz:s=2", "--distribution", "/nonexistent.json"}).code == 2);
  CHECK(run({"energy", "--potential", "bogus"}).code == 2);
}

TEST_CASE("certify and verify") {
  const fs::path c = scratch("c.json");
  const auto r = run({"--out", c.string(), "certify", "lower", "--avoid", "T2", "--potential", "riesz:s=4"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(c));
  CHECK(j["gap"] == "0");
  CHECK(run({"verify", c.string()}).code == 0);

  auto tampered = j;
  tampered["gegenbauer_coeffs"][0] = "1/2";
  const fs::path t = scratch("tampered.json");
  std::ofstream(t) << tampered.dump(2);
  CHECK(run({"verify", t.string()}).code == 1);

  const fs::path m = scratch("malformed.json");
  std::ofstream(m) << "{ not json";
  CHECK(run({"verify", m.string()}).code == 2);
  std::ofstream(m) << R"({"direction":"lower"})";
  CHECK(run({"verify", m.string()}).code == 2);

  CHECK(run({"certify", "upper", "--avoid", "T1", "--potential", "riesz:s=2"}).code == 2);
  const auto poly = run({"certify", "lower", "--avoid", "T1", "--potential", "poly:[0,0,0,0,0,0,0,0,0,0,0,0,1]"});
  CHECK(poly.code == 0);
  CHECK(nlohmann::json::parse(poly.out)["gap"] == "0");
}

TEST_CASE("sandwich") {
  const auto r = run({"sandwich", "--potential", "poly:[1]"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lower_T1"]["bound"] == "52415999");
  CHECK(j["upper_T1"]["bound"] == "52415999");
  CHECK(j["all_equal"] == true);
}

TEST_CASE("global flags") {
  CHECK(run({"--precision", "29", "gegenbauer"}).code == 2);
  CHECK(run({"--format", "xml", "gegenbauer"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"sandwich", "--potential", "gauss:sigma=1"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> cert = {"certify", "lower", "--avoid", "T1", "--potential", "gauss:sigma=1/2"};
  CHECK(run(cert).out == run(cert).out);
}

TEST_CASE("reproduction checklist command") {
  const auto r = run({"reproduce-paper"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["failed"] == 0);
  CHECK(run({"--precision", "30", "reproduce-paper"}).code == 0);
  const auto bad = run({"--format", "table", "reproduce-paper", "--corrupt-reference", "T2:10:4"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL  T2 PP_10 g_4") != std::string::npos);
  CHECK(run({"reproduce-paper", "--corrupt-reference", "A:1/3"}).code == 1);
  CHECK(run({"reproduce-paper", "--corrupt-reference", "nope"}).code == 2);
}
