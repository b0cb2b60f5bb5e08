#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "menhir");
  std::ostringstream out;
  std::ostringstream err;
  const int code = menhir::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run_cli(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("compose: worked example in JSON") {
  const auto doc =
      run_json({"compose", "--dim", "2", "--k", "2", "--v", "0.6,0", "--v", "0.333333333333,0.666666666667"});
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "compose");
  for (const char* key : {"inputs", "parameters", "result", "diagnostics"}) CHECK(doc.contains(key));
  const auto v = doc["result"]["velocity"].get<std::vector<double>>();
  REQUIRE(v.size() == 2);
  CHECK(std::abs(v[0] - 7.0 / 9.0) < 1e-12);
  CHECK(std::abs(v[1] - 4.0 / 9.0) < 1e-12);
  const double speed = doc["result"]["speed"];
  CHECK(speed < 1.0);
  CHECK(doc["result"]["rapidity"].get<double>() == doctest::Approx(std::atanh(speed)).epsilon(1e-15));
  CHECK(doc["parameters"]["k"] == 2);
}

TEST_CASE("compose: collinear and identity cases") {
  const auto one = run_json({"compose", "--dim", "1", "--k", "2", "--v", "0.5", "--v", "0.5"});
  CHECK(one["result"]["velocity"][0].get<double>() == doctest::Approx(0.8).epsilon(1e-15));

  const auto id = run_json({"compose", "--dim", "3", "--k", "1", "--v", "0,0,0", "--v", "0.1,0.2,0.3"});
  CHECK(id["result"]["velocity"].get<std::vector<double>>() == std::vector<double>{0.1, 0.2, 0.3});
}

TEST_CASE("compose: fold order is left to right") {
  const auto doc = run_json({"compose", "--v", "0.3,0.1", "--v", "-0.2,0.5", "--v", "0.1,-0.4"});
  CHECK(doc["result"]["fold_order"] == "((v1 (+) v2) (+) v3)");
  using namespace menhir;
  const auto a = embed({0.3, 0.1});
  const auto b = embed({-0.2, 0.5});
  const auto c = embed({0.1, -0.4});
  const auto expect = relativistic_add(relativistic_add(a, b), c);
  const auto v = doc["result"]["velocity"].get<std::vector<double>>();
  CHECK(std::abs(v[0] - expect[0]) < 1e-15);
  CHECK(std::abs(v[1] - expect[1]) < 1e-15);
}

TEST_CASE("compose: k = inf routes to the limit product with a warning") {
  const auto doc = run_json({"compose", "--k", "inf", "--v", "0.5,0", "--v", "0,0.5"});
  CHECK(doc["parameters"]["k"] == "inf");
  CHECK(doc["diagnostics"]["warnings"].size() == 1);
  const auto expect = menhir::limit_add(menhir::embed({0.5, 0.0}), menhir::embed({0.0, 0.5}));
  CHECK(std::abs(doc["result"]["velocity"][0].get<double>() - expect[0]) < 1e-15);
}

TEST_CASE("menhir and scale subcommands") {
  const auto m = run_json({"menhir", "--dim", "2", "--a", "0.3333333333333333,0", "--b", "0.2,0.4"});
  CHECK(std::abs(m["result"]["point"][0].get<double>() - 7.0 / 13.0) < 1e-15);
  CHECK(std::abs(m["result"]["point"][1].get<double>() - 4.0 / 13.0) < 1e-15);

  const auto s = run_json({"scale", "--k", "2", "--v", "0.3333333333333333,0"});
  CHECK(std::abs(s["result"]["point"][0].get<double>() - 0.6) < 1e-15);

  const auto inv = run_json({"scale", "--inverse", "--k", "2", "--v", "0.6,0"});
  CHECK(std::abs(inv["result"]["point"][0].get<double>() - 1.0 / 3.0) < 1e-15);
  CHECK(inv["parameters"]["inverse"] == true);
}

TEST_CASE("identities subcommand") {
  const auto h = run_json({"identities", "--algebra", "h", "--builtin", "--samples", "500"});
  const auto& rows = h["result"]["builtin"];
  REQUIRE(rows.size() == 7);
  for (const auto& row : rows) {
    const std::string name = row["name"];
    const bool expect_hold = name.find("(i") != std::string::npos;
    CHECK_MESSAGE(row["holds"] == expect_hold, name);
    CHECK(row["witness"].is_null() == expect_hold);
  }
  CHECK(h["parameters"]["product"] == "menhir");

  const auto r = run_json({"identities", "--algebra", "r", "--builtin", "--samples", "200"});
  for (const auto& row : r["result"]["builtin"]) CHECK(row["holds"] == true);

  const auto o = run_json({"identities", "--algebra", "o", "--survey", "4", "--seed", "7", "--samples", "300"});
  bool found = false;
  for (const auto& row : o["result"]["survey"]["holders"]) {
    if (row["name"] == "identity (iii)") found = true;
    CHECK(row["derivation"] != "none");
  }
  CHECK(found);
  CHECK_FALSE(o["result"].contains("builtin"));
}

TEST_CASE("JSON output is byte-identical for identical flags") {
  const std::vector<std::string> args{"identities", "--algebra", "c", "--survey", "3", "--samples", "200",
                                      "--seed",     "42",        "--json"};
  CHECK(run_cli(args).out == run_cli(args).out);
  const std::vector<std::string> comp{"compose", "--v", "0.1,0.2,0.3", "--v", "0.4,-0.1,0.2", "--json"};
  CHECK(run_cli(comp).out == run_cli(comp).out);
}

TEST_CASE("printed numbers round-trip exactly") {
  const auto r = run_cli({"compose", "--v", "0.1,0.2,0.3", "--v", "0.4,-0.1,0.2", "--json"});
  const auto doc = json::parse(r.out);
  const auto direct =
      menhir::relativistic_add(menhir::embed({0.1, 0.2, 0.3}), menhir::embed({0.4, -0.1, 0.2}));
  const auto v = doc["result"]["velocity"].get<std::vector<double>>();
  REQUIRE(v.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(v[i] == direct[i + 1]);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"compose", "--v", "1.2,0", "--v", "0.1,0"}).code == 2);
  CHECK(run_cli({"compose", "--v", "0.6,0.8", "--v", "0.1,0"}).code == 2);
  CHECK(run_cli({"compose", "--dim", "2", "--v", "0.1,0,0", "--v", "0.1,0"}).code == 2);
  CHECK(run_cli({"compose", "--v", "0.1,0", "--v", "0.1,0,0"}).code == 2);
  CHECK(run_cli({"menhir", "--a", "0.1", "--b", "0.1,0.2"}).code == 2);

  CHECK(run_cli({"compose", "--v", "0.1"}).code == 1);
  CHECK(run_cli({"compose", "--v", "abc", "--v", "0.1"}).code == 1);
  CHECK(run_cli({"compose", "--k", "0", "--v", "0.1", "--v", "0.1"}).code == 1);
  CHECK(run_cli({"compose", "--dim", "5", "--v", "0.1", "--v", "0.1"}).code == 1);
  CHECK(run_cli({"scale", "--k", "inf", "--v", "0.1"}).code == 1);
  CHECK(run_cli({"identities", "--algebra", "x"}).code == 1);
  CHECK(run_cli({"identities", "--algebra", "h", "--survey", "5"}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("negative components with the equals form") {
  const auto doc = run_json({"compose", "--v=-0.5,0.2", "--v", "0.5,-0.2"});
  const auto v = doc["result"]["velocity"].get<std::vector<double>>();
  CHECK(std::abs(v[0]) < 1e-15);
  CHECK(std::abs(v[1]) < 1e-15);
}

TEST_CASE("component parsing") {
  using menhir::cli::parse_components;
  CHECK(parse_components("0.5") == std::vector<double>{0.5});
  CHECK(parse_components("+0.5,-1e-3") == std::vector<double>{0.5, -1e-3});
  CHECK_THROWS(parse_components(""));
  CHECK_THROWS(parse_components("0.1,"));
  CHECK_THROWS(parse_components("0.1;0.2"));
}
