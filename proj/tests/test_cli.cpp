#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "nchopf/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = nchopf::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

const char* kKappaEmpty = R"({"basis": "kappa", "q": 2, "terms": [{"n": 0, "arcs": []}]})";

}  // namespace

TEST_CASE("enumerate lists S_3(2)") {
  const auto r = run({"enumerate", "--n", "3", "--q", "2"});
  CHECK(r.code == 0);
  CHECK(line_count(r.out) == 5);
  CHECK(r.out.find("3; 1-1-3") != std::string::npos);
}

TEST_CASE("formula table matches the oracle table") {
  for (const char* q : {"2", "3"}) {
    const auto formula = run({"table", "--n", "3", "--q", q});
    const auto oracle = run({"table", "--n", "3", "--q", q, "--oracle"});
    CHECK(formula.code == 0);
    CHECK(formula.out == oracle.out);
  }
  const auto pretty = run({"table", "--n", "2", "--q", "2", "--pretty"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("|K|") != std::string::npos);
}

TEST_CASE("antipode fixes the unit") {
  const auto r = run({"antipode", "--basis", "kappa", "--q", "2"}, kKappaEmpty);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["basis"] == "kappa");
  const auto terms = json::parse(r.out)["terms"];
  REQUIRE(terms.size() == 1);
  CHECK(terms[0]["n"] == 0);
  CHECK(terms[0]["coeff"]["coeffs"] == json::array({"1"}));
}

TEST_CASE("exit codes") {
  CHECK(run({"enumerate", "--n", "3", "--q", "4"}).code == nchopf::kExitInvalidInput);
  const auto bad = run({"mul", "--basis", "kappa", "--q", "2"}, "{ not json");
  CHECK(bad.code == nchopf::kExitInvalidInput);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"table", "--n", "8", "--q", "2"}).code == nchopf::kExitBoundExceeded);
  CHECK(run({"frobnicate"}).code == nchopf::kExitInvalidInput);
  CHECK(run({"verify", "--suite", "axioms", "--n", "3", "--q", "2"}).code == nchopf::kExitOk);
}

TEST_CASE("mul output reads back as input") {
  const std::string x = R"({"basis": "kappa", "q": 3, "terms": [{"n": 1, "arcs": []}]})";
  const auto square = run({"mul", "--basis", "kappa", "--q", "3"}, "[" + x + ", " + x + "]");
  REQUIRE(square.code == 0);
  const auto parsed = json::parse(square.out);
  CHECK(parsed["terms"].size() == 3);
  const auto cube = run({"mul", "--basis", "kappa", "--q", "3"}, "[" + square.out + ", " + x + "]");
  REQUIRE(cube.code == 0);
  const auto via_factors =
      run({"mul", "--basis", "kappa", "--q", "3"}, R"({"factors": [)" + x + ", " + square.out + "]}");
  CHECK(json::parse(via_factors.out) == json::parse(cube.out));
}

TEST_CASE("cache directory from the environment wins") {
  const auto env_dir = std::filesystem::temp_directory_path() / "nchopf-cli-env";
  const auto flag_dir = std::filesystem::temp_directory_path() / "nchopf-cli-flag";
  std::filesystem::remove_all(env_dir);
  std::filesystem::remove_all(flag_dir);
  setenv("NCHOPF_CACHE_DIR", env_dir.c_str(), 1);
  const auto r = run({"--cache-dir", flag_dir.string(), "table", "--n", "3", "--q", "2"});
  unsetenv("NCHOPF_CACHE_DIR");
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(env_dir / "supertable-v1-n3-q2.json"));
  CHECK_FALSE(std::filesystem::exists(flag_dir / "supertable-v1-n3-q2.json"));
  std::filesystem::remove_all(env_dir);
  std::filesystem::remove_all(flag_dir);
}

TEST_CASE("convert kappa to chi and back") {
  const std::string x = R"({"basis": "kappa", "q": 2, "terms": [{"n": 3, "arcs": [[1, 3, 1]]}]})";
  const auto chi = run({"convert", "--from", "kappa", "--to", "chi", "--q", "2"}, x);
  REQUIRE(chi.code == 0);
  CHECK(json::parse(chi.out)["basis"] == "chi");
  const auto back = run({"convert", "--from", "chi", "--to", "kappa", "--q", "2"}, chi.out);
  REQUIRE(back.code == 0);
  const auto terms = json::parse(back.out)["terms"];
  REQUIRE(terms.size() == 1);
  CHECK(terms[0]["arcs"] == json::parse(x)["terms"][0]["arcs"]);
  CHECK(terms[0]["coeff"]["coeffs"] == json::array({"1"}));
}

TEST_CASE("pairing kappa* against kappa") {
  const std::string input = R"({"left": {"basis": "kappa_star", "q": 2, "terms": [{"n": 2, "arcs": [[1, 2, 1]]}]},
                                 "right": {"basis": "kappa", "q": 2, "terms": [{"n": 2, "arcs": [[1, 2, 1]], "coeff": 5}]}})";
  const auto r = run({"pair", "--q", "2"}, input);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"]["coeffs"] == json::array({"5"}));
}
