#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "lzeta/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = lzeta::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli compute") {
  const Outcome r = call({"compute", "zeta", "--s", "3", "--method", "root15", "--digits", "50", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["constant"] == "zeta(3)");
  CHECK(j["value"] == "1.2020569031595942853997381615114499907649862923404");
  CHECK(j.dump() + "\n" == r.out);

  CHECK(call({"compute", "pi", "--power", "1", "--method", "example62", "--digits", "30"}).out.find(
            "value: 3.14159265358979323846264338327\n") != std::string::npos);
  CHECK(call({"compute", "log", "--p", "2", "--digits", "20"}).out.find("value: 0.69314718055994530941\n") !=
        std::string::npos);
  CHECK(call({"--format", "json", "compute", "zeta3-first-order"}).out.find("\"oracle_difference\":\"2.88e-10\"") !=
        std::string::npos);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"compute", "zeta", "--s", "7", "--method", "p3", "--digits", "80"};
  CHECK(call(args).out == call(args).out);
  const Outcome timed = call({"compute", "zeta", "--s", "3", "--timing"});
  CHECK(timed.out.find("wall_time") != std::string::npos);
}

TEST_CASE("cli coeffs") {
  const Outcome r = call({"coeffs", "--constant", "zeta", "--k", "1", "--method", "p3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> coeffs;
  for (const auto& e : j["entries"]) coeffs.push_back(e["coeff"]);
  CHECK(coeffs == std::vector<std::string>{"682/201285", "-296/355", "-488/355", "74/355"});
  CHECK(j.dump() + "\n" == r.out);

  const Outcome pos = call({"coeffs", "--constant", "zeta", "--k", "1", "--method", "p3", "--rewrite-positive-q"});
  CHECK(pos.out.find("-exp(") == std::string::npos);
  CHECK(call({"coeffs", "--constant", "zeta", "--k", "1", "--method", "root15"}).out.find("\"zeta(3)\"") !=
        std::string::npos);
  CHECK(call({"coeffs", "--constant", "pi", "--power", "5", "--method", "prop_pi5"}).code == 0);
  CHECK(call({"coeffs", "--constant", "log", "--p", "3"}).code == 0);
}

TEST_CASE("cli verify") {
  CHECK(call({"verify", "--identity", "t1c3", "--k", "1", "--t", "0.5,0", "--digits", "60"}).code == 0);
  CHECK(call({"verify", "--identity", "t1c2", "--k", "2", "--t", "0.9,0.3", "--digits", "50"}).code == 0);
  CHECK(call({"verify", "--identity", "t1c1", "--t", "1.1,-0.4"}).code == 0);
  CHECK(call({"verify", "--identity", "multisection", "--p", "7", "--s", "-9"}).code == 0);
  CHECK(call({"verify", "--identity", "lemma-p4", "--q", "0.2", "--s", "-5"}).code == 0);
  CHECK(call({"verify", "--identity", "lemma-sech", "--q", "0.05"}).code == 0);
  CHECK(call({"verify", "--identity", "zeta-free", "--k", "1", "--a", "3/2", "--t", "0.7,0.2"}).code == 0);
  // low digit counts still produce a well-formed report
  const Outcome r = call({"--format", "json", "verify", "--identity", "t1c3", "--t", "0.5,0", "--digits", "4"});
  CHECK(nlohmann::ordered_json::parse(r.out)["identity"] == "t1c3");
}

TEST_CASE("cli exit codes") {
  CHECK(call({}).code == lzeta::cli::kUsage);
  CHECK(call({"compute"}).code == lzeta::cli::kUsage);
  CHECK(call({"compute", "zeta", "--s", "3", "--bogus"}).code == lzeta::cli::kUsage);
  CHECK(call({"compute", "zeta", "--s", "x"}).code == lzeta::cli::kUsage);
  CHECK(call({"compute", "zeta", "--s", "3", "--method", "p5"}).code == lzeta::cli::kUsage);
  CHECK(call({"compute", "zeta", "--s", "4"}).code == lzeta::cli::kUsage);
  CHECK(call({"compute", "zeta", "--s", "3", "--digits", "0"}).code == lzeta::cli::kUsage);
  CHECK(call({"compute", "log", "--p", "7"}).code == lzeta::cli::kUsage);
  CHECK(call({"--format", "xml", "compute", "zeta", "--s", "3"}).code == lzeta::cli::kUsage);
  CHECK(call({"verify", "--identity", "t1c3", "--t", "-0.5,0"}).code == lzeta::cli::kDomain);
  CHECK(call({"verify", "--identity", "lemma-sech", "--q", "1.5"}).code == lzeta::cli::kDomain);
  CHECK(call({"verify", "--identity", "lemma-sech", "--q", "0.9999999"}).code == lzeta::cli::kConvergence);
  const Outcome bad = call({"coeffs", "--constant", "zeta"});
  CHECK(bad.code == lzeta::cli::kUsage);
  CHECK(bad.out.empty());
  CHECK(!bad.err.empty());
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("cli bench") {
  const Outcome r = call({"--format", "json", "bench", "--s", "3", "--method", "root15", "--max-terms", "8"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["points"].size() == 8);
  CHECK(j["expected_slope"] == "5.284");
}
