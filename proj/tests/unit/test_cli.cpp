#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "padic/cli.hpp"

using padic::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// log10 of a decimal that may lie far outside the range of double.
double log10_of(const std::string& s) {
  auto e = s.find('e');
  if (e == std::string::npos) return std::log10(std::stod(s));
  return std::log10(std::stod(s.substr(0, e))) + std::stod(s.substr(e + 1));
}

}  // namespace

TEST_CASE("eval") {
  auto r = invoke({"--prime", "5", "eval", "bump", "p^2", "--k", "2", "--bit", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 * 5^4\n");
  CHECK(invoke({"eval", "pair_f", "0"}).out == "0\n");
  auto bad = invoke({"eval", "pair_f", "1+*"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("parse error") != std::string::npos);
  auto coarse = invoke({"--prime", "3", "eval", "bump", "1 * 3^2 (mod 3^4)", "--k", "2", "--bit", "1"});
  CHECK(coarse.code == 3);
  CHECK(coarse.err.find("at least 5 digits") != std::string::npos);
  auto j = nlohmann::json::parse(invoke({"--format", "json", "eval", "identity", "1/3"}).out);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("config").at("prime") == 2);
  CHECK(j.at("value") == "1/3 * 2^0");
  CHECK(invoke({"eval", "nope", "1"}).code == 2);
  CHECK(invoke({"--prime", "4", "eval", "zero", "1"}).code == 2);
  CHECK(invoke({"--precision", "4", "eval", "zero", "1"}).code == 2);
  // Entries on Z_p reject points outside it.
  CHECK(invoke({"eval", "pair_f", "1/2"}).code == 2);
}

TEST_CASE("verify") {
  auto r = invoke({"--prime", "5", "verify", "bump", "strict-fail", "--k", "3", "--coeffs", "0,2,3"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("config").at("seed") == 1);
  CHECK(j.at("details").at("trace").at("rows").size() == 5);
  CHECK(invoke({"verify", "fbeta", "unbounded-derivative"}).code == 0);
  CHECK(invoke({"verify", "fbeta", "no-such-claim"}).code == 2);
  auto h = invoke({"--prime", "3", "verify", "haar", "E-prefix", "--prefix", "10"});
  CHECK(h.code == 0);
  auto hj = nlohmann::json::parse(h.out);
  CHECK(hj.at("reports").size() == 10);
  CHECK(invoke({"--prime", "2", "verify", "haar", "Y0"}).code == 0);
  // A claim that fails gives exit 1: far too few sets to reach the bound.
  CHECK(invoke({"verify", "lip", "lip-fails", "--max-index", "3"}).code == 1);
}

TEST_CASE("table") {
  auto r = invoke({"table", "lip_fN", "--alpha", "2", "--n-max", "10000"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line, last;
  std::getline(lines, line);
  CHECK(line == "k,n,abs_a_n,abs_a_n_decimal,abs_a_n_times_n,abs_a_n_times_n_alpha,running_sup");
  while (std::getline(lines, line)) last = line;
  CHECK(log10_of(last.substr(last.rfind(',') + 1)) > 2);
  auto z = invoke({"table", "zero-function", "--n-max", "50"});
  std::istringstream zl(z.out);
  std::getline(zl, line);
  while (std::getline(zl, line)) CHECK(line.substr(line.find(',', line.find(',') + 1)) == ",0,0,0,0,0");
  // alpha = 1: the |a_n| n column stays below p.
  auto one = invoke({"table", "lip", "--alpha", "1", "--n-max", "2000"});
  std::istringstream ol(one.out);
  std::getline(ol, line);
  double worst = 0;
  while (std::getline(ol, line)) worst = std::max(worst, std::stod(line.substr(line.rfind(',') + 1)));
  CHECK(worst <= 2);
  auto n1 = nlohmann::json::parse(invoke({"--format", "json", "table", "lip", "--criterion", "n1", "--n-max", "500"}).out);
  CHECK(n1.at("decays") == true);
}

TEST_CASE("haar, list and output files") {
  auto a = invoke({"--seed", "9", "haar", "--samples", "20000"});
  auto b = invoke({"--seed", "9", "haar", "--samples", "20000"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("k,target,estimate,stderr,z_score", 0) == 0);
  auto l = invoke({"list"});
  CHECK(l.out.find("pair_g") != std::string::npos);
  CHECK(l.out.find("g-at-0") != std::string::npos);
  const std::string path = "cli_test_output.json";
  CHECK(invoke({"--format", "json", "--out", path, "list"}).code == 0);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  CHECK(j.at("schema") == 1);
  std::remove(path.c_str());
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}
