#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gwt/cli.hpp"

using namespace gwt;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

const std::string kQuartic = "x0^4+2*x1^4+5*x2^4+x0*x1*x2^2+3*x0^2*x1*x2+x0^3*x1";

}  // namespace

TEST_CASE("cli scan") {
  auto r = run({"scan", "--max-n", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == "3 5 11 even\n");
  r = run({"scan", "--max-r", "5000", "--max-m", "5000", "--max-n", "5000"});
  CHECK(r.out == "3 5 11 even\n3 21 445 even\n3 37 2287 even\n");
  CHECK(run({"scan", "--jobs", "8"}).out == r.out);
  CHECK(run({"scan", "--max-r", "4", "--max-m", "4", "--max-n", "4"}).out.empty());
  CHECK(run({"scan", "--max-n", "zero"}).code == kExitUsage);
  CHECK(run({"scan", "--bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("cli flexes") {
  auto r = run({"flexes", "--field", "gf(7)", "--poly", "x0^3 + x1^3 + x2^3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("seed=20240229") != std::string::npos);
  // two header lines, the column line, nine rows and the total
  CHECK(lines(r.out) == 13);

  r = run({"flexes", "--field", "gf(7)", "--poly", "x0^3+x1^3+x2^3", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["flexes"].size() == 9);
  CHECK(j["total"]["rank"] == 9);

  r = run({"flexes", "--field", "gf(13)", "--poly", "x0^4+x1^4+x2^4"});
  CHECK(r.code == kExitHypothesis);
  CHECK(r.err.find("non-general") != std::string::npos);
  r = run({"flexes", "--field", "gf(13)", "--poly", "x0^2*x2-x1^3"});
  CHECK(r.code == kExitHypothesis);
  CHECK(r.err.find("not smooth") != std::string::npos);
  CHECK(run({"flexes", "--field", "gf(6)", "--poly", "x0^3+x1^3+x2^3"}).code == kExitUsage);
  CHECK(run({"flexes", "--field", "gf(7)", "--poly", "x0^3+x1^2"}).code == kExitUsage);
  CHECK(run({"flexes", "--field", "gf(7)"}).code == kExitUsage);
}

TEST_CASE("cli count") {
  auto r = run({"count", "--field", "gf(13)", "--poly", kQuartic, "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"]["rank"] == 24);
  CHECK(j["count"]["disc"] == "1");
  CHECK(j["comparison"] == "matches 12H");
  CHECK(j["seed"] == 20240229);

  r = run({"count", "--field", "gf(13)", "--poly", kQuartic, "--method", "wronskian", "--divisor-seed", "3",
           "--format", "json"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["count"]["rank"] == 24);
  CHECK(j["divisor_seed"] == 3);
  CHECK(j["zeros"].size() > 0);

  r = run({"count", "--field", "gf(7)", "--poly", "x0^3+x1^3+x2^3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank: 9") != std::string::npos);
  CHECK(r.out.find("skipped") != std::string::npos);

  r = run({"count", "--field", "gf(7)", "--poly", "x0^3+x1^3+x2^3", "--method", "wronskian"});
  CHECK(r.code == kExitHypothesis);
  r = run({"count", "--field", "gf(7)", "--poly", "x0^3+x1^3+x2^3", "--method", "wronskian", "--divisor-seed",
           "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank: 9") != std::string::npos);
  CHECK(run({"count", "--field", "gf(7)", "--poly", "x0^3+x1^3+x2^3", "--method", "other"}).code == kExitUsage);
}

TEST_CASE("cli verify") {
  auto r = run({"verify", "--property", "wronskian-jacobian", "--trials", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run({"verify", "--property", "transition", "--trials", "50", "--field", "gf(101)"}).code == 0);
  CHECK(run({"verify", "--property", "taylor", "--trials", "200"}).code == 0);
  CHECK(run({"verify", "--property", "gw-laws", "--trials", "100"}).code == 0);

  r = run({"verify", "--property", "transition", "--trials", "10", "--corrupt-closed-form"});
  CHECK(r.code == kExitInconsistency);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("counterexample: I=") != std::string::npos);
  for (const char* p : {"wronskian-jacobian", "taylor", "gw-laws"})
    CHECK(run({"verify", "--property", p, "--trials", "20", "--corrupt-closed-form"}).code == kExitInconsistency);
  CHECK(run({"verify", "--property", "nonsense"}).code == kExitUsage);
}

TEST_CASE("cli index") {
  auto r = run({"index", "--field", "gf(7)", "--poly", "x0^3+x1^3+x2^3", "--line", "0 1 6 / 1 0 0 ; 1 0",
                "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["chart"] == "I=1,2;l=2");
  CHECK(j["residue_degree"] == 1);
  CHECK(j["index"]["rank"] == 1);
  CHECK(j["on_divisor"] == true);
  r = run({"index", "--field", "gf(7)", "--poly", "x0^3+x1^3+x2^3", "--line", "0 1 6 / 1 1 1 ; 1 0"});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("cli output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"count", "--field", "gf(13)", "--poly", kQuartic, "--format", "json"},
        std::vector<std::string>{"verify", "--property", "transition", "--trials", "20", "--seed", "5"},
        std::vector<std::string>{"flexes", "--field", "gf(7)", "--poly", "x0^3+x1^3+x2^3"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
