#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("PADIC_VERIFY_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("missing subcommand is a usage error") {
  CHECK(run("").exit_code == 1);
}

TEST_CASE("unusable primes are rejected with exit 1") {
  CHECK(run("verify -p 2 -N 20").exit_code == 1);
  CHECK(run("verify -p 6 -N 20").exit_code == 1);
  RunResult two = run("verify -p 2 -N 20");
  CHECK(two.out.find("out of scope") != std::string::npos);
}

TEST_CASE("large primes need the gamma check waiver") {
  CHECK(run("verify -p 101 -N 20").exit_code == 1);
}

TEST_CASE("gauss subcommand prints the fractional valuation") {
  RunResult r = run("gauss -p 5 -a 1 -N 20");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1/4") != std::string::npos);
}

TEST_CASE("gamma subcommand reports integer points") {
  RunResult r = run("gamma -p 5 --num 2 --den 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5^0 * 1 ::") != std::string::npos);
}

TEST_CASE("verify emits parseable json deterministically") {
  RunResult a = run("verify -p 5 -N 20 --format json");
  RunResult b = run("verify -p 5 -N 20 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  nlohmann::json doc = nlohmann::json::parse(a.out);
  CHECK(doc["config"]["p"] == 5);
  CHECK(doc["config"]["target_digits"] == 20);
}

TEST_CASE("csv output is a header and one row") {
  RunResult r = run("verify -p 5 -N 20 --format csv");
  CHECK(r.exit_code == 0);
  size_t nl = r.out.find('\n');
  REQUIRE(nl != std::string::npos);
  CHECK(r.out.substr(0, nl) ==
        "p,precision,num_odd_chi,U1,U2,U2_check_floor,fit_floor,"
        "Cp_independence_floor");
  CHECK(r.out.substr(nl + 1, 8) == "5,20,2,5");
}

TEST_CASE("strict mode exits 0 or 3 and stays reproducible") {
  RunResult a = run("verify -p 5 -N 20 --strict --format json");
  RunResult b = run("verify -p 5 -N 20 --strict --format json");
  CHECK((a.exit_code == 0 || a.exit_code == 3));
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
}

TEST_CASE("table covers the default prime pair") {
  RunResult r = run("table -N 20");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\n5,20,2,") != std::string::npos);
  CHECK(r.out.find("\n7,20,3,") != std::string::npos);
}

TEST_CASE("environment overrides the default digit target") {
  const char* bin = std::getenv("PADIC_VERIFY_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string("PADIC_VERIFY_N=21 ") + bin +
                    " verify -p 5 --format csv 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), n);
  }
  CHECK(pclose(pipe) == 0);
  CHECK(out.find("\n5,21,2,") != std::string::npos);
}

TEST_CASE("lfun subcommand prints value and derivative") {
  RunResult r = run("lfun -p 5 -k 1 -N 20");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("L_p(0, chi_1 omega)") != std::string::npos);
  CHECK(r.out.find("L_p'(0, chi_1 omega)") != std::string::npos);
}
