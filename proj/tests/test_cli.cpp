// End to end exercises of the installed command line tool. Every test
// shells out to the real binary, so these also pin the exit code
// contract: 0 positive, 1 negative, 2 usage, 3 internal.
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "b2sr/b2.hpp"
#include "b2sr/terms.hpp"
#include "support.hpp"

#ifndef B2SR_CLI_PATH
#error "B2SR_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(B2SR_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  CliResult res;
  res.out = std::move(out);
  if (WIFEXITED(status)) res.code = WEXITSTATUS(status);
  return res;
}

std::string temp_path(const char* name) {
  std::ostringstream os;
  os << "/tmp/b2sr_" << getpid() << "_" << name;
  return os.str();
}

}  // namespace

TEST_CASE("check reports validity with matching exit codes") {
  const CliResult valid = run_cli("check xx xxx");
  CHECK(valid.code == 0);
  CHECK(valid.out == "valid\n");

  const CliResult invalid = run_cli("check xy yx");
  CHECK(invalid.code == 1);
  CHECK(invalid.out.find("invalid (Rho)") != std::string::npos);
}

TEST_CASE("check emits json on request") {
  const CliResult r = run_cli("--json check xy yx");
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("valid") == false);
  CHECK(j.at("failed_condition") == "Rho");
  CHECK(j.at("detail").is_string());

  const auto ok = nlohmann::json::parse(run_cli("--json check xx xxx").out);
  CHECK(ok.at("valid") == true);
  CHECK(ok.at("failed_condition").is_null());
}

TEST_CASE("the basis shapes must be encoded as inequalities") {
  // written as a bare identity the rook shape is refutable: the two sides
  // do not even share content, and check and oracle agree on that
  const CliResult raw =
      run_cli("check x2z2 \"x1z1 + x1z2 + x2z1 + x2z2\"");
  CHECK(raw.code == 1);
  const CliResult raw_oracle =
      run_cli("oracle x2z2 \"x1z1 + x1z2 + x2z1 + x2z2\"");
  CHECK(raw_oracle.code == 1);

  // u <= v encoded as u + v = v is the valid reading
  const CliResult enc =
      run_cli("check \"x2z2 + x1z1 + x1z2 + x2z1\" \"x1z1 + x1z2 + x2z1\"");
  CHECK(enc.code == 0);
}

TEST_CASE("oracle reports the least counterexample") {
  const CliResult r = run_cli("--json oracle xy yx");
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("holds") == false);
  CHECK(j.at("valuations") == 8);
  CHECK(j.at("counterexample").at("x") == "e11");
  CHECK(j.at("counterexample").at("y") == "e12");

  const CliResult text = run_cli("oracle xy yx");
  CHECK(text.code == 1);
  CHECK(text.out.find("refuted by x=e11 y=e12") != std::string::npos);

  const CliResult holds = run_cli("oracle xx xxx");
  CHECK(holds.code == 0);
  CHECK(holds.out.find("holds (5 valuations)") != std::string::npos);
}

TEST_CASE("oracle refuses oversized inputs with a usage error") {
  const CliResult r = run_cli("oracle abcdefghi abcdefghi");
  CHECK(r.code == 2);
  CHECK(r.out.find("refusing") != std::string::npos);

  const CliResult wide =
      run_cli("oracle abcdefghi abcdefghi --max-letters 9");
  CHECK(wide.code == 0);
}

TEST_CASE("oracle threading does not change the output") {
  const CliResult one = run_cli("--json oracle \"xyz + zyx\" xyz");
  const CliResult four =
      run_cli("--json oracle \"xyz + zyx\" xyz --threads 4");
  CHECK(one.code == four.code);
  CHECK(one.out == four.out);
}

TEST_CASE("witness output refutes the identity when fed back in") {
  const CliResult r = run_cli("witness xy yx");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("failed_condition") == "Rho");
  CHECK(j.at("lhs_value") != j.at("rhs_value"));

  b2sr::Valuation val;
  for (const auto& [letter, name] :
       j.at("valuation").get<std::map<std::string, std::string>>()) {
    val.set(b2sr::Letter(letter), b2sr::b2_from_name(name));
  }
  CHECK(!b2sr::holds(ts::P("xy"), ts::P("yx"), val));
  CHECK(b2sr::b2_name(b2sr::eval_poly(ts::P("xy"), val)) ==
        j.at("lhs_value").get<std::string>());
}

TEST_CASE("witness on a valid identity is a negative result") {
  const CliResult r = run_cli("witness xx xxx");
  CHECK(r.code == 1);
  CHECK(r.out.find("valid") != std::string::npos);
}

TEST_CASE("rho prints the position classes") {
  const CliResult r = run_cli("rho xy");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("letters") == nlohmann::json::array({"x", "y"}));
  REQUIRE(j.at("classes").size() == 3);
  CHECK(j.at("classes")[0] == nlohmann::json::array({"x:1"}));
  CHECK(j.at("classes")[1] == nlohmann::json::array({"x:2", "y:1"}));
  CHECK(j.at("classes")[2] == nlohmann::json::array({"y:2"}));
  CHECK(j.at("init_class") == 0);
  CHECK(j.at("term_class") == 2);
}

TEST_CASE("derive then verify round trips through a file") {
  const std::string path = temp_path("roundtrip.json");
  const CliResult d =
      run_cli("derive xxyy yyxx -o " + path);
  REQUIRE(d.code == 0);

  const CliResult v = run_cli("verify " + path + " --against xxyy yyxx");
  CHECK(v.code == 0);
  CHECK(v.out.find("verified: xxyy = yyxx") != std::string::npos);

  const CliResult vjson =
      run_cli("--json verify " + path + " --against xxyy yyxx");
  CHECK(vjson.code == 0);
  const auto j = nlohmann::json::parse(vjson.out);
  CHECK(j.at("verified") == true);
  CHECK(j.at("failures").empty());

  // the same file does not verify against a different identity
  const CliResult wrong = run_cli("verify " + path + " --against xx xxx");
  CHECK(wrong.code == 1);
  CHECK(wrong.out.find("rejected") != std::string::npos);

  std::remove(path.c_str());
}

TEST_CASE("derive prints the proof to stdout by default") {
  const CliResult d = run_cli("derive xx xxx");
  REQUIRE(d.code == 0);
  const auto j = nlohmann::json::parse(d.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("direction") == "lhs<=rhs");
  CHECK(j[0].at("goal") == "xxx");
  CHECK(j[1].at("direction") == "rhs<=lhs");
  CHECK(j[1].at("goal") == "xx");
}

TEST_CASE("derive on a refutable identity is a negative result") {
  const CliResult d = run_cli("derive xy yx");
  CHECK(d.code == 1);
  CHECK(d.out.find("does not hold") != std::string::npos);
}

TEST_CASE("a file missing one direction is rejected") {
  const std::string full = temp_path("pair.json");
  REQUIRE(run_cli("derive xx xxx -o " + full).code == 0);

  std::ifstream in(full);
  nlohmann::json pair;
  in >> pair;
  const std::string half = temp_path("half.json");
  {
    std::ofstream out(half);
    out << pair[0].dump(2) << '\n';
  }
  const CliResult r = run_cli("verify " + half + " --against xx xxx");
  CHECK(r.code == 1);
  CHECK(r.out.find("no derivation for this direction") != std::string::npos);

  std::remove(full.c_str());
  std::remove(half.c_str());
}

TEST_CASE("a corrupt proof file is a usage error") {
  const std::string path = temp_path("garbage.json");
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  const CliResult r = run_cli("verify " + path + " --against xx xxx");
  CHECK(r.code == 2);
  CHECK(r.out.find("proof file rejected") != std::string::npos);
  std::remove(path.c_str());

  const CliResult missing =
      run_cli("verify /nonexistent/proof.json --against xx xxx");
  CHECK(missing.code == 2);
}

TEST_CASE("parse errors are usage errors with an offset") {
  const CliResult r = run_cli("check \"x + \" x");
  CHECK(r.code == 2);
  CHECK(r.out.find("lhs: parse error at offset 4") != std::string::npos);

  const CliResult rhs_err = run_cli("check x \"(y)\"");
  CHECK(rhs_err.code == 2);
  CHECK(rhs_err.out.find("rhs: parse error at offset 0") != std::string::npos);
}

TEST_CASE("bad invocations are usage errors") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate x y").code == 2);
  CHECK(run_cli("check onlyone").code == 2);
}

TEST_CASE("selftest cross checks a small family") {
  const CliResult r = run_cli("selftest --family 2,2,2");
  CHECK(r.code == 0);
  CHECK(r.out.find("self test passed: 441 identities") != std::string::npos);
}
