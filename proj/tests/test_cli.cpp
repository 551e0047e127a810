#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef AQTOWER_BIN
#error "AQTOWER_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp = std::string("cli_out_") + std::to_string(rand()) + ".txt";
  std::string cmd = std::string(AQTOWER_BIN) + " " + args + " > " + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(tmp.c_str());
  return {code, ss.str()};
}

}  // namespace

TEST_CASE("validate exits 0 on sound fixtures and 1 on the mutated one") {
  CHECK(run("validate --fixture k1 --max-degree 3 --max-weight 2").code == 0);
  CHECK(run("validate --fixture free1 --max-degree 2 --max-weight 3").code == 0);
  auto bad = run("validate --fixture mutated --max-degree 4 --max-weight 2");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FALSIFICATION") != std::string::npos);
  CHECK(bad.out.find("d_1 d_3 = d_2 d_1") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);                       // missing subcommand
  CHECK(run("verify").code == 2);                 // missing suite
  CHECK(run("frobnicate").code == 2);             // unknown subcommand
  CHECK(run("verify nonsense --max-degree 2").code == 2);
  CHECK(run("validate --fixture nonexistent").code == 2);
  CHECK(run("validate --fixture k1 --field fp:notaprime").code == 2);
}

TEST_CASE("schema files parse, malformed ones exit 2") {
  {
    std::ofstream f("cli_good.schema");
    f << "field q\ntruncation 1 1\nname tiny\ngen 0 a 1\ngen 1 b 1\n"
      << "face 0 1 b = a\nface 1 1 b = a\ndeg 0 0 a = b\n";
  }
  CHECK(run("validate cli_good.schema").code == 0);
  CHECK(run("pi cli_good.schema").code == 0);
  {
    std::ofstream f("cli_bad.schema");
    f << "field q\ntruncation 1 1\nface 0 1 zz = a\n";
  }
  CHECK(run("validate cli_bad.schema").code == 2);
  std::remove("cli_good.schema");
  std::remove("cli_bad.schema");
}

TEST_CASE("pi table reports the classifying-space homotopy") {
  auto res = run("pi --fixture k2 --max-degree 3 --max-weight 1 --out text");
  CHECK(res.code == 0);
  CHECK(res.out.find("record pi_2 w=1 1") != std::string::npos);
  CHECK(res.out.find("record pi_1 w=1 0") != std::string::npos);
}

TEST_CASE("verify suites pass on the bundled fixtures") {
  CHECK(run("verify dold-puppe --fixture k1 --max-degree 3 --max-weight 3").code == 0);
  CHECK(run("verify e0 --fixture k1 --max-degree 3 --max-weight 3").code == 0);
  CHECK(run("verify appendix --fixture k1 --max-degree 3 --max-weight 2 --q-max 2").code == 0);
  CHECK(run("verify tower --fixture free1 --max-degree 2 --max-weight 3 --r-max 2").code == 0);
}

TEST_CASE("reports are byte-deterministic across runs and seeds stamp metadata") {
  std::string cmd = "verify dold-puppe --fixture k1 --max-degree 3 --max-weight 3 "
                    "--out csv --seed 42";
  auto a = run(cmd);
  auto b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed=42") != std::string::npos);
  CHECK(a.out.find("field=Q") != std::string::npos);
  auto fp = run("verify dold-puppe --fixture k1 --max-degree 3 --max-weight 3 "
                "--out csv --field fp:2");
  CHECK(fp.code == 0);
  CHECK(fp.out.find("field=F2") != std::string::npos);
  CHECK(fp.out != a.out);
}

TEST_CASE("help exits 0") {
  CHECK(run("--help").code == 0);
  CHECK(run("verify --help").code == 0);
}
