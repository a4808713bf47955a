#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "tricube/io.hpp"
#include "tricube/parse.hpp"

using namespace tricube;

namespace {

struct CmdResult {
  int exit;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string temp_path(const char* tag) {
  static int counter = 0;
  return "/tmp/tricube_cli_" + std::to_string(getpid()) + "_" + tag + "_" +
         std::to_string(counter++);
}

CmdResult run(const std::string& args) {
  std::string ofile = temp_path("out"), efile = temp_path("err");
  std::string cmd = std::string(TRICUBE_CLI_PATH) + " " + args + " >" + ofile +
                    " 2>" + efile;
  int rc = std::system(cmd.c_str());
  CmdResult r;
  r.exit = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(ofile);
  r.err = slurp(efile);
  std::remove(ofile.c_str());
  std::remove(efile.c_str());
  return r;
}

}  // namespace

TEST_CASE("solve2 on crossing lines") {
  CmdResult r = run("solve2 --prime 7 --vars x1,x2 'x2-x1' 'x2+x1'");
  CHECK(r.exit == 0);
  CHECK(r.out == "{ x1, x2 }\n");
  CHECK(r.err.empty());
}

TEST_CASE("resultant of the squared-difference pair") {
  CmdResult r = run(
      "resultant --prime 7 --vars x1,x2,x3 'x2^2*x3^2 - x1^4' "
      "'x1^2*x3^2 - x2^4'");
  CHECK(r.exit == 0);
  CHECK(r.out == "x2^12 + 5*x1^6*x2^6 + x1^12\n");
}

TEST_CASE("regularize splits by the chain's root") {
  CmdResult r = run("regularize --prime 5 --vars x1 --chain 'x1^2-1' 'x1-1'");
  CHECK(r.exit == 0);
  CHECK(r.out == "null { x1 + 4 }\nregular { x1 + 1 }\n");
}

TEST_CASE("reggcd over a nilpotent base") {
  CmdResult r = run(
      "reggcd --prime 7 --vars x1,x2 --chain 'x1^2' 'x2^2-x1' 'x2^2+x1'");
  CHECK(r.exit == 0);
  CHECK(r.out == "{ x1 } : x2^2\n{ x1 } : x2^2\n");
}

TEST_CASE("scube table of tangent parabolas") {
  CmdResult r = run("scube --prime 7 --vars x1,x2 'x2^2-x1' 'x2^2+x1'");
  CHECK(r.exit == 0);
  CHECK(r.out ==
        "S_0 = 4*x1^2\n"
        "lc_0 = 4*x1^2\n"
        "S_1 = 2*x1\n"
        "lc_1 = 0\n"
        "lc_2 = 1\n");
}

TEST_CASE("scube --dump writes the raw tables") {
  std::string dump = temp_path("dump");
  CmdResult r = run("scube --prime 101 --vars x1,x2 --dump " + dump +
                    " 'x2^3-x1' 'x2^2+x1'");
  CHECK(r.exit == 0);
  std::string bytes = slurp(dump);
  CHECK(bytes.size() >= 8);
  // Little-endian first word is the prime.
  uint64_t first = 0;
  for (int i = 7; i >= 0; --i)
    first = (first << 8) | static_cast<unsigned char>(bytes[static_cast<std::size_t>(i)]);
  CHECK(first == 101);
  std::remove(dump.c_str());
}

TEST_CASE("json output round-trips through the reader") {
  CmdResult rt = run("solve2 --prime 7 --vars x1,x2 '(x2-1)*(x2-x1)' "
                     "'(x2-1)*(x2+x1)'");
  CmdResult rj = run("solve2 --prime 7 --vars x1,x2 --format json "
                     "'(x2-1)*(x2-x1)' '(x2-1)*(x2+x1)'");
  CHECK(rt.exit == 0);
  CHECK(rj.exit == 0);

  ParsedChains parsed = chains_from_json(rj.out);
  REQUIRE(parsed.ctx->field.modulus() == 7);

  // Rebuild the text rendering from the JSON document; the two formats must
  // name the same chains in the same order.
  std::string rebuilt;
  for (const auto& chain : parsed.chains)
    rebuilt += chain_to_text(chain) + "\n";
  CHECK(rebuilt == rt.out);
  CHECK(parsed.chains.size() >= 2);
}

TEST_CASE("--out writes a file instead of stdout") {
  std::string ofile = temp_path("solution");
  CmdResult r = run("solve2 --prime 7 --vars x1,x2 --out " + ofile +
                    " 'x2-x1' 'x2+x1'");
  CHECK(r.exit == 0);
  CHECK(r.out.empty());
  CHECK(slurp(ofile) == "{ x1, x2 }\n");
  std::remove(ofile.c_str());
}

TEST_CASE("solve2 --system reads a system file") {
  std::string sfile = temp_path("system");
  {
    std::ofstream f(sfile);
    f << "# two parabolas tangent at the origin\n"
      << "p 7\n"
      << "vars x1 x2\n"
      << "seed 5\n"
      << "P = x2^2 - x1\n"
      << "Q = x2^2 + x1\n";
  }
  CmdResult r = run("solve2 --system " + sfile);
  CHECK(r.exit == 0);
  CHECK(r.out == "{ x1, x2^2 }\n");

  // Positional polynomials cannot be combined with --system.
  CmdResult bad =
      run("solve2 --system " + sfile + " --prime 7 --vars x1,x2 'x1' 'x2'");
  CHECK(bad.exit == 3);
  std::remove(sfile.c_str());
}

TEST_CASE("exit codes separate error classes") {
  CHECK(run("solve2 --prime 7 --vars x1,x2 'x2-(' 'x2'").exit == 2);
  CHECK(run("solve2 --prime 7 --vars x1,x2 'x9' 'x2'").exit == 2);
  CHECK(run("nosuchcommand").exit == 2);
  CHECK(run("solve2 --prime 7 --vars x1,x2 'x2' ").exit == 3);
  CHECK(run("solve2 --prime 8 --vars x1,x2 'x2' 'x2+1'").exit == 3);
  CHECK(run("solve2 --prime 7 --vars x1,x2 '3' 'x2'").exit == 3);
  CHECK(run("solve2 --prime 7 --vars x1,x2,x3 'x3^2-x1' 'x3^2-x2'").exit == 4);

  CmdResult r = run("solve2 --prime 7 --vars x1,x2 'x2-(' 'x2'");
  CHECK(r.out.empty());
  CHECK(!r.err.empty());
}

TEST_CASE("bench emits stable deterministic csv") {
  CmdResult hdr = run("bench --degrees '' --prime 13");
  CHECK(hdr.exit == 0);
  CHECK(hdr.out == "family,degree,seconds,chains\n");

  CmdResult a = run("bench --degrees 3,4 --family both --seed 11 --prime 101");
  CHECK(a.exit == 0);
  std::istringstream in(a.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "family,degree,seconds,chains");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK((line.rfind("dense,", 0) == 0 || line.rfind("noneq,", 0) == 0));
  }
  CHECK(rows == 4);

  // Same seed, same systems: only the seconds column may differ.
  CmdResult b = run("bench --degrees 3,4 --family both --seed 11 --prime 101");
  auto strip_seconds = [](const std::string& csv) {
    std::istringstream is(csv);
    std::string l, acc;
    while (std::getline(is, l)) {
      std::size_t c1 = l.find(','), c2 = l.find(',', c1 + 1);
      std::size_t c3 = l.find(',', c2 + 1);
      acc += l.substr(0, c2) + l.substr(c3) + "\n";
    }
    return acc;
  };
  CHECK(strip_seconds(a.out) == strip_seconds(b.out));
}

TEST_CASE("help exits zero") {
  CHECK(run("--help").exit == 0);
  CHECK(run("solve2 --help").exit == 0);
}
