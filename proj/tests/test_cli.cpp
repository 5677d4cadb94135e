#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(YBX_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string corpus(const std::string& name) {
  return std::string(YBX_CORPUS_DIR) + "/" + name;
}

std::string tmp_file(const std::string& stem) {
  return std::string("/tmp/ybx_test_") + stem + ".json";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify: passing and failing pairs, stable exit codes") {
  CHECK(run("verify " + corpus("flip2.json")).exit_code == 0);
  CHECK(run("verify " + corpus("s3_conjugation.json")).exit_code == 0);

  RunResult broken = run("verify " + corpus("neg_braid_violation.json"));
  CHECK(broken.exit_code == 1);
  CHECK(broken.out.find("braid") != std::string::npos);
  CHECK(broken.out.find("witness") != std::string::npos);

  CHECK(run("verify " + corpus("neg_not_automorphism.json")).exit_code == 1);
}

TEST_CASE("verify: table rows and --json") {
  RunResult table = run("verify " + corpus("flip2.json"));
  for (const char* row : {"coalgebra-automorphism", "braid", "involutive",
                          "non-degenerate", "qybe", "unitary"})
    CHECK(table.out.find(row) != std::string::npos);

  RunResult j = run("verify --json " + corpus("flip2.json"));
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["pass"] == true);
}

TEST_CASE("malformed input exits 2") {
  CHECK(run("verify " + corpus("neg_malformed.json")).exit_code == 2);
  CHECK(run("verify /nonexistent/file.json").exit_code == 2);
}

TEST_CASE("derive reports the involutive collapse") {
  RunResult shift = run("derive " + corpus("z3_shift.json"));
  CHECK(shift.exit_code == 0);
  auto doc = nlohmann::json::parse(shift.out);
  CHECK(doc["involutive_collapse"] == true);
  CHECK(doc.contains("s"));
  CHECK(doc.contains("rack"));

  RunResult conj = run("derive " + corpus("s3_conjugation.json"));
  CHECK(nlohmann::json::parse(conj.out)["involutive_collapse"] == false);
}

TEST_CASE("jmap and braidrep emit towers and generators") {
  RunResult j = run("jmap " + corpus("z3_translation.json") + " --n 4");
  CHECK(j.exit_code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["j"].size() == 4);
  CHECK(doc["alpha"].size() == 3);

  RunResult b = run("braidrep " + corpus("z3_translation.json") + " --n 3");
  CHECK(b.exit_code == 0);
  CHECK(nlohmann::json::parse(b.out)["generators"].size() == 2);
}

TEST_CASE("extend writes a doubled pair that verifies") {
  std::string out = tmp_file("extend");
  CHECK(run("extend " + corpus("z3_shift.json") + " -o " + out).exit_code == 0);
  auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["blocks"]["X"] == nlohmann::json::array({0, 3}));
  CHECK(doc["blocks"]["SX"] == nlohmann::json::array({3, 6}));
  CHECK(run("verify " + out).exit_code == 0);
  std::remove(out.c_str());
}

TEST_CASE("brace commands round trip through files") {
  CHECK(run("brace-verify " + corpus("brace_z4_klein.json")).exit_code == 0);
  CHECK(run("brace-verify " + corpus("neg_brace_bad_circle_z4.json")).exit_code == 1);

  std::string op = tmp_file("op"), back = tmp_file("brace_back");
  CHECK(run("brace-to-op " + corpus("brace_z4_klein.json") + " -o " + op).exit_code == 0);
  CHECK(run("op-to-brace " + op + " -o " + back).exit_code == 0);
  auto original = nlohmann::json::parse(slurp(corpus("brace_z4_klein.json")));
  auto recovered = nlohmann::json::parse(slurp(back));
  CHECK(original["brace"] == recovered["brace"]);

  CHECK(run("brace-to-cocycle " + corpus("brace_trivial_z2.json")).exit_code == 0);
  std::remove(op.c_str());
  std::remove(back.c_str());

  // an operator file straight from the corpus converts too
  CHECK(run("op-to-brace " + corpus("operator_conjugation_s3.json")).exit_code == 0);
}

TEST_CASE("prim-check, prim-solve and present") {
  CHECK(run("prim-check " + corpus("prim_leibniz_d2.json")).exit_code == 0);
  RunResult bad = run("prim-check " + corpus("neg_prim_nonleibniz_d3.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("(8)") != std::string::npos);

  std::string solved = tmp_file("prim_pair");
  CHECK(run("prim-solve " + corpus("prim_leibniz_d2.json") + " -o " + solved).exit_code == 0);
  CHECK(run("verify " + solved).exit_code == 0);
  // linear solutions have no structure-monoid presentation
  CHECK(run("present " + solved).exit_code == 2);
  std::remove(solved.c_str());

  RunResult pres = run("present " + corpus("flip2.json"));
  CHECK(pres.exit_code == 0);
  CHECK(pres.out.find("x0*x1 = x1*x0") != std::string::npos);

  RunResult pres_json = run("present --json " + corpus("z3_shift.json"));
  CHECK(nlohmann::json::parse(pres_json.out)["relations"].size() == 9);
}

TEST_CASE("prim-search reproduces the frozen golden files") {
  for (const char* p : {"2", "3"}) {
    RunResult r = run(std::string("prim-search --field f") + p +
                      " --dim 1 --exhaustive");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(corpus(std::string("golden/search_f") + p + "_d1.jsonl")));
  }
}

TEST_CASE("prim-search sampling requires an explicit seed") {
  CHECK(run("prim-search --field f3 --dim 1 --sample 5").exit_code == 2);
  RunResult a = run("prim-search --field f3 --dim 1 --sample 25 --seed 11");
  RunResult b = run("prim-search --field f3 --dim 1 --sample 25 --seed 11");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("YBX_DIM_CAP bounds tower computations") {
  std::string cmd = std::string("YBX_DIM_CAP=10 ") + YBX_BIN + " jmap " +
                    corpus("z3_translation.json") + " --n 3 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 256> buf;
  while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
  }
  CHECK(WEXITSTATUS(pclose(pipe)) == 1);  // 3^3 = 27 exceeds the cap
}

TEST_CASE("threads flag keeps exhaustive output stable") {
  RunResult one = run("prim-search --field f3 --dim 1 --exhaustive");
  RunResult four = run("--threads 4 prim-search --field f3 --dim 1 --exhaustive");
  CHECK(four.exit_code == 0);
  CHECK(one.out == four.out);
}
