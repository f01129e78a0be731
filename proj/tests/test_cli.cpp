#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "lcps/reduction.hpp"
#include "lcps/text.hpp"

// Path of the built binary, injected by the build.
#ifndef LCPS_CLI_PATH
#error "LCPS_CLI_PATH must be defined"
#endif

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + LCPS_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/lcps_cli_test_") + name;
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
  out.close();
  return path;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : s) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

TEST_CASE("solve: inline inputs, all algorithms") {
  for (const char* algo : {"sparse", "dp", "brute"}) {
    const CmdResult r =
        run_cli(std::string("solve --a aba --b aab --algo ") + algo + " --witness");
    CHECK(r.code == 0);
    CHECK(r.out == "2 aa\n");
  }
  const CmdResult no_witness = run_cli("solve --a aba --b aab");
  CHECK(no_witness.code == 0);
  CHECK(no_witness.out == "2\n");
  const CmdResult zero = run_cli("solve --a abc --b def --witness");
  CHECK(zero.code == 0);
  CHECK(zero.out == "0\n");
}

TEST_CASE("solve: file inputs strip one trailing newline in bytes mode") {
  const std::string fa = temp_file("a.txt", "aba\n");
  const std::string fb = temp_file("b.txt", "aab");
  const CmdResult r = run_cli("solve --a-file " + fa + " --b-file " + fb + " --witness");
  CHECK(r.code == 0);
  CHECK(r.out == "2 aa\n");
}

TEST_CASE("solve: tokens format") {
  const CmdResult r =
      run_cli("solve --format tokens --a '1 2 1' --b '1 1 2' --witness");
  CHECK(r.code == 0);
  CHECK(r.out == "2 1 1\n");

  const CmdResult bad = run_cli("solve --format tokens --a '1 x' --b '1'");
  CHECK(bad.code == 2);
}

TEST_CASE("solve: json report") {
  const CmdResult r = run_cli("solve --a aba --b aab --json --witness");
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("algorithm") == "sparse");
  CHECK(j.at("length") == 2);
  CHECK(j.at("witness") == nlohmann::json::array({97, 97}));
  CHECK(j.at("n_a") == 3);
  CHECK(j.at("n_b") == 3);
  CHECK(j.at("sigma") == 2);
  CHECK(j.at("matches") == 5);
  CHECK(j.at("memo_hits").is_number());
  CHECK(j.at("memo_entries").is_number());
  CHECK(j.at("probes").is_number());
  CHECK(j.at("elapsed_ns").is_number());

  const CmdResult plain = run_cli("solve --a aba --b aab --json");
  const nlohmann::json pj = nlohmann::json::parse(plain.out);
  CHECK_FALSE(pj.contains("witness"));
}

TEST_CASE("solve: usage errors exit 2") {
  CHECK(run_cli("solve --a aba").code == 2);                      // missing b
  CHECK(run_cli("solve --a aba --b x --algo magic").code == 2);   // unknown algo
  CHECK(run_cli("solve --a aba --b x --frobnicate").code == 2);   // unknown flag
  CHECK(run_cli("solve --a-file /nonexistent --b x").code == 2);  // unreadable
  const std::string fa = temp_file("dup.txt", "aba");
  CHECK(run_cli("solve --a aba --a-file " + fa + " --b x").code == 2);
  CHECK(run_cli("badcommand").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("reduce4: worked example, emit-xy, json") {
  const std::string base = "reduce4 --a aabbccc --b aabbcaa --c aaabccc --d abcbbbb";
  const CmdResult r = run_cli(base);
  CHECK(r.code == 0);
  CHECK(r.out == "3 abc\n");

  // the emitted grid strings match the library construction, token format
  const lcps::ReductionInstance inst =
      lcps::build_reduction(lcps::text_from_bytes("aabbccc"), lcps::text_from_bytes("aabbcaa"),
                            lcps::text_from_bytes("aaabccc"), lcps::text_from_bytes("abcbbbb"));
  auto tokens = [](const lcps::Text& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i > 0) s += ' ';
      s += std::to_string(t[i]);
    }
    return s;
  };
  const CmdResult emit = run_cli(base + " --emit-xy");
  CHECK(emit.code == 0);
  const std::vector<std::string> lines = lines_of(emit.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == tokens(inst.x));
  CHECK(lines[1] == tokens(inst.y));
  CHECK(lines[2] == "3 abc");

  const CmdResult json = run_cli(base + " --json");
  REQUIRE(json.code == 0);
  const nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j.at("length") == 3);
  CHECK(j.at("witness") == nlohmann::json::array({97, 98, 99}));
  CHECK(j.at("n_a") == inst.x.size());
  CHECK(j.at("n_b") == inst.y.size());
}

TEST_CASE("reduce4: four empty inputs") {
  const std::string fe = temp_file("empty.txt", "");
  const CmdResult r = run_cli("reduce4 --a-file " + fe + " --b-file " + fe + " --c-file " + fe +
                              " --d-file " + fe);
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("gen: shapes and determinism") {
  const CmdResult unary = run_cli("gen --n 5 --sigma 1 --seed 3");
  CHECK(unary.code == 0);
  CHECK(unary.out == "1 1 1 1 1\n");

  const CmdResult empty = run_cli("gen --n 0 --seed 1");
  CHECK(empty.code == 0);
  CHECK(empty.out == "\n");

  const CmdResult first = run_cli("gen --n 12 --sigma 4 --seed 99 --count 3");
  const CmdResult second = run_cli("gen --n 12 --sigma 4 --seed 99 --count 3");
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(lines_of(first.out).size() == 3);

  const CmdResult other_seed = run_cli("gen --n 12 --sigma 4 --seed 100 --count 3");
  CHECK(other_seed.out != first.out);

  CHECK(run_cli("gen --n 4 --sigma 0").code == 2);
}

TEST_CASE("bench: one report line per case and algorithm") {
  const CmdResult r = run_cli("bench --n 6 10 --sigma 2 --seeds 2 --seed 7 --algos sparse dp");
  REQUIRE(r.code == 0);
  const std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 8);  // 2 lengths x 1 sigma x 2 seeds x 2 algorithms
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const nlohmann::json j = nlohmann::json::parse(lines[i]);
    CHECK(j.at("algorithm") == (i % 2 == 0 ? "sparse" : "dp"));
    CHECK_FALSE(j.contains("witness"));
    CHECK_FALSE(j.contains("error"));
  }
  // paired algorithms agree on every instance
  for (std::size_t i = 0; i < lines.size(); i += 2) {
    const nlohmann::json sparse = nlohmann::json::parse(lines[i]);
    const nlohmann::json dp = nlohmann::json::parse(lines[i + 1]);
    CHECK(sparse.at("length") == dp.at("length"));
    CHECK(sparse.at("matches") == dp.at("matches"));
  }
}

TEST_CASE("bench: deterministic apart from timing, size errors reported in-stream") {
  auto scrub = [](const std::string& out) {
    std::vector<nlohmann::json> cleaned;
    for (const std::string& line : lines_of(out)) {
      nlohmann::json j = nlohmann::json::parse(line);
      j.erase("elapsed_ns");
      cleaned.push_back(j);
    }
    return cleaned;
  };
  const CmdResult first = run_cli("bench --n 9 --sigma 3 --seeds 3 --seed 11");
  const CmdResult second = run_cli("bench --n 9 --sigma 3 --seeds 3 --seed 11");
  REQUIRE(first.code == 0);
  CHECK(scrub(first.out) == scrub(second.out));

  // brute refuses n=20; the run still completes and reports the failure
  const CmdResult sized = run_cli("bench --n 20 --sigma 2 --seeds 1 --algos sparse brute");
  REQUIRE(sized.code == 0);
  const std::vector<std::string> lines = lines_of(sized.out);
  REQUIRE(lines.size() == 2);
  CHECK_FALSE(nlohmann::json::parse(lines[0]).contains("error"));
  CHECK(nlohmann::json::parse(lines[1]).contains("error"));
}

TEST_CASE("verify: pass and first violated property") {
  const CmdResult ok = run_cli("verify --a aba --b aab --candidate aa");
  CHECK(ok.code == 0);
  CHECK(ok.out == "ok\n");

  const CmdResult not_palin = run_cli("verify --a abcd --b abcd --candidate ab");
  CHECK(not_palin.code == 1);
  CHECK(not_palin.out == "not a palindrome\n");

  const CmdResult not_in_a = run_cli("verify --a bcb --b aba --candidate aa");
  CHECK(not_in_a.code == 1);
  CHECK(not_in_a.out == "not a subsequence of a\n");

  const CmdResult not_in_b = run_cli("verify --a aa --b bb --candidate aa");
  CHECK(not_in_b.code == 1);
  CHECK(not_in_b.out == "not a subsequence of b\n");

  // the worked example's optimal palindrome against its grid strings
  const std::string pad(15, '$');
  const std::string fx = temp_file("x.txt", "cccbbaa" + pad + "aabbcaa");
  const std::string fy = temp_file("y.txt", "cccbaaa" + pad + "abcbbbb");
  const std::string fc = temp_file("cand.txt", "cba" + pad + "abc");
  const CmdResult golden =
      run_cli("verify --a-file " + fx + " --b-file " + fy + " --candidate-file " + fc);
  CHECK(golden.code == 0);
}

TEST_CASE("solve: sparse handles the worked example grid strings") {
  const std::string pad(15, '$');
  const std::string fx = temp_file("x2.txt", "cccbbaa" + pad + "aabbcaa");
  const std::string fy = temp_file("y2.txt", "cccbaaa" + pad + "abcbbbb");
  const CmdResult r = run_cli("solve --a-file " + fx + " --b-file " + fy);
  CHECK(r.code == 0);
  CHECK(r.out == "21\n");
}
