// Command-line front end: solve, reduce4, gen, bench, verify.
//
// Exit codes: 0 success, 1 verification/consistency failure, 2 usage or
// format error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcps/baselines.hpp"
#include "lcps/random_text.hpp"
#include "lcps/reduction.hpp"
#include "lcps/report.hpp"
#include "lcps/solve.hpp"
#include "lcps/sparse.hpp"
#include "lcps/text.hpp"

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lcps::Text parse_tokens(const std::string& raw) {
  lcps::Text out;
  std::istringstream in(raw);
  std::string tok;
  while (in >> tok) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw UsageError("malformed token: " + tok);
    }
    out.push_back(value);
  }
  return out;
}

lcps::Text parse_text(const std::string& raw, const std::string& format) {
  if (format == "tokens") return parse_tokens(raw);
  return lcps::text_from_bytes(raw);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw UsageError("error while reading file: " + path);
  return buf.str();
}

// One input string, provided inline or via file. In bytes mode a single
// trailing newline of a file is not part of the string.
struct TextArg {
  std::string inline_value;
  std::string file_path;
  CLI::Option* inline_opt = nullptr;
  CLI::Option* file_opt = nullptr;
  std::string flag_name;

  void attach(CLI::App* cmd, const std::string& flag, const std::string& what) {
    flag_name = flag;
    inline_opt = cmd->add_option("--" + flag, inline_value, what + " given inline");
    file_opt = cmd->add_option("--" + flag + "-file", file_path, what + " read from a file");
    inline_opt->excludes(file_opt);
  }

  lcps::Text load(const std::string& format) const {
    const bool inline_set = inline_opt->count() > 0;
    const bool file_set = file_opt->count() > 0;
    if (inline_set == file_set) {
      throw UsageError("provide exactly one of --" + flag_name + " / --" + flag_name + "-file");
    }
    if (inline_set) return parse_text(inline_value, format);
    std::string raw = read_file(file_path);
    if (format == "bytes" && !raw.empty() && raw.back() == '\n') raw.pop_back();
    return parse_text(raw, format);
  }
};

std::string to_tokens(const lcps::Text& t) {
  std::string out;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (p > 0) out += ' ';
    out += std::to_string(t[p]);
  }
  return out;
}

std::string display_witness(const lcps::Witness& w, const std::string& format) {
  if (format == "tokens") return to_tokens(w);
  return lcps::witness_to_display(w);
}

// Every solver result is re-checked before it is printed.
void self_check(const lcps::LcpsResult& result, const lcps::Text& a, const lcps::Text& b) {
  if (result.witness.size() != result.length ||
      !lcps::verify_witness(result.witness, a, b)) {
    throw lcps::malformed_result_error("solver produced a witness that fails verification");
  }
}

struct SolveOpts {
  TextArg a, b;
  std::string algo = "sparse";
  std::string format = "bytes";
  bool witness = false;
  bool json = false;
};

int run_solve(const SolveOpts& opt) {
  const lcps::Text a = opt.a.load(opt.format);
  const lcps::Text b = opt.b.load(opt.format);
  lcps::LcpsResult result = lcps::solve_lcps(a, b, lcps::algo_from_name(opt.algo));
  self_check(result, a, b);

  lcps::RunReport report = lcps::make_report(opt.algo, result, a.size(), b.size(), opt.witness);
  if (opt.json) {
    std::cout << lcps::report_json(report) << '\n';
  } else if (opt.witness) {
    std::cout << report.length;
    if (!result.witness.empty()) std::cout << ' ' << display_witness(result.witness, opt.format);
    std::cout << '\n';
  } else {
    std::cout << report.length << '\n';
  }
  return 0;
}

struct Reduce4Opts {
  TextArg a, b, c, d;
  std::string algo = "sparse";
  std::string format = "bytes";
  bool emit_xy = false;
  bool json = false;
};

int run_reduce4(const Reduce4Opts& opt) {
  const lcps::Text a = opt.a.load(opt.format);
  const lcps::Text b = opt.b.load(opt.format);
  const lcps::Text c = opt.c.load(opt.format);
  const lcps::Text d = opt.d.load(opt.format);

  lcps::ReductionInstance inst = lcps::build_reduction(a, b, c, d);
  if (opt.emit_xy) {
    std::cout << to_tokens(inst.x) << '\n' << to_tokens(inst.y) << '\n';
  }

  lcps::LcpsResult palin = lcps::solve_lcps(inst.x, inst.y, lcps::algo_from_name(opt.algo));
  self_check(palin, inst.x, inst.y);
  lcps::LcsResult lcs = lcps::extract_lcs4(palin, inst);
  for (const lcps::Text* s : {&a, &b, &c, &d}) {
    if (!lcps::is_subsequence(lcs.witness, *s)) {
      throw lcps::malformed_result_error("extracted subsequence is not common to all four inputs");
    }
  }

  if (opt.json) {
    lcps::LcpsResult merged;  // 4-LCS answer carrying the palindrome run's counters
    merged.length = lcs.length;
    merged.witness = lcs.witness;
    merged.stats = palin.stats;
    std::cout << lcps::report_json(
                     lcps::make_report(opt.algo, merged, inst.x.size(), inst.y.size(), true))
              << '\n';
  } else {
    std::cout << lcs.length;
    if (!lcs.witness.empty()) std::cout << ' ' << display_witness(lcs.witness, opt.format);
    std::cout << '\n';
  }
  return 0;
}

struct GenOpts {
  std::size_t n = 0;
  std::uint32_t sigma = 2;
  std::uint64_t seed = 1;
  std::size_t count = 1;
};

int run_gen(const GenOpts& opt) {
  if (opt.n > 0 && opt.sigma < 1) throw UsageError("--sigma must be at least 1 when --n > 0");
  lcps::UniformTextSource source(opt.seed);
  for (std::size_t line = 0; line < opt.count; ++line) {
    std::cout << to_tokens(source.next(opt.n, opt.sigma)) << '\n';
  }
  return 0;
}

struct BenchOpts {
  std::vector<std::size_t> ns{64};
  std::vector<std::uint32_t> sigmas{4};
  std::size_t seeds = 1;
  std::uint64_t seed = 1;
  std::vector<std::string> algos{"sparse", "dp"};
};

int run_bench(const BenchOpts& opt) {
  std::vector<lcps::Algo> algos;
  for (const std::string& name : opt.algos) algos.push_back(lcps::algo_from_name(name));

  std::uint64_t chain = opt.seed;
  for (std::size_t n : opt.ns) {
    for (std::uint32_t sigma : opt.sigmas) {
      for (std::size_t rep = 0; rep < opt.seeds; ++rep) {
        const std::uint64_t case_seed = lcps::mix_seed(chain);
        lcps::UniformTextSource source(case_seed);
        const lcps::Text a = source.next(n, sigma);
        const lcps::Text b = source.next(n, sigma);
        for (std::size_t ai = 0; ai < algos.size(); ++ai) {
          try {
            lcps::LcpsResult result = lcps::solve_lcps(a, b, algos[ai]);
            self_check(result, a, b);
            std::cout << lcps::report_json(lcps::make_report(opt.algos[ai], result, a.size(),
                                                             b.size(), false))
                      << '\n';
          } catch (const lcps::size_error& e) {
            nlohmann::ordered_json line;
            line["algorithm"] = opt.algos[ai];
            line["n_a"] = a.size();
            line["n_b"] = b.size();
            line["seed"] = case_seed;
            line["error"] = e.what();
            std::cout << line.dump() << '\n';
          }
        }
      }
    }
  }
  return 0;
}

struct VerifyOpts {
  TextArg a, b, candidate;
  std::string format = "bytes";
};

int run_verify(const VerifyOpts& opt) {
  const lcps::Text a = opt.a.load(opt.format);
  const lcps::Text b = opt.b.load(opt.format);
  const lcps::Text cand = opt.candidate.load(opt.format);

  if (!lcps::is_palindrome(cand)) {
    std::cout << "not a palindrome\n";
    return kExitVerify;
  }
  if (!lcps::is_subsequence(cand, a)) {
    std::cout << "not a subsequence of a\n";
    return kExitVerify;
  }
  if (!lcps::is_subsequence(cand, b)) {
    std::cout << "not a subsequence of b\n";
    return kExitVerify;
  }
  std::cout << "ok\n";
  return 0;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "input format: bytes or tokens")
      ->check(CLI::IsMember({"bytes", "tokens"}));
}

void add_algo_flag(CLI::App* cmd, std::string& algo) {
  cmd->add_option("--algo", algo, "solver: sparse, dp, or brute")
      ->check(CLI::IsMember({"sparse", "dp", "brute"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest common palindromic subsequence toolkit"};
  app.require_subcommand(1);

  SolveOpts solve_opts;
  CLI::App* solve_cmd = app.add_subcommand("solve", "LCPS of two strings");
  solve_opts.a.attach(solve_cmd, "a", "first string");
  solve_opts.b.attach(solve_cmd, "b", "second string");
  add_algo_flag(solve_cmd, solve_opts.algo);
  add_format_flag(solve_cmd, solve_opts.format);
  solve_cmd->add_flag("--witness", solve_opts.witness, "print a witness subsequence");
  solve_cmd->add_flag("--json", solve_opts.json, "print a JSON run report");

  Reduce4Opts reduce4_opts;
  CLI::App* reduce4_cmd = app.add_subcommand("reduce4", "LCS of four strings via LCPS");
  reduce4_opts.a.attach(reduce4_cmd, "a", "first string");
  reduce4_opts.b.attach(reduce4_cmd, "b", "second string");
  reduce4_opts.c.attach(reduce4_cmd, "c", "third string");
  reduce4_opts.d.attach(reduce4_cmd, "d", "fourth string");
  add_algo_flag(reduce4_cmd, reduce4_opts.algo);
  add_format_flag(reduce4_cmd, reduce4_opts.format);
  reduce4_cmd->add_flag("--emit-xy", reduce4_opts.emit_xy,
                        "also print the constructed strings, one token line each");
  reduce4_cmd->add_flag("--json", reduce4_opts.json, "print a JSON run report");

  GenOpts gen_opts;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate uniform random strings");
  gen_cmd->add_option("--n", gen_opts.n, "string length")->required();
  gen_cmd->add_option("--sigma", gen_opts.sigma, "alphabet size");
  gen_cmd->add_option("--seed", gen_opts.seed, "generator seed");
  gen_cmd->add_option("--count", gen_opts.count, "number of strings");

  BenchOpts bench_opts;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run solvers over a seeded grid");
  bench_cmd->add_option("--n", bench_opts.ns, "string lengths");
  bench_cmd->add_option("--sigma", bench_opts.sigmas, "alphabet sizes");
  bench_cmd->add_option("--seeds", bench_opts.seeds, "instances per (n, sigma) cell");
  bench_cmd->add_option("--seed", bench_opts.seed, "base seed for the case-seed chain");
  bench_cmd->add_option("--algos", bench_opts.algos, "solvers to run")
      ->check(CLI::IsMember({"sparse", "dp", "brute"}));

  VerifyOpts verify_opts;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a candidate witness");
  verify_opts.a.attach(verify_cmd, "a", "first string");
  verify_opts.b.attach(verify_cmd, "b", "second string");
  verify_opts.candidate.attach(verify_cmd, "candidate", "candidate common palindromic subsequence");
  add_format_flag(verify_cmd, verify_opts.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_opts);
    if (reduce4_cmd->parsed()) return run_reduce4(reduce4_opts);
    if (gen_cmd->parsed()) return run_gen(gen_opts);
    if (bench_cmd->parsed()) return run_bench(bench_opts);
    if (verify_cmd->parsed()) return run_verify(verify_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lcps::size_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lcps::malformed_result_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  } catch (const lcps::internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
