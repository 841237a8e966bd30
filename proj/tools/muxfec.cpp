// muxfec: build, verify and analyse multiplexed streaming codes.
//
// Exit codes: 0 pass, 1 usage or input error, 2 verification failure.
// Machine output goes to stdout, errors to stderr as one JSON line.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "muxfec/muxfec.hpp"

namespace {

using namespace muxfec;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int fail(std::string_view kind, std::string_view message, int code) {
  std::cerr << error_json(kind, message);
  return code;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MUXFEC_SEED")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("MUXFEC_SEED is not an unsigned integer: '") + env + "'");
  }
  return 1;
}

unsigned resolve_jobs(unsigned jobs) { return jobs ? jobs : std::max(1u, std::thread::hardware_concurrency()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, colon);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    if (colon == std::string::npos) return {lo, lo};
    const std::string hi_text = text.substr(colon + 1);
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    if (hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("range must be LO:HI or a single value, got '" + text + "'");
  }
}

struct BuildFlags {
  std::size_t tv = 0, tu = 0, b = 0, n = 0;
  std::optional<std::size_t> tu_prime, w;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned jobs = 0;
};

int run_build(const BuildFlags& f) {
  MuxParams params;
  try {
    params = select_parameters(f.tv, f.tu, f.b, f.n, f.tu_prime, f.w);
  } catch (const std::invalid_argument& e) {
    return fail("usage", e.what(), kExitUsage);
  }
  MuxBuildOptions options;
  options.jobs = resolve_jobs(f.jobs);
  MuxCode code;
  try {
    code = build_mux_code(params, resolve_seed(f.seed), options);
  } catch (const SearchExhausted& e) {
    return fail("verification", e.what(), kExitFail);
  }
  const auto summary = verify_achievable(code, std::nullopt, VerifyOptions{options.jobs, true});
  write_output(f.out, code_spec_json(code));
  if (!summary.pass) return fail("verification", "built code failed re-verification", kExitFail);
  std::cerr << "built n=" << params.n << " k_v=" << params.k_v << " k_u=" << params.k_u
            << " rate=" << format_exact(params.sum_rate()) << " q=" << code.field.q << "\n";
  return kExitPass;
}

CodeSpec load_spec(const std::string& path) {
  try {
    return parse_code_spec(read_file(path));
  } catch (const FormatError& e) {
    throw UsageError(e.what());
  }
}

int run_verify(const std::string& spec_path, std::optional<std::size_t> w, const std::string& report_path,
               unsigned jobs) {
  const auto spec = load_spec(spec_path);
  ChannelModel ch;
  try {
    ch = ChannelModel::make(w.value_or(spec.params.W), spec.params.B, spec.params.N);
  } catch (const std::invalid_argument& e) {
    return fail("usage", e.what(), kExitUsage);
  }
  const auto summary = verify_achievable(spec.G, spec.params.deadlines(), ch, VerifyOptions{resolve_jobs(jobs), true});
  const auto text = verification_json(summary, ch);
  if (!report_path.empty()) write_output(report_path, text);
  std::cout << text;
  return summary.pass ? kExitPass : kExitFail;
}

struct RatesFlags {
  int b = 0, n = 0;
  std::string tv_range, tu_range;
  bool csv = false, json = false, exact = false;
};

std::string gain_csv(const GainTable& table, bool exact) {
  auto text = [exact](const Rational& r, int digits) { return exact ? format_exact(r) : format_decimal(r, digits); };
  std::ostringstream os;
  os << "T_v";
  for (int tu : table.tu_values) os << "," << tu;
  os << ",capacity_v,mux_sum_rate,case_m_small_bound\n";
  for (std::size_t a = 0; a < table.tv_values.size(); ++a) {
    const int tv = table.tv_values[a];
    os << tv;
    for (std::size_t b = 0; b < table.tu_values.size(); ++b) {
      os << ",";
      if (const auto& cell = table.at(a, b)) os << text(cell->gain_percent, 2);
    }
    os << "," << text(capacity(tv, table.B, table.N), 4) << ",";
    if (tv >= 2 * table.B + 2) {
      os << text(mux_sum_rate(tv, table.B, table.N), 4) << "," << text(case_m_small_bound(tv, table.B, table.N), 4);
    } else {
      os << ",";
    }
    os << "\n";
  }
  return os.str();
}

int run_rates(const RatesFlags& f) {
  if (f.csv && f.json) throw UsageError("--csv and --json are exclusive");
  const auto [tv_lo, tv_hi] = parse_range(f.tv_range);
  const auto [tu_lo, tu_hi] = parse_range(f.tu_range);
  if (f.n < 1 || f.b <= f.n) throw UsageError("rates need B > N >= 1");
  if (tv_lo < f.b || tu_lo < 1) throw UsageError("rates need T_v >= B and T_u >= 1");
  const auto table = gain_table(f.b, f.n, tv_lo, tv_hi, tu_lo, tu_hi);
  std::cout << (f.csv ? gain_csv(table, f.exact) : gain_table_json(table, f.exact));
  return kExitPass;
}

struct SimulateFlags {
  std::string spec;
  std::size_t slots = 10000;
  std::optional<std::uint64_t> seed;
  std::string trace, replay;
  double erasure_p = 0.05, burst_p = 0.01;
  std::optional<std::size_t> burst_at;
};

int run_simulate(const SimulateFlags& f) {
  const auto spec = load_spec(f.spec);
  const auto ch = spec.params.channel();
  const std::uint64_t seed = resolve_seed(f.seed);

  ErasurePattern pattern;
  if (!f.replay.empty()) {
    std::ifstream in(f.replay);
    if (!in) throw UsageError("cannot open '" + f.replay + "'");
    try {
      pattern = read_trace(in);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (f.burst_at) {
    if (*f.burst_at + ch.B > f.slots) throw UsageError("burst does not fit in the horizon");
    pattern = ErasurePattern::burst(f.slots, *f.burst_at, ch.B);
  } else {
    pattern = random_erasure_sequence(f.slots, ch, seed, ErasureSampler{f.erasure_p, f.burst_p});
  }
  if (!f.trace.empty()) {
    std::ofstream out(f.trace);
    if (!out) throw UsageError("cannot write '" + f.trace + "'");
    write_trace(out, pattern);
  }
  if (!is_admissible(pattern, ch)) return fail("usage", "erasure sequence is not admissible", kExitUsage);
  const auto report = simulate_stream(spec.G, spec.params.deadlines(), ch, pattern, seed);
  std::cout << stream_report_json(report);
  return report.pass() ? kExitPass : kExitFail;
}

int run_dump(const std::string& spec_path, const std::string& part) {
  const auto spec = load_spec(spec_path);
  const auto& p = spec.params;
  if (part == "merged") {
    std::cout << matrix_json(spec.G);
  } else if (part == "g1") {
    std::cout << matrix_json(spec.G.block(0, 0, p.k_v, p.k_v + p.B));
  } else if (part == "g2") {
    std::cout << matrix_json(spec.G.block(p.k_v, p.h, p.k_u, p.k_u + p.B));
  } else if (part == "left-block") {
    std::cout << matrix_json(spec.G.block(0, 0, std::min(spec.G.rows(), p.T_v - 2 * p.N + 2), p.T_v - p.N + 1));
  } else {
    throw UsageError("unknown part '" + part + "'");
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplexed streaming erasure codes for two deadlines"};
  app.set_version_flag("--version", "muxfec " + library_version());
  app.require_subcommand(1);

  BuildFlags bf;
  auto* build = app.add_subcommand("build", "Construct and verify a merged code; writes a code spec");
  build->add_option("--tv", bf.tv, "Deadline of the less-urgent stream")->required();
  build->add_option("--tu", bf.tu, "Deadline of the urgent stream")->required();
  build->add_option("--b", bf.b, "Maximum burst length")->required();
  build->add_option("--n", bf.n, "Maximum random erasures per window")->required();
  build->add_option("--tu-prime", bf.tu_prime, "Effective urgent deadline (B < T_u' <= T_u)");
  build->add_option("--w", bf.w, "Verification window (default T_v + 1)");
  build->add_option("--seed", bf.seed, "Construction seed (falls back to MUXFEC_SEED, then 1)");
  build->add_option("--out", bf.out, "Output file (default stdout)");
  build->add_option("--jobs", bf.jobs, "Verification workers (0 = all cores)");

  std::string verify_spec, verify_report;
  std::optional<std::size_t> verify_w;
  unsigned verify_jobs = 0;
  auto* verify = app.add_subcommand("verify", "Exhaustively check a code spec against its deadlines");
  verify->add_option("spec", verify_spec, "Code spec file")->required();
  verify->add_option("--w", verify_w, "Window length (default from spec)");
  verify->add_option("--report", verify_report, "Also write the JSON report here");
  verify->add_option("--jobs", verify_jobs, "Verification workers (0 = all cores)");

  RatesFlags rf;
  auto* rates = app.add_subcommand("rates", "Sum rates and gains over a (T_v, T_u) grid");
  rates->add_option("--b", rf.b, "Maximum burst length")->required();
  rates->add_option("--n", rf.n, "Maximum random erasures per window")->required();
  rates->add_option("--tv-range", rf.tv_range, "T_v range LO:HI")->required();
  rates->add_option("--tu-range", rf.tu_range, "T_u range LO:HI")->required();
  rates->add_flag("--csv", rf.csv, "CSV: gain grid plus per-T_v rate columns");
  rates->add_flag("--json", rf.json, "JSON (default)");
  rates->add_flag("--exact", rf.exact, "Print rationals as p/q");

  SimulateFlags sf;
  auto* simulate = app.add_subcommand("simulate", "Run a code spec as a stream over an erasure sequence");
  simulate->add_option("spec", sf.spec, "Code spec file")->required();
  simulate->add_option("--slots", sf.slots, "Horizon in slots")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sf.seed, "Seed for erasures and messages (falls back to MUXFEC_SEED, then 1)");
  simulate->add_option("--trace", sf.trace, "Write the erasure sequence used (one 0/1 per line)");
  simulate->add_option("--replay", sf.replay, "Read the erasure sequence from a trace file");
  simulate->add_option("--erasure-p", sf.erasure_p, "Per-slot erasure proposal probability")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--burst-p", sf.burst_p, "Burst proposal probability")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--burst-at", sf.burst_at, "Single length-B burst at this slot instead of random erasures");

  std::string dump_spec, dump_part = "merged";
  auto* dump = app.add_subcommand("dump", "Print a generator matrix as JSON");
  dump->add_option("spec", dump_spec, "Code spec file")->required();
  dump->add_option("--part", dump_part, "merged | g1 | g2 | left-block");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail("usage", e.what(), kExitUsage);
  }

  try {
    if (*build) return run_build(bf);
    if (*verify) return run_verify(verify_spec, verify_w, verify_report, verify_jobs);
    if (*rates) return run_rates(rf);
    if (*simulate) return run_simulate(sf);
    if (*dump) return run_dump(dump_spec, dump_part);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const std::invalid_argument& e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kExitFail);
  }
  return kExitUsage;
}
