#include "modinv/cli/app.hpp"

#include "modinv/cli/format.hpp"
#include "modinv/crt.hpp"
#include "modinv/dayan.hpp"
#include "modinv/modmath.hpp"
#include "modinv/oracle.hpp"
#include "modinv/series.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace modinv::cli {

namespace {

Int arg_int(const std::string& text, const char* name) {
  try {
    return parse_int(text);
  } catch (const PreconditionError&) {
    throw ParseError(std::string(name) + ": not an integer: '" + text + "'");
  }
}

int cmd_mod(const std::string& a, const std::string& m, std::ostream& out, std::ostream& err) {
  const Int modulus = arg_int(m, "m");
  if (modulus == 0) {
    err << "error: modulus must be nonzero\n";
    return kUndefined;
  }
  out << floor_mod(arg_int(a, "a"), modulus) << '\n';
  return kSuccess;
}

int cmd_inv(const std::string& a, const std::string& m, std::ostream& out, std::ostream& err) {
  const ModInverseOutcome result = mod_inverse(arg_int(a, "a"), arg_int(m, "m"));
  switch (result.status()) {
    case InverseStatus::Defined:
      out << result.value() << '\n';
      return kSuccess;
    case InverseStatus::UndefinedZeroModulus:
      err << "undefined: a*m = 0\n";
      return kUndefined;
    case InverseStatus::UndefinedNotCoprime:
      err << "not coprime, gcd=" << *result.gcd() << '\n';
      return kUndefined;
  }
  return kUndefined;
}

struct ExtInvArgs {
  std::string b;
  std::string a;
  std::string m;
  std::string strategy = "all-plus";
  std::string format = "tsv";
  bool trace = false;
};

int cmd_extinv(const ExtInvArgs& args, std::ostream& out, std::ostream& err) {
  const Int b = arg_int(args.b, "b");
  const Int a = arg_int(args.a, "a");
  const Int m = arg_int(args.m, "m");
  if (m <= 1 || a == 0) {
    err << "error: extinv requires m > 1 and a != 0\n";
    return kUsage;
  }
  SignStrategy strategy = SignStrategy::all_plus();
  try {
    strategy = SignStrategy::parse(args.strategy);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }

  const TracedExtInverse result = ext_mod_inverse_traced(b, a, m, strategy);
  const ExtInverseOutcome& outcome = result.outcome;

  if (args.format == "json") {
    nlohmann::json doc = result.trace ? trace_to_json(*result.trace) : nlohmann::json::object();
    doc["value"] = outcome.value ? nlohmann::json(to_string(*outcome.value)) : nlohmann::json(nullptr);
    doc["gcd"] = to_string(outcome.gcd);
    doc["reduced_modulus"] = to_string(outcome.reduced_modulus);
    out << doc.dump(2) << '\n';
    return outcome.is_defined() ? kSuccess : kUndefined;
  }

  if (outcome.is_defined()) {
    out << *outcome.value;
    if (outcome.gcd != 1) out << " (mod " << outcome.reduced_modulus << "), gcd=" << outcome.gcd;
    out << '\n';
  }
  if (args.trace && result.trace) {
    out << (args.format == "markdown" ? format_trace_markdown(*result.trace) : format_trace_tsv(*result.trace));
  }
  if (!outcome.is_defined()) {
    err << "no solution: gcd(" << a << ", " << m << ")=" << outcome.gcd << " does not divide " << b << '\n';
    return kUndefined;
  }
  return kSuccess;
}

int cmd_crt(const std::string& path, bool parallel, bool coprime, std::ostream& out, std::ostream& err) {
  std::vector<Congruence> system;
  if (path == "-") {
    system = parse_congruences(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    system = parse_congruences(in);
  }
  if (system.empty()) throw ParseError("no congruences in '" + path + "'");

  try {
    const CrtSolution solution =
        coprime ? solve_coprime(system) : solve_general(system, SolveOptions{.parallel = parallel});
    out << solution.x << " mod " << solution.modulus << '\n';
    return kSuccess;
  } catch (const IncompatibleCongruencesError& e) {
    err << e.what() << '\n';
  } catch (const NotCoprimeError& e) {
    err << "moduli are not pairwise coprime (gcd " << e.gcd() << "); drop --coprime\n";
  }
  return kUndefined;
}

int cmd_series(const std::string& p_text, const std::string& q_text, int type, bool condensed, bool use_float,
               std::ostream& out, std::ostream& err) {
  const Int p = arg_int(p_text, "p");
  const Int q = arg_int(q_text, "q");
  if (!(1 < q && q < p)) {
    err << "error: series requires 1 < q < p\n";
    return kUsage;
  }
  try {
    if (use_float) {
      const FloatSeries f = float_series(p, q, type, condensed);
      out << std::llround(f.rounded) << '\n';
      if (f.suspect) {
        err << "warning: float value " << std::setprecision(17) << f.value << " is " << f.error
            << " away from the nearest integer\n";
      }
      return kSuccess;
    }
    if (type == 1 && !condensed) {
      const FirstTypeResult r = inverse_series_first_type(p, q);
      out << r.value;
      if (r.raw != r.value) out << " (raw " << r.raw << " + " << p << ")";
      out << '\n';
    } else if (type == 1) {
      out << inverse_series_first_type_condensed(p, q) << '\n';
    } else {
      out << inverse_series_second_type(p, q, condensed) << '\n';
    }
  } catch (const NotCoprimeError& e) {
    err << "not coprime, gcd=" << e.gcd() << '\n';
    return kUndefined;
  }
  return kSuccess;
}

struct BenchArgs {
  std::int64_t min_p = 3;
  std::int64_t max_p = 1000;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::string out_path = "steps.csv";
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  if (args.min_p < 3 || args.max_p < args.min_p) throw ParseError("bench: requires 3 <= --min-p <= --max-p");
  const oracle::StepComparison cmp = oracle::compare_steps(args.min_p, args.max_p, args.samples, args.seed);
  if (args.out_path == "-") {
    oracle::write_steps_csv(out, cmp.samples);
  } else {
    std::ofstream file(args.out_path);
    if (!file) throw ParseError("cannot write '" + args.out_path + "'");
    oracle::write_steps_csv(file, cmp.samples);
    for (const oracle::StepAggregate& agg : cmp.aggregates) {
      std::ostringstream mean;
      mean << std::fixed << std::setprecision(3) << agg.mean;
      out << oracle::to_string(agg.algorithm) << ": mean=" << mean.str() << " max=" << agg.max << '\n';
    }
    out << "wrote " << args.out_path << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign-aware modular inverses, Dayan traces and Chinese remainder solving", "modinv"};
  app.require_subcommand(1);

  std::string a;
  std::string m;
  std::function<int()> action;

  auto* mod = app.add_subcommand("mod", "floor modulo: a - m*floor(a/m)");
  mod->add_option("a", a)->required();
  mod->add_option("m", m)->required();
  mod->callback([&] { action = [&] { return cmd_mod(a, m, out, err); }; });

  auto* inv = app.add_subcommand("inv", "sign-aware modular inverse of a modulo m");
  inv->add_option("a", a)->required();
  inv->add_option("m", m)->required();
  inv->callback([&] { action = [&] { return cmd_inv(a, m, out, err); }; });

  ExtInvArgs ext;
  auto* extinv = app.add_subcommand("extinv", "solve a*x = b (mod m) with the Dayan trace");
  extinv->add_option("b", ext.b)->required();
  extinv->add_option("a", ext.a)->required();
  extinv->add_option("m", ext.m)->required();
  extinv->add_option("--strategy", ext.strategy, "all-plus | all-minus | least-abs | explicit:s1,s2,...");
  extinv->add_flag("--trace", ext.trace, "print the trace table");
  extinv->add_option("--format", ext.format)->check(CLI::IsMember({"tsv", "markdown", "json"}));
  extinv->callback([&] { action = [&] { return cmd_extinv(ext, out, err); }; });

  std::string crt_path;
  bool parallel = false;
  bool coprime = false;
  auto* crt = app.add_subcommand("crt", "solve a congruence system read from a file ('-' for stdin)");
  crt->add_option("file", crt_path)->required();
  crt->add_flag("--parallel", parallel, "run each merge round concurrently");
  crt->add_flag("--coprime", coprime, "use the iterative co-prime solver");
  crt->callback([&] { action = [&] { return cmd_crt(crt_path, parallel, coprime, out, err); }; });

  int type = 1;
  bool condensed = false;
  bool use_float = false;
  auto* series = app.add_subcommand("series", "inverse of q modulo p from the remainder series");
  series->add_option("p", a)->required();
  series->add_option("q", m)->required();
  series->add_option("--type", type)->check(CLI::IsMember({1, 2}));
  series->add_flag("--condensed", condensed);
  series->add_flag("--float", use_float, "evaluate in double precision (demonstration)");
  series->callback([&] { action = [&] { return cmd_series(a, m, type, condensed, use_float, out, err); }; });

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "division-step comparison, written as CSV");
  bench_cmd->add_option("--min-p", bench.min_p);
  bench_cmd->add_option("--max-p", bench.max_p);
  bench_cmd->add_option("--samples", bench.samples);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--out", bench.out_path, "CSV path, '-' for stdout");
  bench_cmd->callback([&] { action = [&] { return cmd_bench(bench, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StrategyExhaustedError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUndefined;
  }
}

}  // namespace modinv::cli
