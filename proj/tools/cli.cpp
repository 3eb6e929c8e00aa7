#include "cli.hpp"

#include "sondow/arith.hpp"
#include "sondow/corpus.hpp"
#include "sondow/errors.hpp"
#include "sondow/predicates.hpp"
#include "sondow/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace sondow::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::OracleBoundExceeded:
    case ErrorKind::OutOfRange:
    case ErrorKind::SegmentTooLarge:
      return kBudgetExceeded;
    default:
      return kInputError;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  auto v = to_u64(parse_bigint(text));
  if (!v) throw Error(ErrorKind::Parse, std::string(what) + " out of range: " + text);
  return *v;
}

std::int64_t parse_i64(const std::string& text, const char* what) {
  auto v = to_i64(parse_bigint(text));
  if (!v) throw Error(ErrorKind::Parse, std::string(what) + " out of range: " + text);
  return *v;
}

BigInt parse_positive(const std::string& text) {
  BigInt n = parse_bigint(text);
  if (n < 1) throw Error(ErrorKind::Parse, "expected a positive integer, got " + text);
  return n;
}

// Hints are always validated; without one, factoring runs within the default
// budget and a shortfall propagates as BudgetExceeded (exit 3).
Factorization factor_input(const BigInt& n, const std::string& factors_spec) {
  if (!factors_spec.empty()) return parse_factor_spec(n, factors_spec).factorization;
  return factorize(n);
}

std::string flag_text(const std::optional<bool>& flag) {
  if (!flag) return "n/a";
  return *flag ? "true" : "false";
}

struct CheckArgs {
  std::string n;
  std::string mu;
  std::string factors;
  bool json = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const BigInt n = parse_positive(a.n);
  const BigInt mu = parse_bigint(a.mu);
  const Factorization f = factor_input(n, a.factors);
  const SondowVerdict verdict = is_mu_sondow(f, mu);
  const CharacterizationFlags flags = classify(f, mu);

  if (a.json) {
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const auto& [p, e] : f.factors()) factors.push_back({to_decimal(p), e});
    auto opt = [](const std::optional<bool>& b) {
      return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr);
    };
    nlohmann::ordered_json doc = {
        {"n", to_decimal(n)},
        {"mu", to_decimal(mu)},
        {"factors", factors},
        {"member", verdict.member},
        {"canonical_mu", to_decimal(canonical_mu(f))},
        {"flags",
         {{"divisibility", flags.divisibility},
          {"power_sum", opt(flags.power_sum)},
          {"power_sum_lambda", opt(flags.power_sum_lambda)},
          {"bernoulli", opt(flags.bernoulli)},
          {"bernoulli_congruence", flags.bernoulli_congruence},
          {"egyptian", flags.egyptian},
          {"congruence_sum", flags.congruence_sum},
          {"derivative", opt(flags.derivative)}}},
        {"consistent", flags.consistent()},
        {"composite", f.is_composite()},
    };
    out << doc.dump() << '\n';
  } else {
    out << "n            " << to_decimal(n) << '\n'
        << "factors      " << f.to_string() << '\n'
        << "mu           " << to_decimal(mu) << '\n'
        << "member       " << (verdict.member ? "yes" : "no") << '\n'
        << "canonical mu " << to_decimal(canonical_mu(f)) << " (mod n)\n";
    for (const auto& w : verdict.witnesses) {
      out << "  p^s = " << to_decimal(w.prime) << '^' << w.exponent
          << "  (n/p + mu) mod p^s = " << to_decimal(w.residue) << '\n';
    }
    out << "characterizations:\n"
        << "  prime-power divisibility  " << (flags.divisibility ? "true" : "false") << '\n'
        << "  congruence sum            " << (flags.congruence_sum ? "true" : "false") << '\n'
        << "  egyptian fraction         " << (flags.egyptian ? "true" : "false") << '\n'
        << "  bernoulli (congruence)    " << (flags.bernoulli_congruence ? "true" : "false") << '\n'
        << "  bernoulli (exact)         " << flag_text(flags.bernoulli) << '\n'
        << "  power sum (phi)           " << flag_text(flags.power_sum) << '\n'
        << "  power sum (lambda)        " << flag_text(flags.power_sum_lambda) << '\n'
        << "  arithmetic derivative     " << flag_text(flags.derivative) << '\n';
    if (!flags.consistent()) out << "WARNING: characterizations disagree\n";
  }
  return verdict.member && flags.consistent() ? kSuccess : kPredicateFalse;
}

struct SearchArgs {
  std::string mu;
  std::string from;
  std::string to;
  bool composite_only = false;
  unsigned jobs = 1;
  std::string checkpoint;
  std::string jsonl;
  std::uint64_t segment_size = kDefaultSegmentSize;
  std::uint64_t max_segments = 0;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  const std::int64_t mu = parse_i64(a.mu, "mu");
  const std::uint64_t lo = parse_u64(a.from, "--from");
  const std::uint64_t hi = parse_u64(a.to, "--to");
  if (lo < 2 || lo > hi) throw Error(ErrorKind::RangeError, "search range must satisfy 2 <= from <= to");
  SearchOptions options;
  options.composite_only = a.composite_only;
  options.jobs = std::max(1u, a.jobs);
  options.segment_size = a.segment_size;

  Checkpoint state{mu, lo, {}};
  const bool checkpointing = !a.checkpoint.empty();
  if (checkpointing && std::filesystem::exists(a.checkpoint)) {
    state = checkpoint_resume(a.checkpoint, mu);
    if (state.next_segment_lo < lo || state.next_segment_lo > hi + 1 ||
        (state.next_segment_lo <= hi && (state.next_segment_lo - lo) % options.segment_size != 0)) {
      throw Error(ErrorKind::CheckpointMismatch,
                  "checkpoint position " + std::to_string(state.next_segment_lo) +
                      " is not a segment boundary of this range");
    }
  }

  std::ofstream file;
  if (!a.jsonl.empty()) {
    file.open(a.jsonl, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorKind::Parse, "cannot write " + a.jsonl);
  }
  std::ostream& sink = a.jsonl.empty() ? out : file;
  for (const auto& r : state.records_so_far) sink << to_jsonl(r) << '\n';

  if (state.next_segment_lo <= hi) {
    std::uint64_t segments_run = 0;
    scan_range(
        mu, state.next_segment_lo, hi, options,
        [&](const SearchRecord& r) {
          sink << to_jsonl(r) << '\n';
          if (checkpointing) state.records_so_far.push_back(r);
        },
        [&](std::uint64_t next) {
          state.next_segment_lo = next;
          if (checkpointing) checkpoint_save(state, a.checkpoint);
          ++segments_run;
          return a.max_segments == 0 || segments_run < a.max_segments;
        });
    if (checkpointing && state.next_segment_lo <= hi) {
      err << "stopped at " << state.next_segment_lo << "; checkpoint saved to " << a.checkpoint
          << '\n';
    }
  }
  sink.flush();
  return kSuccess;
}

void print_report(const ConjectureReport& r, std::ostream& out) {
  out << std::setw(8) << r.mu << "  (" << r.lo << ", " << r.hi << "]  ";
  if (r.witness) {
    out << "witness " << *r.witness;
  } else {
    out << "exhausted";
  }
  out << "  " << std::fixed << std::setprecision(3)
      << std::chrono::duration<double>(r.wall_time).count() << "s\n";
}

int cmd_conjecture1(const std::string& range, unsigned jobs, std::ostream& out) {
  const auto dots = range.find("..");
  if (dots == std::string::npos) throw Error(ErrorKind::Parse, "--mu-range expects a..b");
  const std::int64_t a = parse_i64(range.substr(0, dots), "range start");
  const std::int64_t b = parse_i64(range.substr(dots + 2), "range end");
  if (a > b) throw Error(ErrorKind::Parse, "--mu-range start exceeds end");
  SearchOptions options;
  options.jobs = std::max(1u, jobs);
  std::string exhausted;
  for (std::int64_t mu = a;; ++mu) {
    if (mu > 1 || mu < -1) {
      auto report = conjecture1_check(mu, options);
      if (report.exhausted) exhausted += " " + std::to_string(mu);
      print_report(report, out);
    }
    if (mu == b) break;
  }
  out << "exhausted:" << exhausted << '\n';
  return kSuccess;
}

int cmd_conjecture2(const std::string& mu_text, const std::string& bound_text, unsigned jobs,
                    std::ostream& out) {
  SearchOptions options;
  options.jobs = std::max(1u, jobs);
  auto report = conjecture2_search(parse_i64(mu_text, "mu"), parse_u64(bound_text, "--bound"),
                                   options);
  print_report(report, out);
  return kSuccess;
}

std::vector<BigInt> read_values(const std::string& text) {
  // Accepts b-files ("index value") and bare value-per-line lists.
  std::vector<BigInt> values;
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() > 2) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(number) + ": too many fields");
    }
    values.push_back(parse_bigint(tokens.back()));
  }
  return values;
}

int cmd_xcheck(const std::string& bfile, const std::string& predicate_name,
               const std::string& hints_file, std::ostream& out) {
  const auto predicate = CorpusPredicate::parse(predicate_name);
  const auto entries = parse_bfile(read_file(bfile));
  std::vector<FactorListInput> hints;
  if (!hints_file.empty()) hints = parse_factor_hints(read_file(hints_file));
  const auto report = crosscheck(entries, predicate, hints);
  for (const auto& e : report.entries) {
    const char* tag = e.outcome == CrosscheckOutcome::Pass   ? "pass"
                      : e.outcome == CrosscheckOutcome::Fail ? "FAIL"
                                                             : "skip";
    out << std::setw(5) << e.index << "  " << tag << "  " << to_decimal(e.value);
    if (!e.note.empty()) out << "  (" << e.note << ')';
    out << '\n';
  }
  out << predicate.name() << ": " << report.passed << '/' << report.entries.size() << " pass, "
      << report.failed << " fail, " << report.skipped << " skipped\n";
  if (report.failed > 0) return kPredicateFalse;
  return report.skipped > 0 ? kBudgetExceeded : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search and verification tools for mu-Sondow, Giuga and weak primary "
               "pseudoperfect numbers"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Classify n under every characterization");
  check_cmd->add_option("n", check.n, "Positive integer (decimal)")->required();
  check_cmd->add_option("--mu", check.mu, "Integer mu")->required();
  check_cmd->add_option("--factors", check.factors, "Known factorization p^e,p^e,...");
  check_cmd->add_flag("--json", check.json, "Emit JSON");

  std::string mu_of_n, mu_of_factors;
  auto* mu_of_cmd = app.add_subcommand("mu-of", "Residue mu* (mod n) with n in S_mu*");
  mu_of_cmd->add_option("n", mu_of_n)->required();
  mu_of_cmd->add_option("--factors", mu_of_factors);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Scan [from, to] for mu-Sondow numbers");
  search_cmd->add_option("--mu", search.mu)->required();
  search_cmd->add_option("--from", search.from)->required();
  search_cmd->add_option("--to", search.to)->required();
  search_cmd->add_flag("--composite-only", search.composite_only);
  search_cmd->add_option("--jobs", search.jobs)->check(CLI::Range(1u, 1024u));
  search_cmd->add_option("--checkpoint", search.checkpoint, "Resume from / save to this file");
  search_cmd->add_option("--jsonl", search.jsonl, "Write records here instead of stdout");
  search_cmd->add_option("--segment-size", search.segment_size)
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 28));
  search_cmd->add_option("--max-segments", search.max_segments,
                         "Stop after this many segments (0 = run to the end)");

  std::string c1_range;
  unsigned c1_jobs = 1;
  auto* c1_cmd = app.add_subcommand("conjecture1", "Look for a member of S_mu in [2, |mu|]");
  c1_cmd->add_option("--mu-range", c1_range, "a..b")->required();
  c1_cmd->add_option("--jobs", c1_jobs);

  std::string c2_mu, c2_bound;
  unsigned c2_jobs = 1;
  auto* c2_cmd = app.add_subcommand("conjecture2", "Look for a member of S_mu in (|mu|, bound]");
  c2_cmd->add_option("--mu", c2_mu)->required();
  c2_cmd->add_option("--bound", c2_bound)->required();
  c2_cmd->add_option("--jobs", c2_jobs);

  std::string residue_mod = "288", residue_input;
  auto* residues_cmd = app.add_subcommand("residues", "Reduce a list of values modulo m");
  residues_cmd->add_option("--mod", residue_mod);
  residues_cmd->add_option("--input", residue_input)->required();

  std::string derive_n, derive_factors;
  auto* derive_cmd = app.add_subcommand("derive", "Arithmetic derivative n'");
  derive_cmd->add_option("n", derive_n)->required();
  derive_cmd->add_option("--factors", derive_factors);

  std::string xcheck_bfile, xcheck_predicate, xcheck_hints;
  auto* xcheck_cmd = app.add_subcommand("xcheck", "Cross-check an OEIS b-file against a predicate");
  xcheck_cmd->add_option("--bfile", xcheck_bfile)->required();
  xcheck_cmd->add_option("--predicate", xcheck_predicate,
                         "giuga | weak_ppp | primary_ppp | sondow:<mu>")
      ->required();
  xcheck_cmd->add_option("--hints", xcheck_hints, "JSON Lines factor hints");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*check_cmd) return cmd_check(check, out);
    if (*mu_of_cmd) {
      const Factorization f = factor_input(parse_positive(mu_of_n), mu_of_factors);
      out << to_decimal(canonical_mu(f)) << '\n';
      return kSuccess;
    }
    if (*search_cmd) return cmd_search(search, out, err);
    if (*c1_cmd) return cmd_conjecture1(c1_range, c1_jobs, out);
    if (*c2_cmd) return cmd_conjecture2(c2_mu, c2_bound, c2_jobs, out);
    if (*residues_cmd) {
      const auto values = read_values(read_file(residue_input));
      for (const auto& r : residue_table(values, parse_bigint(residue_mod))) {
        out << to_decimal(r) << '\n';
      }
      return kSuccess;
    }
    if (*derive_cmd) {
      const Factorization f = factor_input(parse_positive(derive_n), derive_factors);
      out << to_decimal(arithmetic_derivative(f)) << '\n';
      return kSuccess;
    }
    if (*xcheck_cmd) return cmd_xcheck(xcheck_bfile, xcheck_predicate, xcheck_hints, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace sondow::cli
