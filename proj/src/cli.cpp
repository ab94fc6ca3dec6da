#include "cperm/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>
#include <vector>

#include "cperm/constraints.hpp"
#include "cperm/generator.hpp"
#include "cperm/oracle.hpp"
#include "cperm/parser.hpp"

namespace cperm::cli {
namespace {

enum class Subcommand { Gen, Count, Verify, Bench };

struct RunConfig {
  Subcommand subcommand = Subcommand::Gen;
  std::string input_string;
  std::vector<std::string> constraint_flags;
  std::string constraints_file;
  bool no_sort = false;
  std::optional<std::uint64_t> limit;
  bool show_stats = false;
};

struct Instance {
  Word s;
  PermittedMatrix pm;
};

void add_common_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("-s,--string", cfg.input_string, "String to permute (UTF-8)")
      ->required();
  sub.add_option("-c,--constraint", cfg.constraint_flags,
                 "Constraint clause, e.g. \"pos 1 in {a,b}\" (repeatable)");
  sub.add_option("--constraints-file", cfg.constraints_file,
                 "File with one constraint clause per line");
  sub.add_flag("--no-sort", cfg.no_sort,
               "Do not sort the input; output follows first-occurrence order");
  sub.add_flag("--stats", cfg.show_stats,
               "Print expansion counters to standard error");
}

void print_stats(std::ostream& err, const GenStats& stats) {
  err << "stats: calls=" << stats.calls << " emitted=" << stats.emitted
      << " dead_ends=" << stats.dead_ends << '\n';
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

// Reads the inputs shared by every subcommand. On failure writes the
// diagnostic and returns the exit code instead.
std::variant<Instance, int> load_instance(const RunConfig& cfg,
                                          std::ostream& err) {
  Instance inst;
  try {
    inst.s = decode_utf8(cfg.input_string);
  } catch (const Utf8Error& e) {
    err << "error: --string is not valid UTF-8: " << e.what() << '\n';
    return kUsageError;
  }

  std::vector<std::string> sources = cfg.constraint_flags;
  if (!cfg.constraints_file.empty()) {
    std::ifstream in(cfg.constraints_file, std::ios::binary);
    if (!in) {
      err << "error: cannot read constraints file '" << cfg.constraints_file
          << "'\n";
      return kUsageError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    sources.push_back(buf.str());
  }

  ConstraintSet cs;
  try {
    cs = parse_clauses(sources, inst.s.size());
  } catch (const ParseError& e) {
    err << "error: constraint syntax at line " << e.line() << ", column "
        << e.column() << ": " << e.message() << '\n'
        << "  " << e.snippet() << '\n';
    return kParseError;
  }

  if (auto report = validate(cs); !report.ok()) {
    err << "error: " << report.describe() << '\n';
    if (!report.conflicts.empty()) {
      err << "note: a position may either allow symbols or forbid symbols, "
             "never both\n";
    }
    if (!report.out_of_bounds.empty()) {
      err << "note: positions run from 1 to " << inst.s.size() << '\n';
    }
    return kConstraintError;
  }

  const Alphabet alpha = alphabet_of(inst.s);
  if (auto foreign = foreign_allowed_symbols(cs, alpha); !foreign.empty()) {
    err << "warning: allowed symbol(s) not in the input string, ignored: "
        << encode_utf8(foreign.to_word()) << '\n';
  }
  inst.pm = normalize(cs, alpha);
  return inst;
}

int run_gen(const RunConfig& cfg, const Instance& inst, std::ostream& out,
            std::ostream& err) {
  PermutationStream stream(inst.s, inst.pm, {.sort_input = !cfg.no_sort});
  std::uint64_t written = 0;
  while ((!cfg.limit || written < *cfg.limit) && stream.advance()) {
    out << encode_utf8(stream.current()) << '\n';
    ++written;
  }
  out.flush();
  if (cfg.show_stats) print_stats(err, stream.stats());
  return kOk;
}

int run_count(const RunConfig& cfg, const Instance& inst, std::ostream& out,
              std::ostream& err) {
  PermutationStream stream(inst.s, inst.pm, {.sort_input = !cfg.no_sort});
  std::uint64_t total = 0;
  while (stream.advance()) ++total;
  out << total << '\n';
  if (cfg.show_stats) print_stats(err, stream.stats());
  return kOk;
}

// The oracle's answer in the order the generator is expected to produce it.
std::vector<Word> oracle_sequence(const RunConfig& cfg, const Instance& inst) {
  auto result = oracle::solve(inst.s, inst.pm);
  if (cfg.no_sort) {
    PermutationStream probe(inst.s, inst.pm, {.sort_input = false});
    oracle::sort_by_symbol_order(result.outputs, probe.symbol_order());
  }
  return std::move(result.outputs);
}

int run_verify(const RunConfig& cfg, const Instance& inst, std::ostream& out,
               std::ostream& err) {
  const auto expected = oracle_sequence(cfg, inst);
  PermutationStream stream(inst.s, inst.pm, {.sort_input = !cfg.no_sort});
  std::size_t index = 0;
  for (;;) {
    const bool more = stream.advance();
    const bool oracle_more = index < expected.size();
    if (!more && !oracle_more) break;
    if (!more || !oracle_more || stream.current() != expected[index]) {
      out << "MISMATCH at index " << index << ": generator="
          << (more ? encode_utf8(stream.current()) : "<end>")
          << " oracle=" << (oracle_more ? encode_utf8(expected[index]) : "<end>")
          << '\n';
      return kVerifyMismatch;
    }
    ++index;
  }
  out << "OK " << index << '\n';
  if (cfg.show_stats) print_stats(err, stream.stats());
  return kOk;
}

int run_bench(const RunConfig& cfg, const Instance& inst, std::ostream& out,
              std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  using Ms = std::chrono::duration<double, std::milli>;

  const auto gen_start = Clock::now();
  PermutationStream stream(inst.s, inst.pm, {.sort_input = !cfg.no_sort});
  while (stream.advance()) {
  }
  const double gen_ms = Ms(Clock::now() - gen_start).count();

  const auto oracle_start = Clock::now();
  const auto result = oracle::solve(inst.s, inst.pm);
  const double oracle_ms = Ms(Clock::now() - oracle_start).count();

  const GenStats stats = stream.stats();
  out << "n=" << inst.s.size() << " emitted=" << stats.emitted
      << " calls=" << stats.calls << " dead_ends=" << stats.dead_ends
      << " oracle_total=" << result.total_distinct
      << " gen_ms=" << format_ms(gen_ms) << " oracle_ms=" << format_ms(oracle_ms)
      << '\n';
  if (result.outputs.size() != stats.emitted) {
    err << "warning: oracle kept " << result.outputs.size()
        << " permutations, generator emitted " << stats.emitted << '\n';
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Enumerate permutations of a string under per-position "
               "allow/forbid constraints",
               "cperm"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Print matching permutations, one per line");
  add_common_options(*gen, cfg);
  gen->add_option("--limit", cfg.limit, "Stop after this many lines")
      ->check(CLI::PositiveNumber);
  auto* cnt = app.add_subcommand("count", "Print the number of matching permutations");
  add_common_options(*cnt, cfg);
  auto* verify = app.add_subcommand(
      "verify", "Compare the generator against brute-force enumeration");
  add_common_options(*verify, cfg);
  auto* bench = app.add_subcommand(
      "bench", "Time the generator and brute-force enumeration on one instance");
  add_common_options(*bench, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (gen->parsed()) cfg.subcommand = Subcommand::Gen;
  if (cnt->parsed()) cfg.subcommand = Subcommand::Count;
  if (verify->parsed()) cfg.subcommand = Subcommand::Verify;
  if (bench->parsed()) cfg.subcommand = Subcommand::Bench;

  auto loaded = load_instance(cfg, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const auto& inst = std::get<Instance>(loaded);

  switch (cfg.subcommand) {
    case Subcommand::Gen:
      return run_gen(cfg, inst, out, err);
    case Subcommand::Count:
      return run_count(cfg, inst, out, err);
    case Subcommand::Verify:
      return run_verify(cfg, inst, out, err);
    case Subcommand::Bench:
      return run_bench(cfg, inst, out, err);
  }
  return kUsageError;
}

}  // namespace cperm::cli
