// bikehiker: command-line front end over the C API.
//
// Exit codes: 0 success, 1 `check` found a non-optimal scheme, 2 bad input.

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bikehiker/bikehiker.h"

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void ok(bh_status status) {
  if (status != BH_OK) throw Failure(std::string(bh_status_name(status)) + ": " + bh_last_error());
}

struct SchemeDeleter {
  void operator()(bh_scheme* m) const { bh_scheme_free(m); }
};
struct PlanDeleter {
  void operator()(bh_plan* p) const { bh_plan_free(p); }
};
struct TraceDeleter {
  void operator()(bh_trace* t) const { bh_trace_free(t); }
};
struct ReportDeleter {
  void operator()(bh_enum_report* r) const { bh_enum_report_free(r); }
};
using Scheme = std::unique_ptr<bh_scheme, SchemeDeleter>;
using Plan = std::unique_ptr<bh_plan, PlanDeleter>;
using Trace = std::unique_ptr<bh_trace, TraceDeleter>;
using Report = std::unique_ptr<bh_enum_report, ReportDeleter>;

std::string take_string(char* s) {
  std::string out(s);
  bh_string_free(s);
  return out;
}

std::string fraction(bh_rational r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

const char* boolean(int v) { return v ? "true" : "false"; }

class Output {
 public:
  explicit Output(bool porcelain) : porcelain_(porcelain) {}

  template <class T>
  void kv(const std::string& key, const T& value) {
    std::cout << key << ": " << value << '\n';
  }

  // Human mode only.
  void text(const std::string& block) {
    if (!porcelain_) std::cout << block;
  }

  bool porcelain() const { return porcelain_; }

 private:
  bool porcelain_;
};

Scheme load(const std::string& path) {
  bh_scheme* raw = nullptr;
  ok(bh_scheme_load(path.c_str(), &raw));
  return Scheme(raw);
}

std::string compact_rows(const bh_scheme* m) {
  std::string out;
  for (size_t i = 0; i < bh_scheme_rows(m); ++i) {
    if (i) out += '/';
    for (size_t j = 0; j < bh_scheme_cols(m); ++j) out += bh_scheme_at(m, i, j) ? '1' : '0';
  }
  return out;
}

bh_rational speed(const std::string& text) {
  bh_rational r{};
  ok(bh_rational_parse(text.c_str(), &r));
  return r;
}

struct GenArgs {
  std::string kind;
  size_t n = 0;
  size_t k = 0;
  size_t r = 1;
  std::string output;
};

int run_gen(const GenArgs& a, Output& out) {
  bh_kind kind{};
  ok(bh_kind_parse(a.kind.c_str(), &kind));
  bh_scheme* raw = nullptr;
  ok(bh_generate(kind, a.n, a.k, a.r, &raw));
  Scheme m(raw);
  if (a.output.empty()) {
    char* text = nullptr;
    ok(bh_scheme_to_text(m.get(), &text));
    std::cout << take_string(text);
    return 0;
  }
  ok(bh_scheme_save(m.get(), a.output.c_str()));
  out.kv("kind", a.kind);
  out.kv("rows", bh_scheme_rows(m.get()));
  out.kv("cols", bh_scheme_cols(m.get()));
  out.kv("output", a.output);
  return 0;
}

struct CheckArgs {
  std::string file;
  bool no_skip = false;
  bool witness = false;
  std::string ties = "thm37";
};

int run_check(const CheckArgs& a, Output& out) {
  Scheme m = load(a.file);
  const bh_tie_order ties = a.ties == "def33" ? BH_TIES_PICKERS_FIRST : BH_TIES_DROPPERS_FIRST;
  bh_verdict v{};
  ok(bh_decide(m.get(), a.no_skip ? 0 : 1, ties, &v));
  static const char* const reasons[] = {"optimal", "not_uniform", "non_dyck"};
  out.kv("optimal", boolean(v.optimal));
  out.kv("reason", reasons[v.reason]);
  out.kv("rows", bh_scheme_rows(m.get()));
  out.kv("cols", bh_scheme_cols(m.get()));
  out.kv("uniform", boolean(v.uniform));
  if (v.uniform) {
    out.kv("k", v.k);
    out.kv("l", v.l);
  }
  out.kv("boundaries_checked", v.boundaries_checked);
  if (v.has_failing_boundary) {
    out.kv("failing_boundary", v.failing_boundary + 1);
    out.kv("failing_boundary_0based", v.failing_boundary);
    out.kv("failing_word", v.failing_word);
  }
  const int optimal = v.optimal;
  const int uniform = v.uniform;
  bh_verdict_clear(&v);

  if (a.witness && uniform) {
    const size_t boundaries = bh_scheme_cols(m.get()) - 1;
    Plan plan;
    if (optimal) {
      bh_plan* raw = nullptr;
      ok(bh_plan_build(m.get(), &raw));
      plan.reset(raw);
    }
    std::ostringstream table;
    table << "\nboundary  word" << (optimal ? "  plan" : "") << '\n';
    for (size_t b = 0; b < boundaries; ++b) {
      char* raw = nullptr;
      ok(bh_canonical_word(m.get(), b, ties, &raw));
      const std::string word = take_string(raw);
      out.kv("word_" + std::to_string(b + 1), word.empty() ? "-" : word);
      std::string mapping;
      if (plan) {
        for (size_t i = 0; i < bh_scheme_rows(m.get()); ++i) {
          size_t image = 0;
          if (!bh_plan_image(plan.get(), b, i, &image) || image == i) continue;
          if (!mapping.empty()) mapping += ' ';
          mapping += std::to_string(i) + ">" + std::to_string(image);
        }
        out.kv("plan_" + std::to_string(b + 1), mapping.empty() ? "-" : mapping);
      }
      table << "  " << b + 1 << "\t  " << (word.empty() ? "-" : word) << "  " << mapping << '\n';
    }
    out.text(table.str());
  }
  return optimal ? 0 : 1;
}

int run_reduce(const std::string& file, const std::string& output, Output& out) {
  Scheme m = load(file);
  bh_scheme* raw = nullptr;
  size_t removed = 0;
  ok(bh_reduce(m.get(), &raw, &removed));
  Scheme reduced(raw);
  ok(bh_scheme_save(reduced.get(), output.c_str()));
  size_t before = 0;
  size_t after = 0;
  ok(bh_rides(m.get(), &before, nullptr));
  ok(bh_rides(reduced.get(), &after, nullptr));
  out.kv("handovers_removed", removed);
  out.kv("rides_before", before);
  out.kv("rides_after", after);
  out.kv("output", output);
  return 0;
}

int run_stats(const std::string& file, bool with_plan, Output& out) {
  Scheme m = load(file);
  const size_t rows = bh_scheme_rows(m.get());
  bh_verdict v{};
  ok(bh_decide(m.get(), 1, BH_TIES_DROPPERS_FIRST, &v));
  const int optimal = v.optimal;
  out.kv("rows", rows);
  out.kv("cols", bh_scheme_cols(m.get()));
  out.kv("uniform", boolean(v.uniform));
  if (v.uniform) {
    out.kv("k", v.k);
    out.kv("l", v.l);
  }
  out.kv("optimal", boolean(optimal));
  bh_verdict_clear(&v);

  std::vector<size_t> per(rows);
  size_t total = 0;
  ok(bh_rides(m.get(), &total, per.data()));
  out.kv("total_rides", total);
  if (optimal) {
    size_t h = 0;
    ok(bh_excess_handovers(m.get(), &h));
    out.kv("excess_handovers", h);
  }
  std::ostringstream table;
  table << "\ntraveller  rides\n";
  for (size_t i = 0; i < rows; ++i) {
    out.kv("rides_traveller_" + std::to_string(i), per[i]);
    table << "  t" << i << "\t   " << per[i] << '\n';
  }
  out.text(table.str());

  if (with_plan) {
    bh_plan* raw = nullptr;
    ok(bh_plan_build(m.get(), &raw));
    Plan plan(raw);
    size_t bikes = 0;
    ok(bh_bike_mounts(m.get(), plan.get(), nullptr, 0, &bikes));
    std::vector<size_t> mounts(bikes);
    ok(bh_bike_mounts(m.get(), plan.get(), mounts.data(), mounts.size(), &bikes));
    out.kv("bikes", bikes);
    std::ostringstream bike_table;
    bike_table << "\nbike  mounts\n";
    for (size_t b = 0; b < bikes; ++b) {
      out.kv("mounts_bike_" + std::to_string(b), mounts[b]);
      bike_table << "  " << b << "\t" << mounts[b] << '\n';
    }
    out.text(bike_table.str());
  }
  return 0;
}

struct SimArgs {
  std::string file;
  std::string walk = "1";
  std::string cycle = "2";
  std::string policy = "greedy";
  std::string trace;
};

int run_sim(const SimArgs& a, Output& out) {
  Scheme m = load(a.file);
  const bh_speeds speeds{speed(a.walk), speed(a.cycle)};
  Plan plan;
  bh_policy policy = BH_POLICY_GREEDY;
  if (a.policy == "plan") {
    bh_plan* raw = nullptr;
    ok(bh_plan_build(m.get(), &raw));
    plan.reset(raw);
    policy = BH_POLICY_PLAN;
  }
  bh_trace* raw = nullptr;
  ok(bh_simulate(m.get(), &speeds, policy, plan.get(), &raw));
  Trace trace(raw);

  const int stall_free = bh_trace_stall_free(trace.get());
  out.kv("policy", a.policy);
  out.kv("walk", fraction(speeds.walk));
  out.kv("cycle", fraction(speeds.cycle));
  out.kv("stall_free", boolean(stall_free));
  out.kv("makespan", fraction(bh_trace_makespan(trace.get())));
  out.kv("simultaneous_finish", boolean(bh_trace_simultaneous_finish(trace.get())));
  out.kv("stalls", bh_trace_stall_count(trace.get()));
  out.kv("handovers", bh_trace_handover_count(trace.get()));
  if (!stall_free) {
    bh_stall s{};
    ok(bh_trace_stall(trace.get(), 0, &s));
    out.kv("first_stall_traveller", s.traveller);
    out.kv("first_stall_post", s.post);
    out.kv("first_stall_time", fraction(s.begin));
    out.kv("first_stall_wait", fraction(s.wait));
    out.kv("first_stall_ride_ordinal", s.ride_ordinal);
    std::ostringstream table;
    table << "\ntraveller  post  begin  wait  ride\n";
    for (size_t i = 0; i < bh_trace_stall_count(trace.get()); ++i) {
      ok(bh_trace_stall(trace.get(), i, &s));
      table << "  t" << s.traveller << "\t     P" << s.post << "    " << fraction(s.begin) << "   "
            << fraction(s.wait) << "   " << s.ride_ordinal << '\n';
    }
    out.text(table.str());
  } else {
    bh_cohorts c{};
    ok(bh_trace_cohorts(trace.get(), &c));
    out.kv("cohorts_max_positions", c.max_positions);
    out.kv("cohorts_max_gap", fraction(c.max_gap));
    out.kv("cohorts_max_spread", fraction(c.max_spread));
    out.kv("cohorts_mixed_mode_samples", c.mixed_mode_samples);
  }
  if (!a.trace.empty()) {
    ok(bh_trace_write_csv(trace.get(), a.trace.c_str()));
    out.kv("trace", a.trace);
  }
  return 0;
}

struct EnumArgs {
  size_t n = 0;
  size_t k = 0;
  bool cross_validate = false;
  size_t max_examples = 3;
  bool force = false;
};

int run_enum(const EnumArgs& a, Output& out) {
  const bh_enum_options options{a.cross_validate ? 1 : 0, a.max_examples, a.force ? 1 : 0};
  bh_enum_report* raw = nullptr;
  ok(bh_enumerate(a.n, a.k, &options, &raw));
  Report report(raw);
  out.kv("n", a.n);
  out.kv("k", a.k);
  out.kv("total_uniform", bh_enum_total(report.get()));
  out.kv("optimal_count", bh_enum_optimal(report.get()));
  out.kv("nonoptimal_count", bh_enum_nonoptimal(report.get()));
  if (a.cross_validate) out.kv("mismatches", bh_enum_mismatches(report.get()));
  for (size_t i = 0; i < bh_enum_example_count(report.get()); ++i) {
    bh_scheme* ex = nullptr;
    ok(bh_enum_example(report.get(), i, &ex));
    Scheme example(ex);
    out.kv("example_" + std::to_string(i + 1), compact_rows(example.get()));
  }
  return 0;
}

int run_det(size_t n, size_t k, Output& out) {
  bh_scheme* raw = nullptr;
  ok(bh_generate(BH_KIND_CYCLIC, n, k, 1, &raw));
  Scheme m(raw);
  char* det = nullptr;
  ok(bh_determinant(m.get(), &det));
  out.kv("n", n);
  out.kv("k", k);
  out.kv("determinant", take_string(det));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biker-hiker scheme toolkit"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "Flat key: value output only");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named optimal scheme");
  gen_cmd->add_option("--kind", gen.kind, "Scheme family")
      ->required()
      ->check(CLI::IsMember({"cyclic", "transpose-cyclic", "circulant", "block"}));
  gen_cmd->add_option("--n", gen.n, "Travellers")->required();
  gen_cmd->add_option("--k", gen.k, "Bicycles")->required();
  gen_cmd->add_option("--r", gen.r, "Block repetitions");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide optimality");
  check_cmd->add_option("file", check.file, "Matrix file")->required();
  check_cmd->add_flag("--no-skip-rule", check.no_skip, "Scan every boundary");
  check_cmd->add_flag("--witness", check.witness, "Print every canonical word and the plan");
  check_cmd->add_option("--tie-order", check.ties, "Equal-sum ranking")
      ->check(CLI::IsMember({"thm37", "def33"}));

  std::string reduce_in;
  std::string reduce_out;
  auto* reduce_cmd = app.add_subcommand("reduce", "Remove excess handovers");
  reduce_cmd->add_option("file", reduce_in, "Matrix file")->required();
  reduce_cmd->add_option("-o,--output", reduce_out, "Output file")->required();

  std::string stats_file;
  bool stats_plan = false;
  auto* stats_cmd = app.add_subcommand("stats", "Ride and handover counts");
  stats_cmd->add_option("file", stats_file, "Matrix file")->required();
  stats_cmd->add_flag("--plan", stats_plan, "Per-bike mounts under the canonical plan");

  SimArgs sim;
  auto* sim_cmd = app.add_subcommand("sim", "Simulate with exact times");
  sim_cmd->add_option("file", sim.file, "Matrix file")->required();
  sim_cmd->add_option("--walk", sim.walk, "Walking speed P/Q");
  sim_cmd->add_option("--cycle", sim.cycle, "Cycling speed P/Q");
  sim_cmd->add_option("--policy", sim.policy, "Bike assignment")->check(CLI::IsMember({"greedy", "plan"}));
  sim_cmd->add_option("--trace", sim.trace, "Write the event trace as CSV");

  EnumArgs en;
  auto* enum_cmd = app.add_subcommand("enum", "Enumerate all uniform square schemes");
  enum_cmd->add_option("--n", en.n, "Size")->required();
  enum_cmd->add_option("--k", en.k, "Line sum")->required();
  enum_cmd->add_flag("--cross-validate", en.cross_validate, "Compare with simulation");
  enum_cmd->add_option("--max-examples", en.max_examples, "Non-optimal examples to print");
  enum_cmd->add_flag("--force", en.force, "Allow n above the guard");

  size_t det_n = 0;
  size_t det_k = 0;
  auto* det_cmd = app.add_subcommand("det", "Determinant of the cyclic scheme");
  det_cmd->add_option("--n", det_n, "Size")->required();
  det_cmd->add_option("--k", det_k, "Bicycles")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Output out(porcelain);
  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*check_cmd) return run_check(check, out);
    if (*reduce_cmd) return run_reduce(reduce_in, reduce_out, out);
    if (*stats_cmd) return run_stats(stats_file, stats_plan, out);
    if (*sim_cmd) return run_sim(sim, out);
    if (*enum_cmd) return run_enum(en, out);
    if (*det_cmd) return run_det(det_n, det_k, out);
  } catch (const Failure& e) {
    std::cerr << "bikehiker: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
