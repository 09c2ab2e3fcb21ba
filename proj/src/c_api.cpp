#include "bikehiker/bikehiker.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "bikehiker/error.hpp"
#include "bikehiker/optimality.hpp"
#include "bikehiker/oracle.hpp"
#include "bikehiker/reduction.hpp"
#include "bikehiker/scheme.hpp"
#include "bikehiker/schemes.hpp"
#include "bikehiker/simulate.hpp"

using namespace bikehiker;

struct bh_scheme {
  BinaryScheme value;
};

struct bh_plan {
  AssignmentPlan value;
};

struct bh_trace {
  SimulationTrace value;
};

struct bh_enum_report {
  EnumerationReport value;
};

namespace {

std::string& last_error() {
  thread_local std::string message;
  return message;
}

bh_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return BH_ERR_PARSE;
    case ErrorCode::invalid_argument: return BH_ERR_INVALID_ARGUMENT;
    case ErrorCode::not_square: return BH_ERR_NOT_SQUARE;
    case ErrorCode::not_uniform: return BH_ERR_NOT_UNIFORM;
    case ErrorCode::not_optimal: return BH_ERR_NOT_OPTIMAL;
    case ErrorCode::invalid_plan: return BH_ERR_INVALID_PLAN;
    case ErrorCode::guard_exceeded: return BH_ERR_GUARD;
    case ErrorCode::io: return BH_ERR_IO;
  }
  return BH_ERR_INTERNAL;
}

template <class F>
bh_status call(F&& body) {
  try {
    body();
    last_error().clear();
    return BH_OK;
  } catch (const Error& e) {
    last_error() = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error() = "out of memory";
    return BH_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error() = e.what();
    return BH_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::invalid_argument, what);
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bh_rational to_c(const Rational& r) { return {r.numerator(), r.denominator()}; }

Rational from_c(const bh_rational& r) {
  require(r.den != 0, "zero denominator");
  return Rational(r.num, r.den);
}

SpeedModel speeds_from(const bh_speeds* speeds) {
  SpeedModel model;
  if (speeds != nullptr) {
    model.walk = from_c(speeds->walk);
    model.cycle = from_c(speeds->cycle);
  }
  validate(model);
  return model;
}

TieOrder ties_from(bh_tie_order ties) {
  return ties == BH_TIES_PICKERS_FIRST ? TieOrder::pickers_first : TieOrder::droppers_first;
}

}  // namespace

extern "C" {

const char* bh_last_error(void) { return last_error().c_str(); }

const char* bh_status_name(bh_status status) {
  switch (status) {
    case BH_OK: return "ok";
    case BH_ERR_PARSE: return "parse";
    case BH_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case BH_ERR_NOT_SQUARE: return "not_square";
    case BH_ERR_NOT_UNIFORM: return "not_uniform";
    case BH_ERR_NOT_OPTIMAL: return "not_optimal";
    case BH_ERR_INVALID_PLAN: return "invalid_plan";
    case BH_ERR_GUARD: return "guard_exceeded";
    case BH_ERR_IO: return "io";
    case BH_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* bh_version(void) { return "0.1.0"; }

void bh_string_free(char* s) { delete[] s; }

bh_status bh_scheme_parse(const char* text, bh_scheme** out) {
  return call([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new bh_scheme{parse_scheme(text)};
  });
}

bh_status bh_scheme_load(const char* path, bh_scheme** out) {
  return call([&] {
    require(path != nullptr && out != nullptr, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io, std::string("cannot open ") + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *out = new bh_scheme{parse_scheme(buffer.str())};
  });
}

bh_status bh_scheme_save(const bh_scheme* m, const char* path) {
  return call([&] {
    require(m != nullptr && path != nullptr, "null argument");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::io, std::string("cannot write ") + path);
    file << format_scheme(m->value);
    if (!file) throw Error(ErrorCode::io, std::string("write failed for ") + path);
  });
}

bh_status bh_scheme_to_text(const bh_scheme* m, char** out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = duplicate(format_scheme(m->value));
  });
}

bh_status bh_scheme_from_bits(size_t rows, size_t cols, const unsigned char* bits, bh_scheme** out) {
  return call([&] {
    require(bits != nullptr && out != nullptr, "null argument");
    require(rows > 0 && cols > 0, "scheme dimensions must be positive");
    BitMatrix matrix(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        const unsigned char v = bits[i * cols + j];
        require(v <= 1, "entries must be 0 or 1");
        matrix.set(i, j, v == 1);
      }
    *out = new bh_scheme{BinaryScheme(std::move(matrix))};
  });
}

bh_status bh_scheme_clone(const bh_scheme* m, bh_scheme** out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = new bh_scheme{m->value};
  });
}

void bh_scheme_free(bh_scheme* m) { delete m; }

size_t bh_scheme_rows(const bh_scheme* m) { return m ? m->value.rows() : 0; }
size_t bh_scheme_cols(const bh_scheme* m) { return m ? m->value.cols() : 0; }

int bh_scheme_at(const bh_scheme* m, size_t row, size_t col) {
  if (!m || row >= m->value.rows() || col >= m->value.cols()) return -1;
  return m->value.at(row, col) ? 1 : 0;
}

int bh_scheme_equal(const bh_scheme* a, const bh_scheme* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

bh_status bh_kind_parse(const char* name, bh_kind* out) {
  return call([&] {
    require(name != nullptr && out != nullptr, "null argument");
    const auto kind = parse_scheme_kind(name);
    if (!kind) throw Error(ErrorCode::invalid_argument, std::string("unknown scheme kind '") + name + "'");
    *out = static_cast<bh_kind>(*kind);
  });
}

bh_status bh_generate(bh_kind kind, size_t n, size_t k, size_t r, bh_scheme** out) {
  return call([&] {
    require(out != nullptr, "null argument");
    require(kind >= BH_KIND_CYCLIC && kind <= BH_KIND_BLOCK, "unknown scheme kind");
    *out = new bh_scheme{generate({static_cast<SchemeKind>(kind), n, k, r})};
  });
}

bh_status bh_transform(const bh_scheme* m, bh_transform_kind kind, bh_scheme** out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    switch (kind) {
      case BH_REVERSE_STAGES: *out = new bh_scheme{reverse_stages(m->value)}; return;
      case BH_REVERSE_ROWS: *out = new bh_scheme{reverse_rows(m->value)}; return;
      case BH_BINARY_DUAL: *out = new bh_scheme{binary_dual(m->value)}; return;
      case BH_TRANSPOSE: *out = new bh_scheme{transpose(m->value)}; return;
    }
    throw Error(ErrorCode::invalid_argument, "unknown transform");
  });
}

bh_status bh_permute_rows(const bh_scheme* m, const size_t* pi, size_t len, bh_scheme** out) {
  return call([&] {
    require(m != nullptr && pi != nullptr && out != nullptr, "null argument");
    *out = new bh_scheme{permute_rows(m->value, std::span<const size_t>(pi, len))};
  });
}

bh_status bh_swap_columns(const bh_scheme* m, size_t a, size_t b, bh_scheme** out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = new bh_scheme{swap_columns(m->value, a, b)};
  });
}

bh_status bh_decide(const bh_scheme* m, int use_skip_rule, bh_tie_order ties, bh_verdict* out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    const Verdict v = decide_optimal(m->value, {use_skip_rule != 0, ties_from(ties)});
    bh_verdict result{};
    result.optimal = v.optimal ? 1 : 0;
    result.reason = static_cast<bh_verdict_reason>(v.reason);
    result.uniform = v.uniform ? 1 : 0;
    result.k = v.k;
    result.l = v.l;
    result.boundaries_checked = v.boundaries_checked;
    if (v.failing_boundary) {
      result.has_failing_boundary = 1;
      result.failing_boundary = *v.failing_boundary;
      result.failing_word = duplicate(v.failing_word);
    }
    *out = result;
  });
}

void bh_verdict_clear(bh_verdict* v) {
  if (v == nullptr) return;
  delete[] v->failing_word;
  *v = bh_verdict{};
}

bh_status bh_canonical_word(const bh_scheme* m, size_t boundary, bh_tie_order ties, char** out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    const PrefixSums sums = prefix_sums(m->value);
    *out = duplicate(canonical_word(m->value, sums, boundary, ties_from(ties)).letters);
  });
}

int bh_is_dyck(const char* word) { return word && is_dyck(word) ? 1 : 0; }

bh_status bh_plan_build(const bh_scheme* m, bh_plan** out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = new bh_plan{build_assignment_plan(m->value)};
  });
}

void bh_plan_free(bh_plan* p) { delete p; }

size_t bh_plan_boundaries(const bh_plan* p) { return p ? p->value.boundaries() : 0; }

int bh_plan_image(const bh_plan* p, size_t boundary, size_t row, size_t* image) {
  if (!p || boundary >= p->value.boundaries() || row >= p->value.rows()) return 0;
  const auto target = p->value.at(boundary, row);
  if (!target) return 0;
  if (image) *image = *target;
  return 1;
}

bh_status bh_plan_verify(const bh_scheme* m, const bh_plan* p, bh_plan_check* out) {
  return call([&] {
    require(m != nullptr && p != nullptr && out != nullptr, "null argument");
    const PlanCheck check = verify_plan(m->value, p->value);
    bh_plan_check result{};
    result.valid = check.valid ? 1 : 0;
    if (check.first_violation) {
      result.violation = to_string(check.first_violation->kind).data();
      result.boundary = check.first_violation->boundary;
      result.row = check.first_violation->row;
    }
    *out = result;
  });
}

bh_status bh_plan_complementary(const bh_scheme* m, const bh_plan* p, bh_plan** out) {
  return call([&] {
    require(m != nullptr && p != nullptr && out != nullptr, "null argument");
    *out = new bh_plan{complementary_plan(m->value, p->value)};
  });
}

bh_status bh_reduce(const bh_scheme* m, bh_scheme** out, size_t* removed) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    ReductionResult result = reduce_scheme(m->value);
    if (removed) *removed = result.removed;
    *out = new bh_scheme{std::move(result.scheme)};
  });
}

bh_status bh_excess_handovers(const bh_scheme* m, size_t* out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = count_excess_handovers(m->value);
  });
}

bh_status bh_rides(const bh_scheme* m, size_t* total, size_t* per_traveller) {
  return call([&] {
    require(m != nullptr && total != nullptr, "null argument");
    const RideStats stats = count_rides(m->value);
    *total = stats.total_rides;
    if (per_traveller)
      for (size_t i = 0; i < stats.per_traveller.size(); ++i) per_traveller[i] = stats.per_traveller[i];
  });
}

bh_status bh_bike_mounts(const bh_scheme* m, const bh_plan* p, size_t* mounts, size_t capacity,
                         size_t* bikes) {
  return call([&] {
    require(m != nullptr && p != nullptr && bikes != nullptr, "null argument");
    const std::vector<size_t> counts = bicycle_itineraries(m->value, p->value);
    *bikes = counts.size();
    require(mounts != nullptr || capacity == 0, "null mounts buffer");
    for (size_t b = 0; b < counts.size() && b < capacity; ++b) mounts[b] = counts[b];
  });
}

bh_status bh_rational_parse(const char* text, bh_rational* out) {
  return call([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = to_c(parse_rational(text));
  });
}

bh_status bh_simulate(const bh_scheme* m, const bh_speeds* speeds, bh_policy policy, const bh_plan* plan,
                      bh_trace** out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    const Policy p = policy == BH_POLICY_PLAN ? Policy::plan : Policy::greedy;
    *out = new bh_trace{simulate(m->value, speeds_from(speeds), p, plan ? &plan->value : nullptr)};
  });
}

void bh_trace_free(bh_trace* t) { delete t; }

int bh_trace_stall_free(const bh_trace* t) { return t && t->value.stall_free() ? 1 : 0; }

int bh_trace_simultaneous_finish(const bh_trace* t) { return t && t->value.simultaneous_finish() ? 1 : 0; }

bh_rational bh_trace_makespan(const bh_trace* t) { return t ? to_c(t->value.makespan) : bh_rational{0, 1}; }

bh_rational bh_trace_arrival(const bh_trace* t, size_t traveller, size_t post) {
  if (!t || traveller >= t->value.travellers || post > t->value.stages) return {0, 0};
  return to_c(t->value.post_arrival[traveller][post]);
}

size_t bh_trace_stall_count(const bh_trace* t) { return t ? t->value.stalls.size() : 0; }

bh_status bh_trace_stall(const bh_trace* t, size_t index, bh_stall* out) {
  return call([&] {
    require(t != nullptr && out != nullptr, "null argument");
    require(index < t->value.stalls.size(), "stall index out of range");
    const StallEvent& s = t->value.stalls[index];
    *out = {s.traveller, s.post, to_c(s.begin), to_c(s.wait), s.cycled_stage_ordinal};
  });
}

size_t bh_trace_handover_count(const bh_trace* t) { return t ? t->value.handovers.size() : 0; }

bh_status bh_trace_handover(const bh_trace* t, size_t index, bh_handover* out) {
  return call([&] {
    require(t != nullptr && out != nullptr, "null argument");
    require(index < t->value.handovers.size(), "handover index out of range");
    const HandoverEvent& h = t->value.handovers[index];
    *out = {h.post, h.from, h.to, h.bike, to_c(h.time)};
  });
}

bh_status bh_trace_write_csv(const bh_trace* t, const char* path) {
  return call([&] {
    require(t != nullptr && path != nullptr, "null argument");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::io, std::string("cannot write ") + path);
    write_trace_csv(t->value, file);
    if (!file) throw Error(ErrorCode::io, std::string("write failed for ") + path);
  });
}

bh_status bh_trace_cohorts(const bh_trace* t, bh_cohorts* out) {
  return call([&] {
    require(t != nullptr && out != nullptr, "null argument");
    const CohortProfile profile = cohort_profile(t->value);
    *out = {profile.max_positions, to_c(profile.max_gap), to_c(profile.max_spread), profile.samples, profile.mixed_mode_samples};
  });
}

bh_status bh_stall_free(const bh_scheme* m, const bh_speeds* speeds, int* out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = is_executable_without_stall(m->value, speeds_from(speeds)) ? 1 : 0;
  });
}

bh_status bh_first_stall_ordinal(const bh_scheme* m, const bh_speeds* speeds, int* has, size_t* ordinal) {
  return call([&] {
    require(m != nullptr && has != nullptr, "null argument");
    const auto first = first_stall_ride_index(m->value, speeds_from(speeds));
    *has = first ? 1 : 0;
    if (first && ordinal) *ordinal = *first;
  });
}

bh_status bh_enumerate(size_t n, size_t k, const bh_enum_options* options, bh_enum_report** out) {
  return call([&] {
    require(out != nullptr, "null argument");
    EnumerationOptions opts;
    if (options) {
      opts.cross_validate = options->cross_validate != 0;
      opts.max_examples = options->max_examples;
      opts.force = options->force != 0;
    }
    *out = new bh_enum_report{enumerate_uniform(n, k, {}, opts)};
  });
}

void bh_enum_report_free(bh_enum_report* r) { delete r; }
size_t bh_enum_total(const bh_enum_report* r) { return r ? r->value.total_uniform : 0; }
size_t bh_enum_optimal(const bh_enum_report* r) { return r ? r->value.optimal_count : 0; }
size_t bh_enum_nonoptimal(const bh_enum_report* r) { return r ? r->value.nonoptimal_count : 0; }
size_t bh_enum_mismatches(const bh_enum_report* r) { return r ? r->value.mismatches.size() : 0; }
size_t bh_enum_example_count(const bh_enum_report* r) { return r ? r->value.nonoptimal_examples.size() : 0; }

bh_status bh_enum_example(const bh_enum_report* r, size_t index, bh_scheme** out) {
  return call([&] {
    require(r != nullptr && out != nullptr, "null argument");
    require(index < r->value.nonoptimal_examples.size(), "example index out of range");
    *out = new bh_scheme{r->value.nonoptimal_examples[index]};
  });
}

bh_status bh_determinant(const bh_scheme* m, char** out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = duplicate(determinant_exact(m->value).str());
  });
}

bh_status bh_valid_stage_counts(size_t n, size_t k, size_t m, int* valid, size_t* r, size_t* l) {
  return call([&] {
    require(valid != nullptr, "null argument");
    const StageCountCheck check = valid_stage_counts(n, k, m);
    *valid = check.valid ? 1 : 0;
    if (r) *r = check.r;
    if (l) *l = check.l;
  });
}

bh_status bh_is_single_ride_cyclic(const bh_scheme* m, int* out) {
  return call([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = is_single_ride_cyclic(m->value) ? 1 : 0;
  });
}

}  // extern "C"
