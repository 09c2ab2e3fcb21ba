#pragma once

// Optimality of uniform schemes. At every boundary the travellers that drop a
// bike (letter 'a') and the travellers that pick one up (letter 'b') are ranked
// by how many stages they have cycled so far, most first. The scheme runs
// without a stall exactly when every such canonical word is a Dyck word.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bikehiker/scheme.hpp"

namespace bikehiker {

// How equal partial sums between a dropper and a picker are ranked.
enum class TieOrder {
  droppers_first,  // simultaneous arrival hands the bike over (default)
  pickers_first,   // ascending-order-then-reverse construction
};

struct CanonicalWord {
  std::size_t boundary = 0;
  std::string letters;  // over {'a', 'b'}
  std::vector<std::size_t> rows;  // row behind each letter, same order

  std::size_t count_a() const;
  std::size_t count_b() const;
};

// Requires a uniform scheme and boundary + 1 < cols.
CanonicalWord canonical_word(const BinaryScheme& m, const PrefixSums& sums, std::size_t boundary,
                             TieOrder ties = TieOrder::droppers_first);

bool is_dyck(std::string_view word);
std::string dual_reverse_word(std::string_view word);

enum class VerdictReason { optimal, not_uniform, non_dyck };

struct Verdict {
  bool optimal = false;
  VerdictReason reason = VerdictReason::not_uniform;
  std::optional<std::size_t> failing_boundary;  // 0-based
  std::string failing_word;
  bool uniform = false;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t boundaries_checked = 0;
};

struct DecideOptions {
  bool use_skip_rule = true;
  TieOrder ties = TieOrder::droppers_first;
};

// Never throws on well-formed schemes. The skip rule only applies with
// droppers_first ties; with pickers_first every boundary is scanned.
Verdict decide_optimal(const BinaryScheme& m, DecideOptions options = {});

// One partial injection per boundary: maps[b][i] is the traveller who rides
// column b + 1 on the bike traveller i rode in column b.
class AssignmentPlan {
 public:
  AssignmentPlan() = default;
  AssignmentPlan(std::size_t rows, std::size_t boundaries)
      : rows_(rows), maps_(boundaries, std::vector<std::optional<std::size_t>>(rows)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t boundaries() const noexcept { return maps_.size(); }

  std::optional<std::size_t> at(std::size_t boundary, std::size_t row) const {
    return maps_[boundary][row];
  }
  void assign(std::size_t boundary, std::size_t row, std::size_t image) {
    maps_[boundary][row] = image;
  }
  void clear(std::size_t boundary, std::size_t row) { maps_[boundary][row].reset(); }

  friend bool operator==(const AssignmentPlan&, const AssignmentPlan&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<std::optional<std::size_t>>> maps_;
};

// Pairs the r-th 'a' of each canonical word with its r-th 'b' and fixes every
// traveller who rides both stages. Throws Error(not_optimal) otherwise.
AssignmentPlan build_assignment_plan(const BinaryScheme& m);

enum class PlanViolationKind {
  shape,          // plan dimensions do not match the scheme
  domain,         // defined exactly on riders of column b
  range,          // image lies outside the riders of column b + 1
  not_injective,
  fixed_point,    // a traveller riding both stages must keep the bike
  late_bike,      // the bike arrives after the traveller due to take it
};

struct PlanViolation {
  PlanViolationKind kind = PlanViolationKind::shape;
  std::size_t boundary = 0;
  std::size_t row = 0;
  std::optional<std::size_t> image;
};

struct PlanCheck {
  bool valid = true;
  std::optional<PlanViolation> first_violation;
};

PlanCheck verify_plan(const BinaryScheme& m, const AssignmentPlan& plan);

// Structural part of verify_plan only: domain, range and injectivity.
PlanCheck verify_plan_structure(const BinaryScheme& m, const AssignmentPlan& plan);

// Identity on walkers of both stages, inverse of the plan on pickers; a valid
// plan for binary_dual(m). Throws Error(invalid_plan) when plan is not valid.
AssignmentPlan complementary_plan(const BinaryScheme& m, const AssignmentPlan& plan);

std::string_view to_string(PlanViolationKind kind);
std::string_view to_string(VerdictReason reason);

}  // namespace bikehiker
