#include "bikehiker/optimality.hpp"

#include <algorithm>
#include <cstdint>

#include "bikehiker/error.hpp"

namespace bikehiker {

std::size_t CanonicalWord::count_a() const {
  return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), 'a'));
}

std::size_t CanonicalWord::count_b() const {
  return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), 'b'));
}

namespace {

struct Ranked {
  std::uint32_t sum;
  bool dropper;
  std::size_t row;
};

// Descending partial sum; ties resolved by set, then ascending row.
void rank(std::vector<Ranked>& entries, TieOrder ties) {
  std::sort(entries.begin(), entries.end(), [ties](const Ranked& x, const Ranked& y) {
    if (x.sum != y.sum) return x.sum > y.sum;
    if (x.dropper != y.dropper)
      return ties == TieOrder::droppers_first ? x.dropper : y.dropper;
    return x.row < y.row;
  });
}

CanonicalWord word_from(std::vector<Ranked>& entries, std::size_t boundary, TieOrder ties) {
  rank(entries, ties);
  CanonicalWord w;
  w.boundary = boundary;
  w.letters.reserve(entries.size());
  w.rows.reserve(entries.size());
  for (const Ranked& e : entries) {
    w.letters.push_back(e.dropper ? 'a' : 'b');
    w.rows.push_back(e.row);
  }
  return w;
}

}  // namespace

CanonicalWord canonical_word(const BinaryScheme& m, const PrefixSums& sums, std::size_t boundary,
                             TieOrder ties) {
  if (!uniformity(m).is_uniform)
    throw Error(ErrorCode::not_uniform, "canonical words are defined for uniform schemes only");
  if (boundary + 1 >= m.cols())
    throw Error(ErrorCode::invalid_argument, "boundary " + std::to_string(boundary) + " out of range");
  std::vector<Ranked> entries;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const bool here = m.at(i, boundary);
    const bool next = m.at(i, boundary + 1);
    if (here != next) entries.push_back({sums.at_boundary(i, boundary), here, i});
  }
  return word_from(entries, boundary, ties);
}

bool is_dyck(std::string_view word) {
  std::ptrdiff_t depth = 0;
  for (char c : word) {
    if (c == 'a')
      ++depth;
    else if (c == 'b')
      --depth;
    else
      return false;
    if (depth < 0) return false;
  }
  return depth == 0;
}

std::string dual_reverse_word(std::string_view word) {
  std::string out(word.rbegin(), word.rend());
  for (char& c : out) {
    if (c == 'a')
      c = 'b';
    else if (c == 'b')
      c = 'a';
  }
  return out;
}

Verdict decide_optimal(const BinaryScheme& m, DecideOptions options) {
  Verdict v;
  const UniformityReport u = uniformity(m);
  v.uniform = u.is_uniform;
  v.k = u.k;
  v.l = u.l;
  if (!u.is_uniform) {
    v.reason = VerdictReason::not_uniform;
    return v;
  }

  const std::size_t cols = m.cols();
  const bool skip = options.use_skip_rule && options.ties == TieOrder::droppers_first;
  // Row-sum form of the whole-scan shortcut: with at most two rides, or at
  // most two walks, per traveller every word is a^p b^p.
  if (skip && (u.l <= 2 || u.l + 2 >= cols)) {
    v.optimal = true;
    v.reason = VerdictReason::optimal;
    return v;
  }

  std::vector<std::uint32_t> running(m.rows(), 0);
  std::vector<Ranked> entries;
  entries.reserve(m.rows());
  for (std::size_t b = 0; b + 1 < cols; ++b) {
    for (std::size_t i = 0; i < m.rows(); ++i) running[i] += m.at(i, b) ? 1u : 0u;
    if (skip && (b <= 1 || b + 3 >= cols)) continue;

    entries.clear();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const bool here = m.at(i, b);
      const bool next = m.at(i, b + 1);
      if (here != next) entries.push_back({running[i], here, i});
    }
    ++v.boundaries_checked;
    CanonicalWord w = word_from(entries, b, options.ties);
    if (!is_dyck(w.letters)) {
      v.reason = VerdictReason::non_dyck;
      v.failing_boundary = b;
      v.failing_word = std::move(w.letters);
      return v;
    }
  }
  v.optimal = true;
  v.reason = VerdictReason::optimal;
  return v;
}

AssignmentPlan build_assignment_plan(const BinaryScheme& m) {
  const Verdict verdict = decide_optimal(m);
  if (!verdict.optimal)
    throw Error(ErrorCode::not_optimal, "assignment plans exist only for optimal schemes");

  const PrefixSums sums(m);
  AssignmentPlan plan(m.rows(), m.cols() - 1);
  for (std::size_t b = 0; b + 1 < m.cols(); ++b) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m.at(i, b) && m.at(i, b + 1)) plan.assign(b, i, i);

    const CanonicalWord w = canonical_word(m, sums, b);
    std::vector<std::size_t> droppers;
    std::vector<std::size_t> pickers;
    for (std::size_t r = 0; r < w.letters.size(); ++r)
      (w.letters[r] == 'a' ? droppers : pickers).push_back(w.rows[r]);
    for (std::size_t r = 0; r < droppers.size(); ++r) plan.assign(b, droppers[r], pickers[r]);
  }
  return plan;
}

namespace {

std::optional<PlanViolation> structural_violation(const BinaryScheme& m, const AssignmentPlan& plan) {
  if (plan.rows() != m.rows() || plan.boundaries() + 1 != m.cols())
    return PlanViolation{PlanViolationKind::shape, 0, 0, std::nullopt};
  for (std::size_t b = 0; b < plan.boundaries(); ++b) {
    std::vector<bool> hit(m.rows(), false);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const auto image = plan.at(b, i);
      if (image.has_value() != m.at(i, b)) return PlanViolation{PlanViolationKind::domain, b, i, image};
      if (!image) continue;
      if (*image >= m.rows() || !m.at(*image, b + 1))
        return PlanViolation{PlanViolationKind::range, b, i, image};
      if (hit[*image]) return PlanViolation{PlanViolationKind::not_injective, b, i, image};
      hit[*image] = true;
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m.at(i, b + 1) && !hit[i]) return PlanViolation{PlanViolationKind::range, b, i, std::nullopt};
  }
  return std::nullopt;
}

}  // namespace

PlanCheck verify_plan_structure(const BinaryScheme& m, const AssignmentPlan& plan) {
  PlanCheck check;
  check.first_violation = structural_violation(m, plan);
  check.valid = !check.first_violation;
  return check;
}

PlanCheck verify_plan(const BinaryScheme& m, const AssignmentPlan& plan) {
  PlanCheck check = verify_plan_structure(m, plan);
  if (!check.valid) return check;

  const PrefixSums sums(m);
  for (std::size_t b = 0; b < plan.boundaries(); ++b) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const auto image = plan.at(b, i);
      if (!image) continue;
      const bool rides_both = m.at(i, b + 1);
      if (rides_both != (*image == i)) {
        check.valid = false;
        check.first_violation = PlanViolation{PlanViolationKind::fixed_point, b, i, image};
        return check;
      }
      if (sums.at_boundary(*image, b) > sums.at_boundary(i, b)) {
        check.valid = false;
        check.first_violation = PlanViolation{PlanViolationKind::late_bike, b, i, image};
        return check;
      }
    }
  }
  return check;
}

AssignmentPlan complementary_plan(const BinaryScheme& m, const AssignmentPlan& plan) {
  const PlanCheck check = verify_plan(m, plan);
  if (!check.valid)
    throw Error(ErrorCode::invalid_plan, "complementary plan requires a valid plan, first violation: " +
                                             std::string(to_string(check.first_violation->kind)));
  AssignmentPlan out(m.rows(), plan.boundaries());
  for (std::size_t b = 0; b < plan.boundaries(); ++b) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const bool here = m.at(i, b);
      const bool next = m.at(i, b + 1);
      if (!here && !next) out.assign(b, i, i);
      if (here) {
        const std::size_t image = *plan.at(b, i);
        if (!m.at(image, b)) out.assign(b, image, i);  // inverse on pickers
      }
    }
  }
  return out;
}

std::string_view to_string(PlanViolationKind kind) {
  switch (kind) {
    case PlanViolationKind::shape: return "shape";
    case PlanViolationKind::domain: return "domain";
    case PlanViolationKind::range: return "range";
    case PlanViolationKind::not_injective: return "not_injective";
    case PlanViolationKind::fixed_point: return "condition1";
    case PlanViolationKind::late_bike: return "condition2";
  }
  return "unknown";
}

std::string_view to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::optimal: return "optimal";
    case VerdictReason::not_uniform: return "not_uniform";
    case VerdictReason::non_dyck: return "non_dyck";
  }
  return "unknown";
}

}  // namespace bikehiker
