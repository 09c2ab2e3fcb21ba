#include "bikehiker/reduction.hpp"

#include <algorithm>
#include <map>

#include "bikehiker/error.hpp"

namespace bikehiker {

namespace {

void require_optimal(const BinaryScheme& m, const char* what) {
  if (!decide_optimal(m).optimal)
    throw Error(ErrorCode::not_optimal, std::string(what) + " requires an optimal scheme");
}

// Finds the first eligible (dropper, picker) pair at boundary b of `bits`.
bool find_pair(const BitMatrix& bits, const std::vector<std::uint32_t>& sums, std::size_t b,
               std::size_t& dropper, std::size_t& picker) {
  for (std::size_t i1 = 0; i1 < bits.rows(); ++i1) {
    if (!bits.get(i1, b) || bits.get(i1, b + 1)) continue;
    for (std::size_t i2 = 0; i2 < bits.rows(); ++i2) {
      if (bits.get(i2, b) || !bits.get(i2, b + 1)) continue;
      if (sums[i1] == sums[i2]) {
        dropper = i1;
        picker = i2;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

ReductionResult reduce_scheme(const BinaryScheme& m) {
  require_optimal(m, "handover reduction");
  BitMatrix work = m.bits();
  std::size_t removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint32_t> sums(work.rows(), 0);
    for (std::size_t b = 0; b + 1 < work.cols(); ++b) {
      for (std::size_t i = 0; i < work.rows(); ++i) sums[i] += work.get(i, b) ? 1u : 0u;
      std::size_t dropper = 0;
      std::size_t picker = 0;
      while (find_pair(work, sums, b, dropper, picker)) {
        work.swap_row_suffix(dropper, picker, b + 1);
        ++removed;
        changed = true;
      }
    }
  }
  return {BinaryScheme(std::move(work)), removed};
}

std::size_t count_excess_handovers(const BinaryScheme& m) {
  require_optimal(m, "excess handover count");
  std::size_t total = 0;
  std::vector<std::uint32_t> sums(m.rows(), 0);
  for (std::size_t b = 0; b + 1 < m.cols(); ++b) {
    std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> by_sum;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      sums[i] += m.at(i, b) ? 1u : 0u;
      const bool here = m.at(i, b);
      const bool next = m.at(i, b + 1);
      if (here && !next) ++by_sum[sums[i]].first;
      if (!here && next) ++by_sum[sums[i]].second;
    }
    for (const auto& [sum, counts] : by_sum) total += std::min(counts.first, counts.second);
  }
  return total;
}

RideStats count_rides(const BinaryScheme& m) {
  RideStats stats;
  stats.per_traveller.assign(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool riding = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) && !riding) ++stats.per_traveller[i];
      riding = m.at(i, j);
    }
    stats.total_rides += stats.per_traveller[i];
  }
  if (decide_optimal(m).optimal) stats.excess_handovers = count_excess_handovers(m);
  return stats;
}

std::vector<std::size_t> bicycle_itineraries(const BinaryScheme& m, const AssignmentPlan& plan) {
  const PlanCheck check = verify_plan(m, plan);
  if (!check.valid)
    throw Error(ErrorCode::invalid_plan, "bicycle itineraries need a valid plan, first violation: " +
                                             std::string(to_string(check.first_violation->kind)));
  const std::size_t bikes = m.col_sum(0);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.col_sum(j) != bikes)
      throw Error(ErrorCode::invalid_argument, "every stage must use all bicycles");

  // holder[i] = bike ridden by traveller i in the current column
  std::vector<std::optional<std::size_t>> holder(m.rows());
  std::vector<std::size_t> mounts(bikes, 1);
  std::size_t next_bike = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.at(i, 0)) holder[i] = next_bike++;

  for (std::size_t b = 0; b < plan.boundaries(); ++b) {
    std::vector<std::optional<std::size_t>> next(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!holder[i]) continue;
      const std::size_t to = *plan.at(b, i);
      next[to] = holder[i];
      if (to != i) ++mounts[*holder[i]];
    }
    holder = std::move(next);
  }
  return mounts;
}

}  // namespace bikehiker
