#pragma once

// Excess handovers: a rider dropping a bike and a walker picking one up who
// reach the same post at the same moment can trade the rest of their
// itineraries instead, and the rider simply keeps cycling.

#include <cstddef>
#include <optional>
#include <vector>

#include "bikehiker/optimality.hpp"
#include "bikehiker/scheme.hpp"

namespace bikehiker {

struct ReductionResult {
  BinaryScheme scheme;
  std::size_t removed = 0;
};

// Swaps row suffixes until no boundary has a dropper and a picker with equal
// partial sums. Boundaries are scanned in ascending order and, within one,
// the lowest eligible dropper is paired with the lowest eligible picker.
// Throws Error(not_optimal) for non-optimal input.
ReductionResult reduce_scheme(const BinaryScheme& m);

// h(M): per boundary, the size of a maximum matching between droppers and
// pickers with equal partial sums. Equals reduce_scheme(m).removed.
// Throws Error(not_optimal) for non-optimal input.
std::size_t count_excess_handovers(const BinaryScheme& m);

struct RideStats {
  std::size_t total_rides = 0;
  std::vector<std::size_t> per_traveller;       // maximal runs of 1s per row
  std::vector<std::size_t> per_bicycle_mounts;  // filled when a plan is given
  std::optional<std::size_t> excess_handovers;  // filled for optimal schemes
};

// Linear journey: a run wrapping from the last stage to the first counts twice.
RideStats count_rides(const BinaryScheme& m);

// Bike b is the b-th rider of the first stage in row order; it is mounted
// once at the start and once more at every boundary where the plan hands it
// to a different traveller. Throws Error(invalid_plan) for plans that fail
// verify_plan, and Error(invalid_argument) when the first stage does not use
// every bike.
std::vector<std::size_t> bicycle_itineraries(const BinaryScheme& m, const AssignmentPlan& plan);

}  // namespace bikehiker
