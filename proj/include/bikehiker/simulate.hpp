#pragma once

// Exact-time execution of a scheme on the linear journey P_0 -> P_m with unit
// stages. All k bicycles start parked at P_0.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bikehiker/optimality.hpp"
#include "bikehiker/rational.hpp"
#include "bikehiker/scheme.hpp"

namespace bikehiker {

struct SpeedModel {
  Rational walk{1};
  Rational cycle{2};
};

// Throws Error(invalid_argument) unless cycle > walk > 0.
void validate(const SpeedModel& speeds);

enum class Policy {
  greedy,  // first come first served; lowest parked bike id
  plan,    // bikes follow an AssignmentPlan
};

enum class Mode { walk, ride };

struct Leg {
  Rational depart;
  Rational arrive;
  Mode mode = Mode::walk;
  std::optional<std::size_t> bike;
};

struct StallEvent {
  std::size_t traveller = 0;
  std::size_t post = 0;
  Rational begin;
  Rational wait;
  std::size_t cycled_stage_ordinal = 0;  // 1-based, the stage being attempted
};

struct HandoverEvent {
  std::size_t post = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t bike = 0;
  Rational time;
};

enum class Activity { waiting, walking, riding, finished };

struct TravellerState {
  Rational position;
  Activity activity = Activity::walking;
};

struct SimulationTrace {
  std::size_t travellers = 0;
  std::size_t stages = 0;
  std::size_t bikes = 0;
  Policy policy = Policy::greedy;
  SpeedModel speeds;
  std::vector<std::vector<Rational>> post_arrival;  // [traveller][post]
  std::vector<std::vector<Leg>> legs;               // [traveller][stage]
  std::vector<StallEvent> stalls;                   // by begin time, then traveller
  std::vector<HandoverEvent> handovers;             // by time, then post, then receiver
  Rational makespan;

  bool stall_free() const noexcept { return stalls.empty(); }
  bool simultaneous_finish() const;

  // Legs are right-continuous: at a departure instant the traveller is
  // already on the next leg.
  TravellerState state_at(std::size_t traveller, const Rational& t) const;

  // Every departure and arrival time, sorted and deduplicated.
  std::vector<Rational> event_times() const;
};

// Requires equal column sums. Throws Error(invalid_plan) when the plan policy
// is given a structurally invalid plan (or none).
SimulationTrace simulate(const BinaryScheme& m, const SpeedModel& speeds = {},
                         Policy policy = Policy::greedy, const AssignmentPlan* plan = nullptr);

// False for schemes whose column sums differ.
bool is_executable_without_stall(const BinaryScheme& m, const SpeedModel& speeds = {});

// Ordinal of the cycled stage being attempted at the first greedy stall.
std::optional<std::size_t> first_stall_ride_index(const BinaryScheme& m,
                                                  const SpeedModel& speeds = {});

struct CohortProfile {
  std::size_t max_positions = 0;
  Rational max_gap;     // between adjacent distinct positions
  Rational max_spread;  // between the leader and the last traveller
  std::size_t samples = 0;
  // Sampled instants where travellers in different activities share a position.
  std::size_t mixed_mode_samples = 0;
};

// Exact over the whole run: counts are taken on every open interval between
// events and at every event and overtaking instant. Throws
// Error(invalid_argument) for traces with stalls.
CohortProfile cohort_profile(const SimulationTrace& trace);

// CSV with header `time,traveller,post,event,bike`; times as exact fractions.
void write_trace_csv(const SimulationTrace& trace, std::ostream& out);

}  // namespace bikehiker
