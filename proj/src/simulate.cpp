#include "bikehiker/simulate.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <tuple>

#include "bikehiker/error.hpp"

namespace bikehiker {

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      throw Error(ErrorCode::invalid_argument, "malformed rational '" + std::string(text) + "'");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

void validate(const SpeedModel& speeds) {
  if (!(speeds.walk > 0) || !(speeds.cycle > speeds.walk))
    throw Error(ErrorCode::invalid_argument, "speeds must satisfy cycle > walk > 0, got walk " +
                                                 format_rational(speeds.walk) + " cycle " +
                                                 format_rational(speeds.cycle));
}

bool SimulationTrace::simultaneous_finish() const {
  for (const auto& row : post_arrival)
    if (row.back() != post_arrival.front().back()) return false;
  return true;
}

TravellerState SimulationTrace::state_at(std::size_t traveller, const Rational& t) const {
  const auto& arrivals = post_arrival[traveller];
  if (t >= arrivals.back()) return {Rational(static_cast<std::int64_t>(stages)), Activity::finished};
  const auto& row = legs[traveller];
  if (t < row.front().depart) return {Rational(0), Activity::waiting};
  // last leg that has departed by t
  const auto it = std::upper_bound(row.begin(), row.end(), t,
                                   [](const Rational& x, const Leg& leg) { return x < leg.depart; });
  const std::size_t stage = static_cast<std::size_t>(it - row.begin()) - 1;
  const Leg& leg = row[stage];
  if (t < leg.arrive) {
    const Rational& speed = leg.mode == Mode::ride ? speeds.cycle : speeds.walk;
    return {Rational(static_cast<std::int64_t>(stage)) + (t - leg.depart) * speed,
            leg.mode == Mode::ride ? Activity::riding : Activity::walking};
  }
  return {Rational(static_cast<std::int64_t>(stage + 1)), Activity::waiting};
}

std::vector<Rational> SimulationTrace::event_times() const {
  std::vector<Rational> times;
  for (const auto& row : legs)
    for (const Leg& leg : row) {
      times.push_back(leg.depart);
      times.push_back(leg.arrive);
    }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

namespace {

struct Pending {
  Rational available;
  std::size_t bike;
  std::size_t from;
  bool operator<(const Pending& o) const {
    return std::tie(available, bike) < std::tie(o.available, o.bike);
  }
};

}  // namespace

SimulationTrace simulate(const BinaryScheme& m, const SpeedModel& speeds, Policy policy,
                         const AssignmentPlan* plan) {
  validate(speeds);
  const std::size_t n = m.rows();
  const std::size_t stages = m.cols();
  const std::size_t bikes = m.col_sum(0);
  for (std::size_t j = 0; j < stages; ++j)
    if (m.col_sum(j) != bikes)
      throw Error(ErrorCode::not_uniform, "simulation needs every stage to use the same number of bikes");
  if (policy == Policy::plan) {
    if (plan == nullptr) throw Error(ErrorCode::invalid_plan, "plan policy needs a plan");
    const PlanCheck check = verify_plan_structure(m, *plan);
    if (!check.valid)
      throw Error(ErrorCode::invalid_plan, "plan does not fit the scheme: " +
                                               std::string(to_string(check.first_violation->kind)));
  }

  SimulationTrace trace;
  trace.travellers = n;
  trace.stages = stages;
  trace.bikes = bikes;
  trace.policy = policy;
  trace.speeds = speeds;
  trace.post_arrival.assign(n, std::vector<Rational>(stages + 1));
  trace.legs.assign(n, std::vector<Leg>(stages));

  const Rational walk_time = Rational(1) / speeds.walk;
  const Rational ride_time = Rational(1) / speeds.cycle;

  std::vector<std::size_t> cycled(n, 0);
  std::vector<std::optional<std::size_t>> carried(n);  // bike arriving with traveller
  std::vector<Rational> depart(n);
  std::vector<std::optional<std::size_t>> bike_of(n);

  for (std::size_t j = 0; j < stages; ++j) {
    const auto& arrival = [&](std::size_t i) -> const Rational& { return trace.post_arrival[i][j]; };
    std::fill(bike_of.begin(), bike_of.end(), std::nullopt);
    std::vector<HandoverEvent> handovers;

    auto stall_or_go = [&](std::size_t i, const Rational& ready) {
      depart[i] = std::max(arrival(i), ready);
      if (depart[i] > arrival(i))
        trace.stalls.push_back({i, j, arrival(i), depart[i] - arrival(i), cycled[i] + 1});
    };

    for (std::size_t i = 0; i < n; ++i) depart[i] = arrival(i);

    if (j == 0) {
      std::size_t next = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m.at(i, 0)) bike_of[i] = next++;
    } else if (policy == Policy::greedy) {
      std::set<Pending> upcoming;
      std::vector<std::size_t> pickers;
      for (std::size_t i = 0; i < n; ++i) {
        const bool before = m.at(i, j - 1);
        const bool now = m.at(i, j);
        if (before && now)
          bike_of[i] = carried[i];
        else if (before)
          upcoming.insert({arrival(i), *carried[i], i});
        else if (now)
          pickers.push_back(i);
      }
      std::stable_sort(pickers.begin(), pickers.end(),
                       [&](std::size_t a, std::size_t b) { return arrival(a) < arrival(b); });
      std::map<std::size_t, Pending> parked;  // by bike id
      for (std::size_t i : pickers) {
        while (!upcoming.empty() && upcoming.begin()->available <= arrival(i)) {
          parked.emplace(upcoming.begin()->bike, *upcoming.begin());
          upcoming.erase(upcoming.begin());
        }
        Pending taken;
        if (!parked.empty()) {
          taken = parked.begin()->second;
          parked.erase(parked.begin());
        } else {
          taken = *upcoming.begin();
          upcoming.erase(upcoming.begin());
        }
        bike_of[i] = taken.bike;
        stall_or_go(i, taken.available);
        handovers.push_back({j, taken.from, i, taken.bike, depart[i]});
      }
    } else {
      std::vector<Rational> ready(n);
      std::vector<bool> assigned(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        if (!m.at(i, j - 1)) continue;
        const std::size_t to = *plan->at(j - 1, i);
        bike_of[to] = carried[i];
        ready[to] = arrival(i);
        assigned[to] = true;
        if (to != i) handovers.push_back({j, i, to, *carried[i], Rational(0)});
      }
      for (std::size_t i = 0; i < n; ++i)
        if (assigned[i]) stall_or_go(i, ready[i]);
      for (HandoverEvent& h : handovers) h.time = depart[h.to];
    }

    for (std::size_t i = 0; i < n; ++i) {
      Leg& leg = trace.legs[i][j];
      leg.depart = depart[i];
      if (m.at(i, j)) {
        leg.mode = Mode::ride;
        leg.bike = bike_of[i];
        leg.arrive = depart[i] + ride_time;
        ++cycled[i];
      } else {
        leg.mode = Mode::walk;
        leg.arrive = depart[i] + walk_time;
      }
      trace.post_arrival[i][j + 1] = leg.arrive;
      carried[i] = leg.bike;
    }
    trace.handovers.insert(trace.handovers.end(), handovers.begin(), handovers.end());
  }

  std::stable_sort(trace.stalls.begin(), trace.stalls.end(), [](const StallEvent& a, const StallEvent& b) {
    return std::tie(a.begin, a.traveller) < std::tie(b.begin, b.traveller);
  });
  std::stable_sort(trace.handovers.begin(), trace.handovers.end(),
                   [](const HandoverEvent& a, const HandoverEvent& b) {
                     return std::tie(a.time, a.post, a.to) < std::tie(b.time, b.post, b.to);
                   });
  trace.makespan = Rational(0);
  for (const auto& row : trace.post_arrival) trace.makespan = std::max(trace.makespan, row.back());
  return trace;
}

bool is_executable_without_stall(const BinaryScheme& m, const SpeedModel& speeds) {
  for (std::size_t j = 1; j < m.cols(); ++j)
    if (m.col_sum(j) != m.col_sum(0)) return false;
  return simulate(m, speeds).stall_free();
}

std::optional<std::size_t> first_stall_ride_index(const BinaryScheme& m, const SpeedModel& speeds) {
  const SimulationTrace trace = simulate(m, speeds);
  if (trace.stalls.empty()) return std::nullopt;
  return trace.stalls.front().cycled_stage_ordinal;
}

namespace {

struct Sample {
  std::size_t positions = 0;
  Rational gap;
  Rational spread;
  bool mixed = false;
};

// Positions need not be sorted; activities parallel to positions.
Sample measure(std::vector<std::pair<Rational, Activity>> at) {
  std::sort(at.begin(), at.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Sample s;
  s.gap = Rational(0);
  s.spread = at.empty() ? Rational(0) : at.back().first - at.front().first;
  for (std::size_t i = 0; i < at.size(); ++i) {
    if (i == 0 || at[i].first != at[i - 1].first) {
      ++s.positions;
      if (i > 0) s.gap = std::max(s.gap, at[i].first - at[i - 1].first);
    } else if (at[i].second != at[i - 1].second) {
      s.mixed = true;
    }
  }
  return s;
}

}  // namespace

CohortProfile cohort_profile(const SimulationTrace& trace) {
  if (!trace.stall_free())
    throw Error(ErrorCode::invalid_argument, "cohort profile needs a stall-free trace");

  CohortProfile profile;
  profile.max_gap = Rational(0);
  profile.max_spread = Rational(0);
  auto record = [&](const Sample& s) {
    ++profile.samples;
    profile.max_positions = std::max(profile.max_positions, s.positions);
    profile.max_gap = std::max(profile.max_gap, s.gap);
    profile.max_spread = std::max(profile.max_spread, s.spread);
    if (s.mixed) ++profile.mixed_mode_samples;
  };

  const std::vector<Rational> times = trace.event_times();
  const std::size_t n = trace.travellers;
  std::vector<std::pair<Rational, Activity>> at(n);
  std::vector<Rational> velocity(n);

  for (std::size_t e = 0; e < times.size(); ++e) {
    const Rational& t = times[e];
    for (std::size_t i = 0; i < n; ++i) {
      const TravellerState s = trace.state_at(i, t);
      at[i] = {s.position, s.activity};
      velocity[i] = s.activity == Activity::riding    ? trace.speeds.cycle
                    : s.activity == Activity::walking ? trace.speeds.walk
                                                      : Rational(0);
    }
    record(measure(at));
    if (e + 1 == times.size()) break;

    // Open interval (t, next): travellers move on fixed lines, so the number
    // of distinct positions is the number of distinct (position, velocity).
    const Rational span = times[e + 1] - t;
    std::set<std::pair<Rational, Rational>> lines;
    for (std::size_t i = 0; i < n; ++i) lines.insert({at[i].first, velocity[i]});
    Sample open;
    open.positions = lines.size();
    open.gap = Rational(0);
    ++profile.samples;
    profile.max_positions = std::max(profile.max_positions, open.positions);

    // The adjacent gap is piecewise linear in time and can only peak at an
    // endpoint or where one traveller overtakes another.
    std::set<Rational> overtakes;
    for (const auto& [p1, v1] : lines)
      for (const auto& [p2, v2] : lines) {
        if (!(v2 > v1) || !(p2 < p1)) continue;
        const Rational dt = (p1 - p2) / (v2 - v1);
        if (dt < span) overtakes.insert(dt);
      }
    for (const Rational& dt : overtakes) {
      std::vector<std::pair<Rational, Activity>> moved(n);
      for (std::size_t i = 0; i < n; ++i) moved[i] = {at[i].first + velocity[i] * dt, at[i].second};
      record(measure(std::move(moved)));
    }
  }
  return profile;
}

namespace {

enum class CsvEvent { arrive, stall_begin, stall_end, handover, depart_walk, depart_ride };

const char* csv_name(CsvEvent e) {
  switch (e) {
    case CsvEvent::arrive: return "arrive";
    case CsvEvent::stall_begin: return "stall_begin";
    case CsvEvent::stall_end: return "stall_end";
    case CsvEvent::handover: return "handover";
    case CsvEvent::depart_walk: return "depart_walk";
    case CsvEvent::depart_ride: return "depart_ride";
  }
  return "";
}

struct CsvRow {
  Rational time;
  std::size_t traveller;
  std::size_t seq;
  std::size_t post;
  CsvEvent event;
  std::optional<std::size_t> bike;
};

}  // namespace

void write_trace_csv(const SimulationTrace& trace, std::ostream& out) {
  std::map<std::pair<std::size_t, std::size_t>, const StallEvent*> stall_at;
  for (const StallEvent& s : trace.stalls) stall_at[{s.traveller, s.post}] = &s;
  std::map<std::pair<std::size_t, std::size_t>, const HandoverEvent*> handover_at;
  for (const HandoverEvent& h : trace.handovers) handover_at[{h.to, h.post}] = &h;

  std::vector<CsvRow> rows;
  for (std::size_t i = 0; i < trace.travellers; ++i) {
    std::size_t seq = 0;
    for (std::size_t j = 0; j <= trace.stages; ++j) {
      if (j > 0) {
        const Leg& prev = trace.legs[i][j - 1];
        rows.push_back({trace.post_arrival[i][j], i, seq++, j, CsvEvent::arrive, prev.bike});
      }
      if (j == trace.stages) break;
      const Leg& leg = trace.legs[i][j];
      if (const auto it = stall_at.find({i, j}); it != stall_at.end()) {
        rows.push_back({it->second->begin, i, seq++, j, CsvEvent::stall_begin, std::nullopt});
        rows.push_back({leg.depart, i, seq++, j, CsvEvent::stall_end, std::nullopt});
      }
      if (const auto it = handover_at.find({i, j}); it != handover_at.end())
        rows.push_back({it->second->time, i, seq++, j, CsvEvent::handover, it->second->bike});
      rows.push_back({leg.depart, i, seq++, j,
                      leg.mode == Mode::ride ? CsvEvent::depart_ride : CsvEvent::depart_walk, leg.bike});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
    return std::tie(a.time, a.traveller, a.seq) < std::tie(b.time, b.traveller, b.seq);
  });

  out << "time,traveller,post,event,bike\n";
  for (const CsvRow& r : rows) {
    out << format_rational(r.time) << ',' << r.traveller << ',' << r.post << ',' << csv_name(r.event) << ',';
    if (r.bike) out << *r.bike;
    out << '\n';
  }
}

}  // namespace bikehiker
