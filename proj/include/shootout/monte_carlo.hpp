// Stochastic oracle: kick-by-kick simulation of full shootouts under any
// mechanism and pressure model.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "shootout/core.hpp"

namespace shootout {

// splitmix64. Per-trial substreams are derived by hashing (seed, trial), so
// results do not depend on evaluation order.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64{mix64(seed + 0x9E3779B97F4A7C15ull * (trial + 1))};
}

enum class SimOutcome { AWins, BWins, Unresolved };

struct SimConfig {
  MechanismId mech;
  PressureModelId model;
  Params<double> params;
  int rounds = 5;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  int max_sd_rounds = 1000;
};

struct SimResult {
  std::uint64_t a_wins = 0;
  std::uint64_t b_wins = 0;
  std::uint64_t unresolved = 0;
  double estimate = 0;   // a_wins / (a_wins + b_wins)
  double std_error = 0;  // sqrt(e (1 - e) / (a_wins + b_wins))
};

struct all_unresolved : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline SimOutcome simulate_shootout(MechanismId mech, PressureModelId model,
                                    const Params<double>& prm, int n,
                                    int max_sd_rounds, SplitMix64& rng) {
  Team first = Team::A;
  int diff = 0;
  for (int round = 1;; ++round) {
    const KickContext c1{first, KickSlot::FirstOfRound, std::nullopt,
                         trailing(first, diff)};
    const bool o1 = rng.next_unit() < scoring_probability(model, prm, c1);
    const int mid = diff + (o1 ? goal_sign(first) : 0);
    const Team second = other(first);
    const KickContext c2{second, KickSlot::SecondOfRound, o1,
                         trailing(second, mid)};
    const bool o2 = rng.next_unit() < scoring_probability(model, prm, c2);
    diff = mid + (o2 ? goal_sign(second) : 0);
    if (round >= n && diff != 0)
      return diff > 0 ? SimOutcome::AWins : SimOutcome::BWins;
    if (round >= n + max_sd_rounds) return SimOutcome::Unresolved;
    first = first_kicker_after(mech, round, first, o1, o2, diff, n);
  }
}

inline SimResult estimate_win_probability(const SimConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials >= 1");
  if (cfg.max_sd_rounds < 1) throw std::invalid_argument("max_sd_rounds >= 1");
  SimResult res;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = trial_stream(cfg.seed, t);
    switch (simulate_shootout(cfg.mech, cfg.model, cfg.params, cfg.rounds,
                              cfg.max_sd_rounds, rng)) {
      case SimOutcome::AWins:
        ++res.a_wins;
        break;
      case SimOutcome::BWins:
        ++res.b_wins;
        break;
      case SimOutcome::Unresolved:
        ++res.unresolved;
        break;
    }
  }
  const std::uint64_t decided = res.a_wins + res.b_wins;
  if (decided == 0) throw all_unresolved("estimate: every trial was unresolved");
  res.estimate = static_cast<double>(res.a_wins) / static_cast<double>(decided);
  res.std_error = std::sqrt(res.estimate * (1 - res.estimate) /
                            static_cast<double>(decided));
  return res;
}

}  // namespace shootout
