// Executable checks of the structural claims about the mechanisms, plus the
// deliberate-miss (strategy-proofness) scan via backward induction.
#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "shootout/engine.hpp"
#include "shootout/monte_carlo.hpp"
#include "shootout/text.hpp"

namespace shootout {

// P(A wins) from the start of every round, for each (score difference,
// first kicker) state; the terminal layer joins the sudden-death closed forms.
template <class Real>
class ContinuationTable {
 public:
  ContinuationTable(MechanismId mech, PressureModelId model,
                    const Params<Real>& prm, int n)
      : mech_(mech), model_(model), prm_(prm), n_(n),
        v_(n + 1, std::vector<std::array<Real, 2>>(2 * n + 1)) {
    build();
  }

  // round in [1, n+1]; diff in [-n, n]
  const Real& value(int round, int diff, Team first) const {
    return v_[round - 1][diff + n_][static_cast<int>(first)];
  }

  int rounds() const { return n_; }

 private:
  void build() {
    const ModelClass cls = model_class(model_);
    const SdPattern pat = sd_entry_pattern(mech_, n_);
    for (int d = -n_; d <= n_; ++d)
      for (int f = 0; f < 2; ++f) {
        Real& cell = v_[n_][d + n_][f];
        if (d > 0)
          cell = 1;
        else if (d < 0)
          cell = 0;
        else {
          const Real w = sd_win(pat, cls, prm_);
          cell = f == static_cast<int>(Team::A) ? w : Real(1 - w);
        }
      }
    for (int round = n_; round >= 1; --round)
      for (int d = -(round - 1); d <= round - 1; ++d)
        for (int f = 0; f < 2; ++f) {
          const Team first = static_cast<Team>(f);
          Real acc(0);
          for (int o1 = 0; o1 < 2; ++o1)
            for (int o2 = 0; o2 < 2; ++o2) {
              const Real pr = round_outcome_probability(model_, prm_, first, d,
                                                        o1 != 0, o2 != 0);
              if (pr == 0) continue;
              const int d2 = d + (o1 ? goal_sign(first) : 0) +
                             (o2 ? goal_sign(other(first)) : 0);
              const Team nf = first_kicker_after(mech_, round, first, o1 != 0,
                                                 o2 != 0, d2, n_);
              acc += pr * v_[round][d2 + n_][static_cast<int>(nf)];
            }
          v_[round - 1][d + n_][f] = acc;
        }
  }

  MechanismId mech_;
  PressureModelId model_;
  Params<Real> prm_;
  int n_;
  std::vector<std::vector<std::array<Real, 2>>> v_;
};

// A second-kick decision point where deliberately missing beats an honest
// attempt for the kicking team.
struct DeviationPoint {
  int round;
  int diff_before;     // A - B at the start of the round
  Team first_kicker;   // the deviating team is other(first_kicker)
  bool first_scored;
  double honest_value;
  double deviate_value;
  double gain;
  double reach_probability;
};

// One-shot deviation scan over every reachable second-kick node of the
// regular phase. Sudden-death kicks are excluded: there the order alternates
// under every mechanism and a deliberate miss can only forfeit.
inline std::vector<DeviationPoint> strategy_proofness_scan(
    MechanismId mech, PressureModelId model, const Params<double>& prm, int n,
    double gain_tol = 1e-12) {
  const ContinuationTable<double> table(mech, model, prm, n);
  std::vector<DeviationPoint> found;
  // forward reach probabilities under honest play
  std::vector<std::array<double, 2>> reach(2 * n + 1), nxt(2 * n + 1);
  reach[n][static_cast<int>(Team::A)] = 1;
  for (int round = 1; round <= n; ++round) {
    for (auto& cell : nxt) cell = {0, 0};
    for (int d = -(round - 1); d <= round - 1; ++d)
      for (int f = 0; f < 2; ++f) {
        const double mass = reach[d + n][f];
        if (mass == 0) continue;
        const Team first = static_cast<Team>(f);
        const Team second = other(first);
        const KickContext c1{first, KickSlot::FirstOfRound, std::nullopt,
                             trailing(first, d)};
        const double p1 = scoring_probability(model, prm, c1);
        for (int o1 = 0; o1 < 2; ++o1) {
          const double branch = o1 ? p1 : 1 - p1;
          if (branch == 0) continue;
          const int mid = d + (o1 ? goal_sign(first) : 0);
          const KickContext c2{second, KickSlot::SecondOfRound, o1 != 0,
                               trailing(second, mid)};
          const double p2 = scoring_probability(model, prm, c2);
          // value of an outcome for the second-kicking team
          const auto value_for_second = [&](bool o2) {
            const int d2 = mid + (o2 ? goal_sign(second) : 0);
            const Team nf =
                first_kicker_after(mech, round, first, o1 != 0, o2, d2, n);
            const double va = table.value(round + 1, d2, nf);
            return second == Team::A ? va : 1 - va;
          };
          const double miss_value = value_for_second(false);
          const double honest =
              p2 * value_for_second(true) + (1 - p2) * miss_value;
          const double gain = miss_value - honest;
          if (gain > gain_tol)
            found.push_back({round, d, first, o1 != 0, honest, miss_value, gain,
                             mass * branch});
          // honest transitions feed the next layer
          for (int o2 = 0; o2 < 2; ++o2) {
            const double pr = branch * (o2 ? p2 : 1 - p2);
            if (pr == 0) continue;
            const int d2 = mid + (o2 ? goal_sign(second) : 0);
            const Team nf = first_kicker_after(mech, round, first, o1 != 0,
                                               o2 != 0, d2, n);
            nxt[d2 + n][static_cast<int>(nf)] += mass * pr;
          }
        }
      }
    reach.swap(nxt);
  }
  return found;
}

// Tie probability after n rounds in M3, from the score-difference Markov
// chain. The transitions are order-independent: from a tied state the round
// stays tied with pq + (1-p)^2; from |k| >= 1 the trailing team kicks with q
// and the leader with p, so the round stays with pq + (1-p)(1-q), widens the
// gap with p(1-q), and narrows it with (1-p)q.
template <class Real>
Real m3_tie_probability_markov(const Params<Real>& prm, int n) {
  const Real& p = prm.p;
  const Real& q = prm.q;
  std::vector<Real> cur(n + 1, Real(0)), nxt(n + 1);
  cur[0] = 1;
  const Real stay0 = p * q + (1 - p) * (1 - p);
  const Real up0 = p * (1 - q) + (1 - p) * p;
  const Real stay = p * q + (1 - p) * (1 - q);
  const Real up = p * (1 - q);
  const Real down = (1 - p) * q;
  for (int round = 1; round <= n; ++round) {
    for (Real& v : nxt) v = 0;
    for (int k = 0; k <= n; ++k) {
      const Real& mass = cur[k];
      if (mass == 0) continue;
      if (k == 0) {
        nxt[0] += mass * stay0;
        nxt[1] += mass * up0;
      } else {
        nxt[k] += mass * stay;
        if (k + 1 <= n) nxt[k + 1] += mass * up;
        nxt[k - 1] += mass * down;
      }
    }
    cur.swap(nxt);
  }
  return cur[0];
}

struct GridPoint {
  double p;
  double q;
  int n;
};

// p in {0.60 .. 0.90}, q from 0.30 to p in steps of 0.05, n in {1, 3, 5, 8}
inline std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> grid;
  for (int pi : {60, 65, 70, 75, 80, 90})
    for (int qi = 30; qi <= pi; qi += 5)
      for (int n : {1, 3, 5, 8})
        grid.push_back({pi / 100.0, qi / 100.0, n});
  return grid;
}

inline std::vector<GridPoint> fast_grid() {
  std::vector<GridPoint> grid;
  for (int pi : {65, 75, 90})
    for (int qi = 40; qi <= pi; qi += 10)
      for (int n : {1, 5})
        grid.push_back({pi / 100.0, qi / 100.0, n});
  return grid;
}

struct PropositionReport {
  std::string id;
  double max_discrepancy = 0;
  bool holds = true;
  std::string witness;  // set when holds is false
};

namespace detail {

inline void record_failure(PropositionReport& rep, double discrepancy,
                           const std::string& witness) {
  if (discrepancy > rep.max_discrepancy) rep.max_discrepancy = discrepancy;
  if (!rep.holds) return;
  rep.holds = false;
  rep.witness = witness;
}

inline void record_discrepancy(PropositionReport& rep, double discrepancy,
                               double tol, const std::string& witness) {
  if (discrepancy > rep.max_discrepancy) rep.max_discrepancy = discrepancy;
  if (discrepancy > tol && rep.holds) {
    rep.holds = false;
    rep.witness = witness;
  }
}

inline std::string describe(const GridPoint& g) {
  std::ostringstream os;
  os << "p=" << g.p << " q=" << g.q << " n=" << g.n;
  return os.str();
}

}  // namespace detail

// Catch-up and Behind-first (and their adjusted variants) give identical
// winning probabilities in M3.
inline PropositionReport check_catchup_equals_behindfirst_m3(
    const std::vector<GridPoint>& grid, double tol = 1e-12) {
  PropositionReport rep;
  rep.id = "CatchUpEqualsBehindFirstM3";
  const auto pairs = {
      std::pair{MechanismId::CatchUp, MechanismId::BehindFirst},
      std::pair{MechanismId::AdjCatchUp, MechanismId::AdjBehindFirst}};
  for (const GridPoint& g : grid) {
    const Params<double> prm(g.p, g.q);
    for (auto [lhs, rhs] : pairs) {
      const auto a = total_win_probability(lhs, PressureModelId::M3, prm, g.n,
                                           EngineMode::DifferenceDp);
      const auto b = total_win_probability(rhs, PressureModelId::M3, prm, g.n,
                                           EngineMode::DifferenceDp);
      detail::record_discrepancy(rep, std::abs(a.a_wins_total - b.a_wins_total),
                                 tol, detail::describe(g));
    }
  }
  return rep;
}

// In M3 the probability of reaching sudden death does not depend on the
// mechanism; also cross-checked against the score-difference Markov chain.
inline PropositionReport check_reach_invariance_m3(
    const std::vector<GridPoint>& grid, double tol = 1e-12) {
  PropositionReport rep;
  rep.id = "ReachInvarianceM3";
  for (const GridPoint& g : grid) {
    const Params<double> prm(g.p, g.q);
    const double markov = m3_tie_probability_markov(prm, g.n);
    for (MechanismId mech : kAllMechanisms) {
      const double reach =
          regular_phase_distribution(mech, PressureModelId::M3, prm, g.n,
                                     EngineMode::DifferenceDp)
              .tie_total();
      detail::record_discrepancy(rep, std::abs(reach - markov), tol,
                                 detail::describe(g));
    }
  }
  return rep;
}

// With p > q, the round-win asymmetry condition holds in M1 and M2, and then
// ABBA is strictly fairer than ABAB.
inline PropositionReport check_alternating_fairer(
    const std::vector<GridPoint>& grid) {
  PropositionReport rep;
  rep.id = "AlternatingFairerThanStandard";
  for (const GridPoint& g : grid) {
    if (!(g.p > g.q)) continue;
    const Params<double> prm(g.p, g.q);
    for (PressureModelId model : {PressureModelId::M1, PressureModelId::M2}) {
      const double second_win = model == PressureModelId::M1
                                    ? (1 - g.p) * g.q
                                    : (1 - g.p) * g.p;
      if (!(g.p * (1 - g.q) > second_win)) {
        detail::record_failure(rep, 0, "condition " + detail::describe(g));
        continue;
      }
      const double bias_std =
          total_win_probability(MechanismId::Standard, model, prm, g.n,
                                EngineMode::DifferenceDp)
              .bias;
      const double bias_alt =
          total_win_probability(MechanismId::Alternating, model, prm, g.n,
                                EngineMode::DifferenceDp)
              .bias;
      if (!(std::abs(bias_alt) < std::abs(bias_std)))
        detail::record_failure(rep, std::abs(bias_alt) - std::abs(bias_std),
                               detail::describe(g));
    }
  }
  return rep;
}

// Under ABAB in M3 the winning probability does not depend on the number of
// regular rounds.
inline PropositionReport check_abab_m3_round_invariance(
    const Params<double>& prm, int n_min, int n_max, double tol = 1e-12) {
  PropositionReport rep;
  rep.id = "AbabM3RoundInvariance";
  const double base = total_win_probability(MechanismId::Standard,
                                            PressureModelId::M3, prm, n_min,
                                            EngineMode::DifferenceDp)
                          .a_wins_total;
  for (int n = n_min + 1; n <= n_max; ++n) {
    const double v = total_win_probability(MechanismId::Standard,
                                           PressureModelId::M3, prm, n,
                                           EngineMode::DifferenceDp)
                         .a_wins_total;
    std::ostringstream os;
    os << "p=" << prm.p << " q=" << prm.q << " n=" << n;
    detail::record_discrepancy(rep, std::abs(v - base), tol, os.str());
  }
  return rep;
}

// Catch-up and Behind-first must be non-manipulable everywhere: whenever a
// deliberate miss buys the first kick of the next round, the same order rule
// also compensates at the sudden-death entry, so the sacrificed goal never
// pays. The adjusted variants lose that protection (B opens the sudden death
// no matter what) and are manipulable for large p - q in M1/M2; only their
// M3 immunity (order never matters for the scoring probability) survives.
inline PropositionReport check_strategy_proofness(
    const std::vector<GridPoint>& grid) {
  PropositionReport rep;
  rep.id = "StrategyProofness";
  for (const GridPoint& g : grid) {
    const Params<double> prm(g.p, g.q);
    for (PressureModelId model : kAllModels) {
      for (MechanismId mech : {MechanismId::CatchUp, MechanismId::BehindFirst}) {
        const auto pts = strategy_proofness_scan(mech, model, prm, g.n);
        if (!pts.empty())
          detail::record_failure(rep, pts.front().gain,
                                 mechanism_label(mech) + (" " + detail::describe(g)));
      }
      if (model != PressureModelId::M3) continue;
      for (MechanismId mech :
           {MechanismId::AdjCatchUp, MechanismId::AdjBehindFirst}) {
        const auto pts = strategy_proofness_scan(mech, model, prm, g.n);
        if (!pts.empty())
          detail::record_failure(rep, pts.front().gain,
                                 mechanism_label(mech) + (" " + detail::describe(g)));
      }
    }
  }
  return rep;
}

struct McCheck {
  MechanismId mech;
  PressureModelId model;
  double exact;
  double estimate;
  double std_error;
  bool ok;
};

// Exact engine vs Monte Carlo at 4 standard errors for every (mechanism,
// model) cell.
inline std::vector<McCheck> monte_carlo_crosscheck(const Params<double>& prm,
                                                   int n, std::uint64_t trials,
                                                   std::uint64_t seed) {
  std::vector<McCheck> out;
  for (PressureModelId model : kAllModels)
    for (MechanismId mech : kAllMechanisms) {
      const double exact =
          total_win_probability(mech, model, prm, n, EngineMode::DifferenceDp)
              .a_wins_total;
      const SimResult sim = estimate_win_probability(
          {mech, model, prm, n, trials, seed, 1000});
      const bool ok = std::abs(sim.estimate - exact) <= 4 * sim.std_error;
      out.push_back({mech, model, exact, sim.estimate, sim.std_error, ok});
    }
  return out;
}

}  // namespace shootout
