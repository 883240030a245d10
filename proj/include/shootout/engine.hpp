// Exact evaluation of the regular phase (full outcome-tree enumeration or a
// score-difference DP) joined with the sudden-death closed forms.
#pragma once

#include <algorithm>
#include <vector>

#include "shootout/core.hpp"
#include "shootout/sudden_death.hpp"

namespace shootout {

// Sudden-death order pattern implied by each mechanism after an n-round
// regular phase. All stochastic rules and ABBA alternate in the sudden death;
// ABBA|BAAB continues its four-round cycle, so the alignment depends on
// n mod 4 (entry at round n+1).
inline SdPattern sd_entry_pattern(MechanismId mech, int n) {
  switch (mech) {
    case MechanismId::Standard:
      return SdPattern::StandardOrder;
    case MechanismId::DoubleAlternating: {
      const int m = n % 4;
      return (m == 1 || m == 3) ? SdPattern::DoubleAltTwoFirst
                                : SdPattern::DoubleAltOneFirst;
    }
    default:
      return SdPattern::AlternatingOrder;
  }
}

// Exact mass over the terminal classes of the regular phase. Tied sequences
// record the entry into sudden death: who kicks first in round n+1 and under
// which order pattern.
template <class Real>
struct PhaseDistribution {
  Real a_leads{};
  Real b_leads{};
  std::array<std::array<Real, 4>, 2> tie{};  // [entry first kicker][pattern]

  Real tie_total() const {
    Real s(0);
    for (const auto& row : tie)
      for (const Real& v : row) s += v;
    return s;
  }
  Real total() const { return a_leads + b_leads + tie_total(); }
};

enum class EngineMode { Auto, Enumerate, DifferenceDp };

template <class Real>
struct WinReport {
  Real a_wins_total;
  Real reach_sd;
  Real bias;  // a_wins_total - 1/2
};

namespace detail {

template <class Real>
void enumerate_rounds(MechanismId mech, PressureModelId model,
                      const Params<Real>& prm, int n, int round, Team first,
                      int diff, const Real& prob, PhaseDistribution<Real>& out) {
  if (round > n) {
    if (diff > 0)
      out.a_leads += prob;
    else if (diff < 0)
      out.b_leads += prob;
    else
      out.tie[static_cast<int>(first)]
             [static_cast<int>(sd_entry_pattern(mech, n))] += prob;
    return;
  }
  for (int o1 = 0; o1 < 2; ++o1)
    for (int o2 = 0; o2 < 2; ++o2) {
      Real pr = prob * round_outcome_probability(model, prm, first, diff,
                                                 o1 != 0, o2 != 0);
      if (pr == 0) continue;
      const int d2 = diff + (o1 ? goal_sign(first) : 0) +
                     (o2 ? goal_sign(other(first)) : 0);
      const Team nf =
          first_kicker_after(mech, round, first, o1 != 0, o2 != 0, d2, n);
      enumerate_rounds(mech, model, prm, n, round + 1, nf, d2, pr, out);
    }
}

// DP over (score difference, first kicker of the upcoming round). This state
// is sufficient: every mechanism decides the next first kicker from the
// current round's first kicker, its outcome, and the running difference, and
// all three pressure models read at most the difference within a round.
template <class Real>
PhaseDistribution<Real> difference_dp(MechanismId mech, PressureModelId model,
                                      const Params<Real>& prm, int n) {
  const int width = 2 * n + 1;
  std::vector<std::array<Real, 2>> cur(width), nxt(width);
  cur[n][static_cast<int>(Team::A)] = 1;
  for (int round = 1; round <= n; ++round) {
    for (auto& cell : nxt) cell = {Real(0), Real(0)};
    for (int d = -(round - 1); d <= round - 1; ++d)
      for (int f = 0; f < 2; ++f) {
        const Real& mass = cur[d + n][f];
        if (mass == 0) continue;
        const Team first = static_cast<Team>(f);
        for (int o1 = 0; o1 < 2; ++o1)
          for (int o2 = 0; o2 < 2; ++o2) {
            Real pr = mass * round_outcome_probability(model, prm, first, d,
                                                       o1 != 0, o2 != 0);
            if (pr == 0) continue;
            const int d2 = d + (o1 ? goal_sign(first) : 0) +
                           (o2 ? goal_sign(other(first)) : 0);
            const Team nf = first_kicker_after(mech, round, first, o1 != 0,
                                               o2 != 0, d2, n);
            nxt[d2 + n][static_cast<int>(nf)] += pr;
          }
      }
    cur.swap(nxt);
  }
  PhaseDistribution<Real> out{};
  const int pat = static_cast<int>(sd_entry_pattern(mech, n));
  for (int d = -n; d <= n; ++d)
    for (int f = 0; f < 2; ++f) {
      const Real& mass = cur[d + n][f];
      if (mass == 0) continue;
      if (d > 0)
        out.a_leads += mass;
      else if (d < 0)
        out.b_leads += mass;
      else
        out.tie[f][pat] += mass;
    }
  return out;
}

}  // namespace detail

template <class Real>
PhaseDistribution<Real> regular_phase_distribution(
    MechanismId mech, PressureModelId model, const Params<Real>& prm, int n,
    EngineMode mode = EngineMode::Auto) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("regular_phase_distribution: 1 <= n <= 16");
  if (mode == EngineMode::Auto)
    mode = n <= 8 ? EngineMode::Enumerate : EngineMode::DifferenceDp;
  if (mode == EngineMode::DifferenceDp)
    return detail::difference_dp(mech, model, prm, n);
  PhaseDistribution<Real> out{};
  detail::enumerate_rounds(mech, model, prm, n, 1, Team::A, 0, Real(1), out);
  return out;
}

template <class Real>
WinReport<Real> total_win_probability(MechanismId mech, PressureModelId model,
                                      const Params<Real>& prm, int n,
                                      EngineMode mode = EngineMode::Auto) {
  const PhaseDistribution<Real> dist =
      regular_phase_distribution(mech, model, prm, n, mode);
  const ModelClass cls = model_class(model);
  Real total = dist.a_leads;
  for (int t = 0; t < 2; ++t)
    for (int pat = 0; pat < 4; ++pat) {
      const Real& mass = dist.tie[t][pat];
      if (mass == 0) continue;
      const Real w = sd_win(static_cast<SdPattern>(pat), cls, prm);
      total += mass * (t == static_cast<int>(Team::A) ? w : Real(1 - w));
    }
  Real reach = dist.tie_total();
  Real bias = total - Real(1) / 2;
  return {std::move(total), std::move(reach), std::move(bias)};
}

// All seven mechanisms x n in [1, rounds_max]; rows follow kAllMechanisms.
template <class Real>
std::vector<std::vector<Real>> table2(PressureModelId model,
                                      const Params<Real>& prm, int rounds_max,
                                      EngineMode mode = EngineMode::Auto) {
  std::vector<std::vector<Real>> rows;
  rows.reserve(kAllMechanisms.size());
  for (MechanismId mech : kAllMechanisms) {
    std::vector<Real> row;
    row.reserve(rounds_max);
    for (int n = 1; n <= rounds_max; ++n)
      row.push_back(total_win_probability(mech, model, prm, n, mode).a_wins_total);
    rows.push_back(std::move(row));
  }
  return rows;
}

struct SweepPoint {
  double p;
  double q;
  double win;
};

// Grid evaluation of the total winning probability, ascending q within each p.
inline std::vector<SweepPoint> sweep_grid(MechanismId mech,
                                          PressureModelId model,
                                          const std::vector<double>& p_values,
                                          std::vector<double> q_values, int n) {
  std::sort(q_values.begin(), q_values.end());
  std::vector<SweepPoint> out;
  out.reserve(p_values.size() * q_values.size());
  for (double p : p_values)
    for (double q : q_values) {
      if (q > p) throw std::invalid_argument("sweep_grid: q > p");
      const Params<double> prm(p, q);
      out.push_back(
          {p, q,
           total_win_probability(mech, model, prm, n, EngineMode::DifferenceDp)
               .a_wins_total});
    }
  return out;
}

}  // namespace shootout
