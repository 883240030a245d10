// Closed-form winning probabilities, per-round resolution probability and
// expected length of the sudden-death phase.
#pragma once

#include <optional>

#include "shootout/core.hpp"

namespace shootout {

// M2 and M3 coincide in sudden death: only the second kicker of a round can
// ever be trailing there.
enum class ModelClass : int { Class1 = 0, Class23 };

constexpr ModelClass model_class(PressureModelId m) {
  return m == PressureModelId::M1 ? ModelClass::Class1 : ModelClass::Class23;
}

// Shooting-order pattern of the sudden death, seen from the team that kicks
// first in its opening round. The DoubleAlt patterns distinguish whether that
// team opens two consecutive rounds or only the first one.
enum class SdPattern : int {
  StandardOrder = 0,
  AlternatingOrder,
  DoubleAltTwoFirst,
  DoubleAltOneFirst,
};

inline constexpr std::array<SdPattern, 4> kAllSdPatterns = {
    SdPattern::StandardOrder, SdPattern::AlternatingOrder,
    SdPattern::DoubleAltTwoFirst, SdPattern::DoubleAltOneFirst};

// Does the team that opened the sudden death also kick first in SD round `i`?
constexpr bool entry_team_kicks_first(SdPattern pat, int i) {
  switch (pat) {
    case SdPattern::StandardOrder:
      return true;
    case SdPattern::AlternatingOrder:
      return i % 2 == 1;
    case SdPattern::DoubleAltTwoFirst: {
      const int m = i % 4;
      return m == 1 || m == 2;
    }
    case SdPattern::DoubleAltOneFirst: {
      const int m = i % 4;
      return m == 1 || m == 0;
    }
  }
  return true;
}

// Split of one sudden-death round: the first kicker wins it, the second
// kicker wins it, or the teams stay level.
template <class Real>
struct SdRoundSplit {
  Real first_wins;
  Real second_wins;
  Real tie;
};

template <class Real>
SdRoundSplit<Real> sd_round_split(ModelClass cls, const Params<Real>& prm) {
  const Real& p = prm.p;
  const Real& q = prm.q;
  if (cls == ModelClass::Class1)
    return {Real(p * (1 - q)), Real((1 - p) * q), Real(p * q + (1 - p) * (1 - q))};
  return {Real(p * (1 - q)), Real((1 - p) * p), Real(p * q + (1 - p) * (1 - p))};
}

// Winning probability of the team kicking the first penalty of the sudden
// death, by order pattern and model class.
template <class Real>
Real sd_win(SdPattern pat, ModelClass cls, const Params<Real>& prm) {
  const Real& p = prm.p;
  const Real& q = prm.q;
  Real num(0), den(0);
  switch (pat) {
    case SdPattern::StandardOrder:
      num = p * (1 - q);
      den = cls == ModelClass::Class1 ? Real(p + q - 2 * p * q)
                                      : Real(2 * p - p * q - p * p);
      break;
    case SdPattern::AlternatingOrder:
      if (cls == ModelClass::Class1) {
        num = 1 - q + p * q;
        den = 2 - p - q + 2 * p * q;
      } else {
        num = 1 - p + p * p;
        den = 2 - 2 * p + p * q + p * p;
      }
      break;
    case SdPattern::DoubleAltTwoFirst:
    case SdPattern::DoubleAltOneFirst: {
      const Real t = cls == ModelClass::Class1 ? Real(1 - p - q + 2 * p * q)
                                               : Real(1 - 2 * p + p * q + p * p);
      const Real round1 = p * (1 - q);
      const Real round2 = pat == SdPattern::DoubleAltTwoFirst
                              ? round1
                              : (cls == ModelClass::Class1 ? Real((1 - p) * q)
                                                           : Real((1 - p) * p));
      num = round1 + t * round2 + t * t;
      den = 1 + t * t;
      break;
    }
  }
  if (den == 0) throw degenerate_parameters("sd_win: degenerate parameters");
  return num / den;
}

template <class Real>
struct SdBracket {
  Real lower;
  Real upper;
  Real width() const { return upper - lower; }
};

// Independent oracle: unroll the sudden death round by round for `horizon`
// rounds. The unresolved tail is bounded by tie^horizon, giving a bracket
// around the closed-form value.
template <class Real>
SdBracket<Real> sd_win_bracket(SdPattern pat, ModelClass cls,
                               const Params<Real>& prm, int horizon) {
  if (horizon < 1) throw std::invalid_argument("sd_win_bracket: horizon >= 1");
  const SdRoundSplit<Real> s = sd_round_split(cls, prm);
  Real win(0), alive(1);
  for (int i = 1; i <= horizon; ++i) {
    win += alive * (entry_team_kicks_first(pat, i) ? s.first_wins : s.second_wins);
    alive *= s.tie;
  }
  return {win, Real(win + alive)};
}

template <class Real>
struct SuddenDeathStats {
  Real resolution_prob;                 // R: chance a given SD round decides
  std::optional<Real> expected_length;  // 1/R rounds; empty iff R = 0
};

// R does not depend on the order pattern, only on the model class.
template <class Real>
SuddenDeathStats<Real> sd_stats(ModelClass cls, const Params<Real>& prm) {
  const SdRoundSplit<Real> s = sd_round_split(cls, prm);
  Real r = s.first_wins + s.second_wins;
  if (r == 0) return {std::move(r), std::nullopt};
  Real eps = 1 / r;
  return {std::move(r), std::move(eps)};
}

}  // namespace shootout
