// Core model of a penalty shootout: teams, parameters, the seven shooting-order
// mechanisms, the three pressure models, and the per-round semantics.
#pragma once

#include <array>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace shootout {

// Team A kicks the first penalty of round 1.
enum class Team : int { A = 0, B = 1 };

constexpr Team other(Team t) { return t == Team::A ? Team::B : Team::A; }

// Sign of a goal in the running score difference goals(A) - goals(B).
constexpr int goal_sign(Team t) { return t == Team::A ? 1 : -1; }

// `t` has strictly fewer goals when the difference is `diff` (A - B).
constexpr bool trailing(Team t, int diff) {
  return t == Team::A ? diff < 0 : diff > 0;
}

enum class MechanismId : int {
  Standard = 0,       // ABAB: A always kicks first
  Alternating,        // ABBA: the first kicker alternates each round
  DoubleAlternating,  // ABBA|BAAB: four-round cycle AB, BA, BA, AB
  CatchUp,            // order alternates unless the first kicker missed and the second scored
  AdjCatchUp,         // Catch-up, but B opens the sudden death unconditionally
  BehindFirst,        // the trailing team kicks first; on ties the previous order is mirrored
  AdjBehindFirst,     // Behind-first, but B opens the sudden death unconditionally
};

inline constexpr std::array<MechanismId, 7> kAllMechanisms = {
    MechanismId::Standard,    MechanismId::Alternating, MechanismId::DoubleAlternating,
    MechanismId::CatchUp,     MechanismId::AdjCatchUp,  MechanismId::BehindFirst,
    MechanismId::AdjBehindFirst,
};

enum class PressureModelId : int {
  M1 = 0,  // the second kicker of a round scores with probability q
  M2,      // the second kicker scores with q only after a scored first kick
  M3,      // the kicker of the trailing team scores with probability q
};

inline constexpr std::array<PressureModelId, 3> kAllModels = {
    PressureModelId::M1, PressureModelId::M2, PressureModelId::M3};

struct degenerate_parameters : std::domain_error {
  using std::domain_error::domain_error;
};

// Scoring probabilities: p for the advantaged kicker, q for the disadvantaged one.
template <class Real>
struct Params {
  Real p;
  Real q;

  Params(Real p_, Real q_) : p(std::move(p_)), q(std::move(q_)) {
    if (q < 0 || p > 1 || q > p)
      throw std::invalid_argument("Params: require 0 <= q <= p <= 1");
  }

  // p = q = 1: every kick scores, so no round can ever separate the teams.
  bool never_resolves() const { return p == 1 && q == 1; }
};

// One completed round; the second kick is always taken by other(first_kicker).
struct RoundRecord {
  Team first_kicker;
  bool first_scored;
  bool second_scored;
};

struct ShootoutState {
  int regular_rounds = 5;             // n
  std::array<int, 2> score = {0, 0};  // indexed by Team
  std::vector<RoundRecord> history;

  int round_index() const { return static_cast<int>(history.size()) + 1; }
  int goals(Team t) const { return score[static_cast<int>(t)]; }
  int diff() const { return score[0] - score[1]; }

  // score equals the fold of history
  bool consistent() const {
    int a = 0, b = 0;
    for (const RoundRecord& r : history) {
      if (r.first_scored) (r.first_kicker == Team::A ? a : b) += 1;
      if (r.second_scored) (r.first_kicker == Team::A ? b : a) += 1;
    }
    return a == score[0] && b == score[1];
  }
};

enum class KickSlot { FirstOfRound, SecondOfRound };

// Everything a pressure model may condition a single kick on. Trailing status
// is evaluated at the moment of the kick, so a goal by the round's first
// kicker already counts when the second kick is taken.
struct KickContext {
  Team kicker;
  KickSlot slot;
  std::optional<bool> first_kick_scored;  // present iff slot == SecondOfRound
  bool kicker_trailing;
};

template <class Real>
Real scoring_probability(PressureModelId model, const Params<Real>& prm,
                         const KickContext& ctx) {
  switch (model) {
    case PressureModelId::M1:
      return ctx.slot == KickSlot::SecondOfRound ? prm.q : prm.p;
    case PressureModelId::M2:
      return ctx.slot == KickSlot::SecondOfRound && *ctx.first_kick_scored ? prm.q
                                                                           : prm.p;
    case PressureModelId::M3:
      return ctx.kicker_trailing ? prm.q : prm.p;
  }
  throw std::logic_error("scoring_probability: bad model");
}

constexpr Team alternating_first(int round) {
  return round % 2 == 1 ? Team::A : Team::B;
}

// Cycle AB, BA, BA, AB: A kicks first iff round mod 4 is 1 or 0.
constexpr Team double_alternating_first(int round) {
  const int m = round % 4;
  return (m == 1 || m == 0) ? Team::A : Team::B;
}

constexpr MechanismId base_rule(MechanismId mech) {
  if (mech == MechanismId::AdjCatchUp) return MechanismId::CatchUp;
  if (mech == MechanismId::AdjBehindFirst) return MechanismId::BehindFirst;
  return mech;
}

// First kicker of round `round` + 1, given that round `round` was opened by
// `first` with the stated outcome and left the score difference `diff_after`.
inline Team first_kicker_after(MechanismId mech, int round, Team first,
                               bool first_scored, bool second_scored,
                               int diff_after, int regular_rounds) {
  const int next = round + 1;
  switch (mech) {
    case MechanismId::Standard:
      return Team::A;
    case MechanismId::Alternating:
      return alternating_first(next);
    case MechanismId::DoubleAlternating:
      return double_alternating_first(next);
    case MechanismId::CatchUp:
      return (!first_scored && second_scored) ? first : other(first);
    case MechanismId::BehindFirst:
      if (diff_after < 0) return Team::A;
      if (diff_after > 0) return Team::B;
      return other(first);
    case MechanismId::AdjCatchUp:
    case MechanismId::AdjBehindFirst:
      if (next <= regular_rounds)
        return first_kicker_after(base_rule(mech), round, first, first_scored,
                                  second_scored, diff_after, regular_rounds);
      // B opens the sudden death; the order alternates from there.
      return (next - regular_rounds) % 2 == 1 ? Team::B : Team::A;
  }
  throw std::logic_error("first_kicker_after: bad mechanism");
}

// Deterministic given mechanism and history; round 1 always belongs to A.
inline Team first_kicker_of_round(MechanismId mech, const ShootoutState& state) {
  assert(state.consistent());
  Team f = Team::A;
  int diff = 0;
  for (std::size_t i = 0; i < state.history.size(); ++i) {
    const RoundRecord& rec = state.history[i];
    if (rec.first_scored) diff += goal_sign(rec.first_kicker);
    if (rec.second_scored) diff += goal_sign(other(rec.first_kicker));
    f = first_kicker_after(mech, static_cast<int>(i) + 1, rec.first_kicker,
                           rec.first_scored, rec.second_scored, diff,
                           state.regular_rounds);
  }
  return f;
}

inline ShootoutState apply_round(ShootoutState state, const RoundRecord& rec) {
  if (rec.first_scored) state.score[static_cast<int>(rec.first_kicker)] += 1;
  if (rec.second_scored) state.score[static_cast<int>(other(rec.first_kicker))] += 1;
  state.history.push_back(rec);
  return state;
}

// Probability of one full round outcome, starting from score difference
// `diff_before` with `first` kicking first.
template <class Real>
Real round_outcome_probability(PressureModelId model, const Params<Real>& prm,
                               Team first, int diff_before, bool first_scored,
                               bool second_scored) {
  const KickContext c1{first, KickSlot::FirstOfRound, std::nullopt,
                       trailing(first, diff_before)};
  Real k1 = scoring_probability(model, prm, c1);
  if (!first_scored) k1 = 1 - k1;
  const int mid = diff_before + (first_scored ? goal_sign(first) : 0);
  const Team second = other(first);
  const KickContext c2{second, KickSlot::SecondOfRound, first_scored,
                       trailing(second, mid)};
  Real k2 = scoring_probability(model, prm, c2);
  if (!second_scored) k2 = 1 - k2;
  return k1 * k2;
}

}  // namespace shootout
