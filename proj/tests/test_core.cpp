#include <doctest.h>

#include "shootout/core.hpp"
#include "shootout/monte_carlo.hpp"

using namespace shootout;

namespace {

KickContext first_kick(Team kicker, int diff) {
  return {kicker, KickSlot::FirstOfRound, std::nullopt, trailing(kicker, diff)};
}

KickContext second_kick(Team kicker, bool first_scored, int diff_at_kick) {
  return {kicker, KickSlot::SecondOfRound, first_scored,
          trailing(kicker, diff_at_kick)};
}

}  // namespace

TEST_CASE("params validation") {
  CHECK_NOTHROW(Params<double>(0.75, 2.0 / 3.0));
  CHECK_NOTHROW(Params<double>(1.0, 1.0));
  CHECK(Params<double>(1.0, 1.0).never_resolves());
  CHECK_FALSE(Params<double>(1.0, 0.5).never_resolves());
  CHECK_THROWS_AS(Params<double>(0.5, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(Params<double>(1.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Params<double>(0.5, -0.1), std::invalid_argument);
}

TEST_CASE("scoring probability, shootout at 2-3 with the trailing team first") {
  // 7th and 8th kicks: round 4, A trails 2-3 and kicks first.
  const Params<double> prm(0.75, 2.0 / 3.0);
  const int diff = -1;

  SUBCASE("M1: slot decides") {
    CHECK(scoring_probability(PressureModelId::M1, prm, first_kick(Team::A, diff)) == prm.p);
    CHECK(scoring_probability(PressureModelId::M1, prm, second_kick(Team::B, true, 0)) == prm.q);
    CHECK(scoring_probability(PressureModelId::M1, prm, second_kick(Team::B, false, diff)) == prm.q);
  }
  SUBCASE("M2: only a scored first kick penalises the second") {
    CHECK(scoring_probability(PressureModelId::M2, prm, first_kick(Team::A, diff)) == prm.p);
    CHECK(scoring_probability(PressureModelId::M2, prm, second_kick(Team::B, true, 0)) == prm.q);
    CHECK(scoring_probability(PressureModelId::M2, prm, second_kick(Team::B, false, diff)) == prm.p);
  }
  SUBCASE("M3: trailing at the moment of the kick") {
    CHECK(scoring_probability(PressureModelId::M3, prm, first_kick(Team::A, diff)) == prm.q);
    // whether or not the 7th scored, B is never strictly behind at the 8th
    CHECK(scoring_probability(PressureModelId::M3, prm, second_kick(Team::B, true, 0)) == prm.p);
    CHECK(scoring_probability(PressureModelId::M3, prm, second_kick(Team::B, false, diff)) == prm.p);
  }
}

TEST_CASE("models collapse when p = q") {
  const Params<double> prm(0.7, 0.7);
  for (PressureModelId model : kAllModels) {
    CHECK(scoring_probability(model, prm, first_kick(Team::A, -2)) == 0.7);
    CHECK(scoring_probability(model, prm, second_kick(Team::B, true, 1)) == 0.7);
  }
}

TEST_CASE("first kicker, deterministic rules") {
  ShootoutState s;
  CHECK(first_kicker_of_round(MechanismId::Standard, s) == Team::A);
  CHECK(first_kicker_of_round(MechanismId::Alternating, s) == Team::A);
  s = apply_round(s, {Team::A, false, true});
  CHECK(first_kicker_of_round(MechanismId::Standard, s) == Team::A);
  CHECK(first_kicker_of_round(MechanismId::Alternating, s) == Team::B);
  s = apply_round(s, {Team::B, true, true});
  // round 3, ABBA|BAAB: kick 5 is taken by B
  CHECK(first_kicker_of_round(MechanismId::DoubleAlternating, s) == Team::B);
}

TEST_CASE("first kicker after round 1 AB, A missed, B scored") {
  ShootoutState s;
  s = apply_round(s, {Team::A, false, true});
  CHECK(s.diff() == -1);
  // catch-up keeps the order; behind-first gives it to the trailing team
  CHECK(first_kicker_of_round(MechanismId::CatchUp, s) == Team::A);
  CHECK(first_kicker_of_round(MechanismId::BehindFirst, s) == Team::A);
}

TEST_CASE("adjusted variants hand round n+1 to B") {
  ShootoutState s;  // n = 5
  for (int r = 0; r < 5; ++r) s = apply_round(s, {first_kicker_of_round(MechanismId::AdjBehindFirst, s), false, false});
  CHECK(s.round_index() == 6);
  CHECK(s.diff() == 0);
  CHECK(first_kicker_of_round(MechanismId::AdjBehindFirst, s) == Team::B);
  CHECK(first_kicker_of_round(MechanismId::AdjCatchUp, s) == Team::B);
}

TEST_CASE("apply_round folds scores") {
  ShootoutState s;
  s = apply_round(s, {Team::A, false, true});
  CHECK(s.goals(Team::A) == 0);
  CHECK(s.goals(Team::B) == 1);
  CHECK(s.round_index() == 2);
  ShootoutState t;
  t.score = {2, 2};
  t.history.assign(4, {Team::A, true, true});
  t.history[0] = {Team::A, false, false};
  t.history[1] = {Team::B, false, false};
  t = apply_round(t, {Team::B, false, false});
  CHECK(t.score == std::array<int, 2>{2, 2});
  CHECK(t.consistent());
}

TEST_CASE("behind-first row of the worked illustration") {
  // rounds: AB A miss B score | AB both score | AB both miss | AB A score B miss | BA both miss
  const std::vector<RoundRecord> rounds = {
      {Team::A, false, true}, {Team::A, true, true},  {Team::A, false, false},
      {Team::A, true, false}, {Team::B, false, false}};
  ShootoutState s;
  for (const RoundRecord& r : rounds) {
    CHECK(first_kicker_of_round(MechanismId::BehindFirst, s) == r.first_kicker);
    s = apply_round(s, r);
  }
  CHECK(s.round_index() == 6);
  CHECK(s.goals(Team::A) == s.goals(Team::B));  // tied, sudden death next
  CHECK(first_kicker_of_round(MechanismId::BehindFirst, s) == Team::A);
  CHECK(first_kicker_of_round(MechanismId::AdjBehindFirst, s) == Team::B);
}

TEST_CASE("catch-up row of the worked illustration") {
  const std::vector<RoundRecord> rounds = {
      {Team::A, false, true}, {Team::A, true, true},  {Team::B, false, false},
      {Team::A, true, false}, {Team::B, false, false}};
  ShootoutState s;
  for (const RoundRecord& r : rounds) {
    CHECK(first_kicker_of_round(MechanismId::CatchUp, s) == r.first_kicker);
    s = apply_round(s, r);
  }
  CHECK(first_kicker_of_round(MechanismId::CatchUp, s) == Team::A);
  CHECK(first_kicker_of_round(MechanismId::AdjCatchUp, s) == Team::B);
}

TEST_CASE("adjusted variants match their base rule over the regular phase") {
  SplitMix64 rng{12345};
  for (int rep = 0; rep < 200; ++rep) {
    ShootoutState s;
    ShootoutState cu = s, bf = s;
    for (int r = 1; r <= 5; ++r) {
      const bool o1 = rng.next() & 1, o2 = rng.next() & 1;
      CHECK(first_kicker_of_round(MechanismId::CatchUp, cu) ==
            first_kicker_of_round(MechanismId::AdjCatchUp, cu));
      CHECK(first_kicker_of_round(MechanismId::BehindFirst, bf) ==
            first_kicker_of_round(MechanismId::AdjBehindFirst, bf));
      cu = apply_round(cu, {first_kicker_of_round(MechanismId::CatchUp, cu), o1, o2});
      bf = apply_round(bf, {first_kicker_of_round(MechanismId::BehindFirst, bf), o1, o2});
    }
  }
}

TEST_CASE("behind-first mirrors like alternating while every round stays tied") {
  ShootoutState s;
  Team expected = Team::A;
  for (int r = 1; r <= 8; ++r) {
    CHECK(first_kicker_of_round(MechanismId::BehindFirst, s) == expected);
    s = apply_round(s, {expected, true, true});  // round stays tied
    expected = other(expected);
  }
}
