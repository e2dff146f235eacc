// Copyright 2026 The bqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bqt/protocol.hpp"

namespace bqt {
namespace {

constexpr double kPi = std::numbers::pi;

// |<T|Q>|^2 from the kets.
double ket_overlap(const PureQubit& q, const TriggerSpec& t) {
  return std::norm(trigger_ket(t).dot(pure_ket(q)));
}

TEST(OverlapProb, Examples) {
  for (ProbModel m : {ProbModel::Overlap, ProbModel::PhaseSum}) {
    EXPECT_NEAR(overlap_prob(PureQubit(kPi, 0.0), TriggerSpec(kPi), m).value, 1.0, 1e-15);
    for (double phi : {0.0, 1.0, 5.0})
      EXPECT_NEAR(overlap_prob(PureQubit(0.0, phi), TriggerSpec(kPi), m).value, 0.0,
                  1e-15);
  }
  const PureQubit q(kPi / 2, kPi / 2);
  const TriggerSpec t(kPi / 2);
  EXPECT_NEAR(overlap_prob(q, t, ProbModel::PhaseSum).value, 1.0, 1e-15);
  EXPECT_NEAR(overlap_prob(q, t, ProbModel::Overlap).value, 0.5, 1e-15);
}

TEST(OverlapProb, OverlapModelIsKetOverlap) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  for (int i = 0; i < 500; ++i) {
    const PureQubit q(th(rng), ph(rng));
    const TriggerSpec t(th(rng));
    const OverlapProb p = overlap_prob(q, t, ProbModel::Overlap);
    EXPECT_NEAR(p.value, ket_overlap(q, t), 1e-14);
    EXPECT_FALSE(p.clamped);
  }
}

TEST(OverlapProb, PoleLimit) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  for (int i = 0; i < 200; ++i) {
    const PureQubit q(th(rng), ph(rng));
    const double s = std::sin(q.theta.radians() / 2);
    for (ProbModel m : {ProbModel::Overlap, ProbModel::PhaseSum}) {
      EXPECT_NEAR(overlap_prob(q, TriggerSpec(kPi), m).value, s * s, 1e-12);
      EXPECT_NEAR(overlap_prob(q, TriggerSpec(0.0), m).value, 1 - s * s, 1e-12);
    }
  }
}

TEST(OverlapProb, ModelsAgreeAtRealPhases) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(0.0, kPi);
  for (int i = 0; i < 200; ++i) {
    for (double phi : {0.0, kPi}) {
      const PureQubit q(th(rng), phi);
      const TriggerSpec t(th(rng));
      EXPECT_NEAR(overlap_prob(q, t, ProbModel::Overlap).value,
                  overlap_prob(q, t, ProbModel::PhaseSum).value, 1e-15);
    }
  }
}

TEST(OverlapProb, PhaseSumClampsAndFlags) {
  // raw = (1 + sqrt2)/2 at theta = t = pi/2, phi = pi/4.
  const OverlapProb p =
      overlap_prob(PureQubit(kPi / 2, kPi / 4), TriggerSpec(kPi / 2), ProbModel::PhaseSum);
  EXPECT_TRUE(p.clamped);
  EXPECT_DOUBLE_EQ(p.value, 1.0);
  EXPECT_NEAR(p.raw, 0.5 * (1 + std::sqrt(2.0)), 1e-15);
  const ProbGradient g = overlap_prob_gradient(PureQubit(kPi / 2, kPi / 4),
                                               TriggerSpec(kPi / 2), ProbModel::PhaseSum);
  EXPECT_EQ(g.d_theta, 0.0);
  EXPECT_EQ(g.d_phi, 0.0);
  EXPECT_EQ(g.d_trigger, 0.0);
}

TEST(OverlapProb, GradientMatchesFiniteDifference) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> th(0.1, kPi - 0.1), ph(0.0, 2 * kPi);
  const double h = 1e-6;
  for (ProbModel m : {ProbModel::Overlap, ProbModel::PhaseSum}) {
    for (int i = 0; i < 200; ++i) {
      const double a = th(rng), b = ph(rng), t = th(rng);
      auto p = [&](double x, double y, double z) {
        return overlap_prob(PureQubit(x, y), TriggerSpec(z), m);
      };
      const OverlapProb c = p(a, b, t);
      if (c.raw < 1e-3 || c.raw > 1 - 1e-3) continue;  // stay off the clamp kink
      const ProbGradient g = overlap_prob_gradient(PureQubit(a, b), TriggerSpec(t), m);
      EXPECT_NEAR(g.d_theta, (p(a + h, b, t).value - p(a - h, b, t).value) / (2 * h), 1e-8);
      EXPECT_NEAR(g.d_phi, (p(a, b + h, t).value - p(a, b - h, t).value) / (2 * h), 1e-8);
      EXPECT_NEAR(g.d_trigger, (p(a, b, t + h).value - p(a, b, t - h).value) / (2 * h),
                  1e-8);
    }
  }
}

TEST(ClassifyTriggers, Cases) {
  EXPECT_EQ(classify_triggers(TriggerSpec(0.0), TriggerSpec(0.0)), TriggerCase::BothPlusZ);
  EXPECT_EQ(classify_triggers(TriggerSpec(kPi), TriggerSpec(kPi)), TriggerCase::BothMinusZ);
  EXPECT_EQ(classify_triggers(TriggerSpec(kPi), TriggerSpec(0.0)),
            TriggerCase::AliceMinusBobPlus);
  EXPECT_EQ(classify_triggers(TriggerSpec(0.0), TriggerSpec(kPi)),
            TriggerCase::BobMinusAlicePlus);
  EXPECT_EQ(classify_triggers(TriggerSpec(kPi / 4), TriggerSpec(kPi / 4)),
            TriggerCase::General);
  // Matching is modulo 2 pi.
  EXPECT_EQ(classify_triggers(TriggerSpec(2 * kPi), TriggerSpec(-kPi)),
            TriggerCase::BobMinusAlicePlus);
  EXPECT_EQ(classify_triggers(TriggerSpec(1e-10), TriggerSpec(0.0)), TriggerCase::BothPlusZ);
  EXPECT_EQ(classify_triggers(TriggerSpec(1e-8), TriggerSpec(0.0)), TriggerCase::General);
}

TEST(TeleportedStates, BothPolesGiveMixedOutputs) {
  const TeleportOutcome o = teleported_states(PureQubit(0.0), PureQubit(0.0),
                                              TriggerSpec(0.0), TriggerSpec(0.0));
  EXPECT_NEAR(o.weight_ab, 0.0, 1e-15);
  EXPECT_NEAR(o.weight_ba, 0.0, 1e-15);
  EXPECT_LT(trace_distance(o.rho_at_alice, maximally_mixed<double>()), 1e-15);
  EXPECT_LT(trace_distance(o.rho_at_bob, maximally_mixed<double>()), 1e-15);
}

TEST(TeleportedStates, AlignedAndAntiAligned) {
  // p_a = 1 and p_b = 1, so both weights vanish.
  const TeleportOutcome o = teleported_states(PureQubit(kPi), PureQubit(0.0),
                                              TriggerSpec(kPi), TriggerSpec(0.0));
  EXPECT_NEAR(o.weight_ab, 0.0, 1e-15);
  EXPECT_NEAR(o.weight_ba, 0.0, 1e-15);
  EXPECT_LT(trace_distance(o.rho_at_bob, maximally_mixed<double>()), 1e-15);
  EXPECT_LT(trace_distance(o.rho_at_alice, maximally_mixed<double>()), 1e-15);
}

TEST(TeleportedStates, WeightsAndBlochVectors) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  for (int i = 0; i < 300; ++i) {
    const PureQubit qa(th(rng), ph(rng)), qb(th(rng), ph(rng));
    const TriggerSpec ta(th(rng)), tb(th(rng));
    const TeleportOutcome o = teleported_states(qa, qb, ta, tb);
    const double pa = ket_overlap(qa, ta), pb = ket_overlap(qb, tb);
    EXPECT_NEAR(o.weight_ab, pa * (1 - pb), 1e-14);
    EXPECT_NEAR(o.weight_ba, pb * (1 - pa), 1e-14);
    EXPECT_LT((density_to_bloch(o.rho_at_bob) - o.weight_ab * pure_to_bloch(qa)).norm(),
              1e-14);
    EXPECT_LT((density_to_bloch(o.rho_at_alice) - o.weight_ba * pure_to_bloch(qb)).norm(),
              1e-14);
  }
}

// Swapping the parties swaps the outputs.
TEST(TeleportedStates, PartySymmetry) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  for (ProbModel m : {ProbModel::Overlap, ProbModel::PhaseSum}) {
    for (int i = 0; i < 200; ++i) {
      const PureQubit qa(th(rng), ph(rng)), qb(th(rng), ph(rng));
      const TriggerSpec ta(th(rng)), tb(th(rng));
      const TeleportOutcome o = teleported_states(qa, qb, ta, tb, m);
      const TeleportOutcome s = teleported_states(qb, qa, tb, ta, m);
      EXPECT_LT((o.rho_at_alice - s.rho_at_bob).norm(), 1e-15);
      EXPECT_LT((o.rho_at_bob - s.rho_at_alice).norm(), 1e-15);
      EXPECT_EQ(o.weight_ab, s.weight_ba);
    }
  }
}

TEST(TeleportedStates, ParamsOverloadAgrees) {
  ProtocolParams p;
  p[Param::ThetaA] = 0.4;
  p[Param::ThetaB] = 2.1;
  p[Param::PhiA] = 1.0;
  p[Param::PhiB] = 5.0;
  p[Param::TriggerA] = 0.7;
  p[Param::TriggerB] = 2.9;
  const TeleportOutcome a = teleported_states(p);
  const TeleportOutcome b = teleported_states(p.qa(), p.qb(), p.ta(), p.tb());
  EXPECT_EQ((a.rho_at_bob - b.rho_at_bob).norm(), 0.0);
  const ProtocolParams q = ProtocolParams::from(p.qa(), p.qb(), p.ta(), p.tb());
  EXPECT_EQ(q.values, p.values);
}

TEST(TeleportedBloch, Examples) {
  EXPECT_TRUE(teleported_bloch(PureQubit(1.2, 3.0), 0.0).isZero(0.0));
  EXPECT_TRUE(teleported_bloch(PureQubit(0.0, 2.0), 0.4).isApprox(BlochVector(0, 0, 0.4)));
  const BlochVector s = teleported_bloch(PureQubit(kPi / 2, 0.0), 0.25);
  EXPECT_NEAR(s(0), 0.25, 1e-16);
  EXPECT_NEAR(s(1), 0.0, 1e-16);
  EXPECT_NEAR(s(2), 0.0, 1e-16);
  EXPECT_THROW(teleported_bloch(PureQubit(), 1.5), std::domain_error);
  EXPECT_THROW(teleported_bloch(PureQubit(), -0.1), std::domain_error);
}

TEST(ProbModelNames, RoundTrip) {
  for (ProbModel m : {ProbModel::Overlap, ProbModel::PhaseSum})
    EXPECT_EQ(parse_prob_model(to_string(m)), m);
  EXPECT_THROW(parse_prob_model("physical"), std::invalid_argument);
}

}  // namespace
}  // namespace bqt
