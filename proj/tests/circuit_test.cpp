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

#include "bqt/circuit.hpp"

namespace bqt {
namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

MultiQubitState basis(int n, std::uint64_t index) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(std::int64_t{1} << n);
  a(index) = 1.0;
  return MultiQubitState(n, a);
}

MultiQubitState random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd a(std::int64_t{1} << n);
  for (auto& x : a) x = {g(rng), g(rng)};
  return MultiQubitState(n, a / a.norm());
}

TEST(ApplyGate, HadamardOnZero) {
  const MultiQubitState s = apply_gate(MultiQubitState(1), GateOp::single(GateKind::H, 0));
  EXPECT_NEAR(std::abs(s.amplitude(0) - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(1) - kInvSqrt2), 0.0, 1e-15);
}

TEST(ApplyGate, CnotControlFirst) {
  const MultiQubitState s = apply_gate(basis(2, 0b10), GateOp::cnot(0, 1));
  EXPECT_NEAR(std::abs(s.amplitude(0b11)), 1.0, 1e-15);
  const MultiQubitState t = apply_gate(basis(2, 0b01), GateOp::cnot(0, 1));
  EXPECT_NEAR(std::abs(t.amplitude(0b01)), 1.0, 1e-15);
}

// CCNOT|abc> = |a b (c xor ab)>.
TEST(ApplyGate, CcnotTruthTable) {
  for (std::uint64_t in = 0; in < 8; ++in) {
    const int a = (in >> 2) & 1, b = (in >> 1) & 1, c = in & 1;
    const std::uint64_t out = (in & 0b110) | std::uint64_t(c ^ (a & b));
    const MultiQubitState s = apply_gate(basis(3, in), GateOp::ccnot(0, 1, 2));
    EXPECT_NEAR(std::abs(s.amplitude(out)), 1.0, 1e-15) << "input " << in;
  }
  EXPECT_NEAR(std::abs(apply_gate(basis(3, 0b110), GateOp::ccnot(0, 1, 2)).amplitude(0b111)),
              1.0, 1e-15);
  EXPECT_NEAR(std::abs(apply_gate(basis(3, 0b100), GateOp::ccnot(0, 1, 2)).amplitude(0b100)),
              1.0, 1e-15);
}

TEST(ApplyGate, ControlledHadamard) {
  const MultiQubitState s = apply_gate(basis(2, 0b10), GateOp::ch(0, 1));
  EXPECT_NEAR(std::abs(s.amplitude(0b10) - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(0b11) - kInvSqrt2), 0.0, 1e-15);
  const MultiQubitState t = apply_gate(basis(2, 0b01), GateOp::ch(0, 1));
  EXPECT_NEAR(std::abs(t.amplitude(0b01)), 1.0, 1e-15);
}

TEST(ApplyGate, PauliPhases) {
  const MultiQubitState y = apply_gate(basis(1, 0), GateOp::single(GateKind::Y, 0));
  EXPECT_NEAR(std::abs(y.amplitude(1) - std::complex<double>(0, 1)), 0.0, 1e-15);
  const MultiQubitState z = apply_gate(basis(1, 1), GateOp::single(GateKind::Z, 0));
  EXPECT_NEAR(std::abs(z.amplitude(1) + 1.0), 0.0, 1e-15);
}

// Gates on non-adjacent qubits of a larger register keep the norm and are
// self-inverse.
TEST(ApplyGate, NormPreservedAndInvolutive) {
  std::mt19937_64 rng(9);
  const std::vector<GateOp> gates = {
      GateOp::single(GateKind::H, 3), GateOp::single(GateKind::X, 0),
      GateOp::single(GateKind::Y, 2), GateOp::single(GateKind::Z, 4),
      GateOp::cnot(4, 1),             GateOp::ch(2, 0),
      GateOp::ccnot(3, 0, 4),         GateOp::ccnot(1, 4, 2)};
  for (int i = 0; i < 20; ++i) {
    const MultiQubitState s = random_state(5, rng);
    for (const GateOp& g : gates) {
      const MultiQubitState once = apply_gate(s, g);
      EXPECT_NEAR(once.norm(), 1.0, 1e-13);
      EXPECT_LT((apply_gate(once, g).amplitudes() - s.amplitudes()).norm(), 1e-13);
    }
  }
}

TEST(ApplyGate, RejectsBadQubits) {
  MultiQubitState s(3);
  EXPECT_THROW(s.apply(GateOp::cnot(0, 3)), std::invalid_argument);
  EXPECT_THROW(s.apply(GateOp::cnot(1, 1)), std::invalid_argument);
  EXPECT_THROW(s.apply(GateOp::ccnot(0, 2, 0)), std::invalid_argument);
  EXPECT_THROW(s.apply(GateOp::single(GateKind::H, -1)), std::invalid_argument);
  EXPECT_THROW(GateOp::single(GateKind::CNOT, 0), std::invalid_argument);
}

TEST(MultiQubitState, Construction) {
  EXPECT_THROW(MultiQubitState(0), std::invalid_argument);
  EXPECT_THROW(MultiQubitState(kMaxQubits + 1), std::invalid_argument);
  EXPECT_THROW(MultiQubitState(2, Eigen::VectorXcd::Ones(4)), std::invalid_argument);
  EXPECT_THROW(MultiQubitState(2, Eigen::VectorXcd::Ones(3)), std::invalid_argument);
}

TEST(MultiQubitState, ProjectionsSumToOne) {
  std::mt19937_64 rng(10);
  const MultiQubitState s = random_state(4, rng);
  double total = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) total += s.project({1, 3}, {a, b}).amplitudes().squaredNorm();
  EXPECT_NEAR(total, 1.0, 1e-14);
  EXPECT_THROW(s.project({0}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(s.project({4}, {0}), std::invalid_argument);
}

TEST(MultiQubitState, ReducedOfProduct) {
  const PureQubit a(0.7, 1.9), b(2.2, 0.4);
  const MultiQubitState s = MultiQubitState::product({pure_ket(a), pure_ket(b)});
  EXPECT_LT((s.reduced(0) - bloch_to_density(pure_to_bloch(a))).norm(), 1e-14);
  EXPECT_LT((s.reduced(1) - bloch_to_density(pure_to_bloch(b))).norm(), 1e-14);
  EXPECT_THROW(s.reduced(2), std::invalid_argument);
}

TEST(InitProtocolState, AllZero) {
  const MultiQubitState s = init_protocol_state(PureQubit(), PureQubit(), TriggerSpec(),
                                                TriggerSpec());
  ASSERT_EQ(s.qubits(), slot::kCount);
  const std::uint64_t partner = s.bit_mask(slot::kBellA) | s.bit_mask(slot::kBellB);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << slot::kCount); ++i) {
    const double expected = (i == 0 || i == partner) ? kInvSqrt2 : 0.0;
    EXPECT_NEAR(std::abs(s.amplitude(i)), expected, 1e-15) << i;
  }
}

TEST(InitProtocolState, DataSlotHoldsOne) {
  const MultiQubitState s = init_protocol_state(PureQubit(kPi), PureQubit(0.3, 1.0),
                                                TriggerSpec(1.1), TriggerSpec(2.0));
  const DensityMatrix2 r = s.reduced(slot::kDataA);
  EXPECT_NEAR(r(1, 1).real(), 1.0, 1e-15);
  EXPECT_NEAR(s.reduced(slot::kStore1A)(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(s.reduced(slot::kStore2B)(0, 0).real(), 1.0, 1e-15);
}

TEST(InitProtocolState, NormOfRandomInputs) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    const MultiQubitState s = init_protocol_state(
        PureQubit(th(rng), ph(rng)), PureQubit(th(rng), ph(rng)), TriggerSpec(th(rng)),
        TriggerSpec(th(rng)));
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  }
}

class ProtocolOracle : public ::testing::TestWithParam<CircuitVariant> {};

// Both triggers |0>: neither party's storage Toffolis fire.
TEST_P(ProtocolOracle, BothTriggersUpGiveMixedOutputs) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  for (int i = 0; i < 30; ++i) {
    const TeleportOutcome o =
        run_protocol(PureQubit(th(rng), ph(rng)), PureQubit(th(rng), ph(rng)),
                     TriggerSpec(0.0), TriggerSpec(0.0), {GetParam()});
    EXPECT_LT(trace_distance(o.rho_at_alice, maximally_mixed<double>()), 1e-10);
    EXPECT_LT(trace_distance(o.rho_at_bob, maximally_mixed<double>()), 1e-10);
  }
}

// Both triggers |1>: both CNOTs act on the shared pair and all four of the
// Bell and data qubits are copied into measured storage. Bob's Bell half ends
// as b ^ d_b ^ (b ^ d_a) = d_a ^ d_b in the computational basis, dephased, so
// z = <(-1)^(d_a ^ d_b)> = cos(theta_a) cos(theta_b) on both sides.
TEST_P(ProtocolOracle, BothTriggersDownDeliverParity) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  for (int i = 0; i < 20; ++i) {
    const PureQubit qa(th(rng), ph(rng)), qb(th(rng), ph(rng));
    const TeleportOutcome o =
        run_protocol(qa, qb, TriggerSpec(kPi), TriggerSpec(kPi), {GetParam()});
    const double z = std::cos(qa.theta.radians()) * std::cos(qb.theta.radians());
    EXPECT_LT((density_to_bloch(o.rho_at_alice) - BlochVector(0, 0, z)).norm(), 1e-10);
    EXPECT_LT((density_to_bloch(o.rho_at_bob) - BlochVector(0, 0, z)).norm(), 1e-10);
  }
}

TEST_P(ProtocolOracle, OutcomeBranchesAreComplete) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  for (int i = 0; i < 10; ++i) {
    const OracleOutcome o = run_protocol_detailed(
        PureQubit(th(rng), ph(rng)), PureQubit(th(rng), ph(rng)), TriggerSpec(th(rng)),
        TriggerSpec(th(rng)), {GetParam()});
    EXPECT_NEAR(o.total_probability, 1.0, 1e-12);
    double sum = 0.0;
    for (const MeasurementRecord& b : o.branches) {
      EXPECT_GE(b.probability, 0.0);
      if (b.probability > 1e-12) {
        EXPECT_LE(b.alice.norm(), 1 + 1e-10);
        EXPECT_LE(b.bob.norm(), 1 + 1e-10);
      }
      sum += b.probability;
    }
    EXPECT_EQ(o.branches.size(), 16u);
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_NEAR(o.outcome.rho_at_alice.trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(o.outcome.rho_at_bob.trace().real(), 1.0, 1e-12);
  }
}

// The circuit is linear in Alice's input density matrix, so with everything
// else fixed each output Bloch vector is affine in hers: antipodal inputs
// average to the same point.
TEST_P(ProtocolOracle, OutputsAffineInInputBloch) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  const PureQubit qb(1.3, 0.8);
  const TriggerSpec ta(0.9), tb(2.1);
  BlochVector first_bob, first_alice;
  for (int i = 0; i < 10; ++i) {
    const double t = th(rng), p = ph(rng);
    const TeleportOutcome u = run_protocol(PureQubit(t, p), qb, ta, tb, {GetParam()});
    const TeleportOutcome v = run_protocol(PureQubit(kPi - t, p + kPi), qb, ta, tb, {GetParam()});
    const BlochVector mb = density_to_bloch(u.rho_at_bob) + density_to_bloch(v.rho_at_bob);
    const BlochVector ma =
        density_to_bloch(u.rho_at_alice) + density_to_bloch(v.rho_at_alice);
    if (i == 0) {
      first_bob = mb;
      first_alice = ma;
    }
    EXPECT_LT((mb - first_bob).norm(), 1e-12);
    EXPECT_LT((ma - first_alice).norm(), 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Variants, ProtocolOracle,
                         ::testing::Values(CircuitVariant::Literal,
                                           CircuitVariant::TriggerControlled),
                         [](const auto& info) {
                           return info.param == CircuitVariant::Literal
                                      ? std::string("Literal")
                                      : std::string("TriggerControlled");
                         });

TEST(CorrectionCheck, TriggerControlledTransfersPerfectly) {
  const CorrectionCheck c = check_corrections(CircuitVariant::TriggerControlled);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.best, CorrectionMap::Standard);
  EXPECT_LT(c.distance[0], 1e-9);
}

TEST(CorrectionCheck, ReportsEveryMap) {
  const CorrectionCheck c = check_corrections(CircuitVariant::Literal);
  for (double d : c.distance) {
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0 + 1e-12);
  }
  double best = c.distance[0];
  for (double d : c.distance) best = std::min(best, d);
  EXPECT_EQ(c.passed, best < 1e-9);
}

TEST(CircuitNames, ParseVariant) {
  EXPECT_EQ(parse_circuit_variant("literal"), CircuitVariant::Literal);
  EXPECT_EQ(parse_circuit_variant("trigger-controlled"), CircuitVariant::TriggerControlled);
  EXPECT_THROW(parse_circuit_variant("other"), std::invalid_argument);
  EXPECT_EQ(to_string(CorrectionMap::Standard), "X^s2 Z^s1");
}

}  // namespace
}  // namespace bqt
