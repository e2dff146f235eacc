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

#include "bqt/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bqt {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::X:
      return "X";
    case GateKind::Y:
      return "Y";
    case GateKind::Z:
      return "Z";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::CCNOT:
      return "CCNOT";
    case GateKind::CH:
      return "CH";
  }
  return "?";
}

std::string_view to_string(CircuitVariant v) {
  return v == CircuitVariant::Literal ? "literal" : "trigger-controlled";
}

CircuitVariant parse_circuit_variant(std::string_view name) {
  if (name == "literal") return CircuitVariant::Literal;
  if (name == "trigger-controlled" || name == "controlled") {
    return CircuitVariant::TriggerControlled;
  }
  throw std::invalid_argument("unknown circuit variant '" + std::string(name) +
                              "' (expected literal or trigger-controlled)");
}

std::string_view to_string(CorrectionMap m) {
  switch (m) {
    case CorrectionMap::Standard:
      return "X^s2 Z^s1";
    case CorrectionMap::Swapped:
      return "X^s1 Z^s2";
    case CorrectionMap::BitFlipOnly:
      return "X^s2";
    case CorrectionMap::PhaseFlipOnly:
      return "Z^s1";
  }
  return "?";
}

int GateOp::arity() const {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CH:
      return 2;
    case GateKind::CCNOT:
      return 3;
    default:
      return 1;
  }
}

GateOp GateOp::single(GateKind kind, int q) {
  GateOp g{kind, {q, 0, 0}};
  if (g.arity() != 1) {
    throw std::invalid_argument("GateOp::single: " + std::string(to_string(kind)) +
                                " is not a one-qubit gate");
  }
  return g;
}

GateOp GateOp::cnot(int control, int target) {
  return {GateKind::CNOT, {control, target, 0}};
}

GateOp GateOp::ch(int control, int target) {
  return {GateKind::CH, {control, target, 0}};
}

GateOp GateOp::ccnot(int c1, int c2, int target) {
  return {GateKind::CCNOT, {c1, c2, target}};
}

MultiQubitState::MultiQubitState(int n) : n_(n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("MultiQubitState: qubit count " +
                                std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  amps_(0) = 1.0;
}

MultiQubitState::MultiQubitState(int n, Eigen::VectorXcd amplitudes)
    : MultiQubitState(n) {
  if (amplitudes.size() != amps_.size()) {
    throw std::invalid_argument("MultiQubitState: expected " +
                                std::to_string(amps_.size()) + " amplitudes");
  }
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-10) {
    throw std::invalid_argument("MultiQubitState: amplitudes not normalized");
  }
  amps_ = std::move(amplitudes);
}

MultiQubitState MultiQubitState::product(const std::vector<Ket>& kets) {
  MultiQubitState s(static_cast<int>(kets.size()));
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (const Ket& k : kets) {
    Eigen::VectorXcd next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * k(0);
      next(2 * i + 1) = v(i) * k(1);
    }
    v = std::move(next);
  }
  return MultiQubitState(s.n_, std::move(v));
}

void MultiQubitState::validate(const GateOp& gate) const {
  const int k = gate.arity();
  for (int i = 0; i < k; ++i) {
    const int q = gate.qubits[i];
    if (q < 0 || q >= n_) {
      throw std::invalid_argument(std::string(to_string(gate.kind)) +
                                  ": qubit index " + std::to_string(q) +
                                  " out of range for " + std::to_string(n_) +
                                  " qubits");
    }
    for (int j = 0; j < i; ++j) {
      if (gate.qubits[j] == q) {
        throw std::invalid_argument(std::string(to_string(gate.kind)) +
                                    ": duplicate qubit index " +
                                    std::to_string(q));
      }
    }
  }
}

void MultiQubitState::apply(const GateOp& gate) {
  validate(gate);
  using C = std::complex<double>;
  const double r = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd u;
  switch (gate.kind) {
    case GateKind::H:
    case GateKind::CH:
      u << r, r, r, -r;
      break;
    case GateKind::Y:
      u << C(0), C(0, -1), C(0, 1), C(0);
      break;
    case GateKind::Z:
      u << 1, 0, 0, -1;
      break;
    default:  // X, CNOT, CCNOT
      u << 0, 1, 1, 0;
      break;
  }

  std::uint64_t controls = 0;
  for (int i = 0; i + 1 < gate.arity(); ++i) controls |= bit_mask(gate.qubits[i]);
  const std::uint64_t t = bit_mask(gate.target());
  const auto dim = static_cast<std::uint64_t>(amps_.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & t) != 0 || (i & controls) != controls) continue;
    const C a0 = amps_(i);
    const C a1 = amps_(i | t);
    amps_(i) = u(0, 0) * a0 + u(0, 1) * a1;
    amps_(i | t) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

MultiQubitState MultiQubitState::project(const std::vector<int>& qubits,
                                         const std::vector<int>& bits) const {
  if (qubits.size() != bits.size()) {
    throw std::invalid_argument("project: qubit/bit count mismatch");
  }
  std::uint64_t mask = 0;
  std::uint64_t want = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_) {
      throw std::invalid_argument("project: qubit index out of range");
    }
    mask |= bit_mask(qubits[i]);
    if (bits[i]) want |= bit_mask(qubits[i]);
  }
  MultiQubitState out(*this);
  for (Eigen::Index i = 0; i < out.amps_.size(); ++i) {
    if ((static_cast<std::uint64_t>(i) & mask) != want) out.amps_(i) = 0.0;
  }
  return out;
}

DensityMatrix2 MultiQubitState::reduced(int qubit) const {
  if (qubit < 0 || qubit >= n_) {
    throw std::invalid_argument("reduced: qubit index out of range");
  }
  const std::uint64_t m = bit_mask(qubit);
  DensityMatrix2 rho = DensityMatrix2::Zero();
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    if (idx & m) continue;
    const std::complex<double> a0 = amps_(i);
    const std::complex<double> a1 = amps_(static_cast<Eigen::Index>(idx | m));
    rho(0, 0) += std::norm(a0);
    rho(1, 1) += std::norm(a1);
    rho(0, 1) += a0 * std::conj(a1);
  }
  rho(1, 0) = std::conj(rho(0, 1));
  return rho;
}

MultiQubitState apply_gate(MultiQubitState state, const GateOp& gate) {
  state.apply(gate);
  return state;
}

MultiQubitState init_protocol_state(const PureQubit& qa, const PureQubit& qb,
                                    const TriggerSpec& ta,
                                    const TriggerSpec& tb) {
  const Ket zero = Ket(1.0, 0.0);
  std::vector<Ket> kets(slot::kCount, zero);
  kets[slot::kDataA] = pure_ket(qa);
  kets[slot::kTriggerA] = trigger_ket(ta);
  kets[slot::kDataB] = pure_ket(qb);
  kets[slot::kTriggerB] = trigger_ket(tb);
  MultiQubitState s = MultiQubitState::product(kets);
  s.apply(GateOp::single(GateKind::H, slot::kBellA));
  s.apply(GateOp::cnot(slot::kBellA, slot::kBellB));
  return s;
}

namespace {

struct SenderSlots {
  int bell, data, store1, store2, trigger;
};

constexpr SenderSlots kAlice{slot::kBellA, slot::kDataA, slot::kStore1A,
                             slot::kStore2A, slot::kTriggerA};
constexpr SenderSlots kBob{slot::kBellB, slot::kDataB, slot::kStore1B,
                           slot::kStore2B, slot::kTriggerB};

void run_sender(MultiQubitState& s, const SenderSlots& q,
                CircuitVariant variant) {
  if (variant == CircuitVariant::Literal) {
    s.apply(GateOp::cnot(q.data, q.bell));
    s.apply(GateOp::single(GateKind::H, q.data));
  } else {
    s.apply(GateOp::ccnot(q.trigger, q.data, q.bell));
    s.apply(GateOp::ch(q.trigger, q.data));
  }
  s.apply(GateOp::ccnot(q.trigger, q.bell, q.store2));
  s.apply(GateOp::ccnot(q.trigger, q.data, q.store1));
}

void correct(MultiQubitState& s, int receiver_bell, int s1, int s2,
             CorrectionMap map) {
  bool x = false;
  bool z = false;
  switch (map) {
    case CorrectionMap::Standard:
      x = s2;
      z = s1;
      break;
    case CorrectionMap::Swapped:
      x = s1;
      z = s2;
      break;
    case CorrectionMap::BitFlipOnly:
      x = s2;
      break;
    case CorrectionMap::PhaseFlipOnly:
      z = s1;
      break;
  }
  if (x) s.apply(GateOp::single(GateKind::X, receiver_bell));
  if (z) s.apply(GateOp::single(GateKind::Z, receiver_bell));
}

// Bloch vector of a possibly unnormalized one-qubit operator.
BlochVector normalized_bloch(const DensityMatrix2& rho) {
  const double tr = rho.trace().real();
  if (tr <= 0.0) return BlochVector::Zero();
  return BlochVector(2.0 * rho(0, 1).real(), 2.0 * rho(0, 1).imag(),
                     (rho(0, 0) - rho(1, 1)).real()) /
         tr;
}

}  // namespace

OracleOutcome run_protocol_detailed(const PureQubit& qa, const PureQubit& qb,
                                    const TriggerSpec& ta,
                                    const TriggerSpec& tb,
                                    const OracleOptions& options) {
  MultiQubitState s = init_protocol_state(qa, qb, ta, tb);
  run_sender(s, kAlice, options.variant);
  run_sender(s, kBob, options.variant);

  const std::vector<int> measured = {slot::kStore1A, slot::kStore2A,
                                     slot::kStore1B, slot::kStore2B};
  OracleOutcome out;
  DensityMatrix2 at_alice = DensityMatrix2::Zero();
  DensityMatrix2 at_bob = DensityMatrix2::Zero();
  for (int outcome = 0; outcome < 16; ++outcome) {
    MeasurementRecord rec;
    for (int k = 0; k < 4; ++k) rec.bits[k] = (outcome >> (3 - k)) & 1;
    MultiQubitState branch = s.project(
        measured, std::vector<int>(rec.bits.begin(), rec.bits.end()));
    rec.probability = branch.amplitudes().squaredNorm();
    // Alice's record travels to Bob and vice versa.
    correct(branch, slot::kBellB, rec.bits[0], rec.bits[1], options.correction);
    correct(branch, slot::kBellA, rec.bits[2], rec.bits[3], options.correction);
    const DensityMatrix2 ra = branch.reduced(slot::kBellA);
    const DensityMatrix2 rb = branch.reduced(slot::kBellB);
    at_alice += ra;
    at_bob += rb;
    rec.alice = normalized_bloch(ra);
    rec.bob = normalized_bloch(rb);
    out.total_probability += rec.probability;
    out.branches.push_back(rec);
  }

  const BlochVector sa = pure_to_bloch(qa);
  const BlochVector sb = pure_to_bloch(qb);
  const BlochVector bob = normalized_bloch(at_bob);
  const BlochVector alice = normalized_bloch(at_alice);
  out.fitted_weight_ab = bob.dot(sa);
  out.fitted_weight_ba = alice.dot(sb);
  out.fit_residual_bob = (bob - out.fitted_weight_ab * sa).norm();
  out.fit_residual_alice = (alice - out.fitted_weight_ba * sb).norm();

  out.outcome.rho_at_alice = at_alice;
  out.outcome.rho_at_bob = at_bob;
  out.outcome.weight_ab = std::clamp(out.fitted_weight_ab, 0.0, 1.0);
  out.outcome.weight_ba = std::clamp(out.fitted_weight_ba, 0.0, 1.0);
  return out;
}

TeleportOutcome run_protocol(const PureQubit& qa, const PureQubit& qb,
                             const TriggerSpec& ta, const TriggerSpec& tb,
                             const OracleOptions& options) {
  return run_protocol_detailed(qa, qb, ta, tb, options).outcome;
}

CorrectionCheck check_corrections(CircuitVariant variant) {
  const double pi = std::numbers::pi;
  const PureQubit one(pi, 0.0);
  const TriggerSpec ta(pi);
  const TriggerSpec tb(0.0);
  const DensityMatrix2 expected_bob = bloch_to_density(pure_to_bloch(one));
  const DensityMatrix2 expected_alice = maximally_mixed<double>();

  CorrectionCheck check;
  check.variant = variant;
  double best = 2.0;
  for (std::size_t i = 0; i < kAllCorrectionMaps.size(); ++i) {
    const TeleportOutcome o =
        run_protocol(one, one, ta, tb, {variant, kAllCorrectionMaps[i]});
    check.distance[i] =
        std::max(trace_distance(o.rho_at_bob, expected_bob),
                 trace_distance(o.rho_at_alice, expected_alice));
    if (check.distance[i] < best) {
      best = check.distance[i];
      check.best = kAllCorrectionMaps[i];
    }
  }
  check.passed = best < 1e-9;
  return check;
}

}  // namespace bqt
