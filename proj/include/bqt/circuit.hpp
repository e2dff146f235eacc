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

#pragma once

// Brute-force statevector simulation of the ten-qubit bidirectional
// teleportation circuit. Measurement is handled by enumerating every outcome
// branch of the four storage qubits, so each branch stays a pure state and
// the receivers' density matrices are the probability-weighted sums.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "bqt/bloch.hpp"
#include "bqt/protocol.hpp"

namespace bqt {

inline constexpr int kMaxQubits = 24;

/// Qubit slots of the protocol register. Index 0 is the leftmost tensor
/// factor (most significant bit of a basis-state index).
namespace slot {
inline constexpr int kBellA = 0;
inline constexpr int kDataA = 1;
inline constexpr int kStore1A = 2;
inline constexpr int kStore2A = 3;
inline constexpr int kTriggerA = 4;
inline constexpr int kBellB = 5;
inline constexpr int kDataB = 6;
inline constexpr int kStore1B = 7;
inline constexpr int kStore2B = 8;
inline constexpr int kTriggerB = 9;
inline constexpr int kCount = 10;
}  // namespace slot

enum class GateKind { H, X, Y, Z, CNOT, CCNOT, CH };

std::string_view to_string(GateKind kind);

/// A gate and its qubits: controls first, target last.
struct GateOp {
  GateKind kind = GateKind::H;
  std::array<int, 3> qubits{};

  int arity() const;
  int target() const { return qubits[arity() - 1]; }

  static GateOp single(GateKind kind, int q);
  static GateOp cnot(int control, int target);
  static GateOp ch(int control, int target);
  static GateOp ccnot(int c1, int c2, int target);
};

class MultiQubitState {
 public:
  /// |0...0> on n qubits; throws unless 1 <= n <= kMaxQubits.
  explicit MultiQubitState(int n);
  /// Throws on size mismatch or a norm differing from 1 by more than 1e-10.
  MultiQubitState(int n, Eigen::VectorXcd amplitudes);

  /// Tensor product of one-qubit kets, leftmost first.
  static MultiQubitState product(const std::vector<Ket>& kets);

  int qubits() const { return n_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  std::complex<double> amplitude(std::uint64_t basis) const { return amps_(basis); }
  double norm() const { return amps_.norm(); }

  /// In-place application; throws std::invalid_argument on bad indices.
  void apply(const GateOp& gate);

  /// Zeroes every amplitude whose bits at `qubits` differ from `bits`; the
  /// result is unnormalized and its squared norm is the outcome probability.
  MultiQubitState project(const std::vector<int>& qubits,
                          const std::vector<int>& bits) const;

  /// Reduced (unnormalized if the state is) density matrix of one qubit.
  DensityMatrix2 reduced(int qubit) const;

  std::uint64_t bit_mask(int qubit) const {
    return std::uint64_t{1} << (n_ - 1 - qubit);
  }

 private:
  void validate(const GateOp& gate) const;

  int n_;
  Eigen::VectorXcd amps_;
};

MultiQubitState apply_gate(MultiQubitState state, const GateOp& gate);

/// Ten-qubit register: Bell pair (|00> + |11>)/sqrt2 on the two Bell slots,
/// data and trigger qubits as given, storage qubits in |0>.
MultiQubitState init_protocol_state(const PureQubit& qa, const PureQubit& qb,
                                    const TriggerSpec& ta,
                                    const TriggerSpec& tb);

/// How the gate sequence of one sender is wired.
enum class CircuitVariant {
  /// CNOT(data -> bell), H(data) unconditionally, then the two trigger-
  /// controlled Toffolis copy bell and data into the storage qubits.
  Literal,
  /// As Literal, but the CNOT and H are also controlled by the trigger, so a
  /// party whose trigger reads |0> leaves its Bell qubit untouched.
  TriggerControlled,
};

/// Which sender outcome drives which receiver correction. s1 stores the
/// data (Hadamard-side) qubit, s2 stores the Bell-side qubit.
enum class CorrectionMap {
  Standard,       // X^s2 Z^s1
  Swapped,        // X^s1 Z^s2
  BitFlipOnly,    // X^s2
  PhaseFlipOnly,  // Z^s1
};

inline constexpr std::array<CorrectionMap, 4> kAllCorrectionMaps = {
    CorrectionMap::Standard, CorrectionMap::Swapped,
    CorrectionMap::BitFlipOnly, CorrectionMap::PhaseFlipOnly};

std::string_view to_string(CircuitVariant v);
std::string_view to_string(CorrectionMap m);
CircuitVariant parse_circuit_variant(std::string_view name);

struct OracleOptions {
  CircuitVariant variant = CircuitVariant::Literal;
  CorrectionMap correction = CorrectionMap::Standard;
};

/// One of the sixteen storage-measurement branches.
struct MeasurementRecord {
  std::array<int, 4> bits{};  // s1_a, s2_a, s1_b, s2_b
  double probability = 0.0;
  BlochVector alice = BlochVector::Zero();  // conditional, after correction
  BlochVector bob = BlochVector::Zero();
};

struct OracleOutcome {
  /// Branch-averaged states. The weights are the least-squares fit of
  /// rho = w rho_q + (1 - w) I/2, clamped to [0, 1].
  TeleportOutcome outcome;
  double fitted_weight_ab = 0.0;  // unclamped fit
  double fitted_weight_ba = 0.0;
  /// |s_out - w s_q|: zero iff the output has the depolarized-mixture form.
  double fit_residual_alice = 0.0;
  double fit_residual_bob = 0.0;
  double total_probability = 0.0;
  std::vector<MeasurementRecord> branches;
};

OracleOutcome run_protocol_detailed(const PureQubit& qa, const PureQubit& qb,
                                    const TriggerSpec& ta,
                                    const TriggerSpec& tb,
                                    const OracleOptions& options = {});

TeleportOutcome run_protocol(const PureQubit& qa, const PureQubit& qb,
                             const TriggerSpec& ta, const TriggerSpec& tb,
                             const OracleOptions& options = {});

/// Perfect-transfer check for the (|1>, |0>) trigger pattern: Alice's data
/// |1> aligned with her trigger, Bob's data |1> anti-aligned with his, where
/// the closed form predicts rho_at_bob = |1><1| exactly.
struct CorrectionCheck {
  CircuitVariant variant = CircuitVariant::Literal;
  std::array<double, 4> distance{};  // trace distance per kAllCorrectionMaps
  CorrectionMap best = CorrectionMap::Standard;
  bool passed = false;  // best distance < 1e-9
};

CorrectionCheck check_corrections(CircuitVariant variant);

}  // namespace bqt
