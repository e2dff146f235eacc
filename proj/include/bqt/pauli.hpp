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

// Pauli-operator descriptions of CNOT and Toffoli, computed by explicit
// matrix algebra and diffed against reference forms transcribed as data.

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bqt {

enum class PauliLabel { I, X, Y, Z };

inline constexpr std::array<PauliLabel, 4> kAllPaulis = {
    PauliLabel::I, PauliLabel::X, PauliLabel::Y, PauliLabel::Z};

char to_char(PauliLabel p);

/// sign * (first (x) second); first acts on qubit 1.
struct PauliProduct {
  int sign = 1;
  PauliLabel first = PauliLabel::I;
  PauliLabel second = PauliLabel::I;

  bool operator==(const PauliProduct&) const = default;
};

/// e.g. "+XZ", "-YI"
std::string to_string(const PauliProduct& p);

Eigen::Matrix2cd pauli_matrix(PauliLabel p);
Eigen::Matrix4cd pauli_product_matrix(const PauliProduct& p);

/// CNOT (control qubit 1, target qubit 2) as a 4x4 matrix.
Eigen::Matrix4cd cnot_matrix();

/// U (row (x) col) U^dagger for U = CNOT, decomposed back into a single
/// signed Pauli product.
PauliProduct cnot_pauli_table(PauliLabel row, PauliLabel col);

using PauliTable = std::array<std::array<PauliProduct, 4>, 4>;

/// The 16-entry reference table, rows = qubit-1 Pauli, columns = qubit-2
/// Pauli, each entry transcribed verbatim.
const PauliTable& reference_cnot_table();

struct TableDiff {
  PauliLabel row;
  PauliLabel col;
  PauliProduct computed;
  PauliProduct reference;
};

/// Cells where the computed conjugation differs from the reference, in
/// row-major order.
std::vector<TableDiff> cnot_table_diffs();

using Matrix8d = Eigen::Matrix<double, 8, 8>;

/// The reference Toffoli expansion evaluated term by term:
/// 1/4 [(1+Z1)(1+Z2) X3 + (1+Z1)(1-Z2) + (1-Z1)(1+Z2) + (1-Z1)(1-Z2)].
Matrix8d ccnot_pauli_form();

/// Standard Toffoli: flips qubit 3 when qubits 1 and 2 are both |1>.
Matrix8d toffoli_matrix();

struct BasisDiff {
  int input;      // |abc> as 3-bit index, qubit 1 most significant
  int expansion;  // image under ccnot_pauli_form (basis index, or -1)
  int toffoli;    // image under toffoli_matrix
};

std::vector<BasisDiff> ccnot_form_diffs();

/// "|abc>" for a 3-bit index.
std::string basis_label(int index, int bits = 3);

}  // namespace bqt
