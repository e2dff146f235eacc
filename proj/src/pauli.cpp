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

#include "bqt/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace bqt {

char to_char(PauliLabel p) {
  switch (p) {
    case PauliLabel::I:
      return 'I';
    case PauliLabel::X:
      return 'X';
    case PauliLabel::Y:
      return 'Y';
    case PauliLabel::Z:
      return 'Z';
  }
  return '?';
}

std::string to_string(const PauliProduct& p) {
  std::string s;
  s += p.sign < 0 ? '-' : '+';
  s += to_char(p.first);
  s += to_char(p.second);
  return s;
}

Eigen::Matrix2cd pauli_matrix(PauliLabel p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
    case PauliLabel::I:
      m << 1, 0, 0, 1;
      break;
    case PauliLabel::X:
      m << 0, 1, 1, 0;
      break;
    case PauliLabel::Y:
      m << C(0), C(0, -1), C(0, 1), C(0);
      break;
    case PauliLabel::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

namespace {

template <typename A, typename B>
using KronType = Eigen::Matrix<typename A::Scalar,
                               int(A::RowsAtCompileTime) * int(B::RowsAtCompileTime),
                               int(A::ColsAtCompileTime) * int(B::ColsAtCompileTime)>;

template <typename A, typename B>
KronType<A, B> kron(const A& a, const B& b) {
  KronType<A, B> out;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

Eigen::Matrix4cd pauli_product_matrix(const PauliProduct& p) {
  return double(p.sign) * kron(pauli_matrix(p.first), pauli_matrix(p.second));
}

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = u(1, 1) = 1.0;
  u(2, 3) = u(3, 2) = 1.0;
  return u;
}

PauliProduct cnot_pauli_table(PauliLabel row, PauliLabel col) {
  const Eigen::Matrix4cd u = cnot_matrix();
  const Eigen::Matrix4cd conj =
      u * pauli_product_matrix({1, row, col}) * u.adjoint();
  for (PauliLabel a : kAllPaulis) {
    for (PauliLabel b : kAllPaulis) {
      const std::complex<double> c =
          (pauli_product_matrix({1, a, b}).adjoint() * conj).trace() / 4.0;
      if (std::abs(std::abs(c) - 1.0) < 1e-12) {
        if (std::abs(c.imag()) > 1e-12) {
          throw std::logic_error("cnot_pauli_table: non-Hermitian image");
        }
        return {c.real() > 0 ? 1 : -1, a, b};
      }
    }
  }
  throw std::logic_error("cnot_pauli_table: image is not a Pauli product");
}

const PauliTable& reference_cnot_table() {
  using P = PauliLabel;
  static const PauliTable table = {{
      {{{1, P::I, P::I}, {1, P::X, P::X}, {1, P::Y, P::X}, {1, P::Z, P::I}}},
      {{{1, P::I, P::X}, {1, P::X, P::I}, {1, P::Y, P::I}, {1, P::Z, P::X}}},
      {{{1, P::Z, P::Y}, {1, P::Y, P::Z}, {-1, P::X, P::Z}, {1, P::I, P::Y}}},
      {{{1, P::Z, P::Z}, {-1, P::Y, P::Y}, {1, P::X, P::Y}, {1, P::I, P::Z}}},
  }};
  return table;
}

std::vector<TableDiff> cnot_table_diffs() {
  std::vector<TableDiff> diffs;
  const PauliTable& ref = reference_cnot_table();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const PauliProduct computed = cnot_pauli_table(kAllPaulis[r], kAllPaulis[c]);
      if (!(computed == ref[r][c])) {
        diffs.push_back({kAllPaulis[r], kAllPaulis[c], computed, ref[r][c]});
      }
    }
  }
  return diffs;
}

Matrix8d ccnot_pauli_form() {
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d z;
  z << 1, 0, 0, -1;
  Eigen::Matrix2d x;
  x << 0, 1, 1, 0;
  const Eigen::Matrix2d up = id + z;    // 2|0><0|
  const Eigen::Matrix2d down = id - z;  // 2|1><1|
  const Matrix8d m = kron(kron(up, up), x) + kron(kron(up, down), id) +
                     kron(kron(down, up), id) + kron(kron(down, down), id);
  return m / 4.0;
}

Matrix8d toffoli_matrix() {
  Matrix8d m = Matrix8d::Identity();
  m(6, 6) = m(7, 7) = 0.0;
  m(6, 7) = m(7, 6) = 1.0;
  return m;
}

namespace {

int image_of(const Matrix8d& m, int input) {
  for (int r = 0; r < 8; ++r) {
    if (std::abs(m(r, input) - 1.0) < 1e-12 &&
        std::abs(m.col(input).squaredNorm() - 1.0) < 1e-12) {
      return r;
    }
  }
  return -1;
}

}  // namespace

std::vector<BasisDiff> ccnot_form_diffs() {
  const Matrix8d expansion = ccnot_pauli_form();
  const Matrix8d toffoli = toffoli_matrix();
  std::vector<BasisDiff> diffs;
  for (int i = 0; i < 8; ++i) {
    const int e = image_of(expansion, i);
    const int t = image_of(toffoli, i);
    if (e != t) diffs.push_back({i, e, t});
  }
  return diffs;
}

std::string basis_label(int index, int bits) {
  if (index < 0) return "(not a basis state)";
  std::string s = "|";
  for (int b = bits - 1; b >= 0; --b) s += ((index >> b) & 1) ? '1' : '0';
  return s + ">";
}

}  // namespace bqt
