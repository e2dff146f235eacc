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

// One-qubit states: angle parametrizations, Bloch vectors and 2x2 density
// matrices, plus the two comparison metrics used throughout the library.
//
// Bloch convention
// ----------------
// The y component of every BlochVector in this library is the NEGATED
// expectation of sigma_y:
//
//     s = (<sigma_x>, -<sigma_y>, <sigma_z>)
//     rho = 1/2 (I + x sigma_x - y sigma_y + z sigma_z)
//
// so that the pure state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> maps to
//
//     s = (sin(theta) cos(phi), -sin(theta) sin(phi), cos(theta)).
//
// Density matrices are always the physical ones; only the y label of the
// Bloch vector is reflected. The reflection is orthogonal, so every Bloch-form
// quantity (purity, fidelity, Fisher information) is unaffected by it.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bqt {

/// |s| may exceed 1 by this much before a Bloch vector is rejected.
inline constexpr double kPhysicalityTol = 1e-10;
/// Hermiticity / trace / PSD tolerance for density matrices.
inline constexpr double kCompareTol = 1e-12;

/// An angle in radians. Any finite value is accepted; formulas rely on
/// trigonometric periodicity instead of range reduction.
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(radians) {
    if (!std::isfinite(radians)) {
      throw std::invalid_argument("Angle: value must be finite");
    }
  }
  constexpr double radians() const { return value_; }

 private:
  double value_ = 0.0;
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
struct PureQubit {
  Angle theta;
  Angle phi;

  PureQubit() = default;
  PureQubit(Angle polar, Angle phase) : theta(polar), phi(phase) {}
  explicit PureQubit(double polar, double phase = 0.0)
      : theta(polar), phi(phase) {}
};

/// Trigger qubit cos(t/2)|0> + sin(t/2)|1>, always with zero phase.
struct TriggerSpec {
  Angle theta;

  TriggerSpec() = default;
  explicit TriggerSpec(Angle polar) : theta(polar) {}
  explicit TriggerSpec(double polar) : theta(polar) {}
};

template <typename Scalar>
using Bloch = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Density2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <typename Scalar>
using Ket2 = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

using BlochVector = Bloch<double>;
using DensityMatrix2 = Density2<double>;
using Ket = Ket2<double>;

namespace pauli {

template <typename Scalar = double>
Density2<Scalar> x() {
  Density2<Scalar> m;
  m << 0, 1, 1, 0;
  return m;
}

template <typename Scalar = double>
Density2<Scalar> y() {
  using C = std::complex<Scalar>;
  Density2<Scalar> m;
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

template <typename Scalar = double>
Density2<Scalar> z() {
  Density2<Scalar> m;
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace pauli

template <typename Scalar = double>
Ket2<Scalar> pure_ket(const PureQubit& q) {
  using std::cos;
  using std::sin;
  const Scalar half = Scalar(q.theta.radians()) / 2;
  const Scalar phase = Scalar(q.phi.radians());
  Ket2<Scalar> k;
  k << std::complex<Scalar>(cos(half), 0),
      std::polar(Scalar(1), phase) * sin(half);
  return k;
}

template <typename Scalar = double>
Ket2<Scalar> trigger_ket(const TriggerSpec& t) {
  return pure_ket<Scalar>(PureQubit(t.theta, Angle(0.0)));
}

inline BlochVector pure_to_bloch(const PureQubit& q) {
  const double th = q.theta.radians();
  const double ph = q.phi.radians();
  return {std::sin(th) * std::cos(ph), -std::sin(th) * std::sin(ph),
          std::cos(th)};
}

inline BlochVector trigger_bloch(const TriggerSpec& t) {
  return pure_to_bloch(PureQubit(t.theta, Angle(0.0)));
}

template <typename Scalar>
Density2<Scalar> maximally_mixed() {
  return Density2<Scalar>::Identity() / Scalar(2);
}

/// Maps a Bloch vector to its density matrix without the physicality check.
/// Also used for derivatives, where d rho = 1/2 (dx sx - dy sy + dz sz).
template <typename Derived>
Density2<typename Derived::Scalar> bloch_to_operator(
    const Eigen::MatrixBase<Derived>& s, typename Derived::Scalar identity) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  using C = std::complex<Scalar>;
  Density2<Scalar> m;
  m << C(identity + s(2), 0), C(s(0), s(1)), C(s(0), -s(1)),
      C(identity - s(2), 0);
  return m / Scalar(2);
}

template <typename Derived>
Density2<typename Derived::Scalar> bloch_to_density(
    const Eigen::MatrixBase<Derived>& s) {
  using Scalar = typename Derived::Scalar;
  if (s.norm() > Scalar(1) + Scalar(kPhysicalityTol)) {
    throw std::domain_error("bloch_to_density: |s| = " +
                            std::to_string(double(s.norm())) +
                            " exceeds 1 (unphysical state)");
  }
  return bloch_to_operator(s, Scalar(1));
}

/// Throws unless rho is Hermitian with unit trace (tolerance kCompareTol
/// scaled by the matrix magnitude).
template <typename Scalar>
void require_density(const Density2<Scalar>& rho, const char* where) {
  const Scalar tol = Scalar(kCompareTol) * std::max(Scalar(1), rho.norm());
  if ((rho - rho.adjoint()).norm() > tol) {
    throw std::domain_error(std::string(where) + ": matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - std::complex<Scalar>(1)) > tol) {
    throw std::domain_error(std::string(where) + ": trace differs from 1");
  }
}

template <typename Scalar>
Bloch<Scalar> density_to_bloch(const Density2<Scalar>& rho) {
  require_density(rho, "density_to_bloch");
  const std::complex<Scalar> off = (rho(0, 1) + std::conj(rho(1, 0))) / Scalar(2);
  return {Scalar(2) * off.real(), Scalar(2) * off.imag(),
          (rho(0, 0) - rho(1, 1)).real()};
}

template <typename Scalar>
Scalar purity(const Density2<Scalar>& rho) {
  return (rho * rho).trace().real();
}

/// <psi| rho |psi>, clamped to [0, 1] against rounding.
template <typename Scalar>
Scalar state_fidelity(const Density2<Scalar>& rho, const PureQubit& psi) {
  const Ket2<Scalar> k = pure_ket<Scalar>(psi);
  const Scalar f = (k.adjoint() * rho * k)(0, 0).real();
  return std::clamp(f, Scalar(0), Scalar(1));
}

/// Half the trace norm of the difference.
template <typename Scalar>
Scalar trace_distance(const Density2<Scalar>& a, const Density2<Scalar>& b) {
  const Density2<Scalar> diff = a - b;
  const Density2<Scalar> herm = (diff + diff.adjoint()) / Scalar(2);
  Eigen::SelfAdjointEigenSolver<Density2<Scalar>> es(herm,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum() / Scalar(2);
}

/// Mixture w * rho + (1 - w) * I/2.
template <typename Scalar>
Density2<Scalar> depolarize(const Density2<Scalar>& rho, Scalar w) {
  return w * rho + (Scalar(1) - w) * maximally_mixed<Scalar>();
}

}  // namespace bqt
