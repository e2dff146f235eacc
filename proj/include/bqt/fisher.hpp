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

// Quantum Fisher information of one qubit, in four independent forms:
// Bloch vector, pure-state amplitudes, spectral decomposition and the
// vectorized Sylvester inverse. All kernels are templated on the real scalar.

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "bqt/bloch.hpp"

namespace bqt {

/// Above |s|^2 = 1 - kPureBranchBand the pure-state formula is used.
inline constexpr double kPureBranchBand = 1e-9;
/// Spectral terms with p_n + p_m at or below this are dropped.
inline constexpr double kSpectralCutoff = 1e-12;
/// Smallest eigenvalue the vectorized form accepts.
inline constexpr double kInvertibleEigenvalue = 1e-12;

/// F_ij = di.dj + (s.di)(s.dj) / (1 - |s|^2), or di.dj near the surface.
template <typename Scalar>
Scalar qfim_bloch_entry(const Bloch<Scalar>& s, const Bloch<Scalar>& di,
                        const Bloch<Scalar>& dj) {
  const Scalar tangential = di.dot(dj);
  const Scalar gap = Scalar(1) - s.squaredNorm();
  if (gap < Scalar(kPureBranchBand)) return tangential;
  return tangential + s.dot(di) * s.dot(dj) / gap;
}

template <typename Scalar>
Scalar qfi_bloch(const Bloch<Scalar>& s, const Bloch<Scalar>& ds) {
  return qfim_bloch_entry(s, ds, ds);
}

/// 4 (<dpsi|dpsi> - |<dpsi|psi>|^2) for a normalized curve psi.
template <typename Scalar>
Scalar qfi_pure(const Ket2<Scalar>& psi, const Ket2<Scalar>& dpsi) {
  return Scalar(4) * (dpsi.squaredNorm() - std::norm(dpsi.dot(psi)));
}

enum class QubitAngle { Theta, Phi };

template <typename Scalar = double>
Ket2<Scalar> pure_ket_derivative(const PureQubit& q, QubitAngle wrt) {
  using std::cos;
  using std::sin;
  const Scalar half = Scalar(q.theta.radians()) / 2;
  const std::complex<Scalar> phase = std::polar(Scalar(1), Scalar(q.phi.radians()));
  Ket2<Scalar> d;
  if (wrt == QubitAngle::Theta) {
    d << std::complex<Scalar>(-sin(half) / 2), phase * (cos(half) / 2);
  } else {
    d << std::complex<Scalar>(0), std::complex<Scalar>(0, 1) * phase * sin(half);
  }
  return d;
}

template <typename Scalar = double>
Scalar qfi_pure(const PureQubit& q, QubitAngle wrt) {
  return qfi_pure<Scalar>(pure_ket<Scalar>(q), pure_ket_derivative<Scalar>(q, wrt));
}

/// 2 sum_{p_m + p_n > cutoff} <m|di|n><n|dj|m> / (p_m + p_n).
template <typename Scalar>
Scalar qfim_spectral(const Density2<Scalar>& rho, const Density2<Scalar>& di,
                     const Density2<Scalar>& dj) {
  Eigen::SelfAdjointEigenSolver<Density2<Scalar>> es(rho);
  const auto& p = es.eigenvalues();
  const Density2<Scalar>& v = es.eigenvectors();
  const Density2<Scalar> ai = v.adjoint() * di * v;
  const Density2<Scalar> aj = v.adjoint() * dj * v;
  std::complex<Scalar> total(0);
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      const Scalar denom = p(m) + p(n);
      if (denom > Scalar(kSpectralCutoff)) total += ai(m, n) * aj(n, m) / denom;
    }
  }
  return Scalar(2) * total.real();
}

namespace detail {

template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 4, 1> vec(const Density2<Scalar>& m) {
  Eigen::Matrix<std::complex<Scalar>, 4, 1> v;
  v << m(0, 0), m(1, 0), m(0, 1), m(1, 1);  // column-stacked
  return v;
}

}  // namespace detail

/// 2 Vec[di]^dagger (rho^T (x) I + I (x) rho)^-1 Vec[dj]. Throws
/// std::domain_error when rho has an eigenvalue <= kInvertibleEigenvalue.
template <typename Scalar>
Scalar qfim_vectorized(const Density2<Scalar>& rho, const Density2<Scalar>& di,
                       const Density2<Scalar>& dj) {
  Eigen::SelfAdjointEigenSolver<Density2<Scalar>> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= Scalar(kInvertibleEigenvalue)) {
    throw std::domain_error("qfim_vectorized: density matrix is singular");
  }
  using M4 = Eigen::Matrix<std::complex<Scalar>, 4, 4>;
  const Density2<Scalar> id = Density2<Scalar>::Identity();
  M4 m = M4::Zero();
  const Density2<Scalar> rt = rho.transpose();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m.block(2 * i, 2 * j, 2, 2) += rt(i, j) * id;  // rho^T (x) I
      m.block(2 * i, 2 * j, 2, 2) += id(i, j) * rho;  // I (x) rho
    }
  }
  const Eigen::Matrix<std::complex<Scalar>, 4, 1> x = m.partialPivLu().solve(detail::vec(dj));
  return Scalar(2) * detail::vec(di).dot(x).real();
}

template <typename Scalar>
struct SldSolution {
  Density2<Scalar> L;
  bool unique = true;    // false when rho is rank-deficient
  Scalar residual = 0;   // ||drho - (L rho + rho L)/2||_F
};

/// Solves drho = (L rho + rho L)/2 in the eigenbasis of rho. On the kernel of
/// rho, L is unconstrained and set to zero (minimal Frobenius norm).
template <typename Scalar>
SldSolution<Scalar> sld_solve(const Density2<Scalar>& rho,
                              const Density2<Scalar>& drho) {
  Eigen::SelfAdjointEigenSolver<Density2<Scalar>> es(rho);
  const auto& p = es.eigenvalues();
  const Density2<Scalar>& v = es.eigenvectors();
  const Density2<Scalar> a = v.adjoint() * drho * v;
  Density2<Scalar> l = Density2<Scalar>::Zero();
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      const Scalar denom = p(m) + p(n);
      if (denom > Scalar(kSpectralCutoff)) l(m, n) = Scalar(2) * a(m, n) / denom;
    }
  }
  SldSolution<Scalar> out;
  out.L = v * l * v.adjoint();
  out.unique = p.minCoeff() > Scalar(kSpectralCutoff);
  out.residual = (drho - (out.L * rho + rho * out.L) / Scalar(2)).norm();
  return out;
}

}  // namespace bqt
