#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>

#include <Eigen/Dense>

#include "qxopt/distribution.hpp"
#include "qxopt/error.hpp"
#include "qxopt/simulator.hpp"

namespace qxopt {

// Default tolerance on the total of a measured distribution; reference rows
// are rounded to three decimals.
inline constexpr double kDistributionTolerance = 0.005;

inline constexpr double kClassicalMerminBound = 2.0;
inline constexpr double kQuantumMerminBound = 4.0;

// Sum of P_i E_i with E_i = +1 for even-parity outcomes and -1 for odd ones.
inline double parity_expectation(const ProbabilityDistribution& p, double tol = kDistributionTolerance) {
  p.validate(tol);
  double e = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) e += (std::popcount(i) % 2 == 0 ? 1.0 : -1.0) * p[i];
  return e;
}

struct MerminValue {
  double m3 = 0.0;
  double violation = 0.0;  // m3 - classical bound
};

// <M3> = 3<XXY> - <YYY>, from distributions measured after the basis rotations.
inline MerminValue mermin3(const ProbabilityDistribution& xxy, const ProbabilityDistribution& yyy,
                           double tol = kDistributionTolerance) {
  if (xxy.num_qubits() != 3 || yyy.num_qubits() != 3) throw Error("mermin3 needs 3-qubit distributions");
  const double m3 = 3.0 * parity_expectation(xxy, tol) - parity_expectation(yyy, tol);
  return {m3, m3 - kClassicalMerminBound};
}

// Local-hidden-variable maximum of |XXY + XYX + YXX - YYY| over all 64
// deterministic +-1 assignments of X and Y to the three parties.
inline int lhv_bound() {
  int best = 0;
  for (unsigned bits = 0; bits < 64; ++bits) {
    std::array<int, 3> x{}, y{};
    for (int k = 0; k < 3; ++k) {
      x[k] = (bits >> (2 * k) & 1U) ? -1 : 1;
      y[k] = (bits >> (2 * k + 1) & 1U) ? -1 : 1;
    }
    const int term = x[0] * x[1] * y[2] + x[0] * y[1] * x[2] + y[0] * x[1] * x[2] - y[0] * y[1] * y[2];
    best = std::max(best, std::abs(term));
  }
  return best;
}

namespace detail {

// Hermitian square root with eigenvalues below zero clamped away.
inline CMatrix psd_sqrt(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace detail

// Hermitizes Re + i Im, clamps negative eigenvalues to zero and renormalizes the trace.
inline DensityMatrix sanitize(const Eigen::MatrixXd& raw_re, const Eigen::MatrixXd& raw_im) {
  if (raw_re.rows() != raw_re.cols() || raw_re.rows() != raw_im.rows() || raw_re.cols() != raw_im.cols())
    throw Error("sanitize needs square real and imaginary parts of equal size");
  CMatrix m(raw_re.rows(), raw_re.cols());
  m.real() = raw_re;
  m.imag() = raw_im;
  CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0);
  const double trace = vals.sum();
  if (!(trace > 0.0)) throw Error("matrix cannot be sanitized: trace is not positive after clamping");
  CMatrix rho = es.eigenvectors() * (vals / trace).asDiagonal() * es.eigenvectors().adjoint();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho));
}

inline DensityMatrix sanitize(const RawMatrix& raw) { return sanitize(raw.re, raw.im); }

// F = Tr sqrt( sqrt(rho1) rho2 sqrt(rho1) ), clamped to [0, 1].
inline double uhlmann_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim()) throw Error("fidelity: dimension mismatch");
  const CMatrix root1 = detail::psd_sqrt(rho1.matrix());
  CMatrix inner = root1 * rho2.matrix() * root1;
  inner = (0.5 * (inner + inner.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(inner, Eigen::EigenvaluesOnly);
  double f = 0.0;
  for (double v : es.eigenvalues()) f += std::sqrt(std::max(v, 0.0));
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace qxopt
