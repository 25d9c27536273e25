#pragma once

// Independent dense-matrix oracle: every gate is expanded to a full 2^n x 2^n
// matrix through explicit Kronecker products and multiplied out. Shares no
// code with the simulator's in-place index arithmetic.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qxopt/circuit.hpp"

namespace oracle {

using M = Eigen::MatrixXcd;
using namespace std::complex_literals;

inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline M mat2(std::complex<double> a, std::complex<double> b, std::complex<double> c, std::complex<double> d) {
  M m(2, 2);
  m << a, b, c, d;
  return m;
}

inline M single(qxopt::GateKind k) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::complex<double> w = std::exp(1i * (M_PI / 4));
  switch (k) {
    case qxopt::GateKind::H: return mat2(r, r, r, -r);
    case qxopt::GateKind::X: return mat2(0, 1, 1, 0);
    case qxopt::GateKind::Y: return mat2(0, -1i, 1i, 0);
    case qxopt::GateKind::Z: return mat2(1, 0, 0, -1);
    case qxopt::GateKind::S: return mat2(1, 0, 0, 1i);
    case qxopt::GateKind::Sdg: return mat2(1, 0, 0, -1i);
    case qxopt::GateKind::T: return mat2(1, 0, 0, w);
    case qxopt::GateKind::Tdg: return mat2(1, 0, 0, std::conj(w));
    default: break;
  }
  return M();
}

// Tensor product over qubits n-1 ... 0 (qubit 0 is the least-significant bit).
inline M embed(std::size_t n, const std::vector<std::pair<qxopt::Qubit, M>>& factors) {
  M out = M::Identity(1, 1);
  for (std::size_t k = n; k-- > 0;) {
    M f = M::Identity(2, 2);
    for (const auto& [q, m] : factors)
      if (q == k) f = m;
    out = kron(out, f);
  }
  return out;
}

inline M gate(std::size_t n, const qxopt::Gate& g) {
  if (g.kind() != qxopt::GateKind::CNOT) return embed(n, {{g.qubit(0), single(g.kind())}});
  const M p0 = mat2(1, 0, 0, 0), p1 = mat2(0, 0, 0, 1);
  return embed(n, {{g.control(), p0}}) + embed(n, {{g.control(), p1}, {g.target(), single(qxopt::GateKind::X)}});
}

inline M unitary(const qxopt::Circuit& c) {
  const auto dim = Eigen::Index{1} << c.num_qubits();
  M u = M::Identity(dim, dim);
  for (const auto& g : c.gates()) u = gate(c.num_qubits(), g) * u;
  return u;
}

// Permutation matrix sending qubit i to qubit perm[i].
inline M permutation(const qxopt::Placement& perm) {
  const std::size_t n = perm.size();
  const auto dim = Eigen::Index{1} << n;
  M p = M::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    Eigen::Index y = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (x >> i & 1) y |= Eigen::Index{1} << perm[i];
    p(y, x) = 1.0;
  }
  return p;
}

// max |b - e^{i phi} a| with phi fitted on the largest entry of a.
inline double phase_distance(const M& a, const M& b) {
  Eigen::Index bi = 0, bj = 0;
  a.cwiseAbs().maxCoeff(&bi, &bj);
  std::complex<double> ph = b(bi, bj) / a(bi, bj);
  if (std::abs(ph) < 1e-12) return (b - a).cwiseAbs().maxCoeff() + 1.0;
  ph /= std::abs(ph);
  return (b - ph * a).cwiseAbs().maxCoeff();
}

}  // namespace oracle
