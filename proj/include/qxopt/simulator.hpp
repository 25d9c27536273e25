#pragma once

// Dense statevector, unitary and density-matrix simulation. Basis index bit q
// holds qubit q.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "qxopt/circuit.hpp"
#include "qxopt/distribution.hpp"
#include "qxopt/error.hpp"

namespace qxopt {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr std::size_t kMaxUnitaryQubits = 10;
inline constexpr std::size_t kMaxDensityQubits = 6;

inline Eigen::Matrix2cd gate_matrix(GateKind kind) {
  using namespace std::complex_literals;
  const double r = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd m;
  switch (kind) {
    case GateKind::H: m << r, r, r, -r; break;
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Y: m << 0, -1i, 1i, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    case GateKind::S: m << 1, 0, 0, 1i; break;
    case GateKind::Sdg: m << 1, 0, 0, -1i; break;
    case GateKind::T: m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4); break;
    case GateKind::Tdg: m << 1, 0, 0, std::polar(1.0, -std::numbers::pi / 4); break;
    case GateKind::CNOT: throw Error("cx has no single-qubit matrix");
  }
  return m;
}

namespace detail {

inline std::size_t dim_qubits(Eigen::Index dim) {
  std::size_t n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw Error("dimension " + std::to_string(dim) + " is not a power of two");
  return n;
}

// M <- G M, with G embedded on the gate's qubits.
inline void apply_left(CMatrix& m, const Gate& g) {
  const Eigen::Index dim = m.rows();
  if (g.kind() == GateKind::CNOT) {
    const Eigen::Index cbit = Eigen::Index{1} << g.control();
    const Eigen::Index tbit = Eigen::Index{1} << g.target();
    for (Eigen::Index i = 0; i < dim; ++i)
      if ((i & cbit) && !(i & tbit)) m.row(i).swap(m.row(i | tbit));
    return;
  }
  const Eigen::Matrix2cd u = gate_matrix(g.kind());
  const Eigen::Index bit = Eigen::Index{1} << g.qubit(0);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const Eigen::Index j = i | bit;
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      const cplx a = m(i, col), b = m(j, col);
      m(i, col) = u(0, 0) * a + u(0, 1) * b;
      m(j, col) = u(1, 0) * a + u(1, 1) * b;
    }
  }
}

// rho <- G rho G^dagger
inline void conjugate(CMatrix& rho, const Gate& g) {
  apply_left(rho, g);
  rho.adjointInPlace();
  apply_left(rho, g);
  rho.adjointInPlace();
}

}  // namespace detail

class StateVector {
public:
  static constexpr double kNormTolerance = 1e-10;

  explicit StateVector(CVector amplitudes) : amps_(std::move(amplitudes)) {
    num_qubits_ = detail::dim_qubits(amps_.size());
    if (std::abs(amps_.squaredNorm() - 1.0) > kNormTolerance) throw Error("state vector is not normalized");
  }

  static StateVector basis(std::size_t num_qubits, std::size_t index = 0) {
    if (num_qubits > kMaxUnitaryQubits) throw Error("too many qubits for a dense state vector");
    CVector v = CVector::Zero(Eigen::Index{1} << num_qubits);
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v));
  }

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const CVector& amplitudes() const noexcept { return amps_; }

private:
  CVector amps_;
  std::size_t num_qubits_ = 0;
};

class DensityMatrix {
public:
  static constexpr double kHermitianTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kEigenTolerance = 1e-8;

  // Throws unless the matrix is Hermitian, unit-trace and positive semidefinite.
  explicit DensityMatrix(CMatrix entries) : rho_(std::move(entries)) {
    if (rho_.rows() != rho_.cols()) throw Error("density matrix must be square");
    num_qubits_ = detail::dim_qubits(rho_.rows());
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance)
      throw Error("density matrix is not Hermitian");
    if (std::abs(rho_.trace() - cplx(1.0)) > kTraceTolerance) throw Error("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kEigenTolerance) throw Error("density matrix has a negative eigenvalue");
  }

  static DensityMatrix pure(const StateVector& psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
  }

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  Eigen::Index dim() const noexcept { return rho_.rows(); }
  const CMatrix& matrix() const noexcept { return rho_; }

private:
  CMatrix rho_;
  std::size_t num_qubits_ = 0;
};

struct NoiseSpec {
  double p1 = 0.001;  // single-qubit gates
  double p2 = 0.01;   // per participant of a two-qubit gate

  void validate() const {
    if (!(p1 >= 0.0 && p1 <= 1.0) || !(p2 >= 0.0 && p2 <= 1.0))
      throw Error("depolarizing probabilities must lie in [0, 1]");
  }
};

inline CMatrix unitary_of(const Circuit& c) {
  if (c.num_qubits() > kMaxUnitaryQubits)
    throw Error("unitary simulation limited to " + std::to_string(kMaxUnitaryQubits) + " qubits");
  const Eigen::Index dim = Eigen::Index{1} << c.num_qubits();
  CMatrix u = CMatrix::Identity(dim, dim);
  for (const Gate& g : c.gates()) detail::apply_left(u, g);
  return u;
}

// True iff b = e^{i phi} a entrywise within `tol`, phi taken from the first
// entry of `a` with non-negligible magnitude.
inline bool equal_up_to_phase(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix dimension mismatch");
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (std::abs(a(i, j)) < 1e-6) continue;
      if (std::abs(b(i, j)) < 1e-6) return false;
      const cplx phase = b(i, j) / a(i, j) / std::abs(b(i, j) / a(i, j));
      return (b - phase * a).cwiseAbs().maxCoeff() <= tol;
    }
  return b.cwiseAbs().maxCoeff() <= tol;
}

// Checks unitary_of(c2) == e^{i phi} P unitary_of(c1) P^dagger, where P maps
// logical qubit i of c1 to qubit placement[i] of c2. Qubits of c2 outside the
// image of the placement must be left untouched.
inline bool equivalent(const Circuit& c1, const Circuit& c2, std::span<const Qubit> placement, double tol) {
  if (placement.size() != c1.num_qubits() || c1.num_qubits() > c2.num_qubits())
    throw Error("dimension mismatch: placement of " + std::to_string(placement.size()) + " qubits between " +
                std::to_string(c1.num_qubits()) + "- and " + std::to_string(c2.num_qubits()) + "-qubit circuits");
  return equal_up_to_phase(unitary_of(relabel(c1, placement, c2.num_qubits())), unitary_of(c2), tol);
}

inline bool equivalent(const Circuit& c1, const Circuit& c2, double tol) {
  return equivalent(c1, c2, identity_placement(c1.num_qubits()), tol);
}

inline StateVector run_ideal(const Circuit& c, const StateVector& initial) {
  if (initial.num_qubits() != c.num_qubits())
    throw Error("dimension mismatch: " + std::to_string(c.num_qubits()) + "-qubit circuit on " +
                std::to_string(initial.num_qubits()) + "-qubit state");
  CMatrix v = initial.amplitudes();
  for (const Gate& g : c.gates()) detail::apply_left(v, g);
  CVector out = v.col(0);
  out /= out.norm();
  return StateVector(std::move(out));
}

inline StateVector run_ideal(const Circuit& c) { return run_ideal(c, StateVector::basis(c.num_qubits())); }

// rho <- (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z) on qubit q.
inline void depolarize(CMatrix& rho, Qubit q, double p) {
  if (p == 0.0) return;
  CMatrix mixed = CMatrix::Zero(rho.rows(), rho.cols());
  for (GateKind pauli : {GateKind::X, GateKind::Y, GateKind::Z}) {
    CMatrix term = rho;
    detail::conjugate(term, Gate::single(pauli, q));
    mixed += term;
  }
  rho = (1.0 - p) * rho + (p / 3.0) * mixed;
}

// Starts from |0...0><0...0|; after every gate each touched qubit is depolarized.
inline DensityMatrix run_noisy(const Circuit& c, const NoiseSpec& noise) {
  noise.validate();
  if (c.num_qubits() > kMaxDensityQubits)
    throw Error("density-matrix simulation limited to " + std::to_string(kMaxDensityQubits) + " qubits");
  const Eigen::Index dim = Eigen::Index{1} << c.num_qubits();
  CMatrix rho = CMatrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  for (const Gate& g : c.gates()) {
    detail::conjugate(rho, g);
    const double p = g.arity() == 1 ? noise.p1 : noise.p2;
    for (Qubit q : g.qubits()) depolarize(rho, q, p);
  }
  // Clears rounding drift so the invariant checks see an exactly Hermitian matrix.
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho));
}

inline ProbabilityDistribution measure_probs(const StateVector& psi) {
  std::vector<double> p(static_cast<std::size_t>(psi.amplitudes().size()));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(psi.amplitudes()(static_cast<Eigen::Index>(i)));
  return {psi.num_qubits(), std::move(p)};
}

inline ProbabilityDistribution measure_probs(const DensityMatrix& rho) {
  std::vector<double> p(static_cast<std::size_t>(rho.dim()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    p[i] = rho.matrix()(k, k).real();
  }
  return {rho.num_qubits(), std::move(p)};
}

// Raw (unvalidated) complex matrix in the `dm N` text format: header with the
// dimension N, then N*N row-major `re im` pairs.
struct RawMatrix {
  Eigen::MatrixXd re;
  Eigen::MatrixXd im;
};

inline RawMatrix parse_raw_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  long long n = 0;
  if (!(in >> tag >> n) || tag != "dm" || n <= 0) throw Error("expected 'dm N' header");
  detail::dim_qubits(static_cast<Eigen::Index>(n));
  RawMatrix m{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!(in >> m.re(i, j) >> m.im(i, j)))
        throw Error("density matrix: missing entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  std::string extra;
  if (in >> extra) throw Error("density matrix: trailing data '" + extra + "'");
  return m;
}

inline std::string format_matrix(const CMatrix& m) {
  std::ostringstream os;
  os.precision(12);
  os << "dm " << m.rows() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).real() << ' ' << m(i, j).imag();
    os << '\n';
  }
  return os.str();
}

}  // namespace qxopt
