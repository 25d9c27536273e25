#include <random>

#include <gtest/gtest.h>

#include "qxopt/io.hpp"
#include "qxopt/nonclassicality.hpp"
#include "qxopt/qasm.hpp"
#include "qxopt/random_circuit.hpp"

using namespace qxopt;

namespace {

std::string data(const std::string& file) { return read_file(std::string(QXOPT_DATA_DIR) + "/" + file); }
ProbabilityDistribution dist(const std::string& file) { return parse_distribution(data(file)); }

ProbabilityDistribution point(std::size_t index) {
  std::vector<double> p(8, 0.0);
  p[index] = 1.0;
  return {3, p};
}

DensityMatrix pure_basis(std::size_t index) { return DensityMatrix::pure(StateVector::basis(3, index)); }

}  // namespace

TEST(Parity, Examples) {
  EXPECT_NEAR(parity_expectation({3, std::vector<double>(8, 0.125)}), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(parity_expectation(point(0)), 1.0);
  EXPECT_DOUBLE_EQ(parity_expectation(point(1)), -1.0);
  EXPECT_DOUBLE_EQ(parity_expectation(point(7)), -1.0);
  EXPECT_NEAR(parity_expectation(dist("measured_xxy_8192.dist")), 0.760, 5e-4);
  std::vector<double> bad(8, 0.0);
  bad[0] = 0.9;
  EXPECT_THROW(parity_expectation({3, bad}), Error);
}

TEST(Mermin, MeasuredRows) {
  struct Row {
    const char* xxy;
    const char* yyy;
    double m3;
  };
  for (const Row& r : {Row{"measured_xxy_1024.dist", "measured_yyy_1024.dist", 2.855},
                       Row{"measured_xxy_8192.dist", "measured_yyy_8192.dist", 3.009},
                       Row{"measured_xxy_opt_8192.dist", "measured_yyy_opt_8192.dist", 3.126}}) {
    MerminValue v = mermin3(dist(r.xxy), dist(r.yyy));
    EXPECT_NEAR(v.m3, r.m3, 5e-4) << r.xxy;
    EXPECT_NEAR(v.violation, r.m3 - kClassicalMerminBound, 1e-12);
  }
}

TEST(Mermin, IdealFixturesReachQuantumBound) {
  Circuit xxy = qasm::parse(data("mermin_xxy.qasm"));
  Circuit yyy = qasm::parse(data("mermin_yyy.qasm"));
  MerminValue v = mermin3(measure_probs(run_ideal(xxy)), measure_probs(run_ideal(yyy)));
  EXPECT_NEAR(v.m3, kQuantumMerminBound, 1e-12);
  Circuit xxy_opt = qasm::parse(data("mermin_xxy_opt.qasm"));
  Circuit yyy_opt = qasm::parse(data("mermin_yyy_opt.qasm"));
  EXPECT_NEAR(mermin3(measure_probs(run_ideal(xxy_opt)), measure_probs(run_ideal(yyy_opt))).m3, 4.0, 1e-12);
  // noise only lowers the value, and it stays above the classical bound
  MerminValue noisy = mermin3(measure_probs(run_noisy(xxy, {})), measure_probs(run_noisy(yyy, {})));
  EXPECT_LT(noisy.m3, 4.0);
  EXPECT_GT(noisy.m3, kClassicalMerminBound);
}

TEST(Mermin, WidthChecked) {
  ProbabilityDistribution two(2, {1.0, 0.0, 0.0, 0.0});
  EXPECT_THROW(mermin3(two, point(0)), Error);
}

TEST(Mermin, LocalHiddenVariableBound) { EXPECT_EQ(lhv_bound(), 2); }

TEST(Fidelity, Examples) {
  EXPECT_NEAR(uhlmann_fidelity(pure_basis(0), pure_basis(0)), 1.0, 1e-12);
  EXPECT_NEAR(uhlmann_fidelity(pure_basis(0), pure_basis(5)), 0.0, 1e-7);
  DensityMatrix mixed(CMatrix::Identity(8, 8) / 8.0);
  EXPECT_NEAR(uhlmann_fidelity(mixed, pure_basis(3)), std::sqrt(1.0 / 8), 1e-12);
  EXPECT_NEAR(uhlmann_fidelity(mixed, mixed), 1.0, 1e-12);
  EXPECT_THROW(uhlmann_fidelity(mixed, DensityMatrix::pure(StateVector::basis(2))), Error);
}

TEST(Fidelity, PureStatesGiveOverlapModulus) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 20; ++iter) {
    Circuit a = random_circuit(3, 12, rng), b = random_circuit(3, 12, rng);
    StateVector pa = run_ideal(a), pb = run_ideal(b);
    const double overlap = std::abs(pa.amplitudes().dot(pb.amplitudes()));
    const double f = uhlmann_fidelity(DensityMatrix::pure(pa), DensityMatrix::pure(pb));
    EXPECT_NEAR(f, overlap, 1e-6);
  }
}

TEST(Fidelity, SymmetricAndBounded) {
  std::mt19937_64 rng(6);
  for (int iter = 0; iter < 20; ++iter) {
    DensityMatrix a = run_noisy(random_circuit(3, 10, rng), {0.05, 0.1});
    DensityMatrix b = run_noisy(random_circuit(3, 10, rng), {0.05, 0.1});
    const double fab = uhlmann_fidelity(a, b), fba = uhlmann_fidelity(b, a);
    EXPECT_NEAR(fab, fba, 1e-8);
    EXPECT_GE(fab, 0.0);
    EXPECT_LE(fab, 1.0);
  }
}

TEST(Sanitize, Examples) {
  DensityMatrix pure = pure_basis(6);
  DensityMatrix s = sanitize(pure.matrix().real(), pure.matrix().imag());
  EXPECT_LT((s.matrix() - pure.matrix()).cwiseAbs().maxCoeff(), 1e-12);

  RawMatrix raw = parse_raw_matrix(data("rho_exp_original.dm"));
  EXPECT_NE(raw.im(5, 5), 0.0);  // the measured matrix carries a stray imaginary diagonal entry
  DensityMatrix clean = sanitize(raw);
  EXPECT_LT(clean.matrix().diagonal().imag().cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(clean.matrix().trace().real(), 1.0, 1e-12);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(clean.matrix());
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12);

  Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(2, 2);
  EXPECT_THROW(sanitize(zero, zero), Error);
  EXPECT_THROW(sanitize(Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd::Zero(4, 4)), Error);
}

TEST(Sanitize, ReferenceMatricesInRange) {
  DensityMatrix ideal = sanitize(parse_raw_matrix(data("rho_ideal_xxy.dm")));
  for (const char* f : {"rho_exp_original.dm", "rho_exp_optimized.dm"}) {
    const double fid = uhlmann_fidelity(ideal, sanitize(parse_raw_matrix(data(f))));
    EXPECT_GT(fid, 0.5) << f;
    EXPECT_LE(fid, 1.0) << f;
  }
}
