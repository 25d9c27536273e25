#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qxopt/placement.hpp"
#include "qxopt/random_circuit.hpp"

using namespace qxopt;

namespace {

const RealizationTable& table(const char* name) {
  static const RealizationTable qx2(builtin("qx2")), qx4(builtin("qx4"));
  return std::string_view(name) == "qx2" ? qx2 : qx4;
}

Circuit two_cnot_chain() { return Circuit(3, {Gate::cnot(0, 1), Gate::cnot(1, 2)}); }

}  // namespace

TEST(ReductionPct, RoundsHalfUp) {
  EXPECT_EQ(reduction_pct(12, 4), 67);
  EXPECT_EQ(reduction_pct(7, 2), 71);
  EXPECT_EQ(reduction_pct(7, 3), 57);
  EXPECT_EQ(reduction_pct(7, 8), -14);
  EXPECT_EQ(reduction_pct(8, 7), 13);   // 12.5 -> 13
  EXPECT_EQ(reduction_pct(8, 9), -12);  // -12.5 -> -12
  EXPECT_EQ(reduction_pct(0, 0), 0);
  EXPECT_EQ(reduction_pct(5, 0), 100);
}

TEST(Optimize, ChainOnQx2) {
  MappingResult r = optimize(two_cnot_chain(), table("qx2"));
  EXPECT_EQ(r.placement, (Placement{0, 1, 2}));
  EXPECT_EQ(r.final_cost.gates, 2u);
  EXPECT_EQ(r.final_cost.levels, 2u);
  EXPECT_EQ(r.reduction_pct.gates_pct, 0);
}

TEST(Optimize, ChainOnQx4AlternativePlacementTies) {
  MappingResult r = optimize(two_cnot_chain(), table("qx4"));
  EXPECT_EQ(r.final_cost.gates, 2u);
  Placement alternative = {3, 2, 0};
  EXPECT_EQ(cost_of(two_cnot_chain(), alternative, table("qx4")).gates, 2u);
  // Ties resolve to the lexicographically smallest placement.
  EXPECT_EQ(r.placement, (Placement{2, 1, 0}));
}

TEST(Optimize, SingleGate) {
  MappingResult r = optimize(Circuit(1, {Gate::single(GateKind::H, 0)}), table("qx2"));
  EXPECT_EQ(r.final_cost, (CostReport{1, 1}));
  EXPECT_EQ(r.reduction_pct.gates_pct, 0);
  EXPECT_EQ(r.placement, (Placement{0}));
}

TEST(Optimize, EmptyCircuit) {
  MappingResult r = optimize(Circuit(2), table("qx2"));
  EXPECT_EQ(r.final_cost, (CostReport{0, 0}));
  EXPECT_EQ(r.reduction_pct.gates_pct, 0);
}

TEST(Optimize, AdversarialPlacementCostsMore) {
  Placement bad = {1, 4, 0};
  EXPECT_GE(cost_of(two_cnot_chain(), bad, table("qx2")).gates, 11u);
}

TEST(Optimize, Errors) {
  EXPECT_THROW(optimize(Circuit(6), table("qx2")), Error);
  CouplingGraph big(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
  EXPECT_THROW(optimize(Circuit(2), big), Error);
  EXPECT_NO_THROW(optimize(Circuit(2), big, 9));
  EXPECT_THROW(optimize(Circuit(2), table("qx2"), 4), Error);
}

TEST(Injections, CountAndOrder) {
  std::vector<Placement> seen;
  for_each_injection(2, 3, [&](const Placement& p) { seen.push_back(p); });
  std::vector<Placement> expected = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  EXPECT_EQ(seen, expected);
  std::size_t count = 0;
  for_each_injection(3, 5, [&](const Placement&) { ++count; });
  EXPECT_EQ(count, 60u);
}

TEST(Substitute, LeavesSingleQubitGatesAndExpandsCnots) {
  Circuit c(2, {Gate::single(GateKind::T, 0), Gate::cnot(1, 0)});
  Placement p = {0, 1};
  Circuit s = substitute(c, p, table("qx2"));
  EXPECT_EQ(s.num_qubits(), 5u);
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(s.gates().front(), Gate::single(GateKind::T, 0));
}

TEST(OptimizeProperties, RandomCircuits) {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 40; ++iter) {
    const char* arch = iter % 2 ? "qx4" : "qx2";
    const RealizationTable& t = table(arch);
    const std::size_t k = 1 + iter % 3;
    Circuit c = random_circuit(k, 8, rng);
    MappingResult r = optimize(c, t);
    EXPECT_TRUE(architecture_legal(r.mapped, t.graph()));
    EXPECT_EQ(cost(r.mapped), r.final_cost);
    // mapped unitary equals the placed input, via the Kronecker oracle
    oracle::M placed = oracle::unitary(relabel(c, r.placement, 5));
    EXPECT_LT(oracle::phase_distance(placed, oracle::unitary(r.mapped)), 1e-9);
    // nothing beats the chosen placement
    for_each_injection(k, 5, [&](const Placement& p) { EXPECT_LE(r.final_cost, cost_of(c, p, t)); });
    EXPECT_EQ(optimize(c, t).placement, r.placement);
  }
}
