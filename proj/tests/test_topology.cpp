#include <gtest/gtest.h>

#include "qxopt/io.hpp"
#include "qxopt/topology.hpp"

using namespace qxopt;

TEST(Builtin, Qx2) {
  CouplingGraph g = builtin("qx2");
  EXPECT_EQ(g.num_physical(), 5u);
  EXPECT_EQ(g.edges().size(), 6u);
  EXPECT_TRUE(g.allows(0, 1));
  EXPECT_FALSE(g.allows(1, 0));
  EXPECT_FALSE(g.allows(1, 4));
  for (auto [c, t] : std::vector<CouplingGraph::Edge>{{0, 1}, {0, 2}, {1, 2}, {4, 2}, {4, 3}, {3, 2}})
    EXPECT_TRUE(g.allows(c, t));
}

TEST(Builtin, Qx4) {
  CouplingGraph g = builtin("qx4");
  EXPECT_EQ(g.num_physical(), 5u);
  EXPECT_EQ(g.edges().size(), 6u);
  EXPECT_TRUE(g.allows(1, 0));
  EXPECT_FALSE(g.allows(0, 1));
  for (auto [c, t] : std::vector<CouplingGraph::Edge>{{3, 4}, {3, 2}, {2, 4}, {2, 0}, {2, 1}, {1, 0}})
    EXPECT_TRUE(g.allows(c, t));
}

TEST(Builtin, UnknownName) { EXPECT_THROW(builtin("qx9"), Error); }

TEST(Allows, MembershipOnly) {
  for (const char* name : {"qx2", "qx4"}) {
    CouplingGraph g = builtin(name);
    std::size_t count = 0;
    for (Qubit c = 0; c < 5; ++c)
      for (Qubit t = 0; t < 5; ++t) count += g.allows(c, t);
    EXPECT_EQ(count, 6u);
  }
  EXPECT_THROW(builtin("qx2").allows(0, 5), Error);
}

TEST(Load, Examples) {
  CouplingGraph g = load_coupling_graph("qubits 2\n0 1");
  EXPECT_EQ(g.num_physical(), 2u);
  EXPECT_EQ(g.edges().size(), 1u);
  EXPECT_THROW(load_coupling_graph("qubits 3\n0 1"), Error);
  EXPECT_EQ(load_coupling_graph("qubits 5\n3 4\n3 2\n2 4\n2 0\n2 1\n1 0\n"), builtin("qx4"));
  EXPECT_EQ(load_coupling_graph(read_file(std::string(QXOPT_DATA_DIR) + "/qx4.graph")), builtin("qx4"));
}

TEST(Load, Errors) {
  EXPECT_THROW(load_coupling_graph("qubits 2\n1 1"), Error);
  EXPECT_THROW(load_coupling_graph("qubits 2\n0 x"), Error);
  EXPECT_THROW(load_coupling_graph("qubits 2\n0 1 2"), Error);
  EXPECT_THROW(load_coupling_graph("qubits 2\n0 2"), Error);
  EXPECT_THROW(load_coupling_graph("qubits 2\n0 1\n0 1"), Error);
  EXPECT_THROW(load_coupling_graph("0 1"), Error);
  EXPECT_THROW(load_coupling_graph(""), Error);
}

TEST(Load, DumpRoundTrip) {
  for (const char* name : {"qx2", "qx4"}) EXPECT_EQ(load_coupling_graph(dump_coupling_graph(builtin(name))), builtin(name));
}

TEST(Distance, UndirectedAdjacency) {
  CouplingGraph g = builtin("qx2");
  EXPECT_EQ(g.distance(1, 0), 1u);
  EXPECT_EQ(g.distance(1, 4), 2u);
  EXPECT_EQ(g.distance(0, 3), 2u);
  EXPECT_TRUE(g.connected());
  auto paths = g.shortest_paths(1, 4);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], (std::vector<Qubit>{1, 2, 4}));
  EXPECT_EQ(builtin("qx4").shortest_paths(0, 3).size(), 1u);
  EXPECT_EQ(g.shortest_paths(0, 0), (std::vector<std::vector<Qubit>>{{0}}));
}
