#pragma once

#include <string>
#include <vector>

#include "qxopt/peephole.hpp"
#include "qxopt/realization.hpp"
#include "qxopt/simulator.hpp"

namespace qxopt {

// Names of rewrite rules whose pattern and replacement differ beyond a global phase.
inline std::vector<std::string> unsound_rewrite_rules(double tol = 1e-12) {
  std::vector<std::string> bad;
  for (const RewriteRule& r : kRewriteRules) {
    const std::size_t width = arity(r.first);
    const Placement qs = identity_placement(width);
    Circuit pattern(width, {Gate::make(r.first, qs), Gate::make(r.second, qs)});
    Circuit replacement(width);
    if (r.replacement) replacement.push_back(Gate::make(*r.replacement, qs));
    if (!equivalent(pattern, replacement, tol)) bad.emplace_back(r.name);
  }
  return bad;
}

// Ordered pairs whose stored sequence is not the embedded CNOT or uses a non-native CNOT.
inline std::vector<std::pair<Qubit, Qubit>> unsound_table_entries(const RealizationTable& table, double tol = 1e-9) {
  std::vector<std::pair<Qubit, Qubit>> bad;
  const std::size_t n = table.graph().num_physical();
  for (const RealizationEntry* e : table.entries()) {
    Circuit reference(n, {Gate::cnot(e->control, e->target)});
    bool legal = true;
    for (const Gate& g : e->sequence.gates())
      if (g.kind() == GateKind::CNOT && !table.graph().allows(g.control(), g.target())) legal = false;
    if (!legal || !equivalent(reference, e->sequence, tol)) bad.emplace_back(e->control, e->target);
  }
  return bad;
}

}  // namespace qxopt
