#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

#include "qxopt/circuit.hpp"
#include "qxopt/peephole.hpp"
#include "qxopt/realization.hpp"

namespace qxopt {

inline constexpr std::size_t kDefaultSearchLimit = 8;

struct Reduction {
  std::int64_t gates_pct = 0;
  std::int64_t levels_pct = 0;
};

// round(100 * (initial - final) / initial), halves rounded up; 0 when initial is 0.
inline std::int64_t reduction_pct(std::size_t initial, std::size_t final_value) {
  if (initial == 0) return 0;
  const auto i = static_cast<std::int64_t>(initial);
  const auto f = static_cast<std::int64_t>(final_value);
  const std::int64_t num = 200 * (i - f) + i;
  const std::int64_t den = 2 * i;
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;  // floor division
  return q;
}

inline Reduction reduction(const CostReport& initial, const CostReport& final_cost) {
  return {reduction_pct(initial.gates, final_cost.gates), reduction_pct(initial.levels, final_cost.levels)};
}

struct MappingResult {
  Placement placement;
  Circuit mapped{1};
  CostReport initial_cost;
  CostReport final_cost;
  Reduction reduction_pct;
};

// Relabels through `placement` and replaces every CNOT by its table entry, without simplification.
inline Circuit substitute(const Circuit& c, std::span<const Qubit> placement, const RealizationTable& table) {
  const std::size_t n = table.graph().num_physical();
  Circuit physical = relabel(c, placement, n);
  Circuit out(n);
  for (const Gate& g : physical.gates()) {
    if (g.kind() == GateKind::CNOT)
      out.append(table.lookup(g.control(), g.target()).sequence);
    else
      out.push_back(g);
  }
  return out;
}

inline Circuit map_circuit(const Circuit& c, std::span<const Qubit> placement, const RealizationTable& table) {
  return simplify(substitute(c, placement, table));
}

inline CostReport cost_of(const Circuit& c, std::span<const Qubit> placement, const RealizationTable& table) {
  return cost(map_circuit(c, placement, table));
}

// Calls visit(placement) for every injection of k logical into n physical
// qubits, in lexicographic order.
template <typename Visit>
void for_each_injection(std::size_t k, std::size_t n, Visit&& visit) {
  Placement current(k);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      visit(static_cast<const Placement&>(current));
      return;
    }
    for (Qubit p = 0; p < n; ++p) {
      if (used[p]) continue;
      used[p] = true;
      current[depth] = p;
      self(self, depth + 1);
      used[p] = false;
    }
  };
  rec(rec, 0);
}

// Exhaustive placement search; ties go to fewer levels, then the
// lexicographically smallest placement.
inline MappingResult optimize(const Circuit& c, const RealizationTable& table,
                              std::size_t search_limit = kDefaultSearchLimit) {
  const std::size_t n = table.graph().num_physical();
  if (n > search_limit)
    throw Error("exhaustive placement search is limited to " + std::to_string(search_limit) +
                " physical qubits; device has " + std::to_string(n));
  if (c.num_qubits() > n)
    throw Error("circuit uses " + std::to_string(c.num_qubits()) + " qubits but the device has only " +
                std::to_string(n));

  std::optional<MappingResult> best;
  for_each_injection(c.num_qubits(), n, [&](const Placement& placement) {
    Circuit mapped = map_circuit(c, placement, table);
    CostReport cr = cost(mapped);
    if (best && !(cr < best->final_cost)) return;
    best = MappingResult{placement, std::move(mapped), {}, cr, {}};
  });
  best->initial_cost = cost(c);
  best->reduction_pct = reduction(best->initial_cost, best->final_cost);
  return std::move(*best);
}

inline MappingResult optimize(const Circuit& c, const CouplingGraph& g,
                              std::size_t search_limit = kDefaultSearchLimit) {
  if (g.num_physical() > search_limit)
    throw Error("exhaustive placement search is limited to " + std::to_string(search_limit) +
                " physical qubits; device has " + std::to_string(g.num_physical()));
  return optimize(c, build_table(g), search_limit);
}

inline bool architecture_legal(const Circuit& c, const CouplingGraph& g) {
  if (c.num_qubits() > g.num_physical()) return false;
  return std::all_of(c.gates().begin(), c.gates().end(), [&](const Gate& gate) {
    return gate.kind() != GateKind::CNOT || g.allows(gate.control(), gate.target());
  });
}

}  // namespace qxopt
