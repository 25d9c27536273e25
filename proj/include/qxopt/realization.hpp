#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "qxopt/circuit.hpp"
#include "qxopt/peephole.hpp"
#include "qxopt/qasm.hpp"
#include "qxopt/topology.hpp"

namespace qxopt {

struct RealizationEntry {
  Qubit control = 0;
  Qubit target = 0;
  Circuit sequence{1};  // over all physical qubits of the graph
  std::size_t total_gates = 0;
  std::size_t levels = 0;
};

namespace detail {

// CNOT between adjacent qubits; a missing direction is fixed with Hadamards.
inline void append_adjacent_cnot(Circuit& out, const CouplingGraph& g, Qubit c, Qubit t) {
  if (g.allows(c, t)) {
    out.push_back(Gate::cnot(c, t));
    return;
  }
  if (!g.allows(t, c)) throw Error("qubits " + std::to_string(c) + " and " + std::to_string(t) + " are not adjacent");
  const Qubit lo = std::min(c, t), hi = std::max(c, t);
  for (Qubit q : {lo, hi}) out.push_back(Gate::single(GateKind::H, q));
  out.push_back(Gate::cnot(t, c));
  for (Qubit q : {lo, hi}) out.push_back(Gate::single(GateKind::H, q));
}

// SWAP as three alternating CNOTs, outer pair along a native direction.
inline void append_swap(Circuit& out, const CouplingGraph& g, Qubit a, Qubit b) {
  if (!g.allows(a, b)) std::swap(a, b);
  append_adjacent_cnot(out, g, a, b);
  append_adjacent_cnot(out, g, b, a);
  append_adjacent_cnot(out, g, a, b);
}

// CNOT(c, t) through a middle qubit m adjacent to both; m is restored.
inline void append_bridge(Circuit& out, const CouplingGraph& g, Qubit c, Qubit m, Qubit t, bool middle_first) {
  for (int k = 0; k < 4; ++k) {
    bool control_step = (k % 2 == 0) != middle_first;
    if (control_step)
      append_adjacent_cnot(out, g, c, m);
    else
      append_adjacent_cnot(out, g, m, t);
  }
}

// Moves the control `lead` hops forward and the target `trail` hops backward
// along `path`, applies `core`, and undoes the swaps.
template <typename Core>
Circuit swap_wrapped(const CouplingGraph& g, const std::vector<Qubit>& path, std::size_t lead, std::size_t trail,
                     Core&& core) {
  Circuit out(g.num_physical());
  std::vector<std::pair<Qubit, Qubit>> swaps;
  for (std::size_t i = 0; i < lead; ++i) swaps.emplace_back(path[i], path[i + 1]);
  const std::size_t last = path.size() - 1;
  for (std::size_t i = 0; i < trail; ++i) swaps.emplace_back(path[last - i], path[last - i - 1]);
  for (auto [a, b] : swaps) append_swap(out, g, a, b);
  core(out, path[lead], path[last - trail]);
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) append_swap(out, g, it->first, it->second);
  return out;
}

// Total order for candidate selection: gates, levels, then gate sequence.
inline bool better_candidate(const Circuit& a, const Circuit& b) {
  const CostReport ca = cost(a), cb = cost(b);
  if (ca != cb) return ca < cb;
  return std::lexicographical_compare(a.gates().begin(), a.gates().end(), b.gates().begin(), b.gates().end());
}

}  // namespace detail

// Every shortest path, every split of swap moves between the two endpoints,
// finished either by an adjacent CNOT or by a four-CNOT bridge over a middle
// qubit. Each candidate is simplified before comparison.
inline std::vector<Circuit> realization_candidates(const CouplingGraph& g, Qubit c, Qubit t) {
  std::vector<Circuit> out;
  for (const auto& path : g.shortest_paths(c, t)) {
    const std::size_t hops = path.size() - 1;
    for (std::size_t lead = 0; lead + 1 <= hops; ++lead) {
      std::size_t trail = hops - 1 - lead;
      out.push_back(simplify(detail::swap_wrapped(
          g, path, lead, trail, [&](Circuit& cir, Qubit a, Qubit b) { detail::append_adjacent_cnot(cir, g, a, b); })));
    }
    if (hops < 2) continue;
    for (std::size_t lead = 0; lead + 2 <= hops; ++lead) {
      std::size_t trail = hops - 2 - lead;
      for (bool middle_first : {false, true}) {
        out.push_back(simplify(detail::swap_wrapped(g, path, lead, trail, [&](Circuit& cir, Qubit a, Qubit b) {
          detail::append_bridge(cir, g, a, path[lead + 1], b, middle_first);
        })));
      }
    }
  }
  return out;
}

// Cheapest known CNOT(c, t) realization for every ordered pair of a coupling graph.
class RealizationTable {
public:
  explicit RealizationTable(CouplingGraph graph) : graph_(std::move(graph)) {
    if (!graph_.connected()) throw Error("cannot build a realization table for a disconnected coupling graph");
    const std::size_t n = graph_.num_physical();
    entries_.resize(n * n);
    for (Qubit c = 0; c < n; ++c)
      for (Qubit t = 0; t < n; ++t) {
        if (c == t) continue;
        auto candidates = realization_candidates(graph_, c, t);
        auto best = std::min_element(candidates.begin(), candidates.end(), detail::better_candidate);
        RealizationEntry& e = entries_[c * n + t];
        e.control = c;
        e.target = t;
        e.sequence = std::move(*best);
        e.total_gates = gate_count(e.sequence);
        e.levels = level_count(e.sequence);
      }
  }

  const CouplingGraph& graph() const noexcept { return graph_; }

  const RealizationEntry& lookup(Qubit control, Qubit target) const {
    const std::size_t n = graph_.num_physical();
    if (control >= n || target >= n)
      throw Error("pair (" + std::to_string(control) + "," + std::to_string(target) + ") out of range for " +
                  std::to_string(n) + " physical qubits");
    if (control == target) throw Error("CNOT control and target must differ");
    return entries_[control * n + target];
  }

  // All entries in (control, target) order.
  std::vector<const RealizationEntry*> entries() const {
    std::vector<const RealizationEntry*> out;
    const std::size_t n = graph_.num_physical();
    for (Qubit c = 0; c < n; ++c)
      for (Qubit t = 0; t < n; ++t)
        if (c != t) out.push_back(&entries_[c * n + t]);
    return out;
  }

private:
  CouplingGraph graph_;
  std::vector<RealizationEntry> entries_;
};

inline RealizationTable build_table(const CouplingGraph& g) { return RealizationTable(g); }

// Human-readable dump: one QASM fragment per ordered pair with its cost.
inline std::string dump_table(const RealizationTable& table) {
  std::ostringstream os;
  os << "// realization table, " << table.graph().num_physical() << " physical qubits\n";
  for (const RealizationEntry* e : table.entries()) {
    os << "// CNOT(Q" << e->control << ",Q" << e->target << "): " << e->total_gates << " gates, " << e->levels
       << " levels\n";
    for (const Gate& gate : e->sequence.gates()) {
      os << mnemonic(gate.kind()) << ' ';
      const char* sep = "";
      for (Qubit q : gate.qubits()) {
        os << sep << "q[" << q << "]";
        sep = ",";
      }
      os << ";\n";
    }
  }
  return os.str();
}

}  // namespace qxopt
