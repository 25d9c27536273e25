#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qxopt/circuit.hpp"

namespace qxopt {

// Two gates on the same qubit list, with nothing but disjoint-support gates
// between them, are replaced by `replacement` (or removed if it is empty).
struct RewriteRule {
  std::string_view name;
  GateKind first;
  GateKind second;
  std::optional<GateKind> replacement;
};

inline constexpr std::array<RewriteRule, 13> kRewriteRules = {{
    {"cancel-h", GateKind::H, GateKind::H, std::nullopt},
    {"cancel-x", GateKind::X, GateKind::X, std::nullopt},
    {"cancel-y", GateKind::Y, GateKind::Y, std::nullopt},
    {"cancel-z", GateKind::Z, GateKind::Z, std::nullopt},
    {"cancel-s-sdg", GateKind::S, GateKind::Sdg, std::nullopt},
    {"cancel-sdg-s", GateKind::Sdg, GateKind::S, std::nullopt},
    {"cancel-t-tdg", GateKind::T, GateKind::Tdg, std::nullopt},
    {"cancel-tdg-t", GateKind::Tdg, GateKind::T, std::nullopt},
    {"cancel-cx", GateKind::CNOT, GateKind::CNOT, std::nullopt},
    {"merge-t-t", GateKind::T, GateKind::T, GateKind::S},
    {"merge-tdg-tdg", GateKind::Tdg, GateKind::Tdg, GateKind::Sdg},
    {"merge-s-s", GateKind::S, GateKind::S, GateKind::Z},
    {"merge-sdg-sdg", GateKind::Sdg, GateKind::Sdg, GateKind::Z},
}};

struct RewriteEvent {
  std::string_view rule;
  // Index, in the partially simplified output, of the earlier gate of the pair.
  std::size_t position;
};

using RewriteTrace = std::function<void(const RewriteEvent&)>;

inline const RewriteRule* match_rule(const Gate& earlier, const Gate& later) {
  if (!earlier.same_qubits(later)) return nullptr;
  for (const RewriteRule& r : kRewriteRules)
    if (r.first == earlier.kind() && r.second == later.kind()) return &r;
  return nullptr;
}

// Rewrites to a fixpoint. Gates stream into the output; each incoming gate is
// paired with the latest output gate sharing any of its qubits, and a firing
// rule removes that gate and feeds the replacement (if any) back in. A merged
// gate therefore lands after gates that act on disjoint qubits, which leaves
// the unitary and the level count unchanged.
inline Circuit simplify(const Circuit& c, const RewriteTrace& trace = {}) {
  std::vector<std::optional<Gate>> out;
  out.reserve(c.size());
  std::vector<std::vector<std::size_t>> wire(c.num_qubits());

  auto live_index = [&](std::size_t slot) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < slot; ++i) n += out[i].has_value();
    return n;
  };

  for (const Gate& incoming : c.gates()) {
    std::optional<Gate> pending = incoming;
    while (pending) {
      Gate g = *pending;
      pending.reset();
      std::optional<std::size_t> pred;
      for (Qubit q : g.qubits())
        if (!wire[q].empty() && (!pred || wire[q].back() > *pred)) pred = wire[q].back();
      const RewriteRule* rule = pred ? match_rule(*out[*pred], g) : nullptr;
      if (!rule) {
        for (Qubit q : g.qubits()) wire[q].push_back(out.size());
        out.push_back(g);
        continue;
      }
      if (trace) trace({rule->name, live_index(*pred)});
      for (Qubit q : g.qubits()) wire[q].pop_back();
      out[*pred].reset();
      if (rule->replacement) pending = Gate::single(*rule->replacement, g.qubit(0));
    }
  }

  Circuit result(c.num_qubits());
  for (const auto& g : out)
    if (g) result.push_back(*g);
  return result;
}

}  // namespace qxopt
