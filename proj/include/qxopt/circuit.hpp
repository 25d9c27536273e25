#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qxopt/error.hpp"

namespace qxopt {

using Qubit = std::uint32_t;

// Logical -> physical qubit injection; entry i is the physical image of logical qubit i.
using Placement = std::vector<Qubit>;

enum class GateKind : std::uint8_t { H, X, Y, Z, S, Sdg, T, Tdg, CNOT };

inline constexpr std::array<GateKind, 9> kAllGateKinds = {
    GateKind::H, GateKind::X,   GateKind::Y, GateKind::Z,   GateKind::S,
    GateKind::Sdg, GateKind::T, GateKind::Tdg, GateKind::CNOT};

constexpr std::size_t arity(GateKind kind) noexcept {
  return kind == GateKind::CNOT ? 2 : 1;
}

constexpr GateKind inverse_of(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::S: return GateKind::Sdg;
    case GateKind::Sdg: return GateKind::S;
    case GateKind::T: return GateKind::Tdg;
    case GateKind::Tdg: return GateKind::T;
    default: return kind;
  }
}

// Lower-case OpenQASM mnemonic.
constexpr std::string_view mnemonic(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::CNOT: return "cx";
  }
  return "?";
}

class Gate {
public:
  static Gate single(GateKind kind, Qubit q) {
    if (qxopt::arity(kind) != 1) throw Error("gate '" + std::string(mnemonic(kind)) + "' takes two qubits");
    return Gate(kind, q, q);
  }

  static Gate cnot(Qubit control, Qubit target) {
    if (control == target) throw Error("cx control and target must differ");
    return Gate(GateKind::CNOT, control, target);
  }

  static Gate make(GateKind kind, std::span<const Qubit> qubits) {
    if (qubits.size() != qxopt::arity(kind)) throw Error("wrong number of qubits for gate '" + std::string(mnemonic(kind)) + "'");
    return kind == GateKind::CNOT ? cnot(qubits[0], qubits[1]) : single(kind, qubits[0]);
  }

  GateKind kind() const noexcept { return kind_; }
  std::size_t arity() const noexcept { return qxopt::arity(kind_); }
  std::span<const Qubit> qubits() const noexcept { return {qubits_.data(), arity()}; }
  Qubit qubit(std::size_t i) const noexcept { return qubits_[i]; }
  Qubit control() const noexcept { return qubits_[0]; }
  Qubit target() const noexcept { return qubits_[1]; }

  bool touches(Qubit q) const noexcept {
    auto qs = qubits();
    return std::find(qs.begin(), qs.end(), q) != qs.end();
  }

  bool shares_qubit(const Gate& other) const noexcept {
    for (Qubit q : qubits())
      if (other.touches(q)) return true;
    return false;
  }

  bool same_qubits(const Gate& other) const noexcept {
    return arity() == other.arity() && std::equal(qubits().begin(), qubits().end(), other.qubits().begin());
  }

  friend bool operator==(const Gate& a, const Gate& b) noexcept {
    return a.kind_ == b.kind_ && a.same_qubits(b);
  }

  // Orders by kind, then by qubit list.
  friend bool operator<(const Gate& a, const Gate& b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return std::lexicographical_compare(a.qubits().begin(), a.qubits().end(), b.qubits().begin(), b.qubits().end());
  }

private:
  Gate(GateKind kind, Qubit a, Qubit b) : kind_(kind), qubits_{a, b} {}

  GateKind kind_;
  std::array<Qubit, 2> qubits_;
};

inline std::ostream& operator<<(std::ostream& os, const Gate& g) {
  os << mnemonic(g.kind());
  const char* sep = " ";
  for (Qubit q : g.qubits()) {
    os << sep << q;
    sep = ",";
  }
  return os;
}

struct CostReport {
  std::size_t gates = 0;
  std::size_t levels = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
  friend auto operator<=>(const CostReport&, const CostReport&) = default;
};

// Ordered list of Clifford+T gates over qubits [0, num_qubits).
class Circuit {
public:
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) throw Error("circuit must have at least one qubit");
  }

  Circuit(std::size_t num_qubits, std::vector<Gate> gates) : Circuit(num_qubits) {
    gates_.reserve(gates.size());
    for (const Gate& g : gates) push_back(g);
  }

  void push_back(const Gate& g) {
    for (Qubit q : g.qubits())
      if (q >= num_qubits_)
        throw Error("qubit index " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                    "-qubit circuit");
    gates_.push_back(g);
  }

  void append(const Circuit& other) {
    for (const Gate& g : other.gates()) push_back(g);
  }

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

inline std::size_t gate_count(const Circuit& c) noexcept { return c.size(); }

// Depth under as-soon-as-possible scheduling.
inline std::size_t level_count(const Circuit& c) {
  std::vector<std::size_t> wire(c.num_qubits(), 0);
  std::size_t depth = 0;
  for (const Gate& g : c.gates()) {
    std::size_t level = 0;
    for (Qubit q : g.qubits()) level = std::max(level, wire[q]);
    ++level;
    for (Qubit q : g.qubits()) wire[q] = level;
    depth = std::max(depth, level);
  }
  return depth;
}

inline CostReport cost(const Circuit& c) { return {gate_count(c), level_count(c)}; }

inline void validate_placement(std::span<const Qubit> placement, std::size_t logical_width,
                               std::size_t physical_width) {
  if (placement.size() != logical_width)
    throw Error("placement has " + std::to_string(placement.size()) + " entries, circuit has " +
                std::to_string(logical_width) + " qubits");
  std::vector<bool> used(physical_width, false);
  for (Qubit p : placement) {
    if (p >= physical_width)
      throw Error("placement target " + std::to_string(p) + " out of range for " + std::to_string(physical_width) +
                  " qubits");
    if (used[p]) throw Error("placement is not injective: physical qubit " + std::to_string(p) + " used twice");
    used[p] = true;
  }
}

// Rewrites every qubit index through `placement` onto a circuit of `target_width` qubits.
inline Circuit relabel(const Circuit& c, std::span<const Qubit> placement, std::size_t target_width) {
  validate_placement(placement, c.num_qubits(), target_width);
  Circuit out(target_width);
  for (const Gate& g : c.gates()) {
    if (g.arity() == 1)
      out.push_back(Gate::single(g.kind(), placement[g.qubit(0)]));
    else
      out.push_back(Gate::cnot(placement[g.control()], placement[g.target()]));
  }
  return out;
}

inline Circuit relabel(const Circuit& c, std::span<const Qubit> placement) {
  return relabel(c, placement, c.num_qubits());
}

inline Placement identity_placement(std::size_t n) {
  Placement p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Qubit>(i);
  return p;
}

inline Placement inverse_placement(std::span<const Qubit> placement) {
  validate_placement(placement, placement.size(), placement.size());
  Placement inv(placement.size());
  for (std::size_t i = 0; i < placement.size(); ++i) inv[placement[i]] = static_cast<Qubit>(i);
  return inv;
}

inline std::string format_placement(std::span<const Qubit> placement) {
  std::string s = "{";
  for (std::size_t i = 0; i < placement.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(i) + "->Q" + std::to_string(placement[i]);
  }
  return s + "}";
}

}  // namespace qxopt
