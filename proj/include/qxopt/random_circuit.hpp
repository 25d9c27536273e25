#pragma once

#include <random>

#include "qxopt/circuit.hpp"

namespace qxopt {

// Uniformly random Clifford+T circuit; CNOT is drawn with the same weight as
// each single-qubit kind when num_qubits > 1.
inline Circuit random_circuit(std::size_t num_qubits, std::size_t num_gates, std::mt19937_64& rng) {
  Circuit c(num_qubits);
  const std::size_t kinds = num_qubits > 1 ? kAllGateKinds.size() : kAllGateKinds.size() - 1;
  std::uniform_int_distribution<std::size_t> pick_kind(0, kinds - 1);
  std::uniform_int_distribution<Qubit> pick_qubit(0, static_cast<Qubit>(num_qubits - 1));
  for (std::size_t i = 0; i < num_gates; ++i) {
    GateKind k = kAllGateKinds[pick_kind(rng)];
    if (k == GateKind::CNOT) {
      Qubit a = pick_qubit(rng), b = pick_qubit(rng);
      while (b == a) b = pick_qubit(rng);
      c.push_back(Gate::cnot(a, b));
    } else {
      c.push_back(Gate::single(k, pick_qubit(rng)));
    }
  }
  return c;
}

}  // namespace qxopt
