#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qxopt/circuit.hpp"
#include "qxopt/error.hpp"

namespace qxopt {

// Directed graph of natively executable CNOTs; an edge (c, t) allows CNOT(c, t).
class CouplingGraph {
public:
  using Edge = std::pair<Qubit, Qubit>;

  CouplingGraph(std::size_t num_physical, const std::vector<Edge>& edges) : n_(num_physical), allowed_(n_ * n_, false) {
    if (n_ == 0) throw Error("coupling graph needs at least one qubit");
    for (auto [c, t] : edges) {
      if (c >= n_ || t >= n_)
        throw Error("edge " + std::to_string(c) + "->" + std::to_string(t) + " out of range for " +
                    std::to_string(n_) + " qubits");
      if (c == t) throw Error("self-loop on qubit " + std::to_string(c));
      if (allowed_[c * n_ + t]) throw Error("duplicate edge " + std::to_string(c) + "->" + std::to_string(t));
      allowed_[c * n_ + t] = true;
      edges_.emplace_back(c, t);
    }
    std::sort(edges_.begin(), edges_.end());
    compute_distances();
  }

  std::size_t num_physical() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool allows(Qubit control, Qubit target) const {
    check_index(control);
    check_index(target);
    return allowed_[control * n_ + target];
  }

  // Undirected adjacency: either direction present.
  bool adjacent(Qubit a, Qubit b) const { return allows(a, b) || allows(b, a); }

  static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

  // Undirected hop distance.
  std::size_t distance(Qubit a, Qubit b) const {
    check_index(a);
    check_index(b);
    return dist_[a * n_ + b];
  }

  bool connected() const {
    return std::none_of(dist_.begin(), dist_.end(), [](std::size_t d) { return d == kUnreachable; });
  }

  std::vector<Qubit> neighbours(Qubit a) const {
    std::vector<Qubit> out;
    for (Qubit b = 0; b < n_; ++b)
      if (b != a && adjacent(a, b)) out.push_back(b);
    return out;
  }

  // Every shortest undirected path from a to b, endpoints included, in lexicographic order.
  std::vector<std::vector<Qubit>> shortest_paths(Qubit a, Qubit b) const {
    std::vector<std::vector<Qubit>> out;
    if (distance(a, b) == kUnreachable) return out;
    std::vector<Qubit> path{a};
    collect_paths(a, b, path, out);
    return out;
  }

  friend bool operator==(const CouplingGraph& x, const CouplingGraph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

private:
  void check_index(Qubit q) const {
    if (q >= n_) throw Error("physical qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
  }

  void compute_distances() {
    dist_.assign(n_ * n_, kUnreachable);
    for (Qubit s = 0; s < n_; ++s) {
      std::queue<Qubit> frontier;
      dist_[s * n_ + s] = 0;
      frontier.push(s);
      while (!frontier.empty()) {
        Qubit u = frontier.front();
        frontier.pop();
        for (Qubit v = 0; v < n_; ++v) {
          if (u == v || !(allowed_[u * n_ + v] || allowed_[v * n_ + u])) continue;
          if (dist_[s * n_ + v] != kUnreachable) continue;
          dist_[s * n_ + v] = dist_[s * n_ + u] + 1;
          frontier.push(v);
        }
      }
    }
  }

  void collect_paths(Qubit at, Qubit goal, std::vector<Qubit>& path, std::vector<std::vector<Qubit>>& out) const {
    if (at == goal) {
      out.push_back(path);
      return;
    }
    for (Qubit next : neighbours(at)) {
      if (dist_[next * n_ + goal] + 1 != dist_[at * n_ + goal]) continue;
      path.push_back(next);
      collect_paths(next, goal, path, out);
      path.pop_back();
    }
  }

  std::size_t n_;
  std::vector<bool> allowed_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> dist_;
};

inline CouplingGraph builtin(std::string_view name) {
  if (name == "qx2") return CouplingGraph(5, {{0, 1}, {0, 2}, {1, 2}, {4, 2}, {4, 3}, {3, 2}});
  if (name == "qx4") return CouplingGraph(5, {{3, 4}, {3, 2}, {2, 4}, {2, 0}, {2, 1}, {1, 0}});
  throw Error("unknown architecture '" + std::string(name) + "' (expected qx2 or qx4)");
}

// Text format: a `qubits N` header, then one `control target` pair per line.
// Blank lines and lines starting with '#' are ignored.
inline CouplingGraph load_coupling_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<CouplingGraph::Edge> edges;
  auto fail = [&](const std::string& why) -> void {
    throw Error("coupling graph line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!n) {
      std::string word;
      long long count = 0;
      if (!(fields >> word >> count) || word != "qubits" || count <= 0) fail("expected 'qubits N' header");
      std::string extra;
      if (fields >> extra) fail("trailing tokens after header");
      n = static_cast<std::size_t>(count);
      continue;
    }
    long long c = -1, t = -1;
    std::string extra;
    if (!(fields >> c >> t) || (fields >> extra)) fail("malformed edge line '" + line + "'");
    if (c < 0 || t < 0 || static_cast<std::size_t>(c) >= *n || static_cast<std::size_t>(t) >= *n)
      fail("edge endpoint out of range");
    if (c == t) fail("self-loop on qubit " + std::to_string(c));
    edges.emplace_back(static_cast<Qubit>(c), static_cast<Qubit>(t));
  }
  if (!n) throw Error("coupling graph: missing 'qubits N' header");
  CouplingGraph g(*n, edges);
  if (!g.connected()) {
    for (Qubit q = 0; q < g.num_physical(); ++q)
      if (g.distance(0, q) == CouplingGraph::kUnreachable)
        throw Error("coupling graph is disconnected (qubit " + std::to_string(q) + " unreachable from qubit 0)");
  }
  return g;
}

inline std::string dump_coupling_graph(const CouplingGraph& g) {
  std::string s = "qubits " + std::to_string(g.num_physical()) + "\n";
  for (auto [c, t] : g.edges()) s += std::to_string(c) + " " + std::to_string(t) + "\n";
  return s;
}

}  // namespace qxopt
