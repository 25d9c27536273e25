#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qxopt/error.hpp"

namespace qxopt {

// Computational-basis outcome probabilities. Index i is the basis state with
// qubit 0 as the least-significant bit; labels are printed most-significant first.
class ProbabilityDistribution {
public:
  ProbabilityDistribution(std::size_t num_qubits, std::vector<double> probs)
      : num_qubits_(num_qubits), probs_(std::move(probs)) {
    if (num_qubits_ == 0 || num_qubits_ > 20) throw Error("distribution width must be in [1, 20]");
    if (probs_.size() != (std::size_t{1} << num_qubits_))
      throw Error("distribution over " + std::to_string(num_qubits_) + " qubits needs " +
                  std::to_string(std::size_t{1} << num_qubits_) + " entries");
  }

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_.at(i); }
  const std::vector<double>& probs() const noexcept { return probs_; }

  double total() const {
    double s = 0.0;
    for (double p : probs_) s += p;
    return s;
  }

  // Throws unless every entry lies in [0, 1] and the total is 1 within `tol`.
  void validate(double tol) const {
    for (std::size_t i = 0; i < probs_.size(); ++i)
      if (!(probs_[i] >= 0.0 && probs_[i] <= 1.0))
        throw Error("probability for " + label(i) + " outside [0, 1]");
    if (std::abs(total() - 1.0) > tol)
      throw Error("probabilities sum to " + std::to_string(total()) + ", expected 1 within " + std::to_string(tol));
  }

  std::string label(std::size_t index) const {
    std::string s(num_qubits_, '0');
    for (std::size_t b = 0; b < num_qubits_; ++b)
      if (index >> b & 1U) s[num_qubits_ - 1 - b] = '1';
    return s;
  }

private:
  std::size_t num_qubits_;
  std::vector<double> probs_;
};

// One `bitstring value` pair per line; '#' starts a comment. Missing outcomes are 0.
inline ProbabilityDistribution parse_distribution(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<std::string, double>> entries;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string bits, extra;
    double value = 0.0;
    if (!(fields >> bits)) continue;
    if (!(fields >> value) || (fields >> extra))
      throw Error("distribution line " + std::to_string(lineno) + ": expected 'bitstring value'");
    if (bits.find_first_not_of("01") != std::string::npos)
      throw Error("distribution line " + std::to_string(lineno) + ": bad bitstring '" + bits + "'");
    if (!entries.empty() && bits.size() != entries.front().first.size())
      throw Error("distribution line " + std::to_string(lineno) + ": inconsistent bitstring width");
    entries.emplace_back(bits, value);
  }
  if (entries.empty()) throw Error("empty distribution");
  std::size_t n = entries.front().first.size();
  if (n == 0 || n > 20) throw Error("distribution width must be in [1, 20]");
  std::vector<double> probs(std::size_t{1} << n, 0.0);
  std::vector<bool> seen(probs.size(), false);
  for (const auto& [bits, value] : entries) {
    std::size_t index = std::stoul(bits, nullptr, 2);
    if (seen[index]) throw Error("duplicate outcome " + bits);
    seen[index] = true;
    probs[index] = value;
  }
  return {n, std::move(probs)};
}

inline std::string format_distribution(const ProbabilityDistribution& p) {
  std::ostringstream os;
  os.precision(12);
  for (std::size_t i = 0; i < p.size(); ++i) os << p.label(i) << ' ' << p[i] << '\n';
  return os.str();
}

}  // namespace qxopt
