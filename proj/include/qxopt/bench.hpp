#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qxopt/circuit.hpp"
#include "qxopt/io.hpp"
#include "qxopt/placement.hpp"
#include "qxopt/qasm.hpp"
#include "qxopt/realization.hpp"
#include "qxopt/simulator.hpp"

namespace qxopt {

inline constexpr std::size_t kMaxVerifiedWidth = 5;
inline constexpr double kVerifyTolerance = 1e-8;

struct BenchRow {
  std::string name;
  std::size_t qubits = 0;
  CostReport initial;
  CostReport final_cost;
  Reduction reduction;
  Placement placement;
  bool verified = false;
  std::optional<std::string> error;
};

struct BenchOptions {
  bool strict = false;
  std::size_t search_limit = kDefaultSearchLimit;
};

// Closed-loop check: the mapped circuit survives emit/parse unchanged, uses
// only native CNOTs and matches the input under its placement.
inline bool verify_mapping(const Circuit& input, const MappingResult& result, const CouplingGraph& g) {
  if (result.mapped.num_qubits() > kMaxVerifiedWidth) return false;
  Circuit reparsed = qasm::parse(qasm::emit(result.mapped));
  return reparsed == result.mapped && architecture_legal(reparsed, g) &&
         equivalent(input, reparsed, result.placement, kVerifyTolerance);
}

inline BenchRow bench_circuit(std::string name, const Circuit& c, const RealizationTable& table,
                              const BenchOptions& options = {}) {
  MappingResult r = optimize(c, table, options.search_limit);
  BenchRow row;
  row.name = std::move(name);
  row.qubits = c.num_qubits();
  row.initial = r.initial_cost;
  row.final_cost = r.final_cost;
  row.reduction = r.reduction_pct;
  row.placement = r.placement;
  row.verified = verify_mapping(c, r, table.graph());
  return row;
}

// Rows with larger gate reduction first, then larger level reduction, then by name; failed rows last.
inline void sort_rows(std::vector<BenchRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.error.has_value() != b.error.has_value()) return !a.error.has_value();
    if (!a.error) {
      if (a.reduction.gates_pct != b.reduction.gates_pct) return a.reduction.gates_pct > b.reduction.gates_pct;
      if (a.reduction.levels_pct != b.reduction.levels_pct) return a.reduction.levels_pct > b.reduction.levels_pct;
    }
    return a.name < b.name;
  });
}

// One row per *.qasm file in `dir`; a file that cannot be read or parsed
// yields an error row and the run continues.
inline std::vector<BenchRow> bench(const std::filesystem::path& dir, const CouplingGraph& g,
                                   const BenchOptions& options = {}) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".qasm") files.push_back(entry.path());
  if (files.empty()) throw Error("no .qasm files in " + dir.string());
  std::sort(files.begin(), files.end());

  const RealizationTable table = build_table(g);
  std::vector<BenchRow> rows;
  for (const auto& path : files) {
    std::string name = path.stem().string();
    try {
      Circuit c = qasm::parse(read_file(path), {options.strict});
      rows.push_back(bench_circuit(name, c, table, options));
    } catch (const Error& e) {
      BenchRow row;
      row.name = name;
      row.error = e.what();
      rows.push_back(std::move(row));
    }
  }
  sort_rows(rows);
  return rows;
}

inline std::string format_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "name,qubits,gates_in,levels_in,gates_out,levels_out,gates_pct,levels_pct,verified\n";
  for (const BenchRow& r : rows) {
    if (r.error) {
      os << r.name << ",,,,,,,,error\n";
      continue;
    }
    os << r.name << ',' << r.qubits << ',' << r.initial.gates << ',' << r.initial.levels << ',' << r.final_cost.gates
       << ',' << r.final_cost.levels << ',' << r.reduction.gates_pct << ',' << r.reduction.levels_pct << ','
       << (r.verified ? "true" : "false") << '\n';
  }
  return os.str();
}

inline std::string format_markdown(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "| Circuit | Qubits | Initial gates | Initial levels | Final gates | Final levels | % Reduction gates | "
        "% Reduction levels | Verified |\n";
  os << "|---|---|---|---|---|---|---|---|---|\n";
  for (const BenchRow& r : rows) {
    if (r.error) {
      os << "| " << r.name << " | | | | | | | | error: " << *r.error << " |\n";
      continue;
    }
    os << "| " << r.name << " | " << r.qubits << " | " << r.initial.gates << " | " << r.initial.levels << " | "
       << r.final_cost.gates << " | " << r.final_cost.levels << " | " << r.reduction.gates_pct << " | "
       << r.reduction.levels_pct << " | " << (r.verified ? "yes" : "NO") << " |\n";
  }
  return os.str();
}

}  // namespace qxopt
