// qxopt command-line front end.
//
// Exit status: 0 success, 1 usage or input error, 2 verification failure.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qxopt/qxopt.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;

qxopt::CouplingGraph load_arch(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') return qxopt::load_coupling_graph(qxopt::read_file(spec.substr(1)));
  return qxopt::builtin(spec);
}

qxopt::Circuit load_circuit(const std::string& path, bool strict) {
  auto result = qxopt::qasm::parse_with_report(qxopt::read_file(path), {strict});
  for (const auto& w : result.warnings) std::cerr << path << ":" << qxopt::qasm::format(w) << " (warning)\n";
  return std::move(result.circuit);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw qxopt::Error("cannot write " + path);
}

qxopt::Placement parse_placement(const std::string& text) {
  qxopt::Placement p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      p.push_back(static_cast<qxopt::Qubit>(std::stoul(item)));
    } catch (const std::exception&) {
      throw qxopt::Error("bad placement entry '" + item + "'");
    }
  }
  return p;
}

std::string placement_list(const qxopt::Placement& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

struct Options {
  std::string arch = "qx4";
  std::uint64_t seed = 1;
  bool strict = false;
  std::size_t limit = qxopt::kDefaultSearchLimit;

  std::string in, out, report, against, placement;
  bool trace = false;
  std::size_t random = 0;

  std::string dir, format = "csv";
  bool keep_going = false;

  std::string xxy, yyy, a, b;
};

int cmd_optimize(const Options& o) {
  const auto graph = load_arch(o.arch);
  const auto c = load_circuit(o.in, o.strict);
  const auto table = qxopt::build_table(graph);
  const auto r = qxopt::optimize(c, table, o.limit);
  const bool verified = qxopt::verify_mapping(c, r, graph);
  const std::string qasm_text = qxopt::qasm::emit(r.mapped, {"placement " + placement_list(r.placement)});
  if (!o.out.empty())
    write_text(o.out, qasm_text);
  else if (o.report.empty())
    std::cout << qasm_text;

  if (o.report == "json") {
    nlohmann::ordered_json j;
    j["input"] = o.in;
    j["qubits"] = c.num_qubits();
    j["placement"] = r.placement;
    j["initial"] = {{"gates", r.initial_cost.gates}, {"levels", r.initial_cost.levels}};
    j["final"] = {{"gates", r.final_cost.gates}, {"levels", r.final_cost.levels}};
    j["reduction_pct"] = {{"gates", r.reduction_pct.gates_pct}, {"levels", r.reduction_pct.levels_pct}};
    j["verified"] = verified;
    std::cout << j.dump(2) << '\n';
  } else if (o.report == "csv") {
    qxopt::BenchRow row{o.in, c.num_qubits(), r.initial_cost, r.final_cost, r.reduction_pct, r.placement, verified,
                        std::nullopt};
    std::cout << qxopt::format_csv({row});
  }
  if (r.mapped.num_qubits() <= qxopt::kMaxVerifiedWidth && !verified) {
    std::cerr << "verification failed\n";
    return kExitVerify;
  }
  return kExitOk;
}

int cmd_simplify(const Options& o) {
  const auto c = load_circuit(o.in, o.strict);
  qxopt::RewriteTrace trace;
  if (o.trace) trace = [](const qxopt::RewriteEvent& e) { std::cerr << e.rule << " at " << e.position << '\n'; };
  const auto s = qxopt::simplify(c, trace);
  const std::string text = qxopt::qasm::emit(s);
  if (o.out.empty())
    std::cout << text;
  else
    write_text(o.out, text);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  if (o.random > 0) {
    const auto graph = load_arch(o.arch);
    const auto table = qxopt::build_table(graph);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> width(3, std::min<std::size_t>(5, graph.num_physical()));
    std::uniform_int_distribution<std::size_t> length(0, 25);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < o.random; ++i) {
      const auto c = qxopt::random_circuit(width(rng), length(rng), rng);
      const auto r = qxopt::optimize(c, table, o.limit);
      if (!qxopt::verify_mapping(c, r, graph)) {
        ++failures;
        std::cerr << "circuit " << i << " failed:\n" << qxopt::qasm::emit(c);
      }
    }
    std::cout << (o.random - failures) << "/" << o.random << " random circuits verified (seed " << o.seed << ")\n";
    return failures == 0 ? kExitOk : kExitVerify;
  }

  if (o.in.empty() || o.against.empty()) throw CLI::ValidationError("verify needs --in and --against, or --random");
  const auto c1 = load_circuit(o.in, o.strict);
  const auto c2 = load_circuit(o.against, o.strict);
  if (c1.num_qubits() > c2.num_qubits() || c2.num_qubits() > qxopt::kMaxUnitaryQubits)
    throw qxopt::Error("circuit widths are incompatible for verification");

  std::optional<qxopt::Placement> found;
  if (!o.placement.empty()) {
    auto p = parse_placement(o.placement);
    if (qxopt::equivalent(c1, c2, p, qxopt::kVerifyTolerance)) found = p;
  } else {
    if (c2.num_qubits() > o.limit) throw qxopt::Error("too many qubits to search placements; pass --placement");
    const auto u2 = qxopt::unitary_of(c2);
    qxopt::for_each_injection(c1.num_qubits(), c2.num_qubits(), [&](const qxopt::Placement& p) {
      if (found) return;
      auto u1 = qxopt::unitary_of(qxopt::relabel(c1, p, c2.num_qubits()));
      if (qxopt::equal_up_to_phase(u1, u2, qxopt::kVerifyTolerance)) found = p;
    });
  }
  if (!found) {
    std::cout << "not equivalent\n";
    return kExitVerify;
  }
  std::cout << "equivalent under placement " << qxopt::format_placement(*found) << '\n';
  return kExitOk;
}

int cmd_bench(const Options& o) {
  const auto graph = load_arch(o.arch);
  const auto rows = qxopt::bench(o.dir, graph, {o.strict, o.limit});
  std::cout << (o.format == "markdown" ? qxopt::format_markdown(rows) : qxopt::format_csv(rows));
  bool errors = false, unverified = false;
  for (const auto& r : rows) {
    if (r.error) {
      errors = true;
      std::cerr << r.name << ": " << *r.error << '\n';
    } else if (!r.verified) {
      unverified = true;
      std::cerr << r.name << ": WARNING not verified\n";
    }
  }
  if (unverified) return kExitVerify;
  if (errors && !o.keep_going) return kExitUsage;
  return kExitOk;
}

int cmd_mermin(const Options& o) {
  const auto xxy = qxopt::parse_distribution(qxopt::read_file(o.xxy));
  const auto yyy = qxopt::parse_distribution(qxopt::read_file(o.yyy));
  const auto m = qxopt::mermin3(xxy, yyy);
  std::cout << std::fixed << std::setprecision(3);
  std::cout << "m3 " << m.m3 << '\n';
  std::cout << "violation " << m.violation << '\n';
  std::cout << "classical_bound " << qxopt::lhv_bound() << '\n';
  std::cout << "quantum_bound " << qxopt::kQuantumMerminBound << '\n';
  return kExitOk;
}

int cmd_fidelity(const Options& o) {
  const auto a = qxopt::sanitize(qxopt::parse_raw_matrix(qxopt::read_file(o.a)));
  const auto b = qxopt::sanitize(qxopt::parse_raw_matrix(qxopt::read_file(o.b)));
  std::cout << std::fixed << std::setprecision(4) << "F " << qxopt::uhlmann_fidelity(a, b) << '\n';
  return kExitOk;
}

int cmd_table_dump(const Options& o) {
  const auto table = qxopt::build_table(load_arch(o.arch));
  std::cout << qxopt::dump_table(table);
  return qxopt::unsound_table_entries(table).empty() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Clifford+T circuit optimizer for CNOT-constrained processors"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Seed for random circuit generation");

  auto add_arch = [&](CLI::App* sub) {
    sub->add_option("--arch", o.arch, "Architecture: qx2, qx4 or @file")->capture_default_str();
  };
  auto add_strict = [&](CLI::App* sub) { sub->add_flag("--strict", o.strict, "Reject measure/barrier statements"); };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", o.limit, "Largest device for exhaustive placement search")->capture_default_str();
  };

  auto* optimize = app.add_subcommand("optimize", "Map and simplify a circuit for an architecture");
  add_arch(optimize);
  add_strict(optimize);
  add_limit(optimize);
  optimize->add_option("--in", o.in, "Input QASM file")->required();
  optimize->add_option("--out", o.out, "Output QASM file");
  optimize->add_option("--report", o.report, "Report format")->check(CLI::IsMember({"json", "csv"}));

  auto* simplify = app.add_subcommand("simplify", "Apply peephole rewrites");
  add_strict(simplify);
  simplify->add_option("--in", o.in, "Input QASM file")->required();
  simplify->add_option("--out", o.out, "Output QASM file");
  simplify->add_flag("--trace", o.trace, "Print every fired rule");

  auto* verify = app.add_subcommand("verify", "Check unitary equivalence of two circuits");
  add_arch(verify);
  add_strict(verify);
  add_limit(verify);
  verify->add_option("--in", o.in, "Reference QASM file");
  verify->add_option("--against", o.against, "Candidate QASM file");
  verify->add_option("--placement", o.placement, "Comma-separated physical image of each logical qubit");
  verify->add_option("--random", o.random, "Optimize and verify this many random circuits instead");
  verify->add_option("--seed", o.seed, "Seed for --random");

  auto* bench = app.add_subcommand("bench", "Optimize every .qasm file in a directory");
  add_arch(bench);
  add_strict(bench);
  add_limit(bench);
  bench->add_option("--dir", o.dir, "Directory of QASM files")->required();
  bench->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "markdown"}));
  bench->add_option("--report", o.format, "Alias of --format")->check(CLI::IsMember({"csv", "markdown"}));
  bench->add_flag("--keep-going", o.keep_going, "Exit 0 even if some files fail to parse");

  auto* mermin = app.add_subcommand("mermin", "Evaluate the three-qubit Mermin polynomial");
  mermin->add_option("--xxy", o.xxy, "Distribution measured in the XXY setting")->required();
  mermin->add_option("--yyy", o.yyy, "Distribution measured in the YYY setting")->required();

  auto* fidelity = app.add_subcommand("fidelity", "Uhlmann fidelity of two density matrices");
  fidelity->add_option("--a", o.a, "First density matrix (dm format)")->required();
  fidelity->add_option("--b", o.b, "Second density matrix (dm format)")->required();

  auto* table = app.add_subcommand("table", "Realization table tools");
  table->require_subcommand(1);
  auto* dump = table->add_subcommand("dump", "Print the CNOT realization table");
  add_arch(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*optimize) return cmd_optimize(o);
    if (*simplify) return cmd_simplify(o);
    if (*verify) return cmd_verify(o);
    if (*bench) return cmd_bench(o);
    if (*mermin) return cmd_mermin(o);
    if (*fidelity) return cmd_fidelity(o);
    if (*dump) return cmd_table_dump(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const qxopt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
