// Command-line front end: reads graphs, homs and descriptors as JSON files and
// prints a text report; `--json <path>` also writes the machine-readable result.
//
// Exit codes: 0 success, 1 invalid input, 2 mathematical precondition failed,
// 3 internal consistency failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "tropjac/errors.hpp"
#include "tropjac/json_io.hpp"
#include "tropjac/plfun.hpp"
#include "tropjac/torsors.hpp"
#include "tropjac/tropical_jacobian.hpp"

namespace io = tropjac::json_io;
using io::json;
using namespace tropjac;

namespace {

struct Report {
  std::string text;
  json machine;
};

std::size_t max_rank() {
  const char* env = std::getenv("TROPJAC_MAX_RANK");
  if (!env || !*env) return 8;
  try {
    std::size_t used = 0;
    long value = std::stol(env, &used);
    if (used != std::string(env).size() || value < 1) throw std::invalid_argument(env);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw InputError(std::string("TROPJAC_MAX_RANK must be a positive integer, got '") + env + "'");
  }
}

void check_rank(const SharpFsMonoid& m) {
  const std::size_t cap = max_rank();
  if (m.rank() > cap)
    throw InputError("monoid rank " + std::to_string(m.rank()) + " exceeds TROPJAC_MAX_RANK=" + std::to_string(cap));
}

MetricGraph load_graph(const std::string& path) {
  const json j = io::read_file(path);
  if (j.contains("monoid")) check_rank(io::monoid_from_json(j.at("monoid")));
  return io::graph_from_json(j);
}

MonoidHom load_hom(const std::string& path) {
  MonoidHom h = io::hom_from_json(io::read_file(path));
  check_rank(h.source);
  check_rank(h.target);
  return h;
}

std::string matrix_text(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) out += "  " + m.row(r).to_string() + "\n";
  return out;
}

/// Lattice vectors from "[[1,0],[2,1]]", "[2,3]" or "2,3" (bare integers over rank 1).
std::vector<LatticeVector> parse_vectors(const std::string& text, std::size_t rank) {
  json j;
  try {
    j = json::parse(text.find('[') == std::string::npos ? "[" + text + "]" : text);
  } catch (const json::exception&) {
    throw InputError("cannot parse lattice vectors from '" + text + "'");
  }
  if (!j.is_array()) throw InputError("expected a list of lattice vectors, got '" + text + "'");
  std::vector<LatticeVector> out;
  for (const auto& item : j) {
    json entries = item.is_array() ? item : json::array({item});
    if (entries.size() != rank)
      throw InputError("lattice vector " + item.dump() + " does not have rank " + std::to_string(rank));
    LatticeVector v(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      if (!entries[i].is_number_integer()) throw InputError("not an integer: " + entries[i].dump());
      v[i] = entries[i].get<long>();
    }
    out.push_back(v);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text) {
  std::string bare = text;
  std::erase_if(bare, [](char c) { return c == '[' || c == ']'; });
  std::vector<LatticeVector> v = parse_vectors("[[" + bare + "]]", 2);
  if (v.size() != 1) throw InputError("expected a pair 'a1,a2', got '" + text + "'");
  return {v[0][0].get_si(), v[0][1].get_si()};
}

Report run_trojac(const std::string& graph_path, bool verify) {
  MetricGraph g = load_graph(graph_path);
  TroJacGroup t = trojac(g);
  Report r{t.group.to_string() + "\n", io::to_json(t)};
  if (verify) {
    if (!g.monoid().is_standard_n()) throw PreconditionError("--verify requires the monoid N");
    FgAbelianGroup oracle = critical_group(unit_subdivision(g));
    if (!(oracle == t.group.torsion()))
      throw InternalError("verification failed: critical group of the unit subdivision is " + oracle.to_string() +
                          ", tropical Jacobian torsion is " + t.group.torsion().to_string());
    r.text += "verified: critical group of the unit subdivision is " + oracle.to_string() + "\n";
    r.machine["verified"] = true;
  }
  return r;
}

Report run_torsion(const std::string& graph_path, long n) {
  if (n < 1) throw InputError("--n must be >= 1");
  FgAbelianGroup g = trojac_torsion(load_graph(graph_path), n);
  return {g.to_string() + "\n", io::to_json(g)};
}

Report run_betti(const std::string& graph_path) {
  std::size_t b = betti1(load_graph(graph_path));
  return {std::to_string(b) + "\n", json{{"betti1", b}}};
}

Report run_pairing(const std::string& graph_path, const std::string& cycles_path) {
  MetricGraph g = load_graph(graph_path);
  if (cycles_path.empty()) {
    HomologyData h = cycle_basis(g);
    std::string text = "basis:\n";
    for (const auto& c : h.basis) text += "  " + io::cycle_to_json(g, c).dump() + "\n";
    text += "gram:\n";
    for (std::size_t i = 0; i < h.gram.size(); ++i) {
      text += " ";
      for (std::size_t j = 0; j < h.gram.size(); ++j) text += " " + h.gram.at(i, j).to_string();
      text += "\n";
    }
    return {text, io::to_json(g, h)};
  }
  const json c = io::read_file(cycles_path);
  if (!c.contains("x") || !c.contains("y")) throw InputError("cycles file needs fields \"x\" and \"y\"");
  Cycle x = io::cycle_from_json(g, c.at("x"));
  Cycle y = io::cycle_from_json(g, c.at("y"));
  LatticeVector p = intersection_pairing(g, x, y);
  return {p.to_string() + "\n", json{{"pairing", io::to_json(p)}}};
}

Report run_bounded(const std::string& graph_path) {
  MetricGraph g = load_graph(graph_path);
  HomologyData h = cycle_basis(g);
  IntMatrix b = bounded_sublattice(g, h);
  std::string text = "rank " + std::to_string(b.cols()) + " in Hom(H1, Z^" + std::to_string(g.monoid().rank()) +
                     ") of rank " + std::to_string(b.rows()) + "\n";
  if (b.cols() > 0) text += "basis (columns):\n" + matrix_text(b);
  return {text, json{{"boundedBasis", io::to_json(b)}, {"homology", io::to_json(g, h)}}};
}

Report run_subdivide(const std::string& graph_path, const std::string& edge, const std::string& parts) {
  MetricGraph g = load_graph(graph_path);
  MetricGraph s = subdivide(g, edge, parse_vectors(parts, g.monoid().rank()));
  json j = io::to_json(s);
  return {j.dump(2) + "\n", j};
}

Report run_contract(const std::string& graph_path, const std::string& hom_path) {
  MetricGraph g = load_graph(graph_path);
  GraphMap c = contract(g, load_hom(hom_path));
  json j = io::to_json(c.graph);
  return {j.dump(2) + "\n", j};
}

Report run_specialize(const std::string& graph_path, const std::string& hom_path, const std::string& cocycle_path) {
  MetricGraph g = load_graph(graph_path);
  MonoidHom h = load_hom(hom_path);
  TropCocycle f = io::cocycle_from_json(g, io::read_file(cocycle_path));
  json j = io::to_json(specialize(f, h));
  return {j.dump(2) + "\n", j};
}

Report run_critical_group(const std::string& graph_path) {
  FgAbelianGroup g = critical_group(load_graph(graph_path));
  return {g.to_string() + "\n", io::to_json(g)};
}

Report run_harmonic(const std::string& graph_path) {
  MetricGraph g = load_graph(graph_path);
  std::vector<PLFunction> basis = harmonic_space(g);
  json list = json::array();
  std::string text = "dimension " + std::to_string(basis.size()) + "\n";
  for (const auto& f : basis) {
    list.push_back(io::to_json(g, f));
    text += "  " + list.back().dump() + "\n";
  }
  return {text, json{{"dimension", basis.size()}, {"basis", list}}};
}

Report run_multidegree(const std::string& graph_path, const std::string& values_path) {
  MetricGraph g = load_graph(graph_path);
  PLFunction f = make_pl(g, io::pl_values_from_json(g, io::read_file(values_path)));
  LatticeVector d = multidegree(g, f);
  json degrees = json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) degrees[g.vertices()[v]] = io::to_json(d[v]);
  std::string text;
  for (const auto& [id, value] : degrees.items()) text += id + ": " + value.dump() + "\n";
  json j = io::to_json(g, f);
  j["multidegree"] = degrees;
  return {text, j};
}

Report run_classify(const std::string& descriptor_path, const std::string& graph_path) {
  GroupDescriptor d = io::descriptor_from_json(io::read_file(descriptor_path));
  MetricGraph g = load_graph(graph_path);
  FgAbelianGroup discrete = discrete_invariant(d, g);
  GroupDescriptor dual = cartier_dual(d);
  std::string text = "G: " + d.to_string() + "\nG^D: " + dual.to_string() +
                     "\ndiscrete invariant: " + discrete.to_string() + "\n" + kPic0Layer + "\n";
  return {text, json{{"group", io::to_json(d)},
                     {"dual", io::to_json(dual)},
                     {"discreteInvariant", io::to_json(discrete)},
                     {"discreteText", discrete.to_string()},
                     {"pic0Layer", kPic0Layer}}};
}

Report run_extend(const std::string& descriptor_path, long residue_char, long log_rank) {
  if (residue_char < 0 || log_rank < 0) throw InputError("--char and --log-rank must be nonnegative");
  GroupDescriptor d = io::descriptor_from_json(io::read_file(descriptor_path));
  ExtensionVerdict v =
      extendability(d, BaseDescriptor(static_cast<std::uint64_t>(residue_char), static_cast<std::uint64_t>(log_rank)));
  std::string text = to_string(v.kind);
  if (v.witness) text += " (" + v.witness->factor + ": " + v.witness->obstruction + ")";
  return {text + "\n", io::to_json(v)};
}

Report run_weil(long n, const std::string& a, const std::string& b) {
  if (n < 1) throw InputError("--n must be >= 1");
  std::uint64_t w = weil_pairing_split(static_cast<std::uint64_t>(n), parse_pair(a), parse_pair(b));
  return {std::to_string(w) + "\n", json{{"n", n}, {"value", w}}};
}

Report run_alpha_p(long h1, const std::string& graph_path, long p, long p_rank, long hom_dim, long alpha_power) {
  if (graph_path.empty() == (h1 < 0)) throw InputError("give exactly one of --h1 and --graph");
  if (p_rank < 0 || hom_dim < 0) throw InputError("--p-rank and --hom-dim must be nonnegative");
  if (p < 2) throw InputError("--p must be a prime");
  std::uint64_t betti = graph_path.empty() ? static_cast<std::uint64_t>(h1) : betti1(load_graph(graph_path));
  LocalLocal ll{static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(hom_dim), std::nullopt};
  if (alpha_power >= 0) ll.alpha_power = static_cast<std::uint64_t>(alpha_power);
  UnipotentDescriptor u = alpha_p_torsor_group(betti, Bt1Descriptor{static_cast<std::uint64_t>(p_rank), ll});
  json j = io::to_json(u);
  j["h1"] = betti;
  return {u.to_string() + "\n", j};
}

Report run_dual(const std::string& descriptor_path) {
  GroupDescriptor d = cartier_dual(io::descriptor_from_json(io::read_file(descriptor_path)));
  return {d.to_string() + "\n", io::to_json(d)};
}

int fail(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical Jacobians of monoid-metrized graphs and torsor invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  app.add_option("--json", json_path, "Also write the machine-readable result to this file");

  std::function<Report()> action;
  std::string graph, hom, cocycle, cycles, edge, parts, values, descriptor, a, b;
  bool verify = false;
  long n = 0, residue_char = 0, log_rank = 0, h1 = -1, p = 0, p_rank = 0, hom_dim = 0, alpha_power = -1;

  auto graph_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", graph, "Graph JSON file")->required();
    return sub;
  };

  CLI::App* c_trojac = graph_command("trojac", "Tropical Jacobian in normal form");
  c_trojac->add_flag("--verify", verify, "Re-check against the critical group (monoid N only)");
  c_trojac->callback([&] { action = [&] { return run_trojac(graph, verify); }; });

  CLI::App* c_torsion = graph_command("torsion", "n-torsion of the tropical Jacobian");
  c_torsion->add_option("--n", n, "Torsion order")->required();
  c_torsion->callback([&] { action = [&] { return run_torsion(graph, n); }; });

  graph_command("betti", "First Betti number")->callback([&] { action = [&] { return run_betti(graph); }; });

  CLI::App* c_pairing = graph_command("pairing", "Cycle basis and Gram matrix, or the pairing of two cycles");
  c_pairing->add_option("--cycles", cycles, "JSON file {\"x\": cycle, \"y\": cycle}");
  c_pairing->callback([&] { action = [&] { return run_pairing(graph, cycles); }; });

  graph_command("bounded", "Lattice of cocycles with bounded monodromy")->callback([&] {
    action = [&] { return run_bounded(graph); };
  });

  CLI::App* c_subdivide = graph_command("subdivide", "Subdivide one edge");
  c_subdivide->add_option("--edge", edge, "Edge id")->required();
  c_subdivide->add_option("--parts", parts, "Segment lengths: 2,3 or [[1,0],[0,1]]")->required();
  c_subdivide->callback([&] { action = [&] { return run_subdivide(graph, edge, parts); }; });

  CLI::App* c_contract = graph_command("contract", "Push lengths along a monoid map and contract");
  c_contract->add_option("--hom", hom, "Monoid hom JSON file")->required();
  c_contract->callback([&] { action = [&] { return run_contract(graph, hom); }; });

  CLI::App* c_specialize = graph_command("specialize", "Push a cocycle along a monoid map");
  c_specialize->add_option("--hom", hom, "Monoid hom JSON file")->required();
  c_specialize->add_option("--cocycle", cocycle, "Cocycle JSON file")->required();
  c_specialize->callback([&] { action = [&] { return run_specialize(graph, hom, cocycle); }; });

  graph_command("critical-group", "Critical group (monoid N, unit lengths)")->callback([&] {
    action = [&] { return run_critical_group(graph); };
  });

  graph_command("harmonic", "Basis of PL functions with zero multidegree")->callback([&] {
    action = [&] { return run_harmonic(graph); };
  });

  CLI::App* c_multidegree = graph_command("multidegree", "Multidegree of a PL function");
  c_multidegree->add_option("--values", values, "JSON file mapping vertex ids to values")->required();
  c_multidegree->callback([&] { action = [&] { return run_multidegree(graph, values); }; });

  CLI::App* c_classify = app.add_subcommand("classify", "Discrete torsor invariant Hom(G^D, TroJac)");
  c_classify->add_option("descriptor", descriptor, "Group descriptor JSON file")->required();
  c_classify->add_option("--graph", graph, "Graph JSON file")->required();
  c_classify->callback([&] { action = [&] { return run_classify(descriptor, graph); }; });

  CLI::App* c_extend = app.add_subcommand("extend", "Extension verdict for torsors");
  c_extend->add_option("descriptor", descriptor, "Group descriptor JSON file")->required();
  c_extend->add_option("--char", residue_char, "Residue characteristic (0 or prime)")->required();
  c_extend->add_option("--log-rank", log_rank, "Rank of the log structure at the closed point");
  c_extend->callback([&] { action = [&] { return run_extend(descriptor, residue_char, log_rank); }; });

  CLI::App* c_weil = app.add_subcommand("weil", "Split Weil pairing on (Z/n)^2");
  c_weil->add_option("--n", n, "Modulus")->required();
  c_weil->add_option("--a", a, "First element a1,a2")->required();
  c_weil->add_option("--b", b, "Second element b1,b2")->required();
  c_weil->callback([&] { action = [&] { return run_weil(n, a, b); }; });

  CLI::App* c_alpha = app.add_subcommand("alpha-p", "Structure of the alpha_p-torsor group");
  c_alpha->add_option("--h1", h1, "First Betti number of the dual graph");
  c_alpha->add_option("--graph", graph, "Dual graph JSON file (instead of --h1)");
  c_alpha->add_option("--p", p, "The prime p")->required();
  c_alpha->add_option("--p-rank", p_rank, "p-rank r");
  c_alpha->add_option("--hom-dim", hom_dim, "dim Hom(alpha_p, I)");
  c_alpha->add_option("--alpha-power", alpha_power, "d when I = alpha_p^d");
  c_alpha->callback([&] { action = [&] { return run_alpha_p(h1, graph, p, p_rank, hom_dim, alpha_power); }; });

  CLI::App* c_dual = app.add_subcommand("dual", "Cartier dual of a group descriptor");
  c_dual->add_option("descriptor", descriptor, "Group descriptor JSON file")->required();
  c_dual->callback([&] { action = [&] { return run_dual(descriptor); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Report r = action();
    std::cout << r.text;
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw InputError("cannot write '" + json_path + "'");
      out << r.machine.dump(2) << "\n";
    }
    return 0;
  } catch (const InputError& e) {
    return fail(1, e.what());
  } catch (const json::exception& e) {
    return fail(1, std::string("malformed JSON input: ") + e.what());
  } catch (const PreconditionError& e) {
    return fail(2, e.what());
  } catch (const InternalError& e) {
    return fail(3, std::string("internal: ") + e.what());
  } catch (const std::exception& e) {
    return fail(3, std::string("internal: ") + e.what());
  }
}
