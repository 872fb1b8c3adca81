#include "tropjac/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tropjac/errors.hpp"

namespace tropjac::json_io {

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  return j.at(key);
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InputError("not an integer: \"" + j.get<std::string>() + "\"");
    return x;
  }
  throw InputError("expected an integer, got " + j.dump());
}

std::uint64_t count_from_json(const json& j, const char* what) {
  Integer x = integer_from_json(j);
  if (x < 0 || !x.fits_ulong_p()) throw InputError(std::string(what) + " must be a nonnegative integer");
  return x.get_ui();
}

LatticeVector vector_from_json(const json& j, std::size_t expected, bool allow_bare) {
  if (allow_bare && expected == 1 && !j.is_array()) return LatticeVector(std::vector<Integer>{integer_from_json(j)});
  if (!j.is_array()) throw InputError("expected a lattice vector, got " + j.dump());
  std::vector<Integer> entries;
  for (const auto& x : j) entries.push_back(integer_from_json(x));
  if (entries.size() != expected)
    throw InputError("lattice vector " + j.dump() + " has length " + std::to_string(entries.size()) + ", expected " +
                     std::to_string(expected));
  return LatticeVector(std::move(entries));
}

IntMatrix matrix_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of rows");
  std::vector<LatticeVector> rows;
  std::size_t cols = j.empty() ? 0 : (j[0].is_array() ? j[0].size() : 0);
  for (const auto& r : j) rows.push_back(vector_from_json(r, cols, false));
  return IntMatrix::from_rows(rows, cols);
}

json local_local_to_json(const LocalLocal& l) {
  json j = {{"p", l.p}, {"homDim", l.hom_dim}};
  if (l.alpha_power) j["alphaPower"] = *l.alpha_power;
  return j;
}

LocalLocal local_local_from_json(const json& j) {
  LocalLocal l{count_from_json(field(j, "p", "local-local part"), "p"),
               count_from_json(field(j, "homDim", "local-local part"), "homDim"), std::nullopt};
  if (j.contains("alphaPower") && !j.at("alphaPower").is_null())
    l.alpha_power = count_from_json(j.at("alphaPower"), "alphaPower");
  return l;
}

}  // namespace

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const LatticeVector& v) {
  json j = json::array();
  for (const auto& x : v.entries()) j.push_back(to_json(x));
  return j;
}

json to_json(const IntMatrix& m) {
  json j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
  return j;
}

json to_json(const FgAbelianGroup& g) {
  json factors = json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(to_json(d));
  return {{"freeRank", g.free_rank()}, {"invariantFactors", factors}};
}

FgAbelianGroup group_from_json(const json& j) {
  std::size_t free_rank = count_from_json(field(j, "freeRank", "group"), "freeRank");
  std::vector<Integer> factors;
  for (const auto& d : field(j, "invariantFactors", "group")) factors.push_back(integer_from_json(d));
  FgAbelianGroup g = FgAbelianGroup::from_cyclic(free_rank, factors);
  if (g.invariant_factors() != factors) throw InputError("invariant factors are not in normal form");
  return g;
}

json to_json(const SharpFsMonoid& m) {
  if (m == SharpFsMonoid::free(m.rank())) return {{"free", m.rank()}};
  json rays = json::array();
  for (const auto& r : m.rays()) rays.push_back(to_json(r));
  return {{"rank", m.rank()}, {"inequalities", to_json(m.inequalities())}, {"rays", rays}};
}

SharpFsMonoid monoid_from_json(const json& j) {
  if (j.is_object() && j.contains("free")) {
    std::size_t k = count_from_json(j.at("free"), "free");
    return SharpFsMonoid::free(k);
  }
  std::size_t k = count_from_json(field(j, "rank", "monoid"), "rank");
  IntMatrix a = matrix_from_json(field(j, "inequalities", "monoid"), "inequalities");
  if (a.cols() != k) {
    if (a.rows() == 0)
      a = IntMatrix(0, k);
    else
      throw InputError("monoid inequalities have " + std::to_string(a.cols()) + " columns, rank is " +
                       std::to_string(k));
  }
  std::vector<LatticeVector> rays;
  for (const auto& r : field(j, "rays", "monoid")) rays.push_back(vector_from_json(r, k, false));
  return SharpFsMonoid(std::move(a), std::move(rays));
}

json to_json(const MetricGraph& g) {
  const bool bare = g.monoid().rank() == 1;
  json edges = json::array();
  for (const auto& e : g.edge_specs()) {
    edges.push_back({{"id", e.id},
                     {"tail", e.tail},
                     {"head", e.head},
                     {"length", bare ? to_json(e.length[0]) : to_json(e.length)}});
  }
  return {{"monoid", to_json(g.monoid())}, {"vertices", g.vertices()}, {"edges", edges}};
}

MetricGraph graph_from_json(const json& j) {
  SharpFsMonoid monoid = monoid_from_json(field(j, "monoid", "graph"));
  std::vector<std::string> vertices;
  for (const auto& v : field(j, "vertices", "graph")) {
    if (!v.is_string()) throw InputError("vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : field(j, "edges", "graph")) {
    auto str = [&](const char* key) {
      const json& x = field(e, key, "edge");
      if (!x.is_string()) throw InputError(std::string("edge field \"") + key + "\" must be a string");
      return x.get<std::string>();
    };
    edges.push_back(EdgeSpec{str("id"), str("tail"), str("head"),
                             vector_from_json(field(e, "length", "edge"), monoid.rank(), true)});
  }
  return MetricGraph(std::move(monoid), std::move(vertices), edges);
}

json to_json(const MonoidHom& h) {
  return {{"source", to_json(h.source)}, {"target", to_json(h.target)}, {"matrix", to_json(h.matrix)}};
}

MonoidHom hom_from_json(const json& j) {
  SharpFsMonoid source = monoid_from_json(field(j, "source", "monoid hom"));
  SharpFsMonoid target = monoid_from_json(field(j, "target", "monoid hom"));
  IntMatrix matrix = matrix_from_json(field(j, "matrix", "monoid hom"), "matrix");
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    throw InputError("monoid hom matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                     ", expected " + std::to_string(target.rank()) + "x" + std::to_string(source.rank()));
  return MonoidHom{std::move(source), std::move(target), std::move(matrix)};
}

json cycle_to_json(const MetricGraph& g, const Cycle& c) {
  json j = json::object();
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (c.coefficients[e] != 0) j[g.edges()[e].id] = to_json(c.coefficients[e]);
  return j;
}

Cycle cycle_from_json(const MetricGraph& g, const json& j) {
  if (!j.is_object()) throw InputError("a cycle is an object mapping edge ids to coefficients");
  Cycle c{LatticeVector(g.edge_count())};
  for (const auto& [id, coefficient] : j.items()) c.coefficients[g.edge_index(id)] = integer_from_json(coefficient);
  return c;
}

json to_json(const MetricGraph& g, const HomologyData& h) {
  json basis = json::array();
  for (const auto& c : h.basis) basis.push_back(cycle_to_json(g, c));
  json cotree = json::array();
  for (std::size_t e : h.cotree_edges) cotree.push_back(g.edges()[e].id);
  json gram = json::array();
  for (std::size_t i = 0; i < h.gram.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < h.gram.size(); ++k) row.push_back(to_json(h.gram.at(i, k)));
    gram.push_back(row);
  }
  return {{"basis", basis}, {"cotreeEdges", cotree}, {"gram", gram}};
}

json to_json(const MetricGraph& g, const PLFunction& f) {
  json values = json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) values[g.vertices()[v]] = to_json(f.values[v]);
  json slopes = json::object();
  for (std::size_t e = 0; e < g.edge_count(); ++e) slopes[g.edges()[e].id] = to_json(f.slopes[e]);
  return {{"values", values}, {"slopes", slopes}};
}

std::map<std::string, LatticeVector> pl_values_from_json(const MetricGraph& g, const json& j) {
  const json& values = (j.is_object() && j.contains("values")) ? j.at("values") : j;
  if (!values.is_object()) throw InputError("PL values must be an object mapping vertex ids to lattice vectors");
  std::map<std::string, LatticeVector> out;
  for (const auto& [id, value] : values.items()) out[id] = vector_from_json(value, g.monoid().rank(), true);
  return out;
}

TropCocycle cocycle_from_json(const MetricGraph& g, const json& j) {
  const json& values = field(j, "values", "cocycle");
  const std::size_t k = g.monoid().rank();
  if (values.is_array()) {
    std::vector<LatticeVector> list;
    for (const auto& v : values) list.push_back(vector_from_json(v, k, true));
    return make_cocycle(g, std::move(list));
  }
  if (!values.is_object()) throw InputError("cocycle values must be a list or an object keyed by cotree edge");
  HomologyData h = cycle_basis(g);
  std::vector<LatticeVector> list(h.basis.size(), LatticeVector(k));
  std::size_t matched = 0;
  for (std::size_t i = 0; i < h.cotree_edges.size(); ++i) {
    const std::string& id = g.edges()[h.cotree_edges[i]].id;
    if (values.contains(id)) {
      list[i] = vector_from_json(values.at(id), k, true);
      ++matched;
    }
  }
  if (matched != values.size()) throw InputError("cocycle names an edge that does not close a fundamental cycle");
  return make_cocycle(g, std::move(list));
}

json to_json(const TropCocycle& f) {
  json values = json::object();
  for (std::size_t i = 0; i < f.values.size(); ++i)
    values[f.graph.edges()[f.homology.cotree_edges[i]].id] = to_json(f.values[i]);
  return {{"graph", to_json(f.graph)}, {"values", values}};
}

json to_json(const TroJacGroup& t) {
  return {{"group", to_json(t.group)},
          {"text", t.group.to_string()},
          {"boundedBasis", to_json(t.bounded_basis)},
          {"relationMatrix", to_json(t.relation_matrix)}};
}

json to_json(const GroupDescriptor& g) {
  json factors = json::array();
  for (const auto& a : g.atoms()) {
    if (auto* x = std::get_if<MuN>(&a)) factors.push_back({{"mu", x->n}});
    if (auto* x = std::get_if<ZmodN>(&a)) factors.push_back({{"z", x->m}});
    if (auto* x = std::get_if<AlphaP>(&a)) factors.push_back({{"alphaP", x->p}});
    if (auto* x = std::get_if<LocalLocal>(&a)) factors.push_back({{"localLocal", local_local_to_json(*x)}});
  }
  return {{"factors", factors}};
}

GroupDescriptor descriptor_from_json(const json& j) {
  std::vector<GroupAtom> atoms;
  const json& factors = field(j, "factors", "group descriptor");
  if (!factors.is_array()) throw InputError("descriptor factors must be a list");
  for (const auto& f : factors) {
    if (!f.is_object() || f.size() != 1) throw InputError("descriptor factor must have exactly one key: " + f.dump());
    const std::string key = f.begin().key();
    const json& value = f.begin().value();
    if (key == "mu")
      atoms.push_back(MuN{count_from_json(value, "mu")});
    else if (key == "z")
      atoms.push_back(ZmodN{count_from_json(value, "z")});
    else if (key == "alphaP")
      atoms.push_back(AlphaP{count_from_json(value, "alphaP")});
    else if (key == "localLocal")
      atoms.push_back(local_local_from_json(value));
    else
      throw InputError("unknown descriptor factor \"" + key + "\"");
  }
  return GroupDescriptor(std::move(atoms));
}

BaseDescriptor base_from_json(const json& j) {
  return BaseDescriptor(count_from_json(field(j, "residueChar", "base"), "residueChar"),
                        j.contains("logRank") ? count_from_json(j.at("logRank"), "logRank") : 0);
}

Bt1Descriptor bt1_from_json(const json& j) {
  return Bt1Descriptor{count_from_json(field(j, "pRank", "BT1"), "pRank"),
                       local_local_from_json(field(j, "localLocal", "BT1"))};
}

json to_json(const ExtensionVerdict& v) {
  json witness = nullptr;
  if (v.witness) witness = {{"factor", v.witness->factor}, {"obstruction", v.witness->obstruction}};
  return {{"verdict", to_string(v.kind)}, {"witness", witness}};
}

json to_json(const UnipotentDescriptor& u) {
  return {{"p", u.p},
          {"alphaP", u.alpha_p_copies},
          {"Ga", u.ga_copies},
          {"opaqueHom", u.opaque_hom_copies},
          {"text", u.to_string()}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace tropjac::json_io
