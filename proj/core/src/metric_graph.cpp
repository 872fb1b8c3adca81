#include "tropjac/metric_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "tropjac/errors.hpp"

namespace tropjac {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Fundamental cycles of a spanning forest of the kept edges; forest edges are chosen
// by breadth-first search in vertex order, neighbours in edge order.
struct Forest {
  std::vector<bool> in_tree;
  std::vector<std::size_t> parent_edge;  // npos at roots
  std::vector<std::size_t> parent;
  std::vector<std::size_t> component_root;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Forest spanning_forest(const MetricGraph& g, const std::vector<bool>& keep) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!keep[e] || g.edges()[e].is_loop()) continue;
    incident[g.edges()[e].tail].push_back(e);
    incident[g.edges()[e].head].push_back(e);
  }
  Forest f{std::vector<bool>(g.edge_count(), false), std::vector<std::size_t>(n, npos),
           std::vector<std::size_t>(n, npos), std::vector<std::size_t>(n, npos)};
  for (std::size_t root = 0; root < n; ++root) {
    if (f.component_root[root] != npos) continue;
    f.component_root[root] = root;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      for (std::size_t e : incident[v]) {
        const Edge& edge = g.edges()[e];
        std::size_t w = edge.tail == v ? edge.head : edge.tail;
        if (f.component_root[w] != npos) continue;
        f.component_root[w] = root;
        f.parent[w] = v;
        f.parent_edge[w] = e;
        f.in_tree[e] = true;
        queue.push(w);
      }
    }
  }
  return f;
}

// Adds sign * (path from v up to its root) to coefficients.
void add_path_to_root(const MetricGraph& g, const Forest& f, std::size_t v, long sign, LatticeVector& coefficients) {
  while (f.parent_edge[v] != npos) {
    std::size_t e = f.parent_edge[v];
    // Traversing v -> parent along e agrees with e's orientation iff tail(e) == v.
    coefficients[e] += g.edges()[e].tail == v ? sign : -sign;
    v = f.parent[v];
  }
}

struct CycleSet {
  std::vector<Cycle> cycles;
  std::vector<std::size_t> cotree_edges;
};

CycleSet fundamental_cycles(const MetricGraph& g, const std::vector<bool>& keep) {
  Forest f = spanning_forest(g, keep);
  CycleSet out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!keep[e] || f.in_tree[e]) continue;
    const Edge& edge = g.edges()[e];
    LatticeVector c(g.edge_count());
    c[e] = 1;
    // e runs tail -> head; close it up with head -> root -> tail in the forest.
    add_path_to_root(g, f, edge.head, 1, c);
    add_path_to_root(g, f, edge.tail, -1, c);
    out.cycles.push_back(Cycle{std::move(c)});
    out.cotree_edges.push_back(e);
  }
  return out;
}

void require_chain(const MetricGraph& g, const Cycle& c) {
  if (c.coefficients.size() != g.edge_count())
    throw InputError("chain has " + std::to_string(c.coefficients.size()) + " coefficients, graph has " +
                     std::to_string(g.edge_count()) + " edges");
}

}  // namespace

MetricGraph::MetricGraph(SharpFsMonoid monoid, std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : monoid_(std::move(monoid)), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("graph must have at least one vertex");
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw InputError("vertex ids are not unique");
  std::set<std::string> edge_ids;
  edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    if (!edge_ids.insert(spec.id).second) throw InputError("edge id '" + spec.id + "' is not unique");
    if (!seen.count(spec.tail) || !seen.count(spec.head))
      throw InputError("edge '" + spec.id + "' has an unknown endpoint");
    if (spec.length.size() != monoid_.rank()) throw InputError("edge '" + spec.id + "' length has wrong dimension");
    if (spec.length.is_zero()) throw InputError("edge '" + spec.id + "' has zero length");
    if (!contains(monoid_, spec.length))
      throw InputError("edge '" + spec.id + "' length " + spec.length.to_string() + " is not in the monoid");
    edges_.push_back(Edge{spec.id, vertex_index(spec.tail), vertex_index(spec.head), spec.length});
  }
  DisjointSets sets(vertices_.size());
  std::size_t components = vertices_.size();
  for (const auto& e : edges_)
    if (sets.unite(e.tail, e.head)) --components;
  if (components != 1) throw InputError("graph is not connected (" + std::to_string(components) + " components)");
}

std::size_t MetricGraph::vertex_index(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw InputError("unknown vertex '" + id + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t MetricGraph::edge_index(const std::string& id) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
  if (it == edges_.end()) throw InputError("unknown edge '" + id + "'");
  return static_cast<std::size_t>(it - edges_.begin());
}

bool MetricGraph::has_vertex(const std::string& id) const {
  return std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end();
}

bool MetricGraph::has_edge(const std::string& id) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
}

std::vector<EdgeSpec> MetricGraph::edge_specs() const {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges_.size());
  for (const auto& e : edges_) specs.push_back(EdgeSpec{e.id, vertices_[e.tail], vertices_[e.head], e.length});
  return specs;
}

bool operator==(const MetricGraph& a, const MetricGraph& b) {
  if (!(a.monoid_ == b.monoid_) || a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head || !(x.length == y.length)) return false;
  }
  return true;
}

MetricGraph canonical(const MetricGraph& g) {
  std::vector<std::string> vertices = g.vertices();
  std::sort(vertices.begin(), vertices.end());
  std::vector<EdgeSpec> edges = g.edge_specs();
  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  return MetricGraph(g.monoid(), std::move(vertices), edges);
}

LatticeVector boundary(const MetricGraph& g, const Cycle& c) {
  require_chain(g, c);
  LatticeVector d(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    d[g.edges()[e].head] += c.coefficients[e];
    d[g.edges()[e].tail] -= c.coefficients[e];
  }
  return d;
}

bool is_cycle(const MetricGraph& g, const Cycle& c) { return boundary(g, c).is_zero(); }

IntMatrix GramMatrix::coordinate(std::size_t c) const {
  IntMatrix m(size_, size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) m(i, j) = at(i, j)[c];
  return m;
}

std::size_t betti1(const MetricGraph& g) { return g.edge_count() + 1 - g.vertex_count(); }

HomologyData cycle_basis(const MetricGraph& g) {
  CycleSet set = fundamental_cycles(g, std::vector<bool>(g.edge_count(), true));
  HomologyData h{std::move(set.cycles), std::move(set.cotree_edges), {}};
  const std::size_t n = h.basis.size();
  h.gram = GramMatrix(n, g.monoid().rank());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      h.gram.at(i, j) = intersection_pairing(g, h.basis[i], h.basis[j]);
      h.gram.at(j, i) = h.gram.at(i, j);
    }
  return h;
}

LatticeVector basis_coordinates(const HomologyData& h, const Cycle& c) {
  LatticeVector coords(h.cotree_edges.size());
  for (std::size_t i = 0; i < h.cotree_edges.size(); ++i) coords[i] = c.coefficients[h.cotree_edges[i]];
  return coords;
}

std::vector<Cycle> subgraph_cycle_basis(const MetricGraph& g, const std::vector<bool>& keep) {
  if (keep.size() != g.edge_count()) throw InputError("edge mask has wrong length");
  return fundamental_cycles(g, keep).cycles;
}

LatticeVector intersection_pairing(const MetricGraph& g, const Cycle& x, const Cycle& y) {
  if (!is_cycle(g, x) || !is_cycle(g, y)) throw InputError("intersection pairing of a chain with nonzero boundary");
  LatticeVector sum(g.monoid().rank());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    Integer w = x.coefficients[e] * y.coefficients[e];
    if (w != 0) sum += w * g.edges()[e].length;
  }
  return sum;
}

LatticeVector cycle_length(const MetricGraph& g, const Cycle& x) {
  require_chain(g, x);
  LatticeVector sum(g.monoid().rank());
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (x.coefficients[e] != 0) sum += Integer(abs(x.coefficients[e])) * g.edges()[e].length;
  return sum;
}

GraphMap subdivide_with_map(const MetricGraph& g, const std::string& edge_id, const std::vector<LatticeVector>& parts) {
  const std::size_t target = g.edge_index(edge_id);
  const Edge& edge = g.edges()[target];
  if (parts.size() < 2) throw InputError("subdivision needs at least 2 parts");
  LatticeVector total(g.monoid().rank());
  for (const auto& p : parts) {
    if (p.size() != g.monoid().rank()) throw InputError("subdivision part has wrong dimension");
    if (p.is_zero() || !contains(g.monoid(), p))
      throw InputError("subdivision part " + p.to_string() + " is not a nonzero monoid element");
    total += p;
  }
  if (!(total == edge.length))
    throw InputError("subdivision parts sum to " + total.to_string() + ", edge length is " + edge.length.to_string());

  auto fresh = [&](std::string name, auto taken) {
    while (taken(name)) name += "'";
    return name;
  };
  std::vector<std::string> vertices = g.vertices();
  std::vector<std::string> chain{g.vertices()[edge.tail]};
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::string v = fresh(edge_id + "#v" + std::to_string(i), [&](const std::string& s) {
      return std::find(vertices.begin(), vertices.end(), s) != vertices.end();
    });
    vertices.push_back(v);
    chain.push_back(v);
  }
  chain.push_back(g.vertices()[edge.head]);

  std::vector<EdgeSpec> specs;
  std::vector<std::size_t> origin;  // old edge index per new edge
  std::set<std::string> edge_ids;
  for (const auto& e : g.edges()) edge_ids.insert(e.id);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& old = g.edges()[e];
    if (e != target) {
      specs.push_back(EdgeSpec{old.id, g.vertices()[old.tail], g.vertices()[old.head], old.length});
      origin.push_back(e);
      continue;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::string id = old.id;
      if (i > 0) {
        id = fresh(old.id + "#" + std::to_string(i + 1), [&](const std::string& s) { return edge_ids.count(s) > 0; });
        edge_ids.insert(id);
      }
      specs.push_back(EdgeSpec{id, chain[i], chain[i + 1], parts[i]});
      origin.push_back(e);
    }
  }
  IntMatrix map(specs.size(), g.edge_count());
  for (std::size_t i = 0; i < specs.size(); ++i) map(i, origin[i]) = 1;
  return GraphMap{MetricGraph(g.monoid(), std::move(vertices), specs), std::move(map)};
}

MetricGraph subdivide(const MetricGraph& g, const std::string& edge, const std::vector<LatticeVector>& parts) {
  return subdivide_with_map(g, edge, parts).graph;
}

GraphMap contract(const MetricGraph& g, const MonoidHom& h) {
  if (!(h.source == g.monoid())) throw InputError("monoid hom source differs from the graph's monoid");
  if (!validate_hom(h)) throw InputError("invalid monoid hom: a source ray leaves the target cone");
  const std::size_t n = g.vertex_count();
  std::vector<LatticeVector> lengths;
  DisjointSets sets(n);
  for (const auto& e : g.edges()) {
    lengths.push_back(h(e.length));
    if (lengths.back().is_zero()) sets.unite(e.tail, e.head);
  }
  // Representative name: smallest vertex id in the class.
  std::map<std::size_t, std::string> class_name;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t root = sets.find(v);
    auto it = class_name.find(root);
    if (it == class_name.end() || g.vertices()[v] < it->second) class_name[root] = g.vertices()[v];
  }
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < n; ++v)
    if (class_name[sets.find(v)] == g.vertices()[v]) vertices.push_back(g.vertices()[v]);

  std::vector<EdgeSpec> specs;
  std::vector<std::size_t> origin;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (lengths[e].is_zero()) continue;
    const Edge& old = g.edges()[e];
    specs.push_back(EdgeSpec{old.id, class_name[sets.find(old.tail)], class_name[sets.find(old.head)], lengths[e]});
    origin.push_back(e);
  }
  IntMatrix map(specs.size(), g.edge_count());
  for (std::size_t i = 0; i < specs.size(); ++i) map(i, origin[i]) = 1;
  return GraphMap{MetricGraph(h.target, std::move(vertices), specs), std::move(map)};
}

}  // namespace tropjac
