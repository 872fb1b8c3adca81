#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropjac/integer_matrix.hpp"
#include "tropjac/monoid.hpp"

namespace tropjac {

/// An edge as supplied by callers: endpoints named by vertex id.
struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
  LatticeVector length;
};

/// Stored edge; one chosen orientation of the pair of half-edges.
struct Edge {
  std::string id;
  std::size_t tail;
  std::size_t head;
  LatticeVector length;

  bool is_loop() const { return tail == head; }
};

/// A finite connected graph whose edge lengths are nonzero elements of a sharp fs monoid.
/// Loops and parallel edges are allowed.
class MetricGraph {
 public:
  MetricGraph(SharpFsMonoid monoid, std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  const SharpFsMonoid& monoid() const { return monoid_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const;
  bool has_edge(const std::string& id) const;

  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const MetricGraph& a, const MetricGraph& b);

 private:
  SharpFsMonoid monoid_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Same graph with vertices and edges sorted by id.
MetricGraph canonical(const MetricGraph& g);

/// Integer chain on the edges, coefficient i is on edge i in its stored orientation.
struct Cycle {
  LatticeVector coefficients;

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.coefficients == b.coefficients; }
};

/// Per-vertex (incoming - outgoing) coefficient sums.
LatticeVector boundary(const MetricGraph& g, const Cycle& c);
bool is_cycle(const MetricGraph& g, const Cycle& c);

/// g x g symmetric matrix of lattice vectors.
class GramMatrix {
 public:
  GramMatrix() = default;
  GramMatrix(std::size_t size, std::size_t rank)
      : size_(size), rank_(rank), entries_(size * size, LatticeVector(rank)) {}

  std::size_t size() const { return size_; }
  std::size_t lattice_rank() const { return rank_; }
  LatticeVector& at(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
  const LatticeVector& at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

  /// The integer matrix formed by one lattice coordinate of every entry.
  IntMatrix coordinate(std::size_t c) const;

  friend bool operator==(const GramMatrix& a, const GramMatrix& b) {
    return a.size_ == b.size_ && a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t size_ = 0;
  std::size_t rank_ = 0;
  std::vector<LatticeVector> entries_;
};

/// Fundamental-cycle basis of H1 with its intersection Gram matrix.
/// basis[i] has coefficient 1 on edge cotree_edges[i] and 0 on the other cotree
/// edges, so a cycle's coordinates are its coefficients on the cotree edges.
struct HomologyData {
  std::vector<Cycle> basis;
  std::vector<std::size_t> cotree_edges;
  GramMatrix gram;
};

std::size_t betti1(const MetricGraph& g);

HomologyData cycle_basis(const MetricGraph& g);

/// Coordinates of a cycle of g in h.basis.
LatticeVector basis_coordinates(const HomologyData& h, const Cycle& c);

/// Fundamental cycles of the subgraph formed by the edges with keep[e] true
/// (a spanning forest is used, so the subgraph need not be connected).
std::vector<Cycle> subgraph_cycle_basis(const MetricGraph& g, const std::vector<bool>& keep);

/// sum_e x_e y_e l(e), in M^gp.
LatticeVector intersection_pairing(const MetricGraph& g, const Cycle& x, const Cycle& y);

/// sum_e |x_e| l(e), an element of M.
LatticeVector cycle_length(const MetricGraph& g, const Cycle& x);

/// A derived graph together with the linear map on edge chains (new edges x old edges).
struct GraphMap {
  MetricGraph graph;
  IntMatrix cycle_map;

  Cycle apply(const Cycle& c) const { return Cycle{cycle_map * c.coefficients}; }
};

/// Replaces `edge` by a chain tail -> ... -> head whose lengths are `parts`, in order.
/// The first segment keeps the edge id; the others are "<id>#2", "<id>#3", ...; fresh
/// vertices are "<id>#v1", "<id>#v2", ...
MetricGraph subdivide(const MetricGraph& g, const std::string& edge, const std::vector<LatticeVector>& parts);

/// As subdivide, also returning the map sending a cycle to its lift (each segment gets the edge's coefficient).
GraphMap subdivide_with_map(const MetricGraph& g, const std::string& edge, const std::vector<LatticeVector>& parts);

/// Pushes lengths through h and contracts edges whose new length is 0. Merged vertices
/// take the smallest id of their class. The cycle map restricts to surviving edges.
GraphMap contract(const MetricGraph& g, const MonoidHom& h);

}  // namespace tropjac
