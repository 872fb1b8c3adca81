#include "tropjac/tropical_jacobian.hpp"

#include <algorithm>
#include <string>

namespace tropjac {

namespace {

std::vector<bool> vanishing_edges(const MetricGraph& g, const LatticeVector& row) {
  std::vector<bool> mask(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) mask[e] = dot(row, g.edges()[e].length) == 0;
  return mask;
}

std::string chain_to_string(const MetricGraph& g, const Cycle& c) {
  std::string out = "{";
  bool first = true;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (c.coefficients[e] == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += g.edges()[e].id + ": " + c.coefficients[e].get_str();
  }
  return out + "}";
}

void require_unit_n(const MetricGraph& g) {
  if (!g.monoid().is_standard_n()) throw PreconditionError("critical group requires the monoid N");
  for (const auto& e : g.edges())
    if (e.length[0] != 1)
      throw PreconditionError("critical group requires unit lengths; edge '" + e.id + "' is longer");
}

}  // namespace

LatticeVector TropCocycle::operator()(const Cycle& c) const {
  LatticeVector coords = basis_coordinates(homology, c);
  LatticeVector out(graph.monoid().rank());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (coords[i] != 0) out += coords[i] * values[i];
  return out;
}

TropCocycle make_cocycle(const MetricGraph& g, std::vector<LatticeVector> values) {
  HomologyData h = cycle_basis(g);
  if (values.size() != h.basis.size())
    throw InputError("cocycle has " + std::to_string(values.size()) + " values, first Betti number is " +
                     std::to_string(h.basis.size()));
  for (const auto& v : values)
    if (v.size() != g.monoid().rank()) throw InputError("cocycle value " + v.to_string() + " has wrong dimension");
  return TropCocycle{g, std::move(h), std::move(values)};
}

IntMatrix bounded_sublattice(const MetricGraph& g, const HomologyData& h) {
  const std::size_t k = g.monoid().rank();
  const std::size_t genus = h.basis.size();
  const IntMatrix& a = g.monoid().inequalities();
  IntMatrix conditions(0, genus * k);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const LatticeVector v = a.row(r);
    for (const Cycle& z : subgraph_cycle_basis(g, vanishing_edges(g, v))) {
      // <v, f(z)> = sum_i coord_i(z) <v, f(basis_i)>
      LatticeVector coords = basis_coordinates(h, z);
      IntMatrix row(1, genus * k);
      for (std::size_t i = 0; i < genus; ++i)
        for (std::size_t c = 0; c < k; ++c) row(0, i * k + c) = coords[i] * v[c];
      conditions.append_rows(row);
    }
  }
  return integer_kernel(conditions);
}

std::optional<MonodromyWitness> find_monodromy_violation(const TropCocycle& f) {
  const MetricGraph& g = f.graph;
  const IntMatrix& a = g.monoid().inequalities();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const LatticeVector v = a.row(r);
    for (const Cycle& z : subgraph_cycle_basis(g, vanishing_edges(g, v))) {
      LatticeVector value = f(z);
      if (dot(v, value) != 0) return MonodromyWitness{z, v, cycle_length(g, z), value};
    }
  }
  return std::nullopt;
}

TroJacGroup trojac(const MetricGraph& g) {
  const std::size_t k = g.monoid().rank();
  TroJacGroup out;
  out.homology = cycle_basis(g);
  const std::size_t genus = out.homology.basis.size();
  out.bounded_basis = bounded_sublattice(g, out.homology);

  IntMatrix images(genus * k, genus);
  for (std::size_t a = 0; a < genus; ++a)
    for (std::size_t i = 0; i < genus; ++i)
      for (std::size_t c = 0; c < k; ++c) images(i * k + c, a) = out.homology.gram.at(a, i)[c];
  auto relations = solve_integer(out.bounded_basis, images);
  if (!relations) throw InternalError("pairing image of a homology class lies outside the bounded-monodromy lattice");
  out.relation_matrix = std::move(*relations);
  out.group = cokernel(out.relation_matrix);
  return out;
}

FgAbelianGroup trojac_torsion(const MetricGraph& g, const Integer& n) { return torsion_part(trojac(g).group, n); }

TropCocycle specialize(const TropCocycle& f, const MonoidHom& h) {
  if (auto w = find_monodromy_violation(f)) {
    std::string message = "NotBoundedMonodromy: cycle " + chain_to_string(f.graph, w->cycle) + " with length " +
                          w->cycle_length.to_string() + " has value " + w->value.to_string() + "; inequality row " +
                          w->inequality.to_string() + " vanishes on the length but not the value";
    throw NotBoundedMonodromyError(std::move(*w), message);
  }
  GraphMap contraction = contract(f.graph, h);
  HomologyData target = cycle_basis(contraction.graph);
  const std::size_t source_genus = f.homology.basis.size();
  const std::size_t target_genus = target.basis.size();

  IntMatrix restriction(target_genus, source_genus);
  for (std::size_t i = 0; i < source_genus; ++i) {
    LatticeVector coords = basis_coordinates(target, contraction.apply(f.homology.basis[i]));
    for (std::size_t j = 0; j < target_genus; ++j) restriction(j, i) = coords[j];
  }
  auto preimages = solve_integer(restriction, IntMatrix::identity(target_genus));
  if (!preimages) throw InternalError("contraction is not surjective on first homology");

  auto pushed = [&](const LatticeVector& source_coords) {
    LatticeVector value(f.graph.monoid().rank());
    for (std::size_t i = 0; i < source_genus; ++i)
      if (source_coords[i] != 0) value += source_coords[i] * f.values[i];
    return h(value);
  };
  IntMatrix killed = integer_kernel(restriction);
  for (std::size_t j = 0; j < killed.cols(); ++j)
    if (!pushed(killed.column(j)).is_zero())
      throw InternalError("cocycle with bounded monodromy does not vanish on contracted cycles");

  std::vector<LatticeVector> values;
  for (std::size_t j = 0; j < target_genus; ++j) values.push_back(pushed(preimages->column(j)));
  return TropCocycle{std::move(contraction.graph), std::move(target), std::move(values)};
}

FgAbelianGroup critical_group(const MetricGraph& g, const std::string& deleted_vertex) {
  require_unit_n(g);
  const std::size_t n = g.vertex_count();
  const std::size_t skip = g.vertex_index(deleted_vertex);
  IntMatrix laplacian(n, n);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    laplacian(e.tail, e.tail) += 1;
    laplacian(e.head, e.head) += 1;
    laplacian(e.tail, e.head) -= 1;
    laplacian(e.head, e.tail) -= 1;
  }
  IntMatrix reduced(n - 1, n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == skip) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == skip) continue;
      reduced(rr, cc++) = laplacian(r, c);
    }
    ++rr;
  }
  return cokernel(reduced);
}

FgAbelianGroup critical_group(const MetricGraph& g) {
  return critical_group(g, *std::min_element(g.vertices().begin(), g.vertices().end()));
}

MetricGraph unit_subdivision(const MetricGraph& g) {
  if (!g.monoid().is_standard_n()) throw PreconditionError("unit subdivision requires the monoid N");
  MetricGraph out = g;
  for (const auto& e : g.edges()) {
    const Integer& m = e.length[0];
    if (m == 1) continue;
    std::vector<LatticeVector> parts(m.get_ui(), LatticeVector{1});
    out = subdivide(out, e.id, parts);
  }
  return out;
}

}  // namespace tropjac
