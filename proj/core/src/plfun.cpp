#include "tropjac/plfun.hpp"

#include "tropjac/abgroup.hpp"

namespace tropjac {

PLFunction operator+(const PLFunction& a, const PLFunction& b) {
  if (a.values.size() != b.values.size() || a.slopes.size() != b.slopes.size())
    throw InputError("adding PL functions on different graphs");
  PLFunction out = a;
  for (std::size_t v = 0; v < out.values.size(); ++v) out.values[v] += b.values[v];
  for (std::size_t e = 0; e < out.slopes.size(); ++e) out.slopes[e] += b.slopes[e];
  return out;
}

PLFunction make_pl(const MetricGraph& g, const std::vector<LatticeVector>& values) {
  if (values.size() != g.vertex_count()) throw InputError("PL function needs one value per vertex");
  for (const auto& v : values)
    if (v.size() != g.monoid().rank()) throw InputError("PL value has wrong dimension");
  PLFunction f{values, std::vector<Integer>(g.edge_count(), Integer(0))};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    LatticeVector diff = values[edge.head] - values[edge.tail];
    if (diff.is_zero()) continue;
    std::size_t pivot = 0;
    while (edge.length[pivot] == 0) ++pivot;
    const Integer& l = edge.length[pivot];
    bool ok = mpz_divisible_p(diff[pivot].get_mpz_t(), l.get_mpz_t()) != 0;
    if (ok) {
      f.slopes[e] = diff[pivot] / l;
      ok = diff == f.slopes[e] * edge.length;
    }
    if (!ok)
      throw NotPLError(edge.id, "NotPL: value difference " + diff.to_string() + " across edge '" + edge.id +
                                    "' is not an integer multiple of its length " + edge.length.to_string());
  }
  return f;
}

PLFunction make_pl(const MetricGraph& g, const std::map<std::string, LatticeVector>& values) {
  std::vector<LatticeVector> ordered;
  for (const auto& id : g.vertices()) {
    auto it = values.find(id);
    if (it == values.end()) throw InputError("PL function has no value at vertex '" + id + "'");
    ordered.push_back(it->second);
  }
  if (values.size() != g.vertex_count()) throw InputError("PL function has values at unknown vertices");
  return make_pl(g, ordered);
}

bool is_valid_pl(const MetricGraph& g, const PLFunction& f) {
  if (f.values.size() != g.vertex_count() || f.slopes.size() != g.edge_count()) return false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    if (!(f.values[edge.head] - f.values[edge.tail] == f.slopes[e] * edge.length)) return false;
  }
  return true;
}

LatticeVector multidegree(const MetricGraph& g, const PLFunction& f) {
  if (f.slopes.size() != g.edge_count()) throw InputError("PL function does not match the graph");
  LatticeVector deg(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    // Leaving the tail along e has slope s; leaving the head runs against e, slope -s.
    deg[edge.tail] += f.slopes[e];
    deg[edge.head] -= f.slopes[e];
  }
  return deg;
}

std::vector<PLFunction> harmonic_space(const MetricGraph& g) {
  const std::size_t k = g.monoid().rank();
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  // Unknowns: vertex values (nv * k), then slopes (ne).
  const std::size_t unknowns = nv * k + ne;
  IntMatrix system(ne * k + nv, unknowns);
  for (std::size_t e = 0; e < ne; ++e) {
    const Edge& edge = g.edges()[e];
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t row = e * k + c;
      system(row, edge.head * k + c) += 1;
      system(row, edge.tail * k + c) -= 1;
      system(row, nv * k + e) -= edge.length[c];
    }
    system(ne * k + edge.tail, nv * k + e) += 1;
    system(ne * k + edge.head, nv * k + e) -= 1;
  }
  IntMatrix kernel = integer_kernel(system);
  std::vector<PLFunction> basis;
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    PLFunction f{std::vector<LatticeVector>(nv, LatticeVector(k)), std::vector<Integer>(ne)};
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t c = 0; c < k; ++c) f.values[v][c] = kernel(v * k + c, j);
    for (std::size_t e = 0; e < ne; ++e) f.slopes[e] = kernel(nv * k + e, j);
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace tropjac
