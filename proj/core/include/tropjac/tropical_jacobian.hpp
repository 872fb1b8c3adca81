#pragma once

#include <optional>
#include <vector>

#include "tropjac/abgroup.hpp"
#include "tropjac/errors.hpp"
#include "tropjac/metric_graph.hpp"

namespace tropjac {

/// f in Hom(H1, M^gp), stored as its values on a homology basis.
struct TropCocycle {
  MetricGraph graph;
  HomologyData homology;
  std::vector<LatticeVector> values;  // values[i] = f(homology.basis[i])

  LatticeVector operator()(const Cycle& c) const;
};

/// Builds a cocycle on cycle_basis(g); needs betti1(g) values of the monoid's rank.
TropCocycle make_cocycle(const MetricGraph& g, std::vector<LatticeVector> values);

/// A cycle gamma and inequality row v with <v, l(gamma)> = 0 but <v, f(gamma)> != 0.
struct MonodromyWitness {
  Cycle cycle;
  LatticeVector inequality;
  LatticeVector cycle_length;
  LatticeVector value;
};

class NotBoundedMonodromyError : public PreconditionError {
 public:
  NotBoundedMonodromyError(MonodromyWitness witness, const std::string& message)
      : PreconditionError(message), witness_(std::move(witness)) {}
  const MonodromyWitness& witness() const { return witness_; }

 private:
  MonodromyWitness witness_;
};

/// Hom(H1, M^gp) flattened to Z^(g*k): coordinate i*k + c is the c-th lattice
/// coordinate of f(basis_i).
///
/// Lattice basis (as columns) of the maps with bounded monodromy. For each inequality
/// row v, cycles supported on the edges where v vanishes on the length must have
/// f-values on which v vanishes too.
IntMatrix bounded_sublattice(const MetricGraph& g, const HomologyData& h);

std::optional<MonodromyWitness> find_monodromy_violation(const TropCocycle& f);

struct TroJacGroup {
  FgAbelianGroup group;
  HomologyData homology;
  IntMatrix bounded_basis;    // (g*k) x r, columns span the bounded sublattice
  IntMatrix relation_matrix;  // r x g, column a = pairing image of basis_a in bounded_basis coordinates
};

/// Hom(H1, M^gp)^bounded / H1 with H1 mapped in by the intersection pairing.
TroJacGroup trojac(const MetricGraph& g);

FgAbelianGroup trojac_torsion(const MetricGraph& g, const Integer& n);

/// Pushes f forward along the contraction by h. Throws NotBoundedMonodromyError
/// when f itself violates bounded monodromy.
TropCocycle specialize(const TropCocycle& f, const MonoidHom& h);

/// Sandpile group: cokernel of the Laplacian with the row and column of the
/// lexicographically smallest vertex removed. Requires the monoid N and unit lengths.
FgAbelianGroup critical_group(const MetricGraph& g);

/// As critical_group, deleting the given vertex instead.
FgAbelianGroup critical_group(const MetricGraph& g, const std::string& deleted_vertex);

/// Replaces every edge of length m over N by a chain of m unit edges.
MetricGraph unit_subdivision(const MetricGraph& g);

}  // namespace tropjac
