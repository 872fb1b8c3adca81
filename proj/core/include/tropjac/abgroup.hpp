#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropjac/integer_matrix.hpp"

namespace tropjac {

/// U * m * V == D with U, V unimodular and D diagonal, d1 | d2 | ... | dr, zeros last.
struct SmithDecomposition {
  IntMatrix left;      // U
  IntMatrix diagonal;  // D
  IntMatrix right;     // V
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Diagonal of the Smith form only; skips tracking the transforms.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// A finitely generated abelian group Z^r + Z/d1 + ... + Z/dk in invariant-factor form.
/// Factors are >= 2 and form a divisibility chain, so structural equality is isomorphism.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  /// Z^free_rank plus the direct sum of Z/c for each c in `cyclic_orders` (any c >= 1, any order).
  static FgAbelianGroup from_cyclic(std::size_t free_rank, const std::vector<Integer>& cyclic_orders);
  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup free(std::size_t rank) { return from_cyclic(rank, {}); }
  static FgAbelianGroup cyclic(const Integer& n) { return from_cyclic(0, {n}); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Order of a finite group; nullopt when the free rank is positive.
  std::optional<Integer> order() const;
  /// The torsion subgroup.
  FgAbelianGroup torsion() const { return from_cyclic(0, factors_); }

  friend FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

  /// "Z^2 x Z/2 x Z/6"; the free part of rank one is written "Z"; the trivial group is "0".
  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

/// Z^rows / (column span of m).
FgAbelianGroup cokernel(const IntMatrix& m);

/// The n-torsion subgroup g[n].
FgAbelianGroup torsion_part(const FgAbelianGroup& g, const Integer& n);

struct HomGroup {
  FgAbelianGroup group;
  /// Both arguments infinite: the result is still Hom, but not finite.
  bool finiteness_violated = false;
};

HomGroup hom_group(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Columns form a saturated lattice basis of {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Integer solution x of basis * x = target, if any.
std::optional<LatticeVector> solve_integer(const IntMatrix& basis, const LatticeVector& target);

/// Column-by-column integer solve of basis * X = targets; nullopt if any column fails.
std::optional<IntMatrix> solve_integer(const IntMatrix& basis, const IntMatrix& targets);

}  // namespace tropjac
