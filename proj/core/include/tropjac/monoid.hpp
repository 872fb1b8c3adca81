#pragma once

#include <cstddef>
#include <vector>

#include "tropjac/integer_matrix.hpp"

namespace tropjac {

/// A sharp fine saturated monoid M = {m in Z^k : A m >= 0}, given together with
/// the extreme rays of its cone. Construction checks that the pair is consistent:
/// rank(A) = k (sharpness), rays are nonzero elements of M spanning Q^k, and no
/// row of A vanishes on every ray.
class SharpFsMonoid {
 public:
  SharpFsMonoid(IntMatrix inequalities, std::vector<LatticeVector> rays);

  /// N^k: identity inequalities, standard basis rays.
  static SharpFsMonoid free(std::size_t k);

  std::size_t rank() const { return inequalities_.cols(); }
  const IntMatrix& inequalities() const { return inequalities_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }

  /// True when this is N^1 with the standard presentation.
  bool is_standard_n() const;

  friend bool operator==(const SharpFsMonoid& a, const SharpFsMonoid& b) {
    return a.inequalities_ == b.inequalities_ && a.rays_ == b.rays_;
  }

 private:
  IntMatrix inequalities_;
  std::vector<LatticeVector> rays_;
};

bool contains(const SharpFsMonoid& m, const LatticeVector& x);

/// a <= b in the monoidal order, i.e. b - a in M.
bool leq(const SharpFsMonoid& m, const LatticeVector& a, const LatticeVector& b);

/// Whether -N ell <= x <= N ell for some N >= 0. Decided by the face criterion:
/// every inequality vanishing on ell must vanish on x.
bool is_bounded_by(const SharpFsMonoid& m, const LatticeVector& x, const LatticeVector& ell);

/// A group homomorphism source^gp -> target^gp, given by a (target.rank x source.rank) matrix.
struct MonoidHom {
  SharpFsMonoid source;
  SharpFsMonoid target;
  IntMatrix matrix;

  LatticeVector operator()(const LatticeVector& x) const { return matrix * x; }
};

/// Cone inclusion checked on the source rays.
bool validate_hom(const MonoidHom& h);

/// second after first.
MonoidHom compose(const MonoidHom& second, const MonoidHom& first);

MonoidHom identity_hom(const SharpFsMonoid& m);

}  // namespace tropjac
