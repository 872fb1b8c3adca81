#include "tropjac/monoid.hpp"

#include <string>

#include "tropjac/errors.hpp"

namespace tropjac {

namespace {

void require_rank(const SharpFsMonoid& m, const LatticeVector& x) {
  if (x.size() != m.rank()) {
    throw InputError("dimension mismatch: vector of length " + std::to_string(x.size()) + " in monoid of rank " +
                     std::to_string(m.rank()));
  }
}

}  // namespace

SharpFsMonoid::SharpFsMonoid(IntMatrix inequalities, std::vector<LatticeVector> rays)
    : inequalities_(std::move(inequalities)), rays_(std::move(rays)) {
  const std::size_t k = inequalities_.cols();
  if (k == 0) throw InputError("monoid rank must be positive");
  if (tropjac::rank(inequalities_) < k) throw InputError("monoid not sharp: rank(A) < k");
  LatticeVector ray_sum(k);
  for (const auto& r : rays_) {
    if (r.size() != k) throw InputError("monoid ray " + r.to_string() + " has wrong dimension");
    if (r.is_zero()) throw InputError("monoid ray must be nonzero");
    LatticeVector values = inequalities_ * r;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] < 0)
        throw InputError("monoid ray " + r.to_string() + " violates inequality row " +
                         inequalities_.row(i).to_string());
    ray_sum += r;
  }
  if (rays_.empty() || tropjac::rank(IntMatrix::from_rows(rays_, k)) < k)
    throw InputError("monoid rays do not span the lattice: cone not full-dimensional");
  LatticeVector on_sum = inequalities_ * ray_sum;
  for (std::size_t i = 0; i < on_sum.size(); ++i)
    if (on_sum[i] == 0)
      throw InputError("inequality row " + inequalities_.row(i).to_string() +
                       " vanishes on every ray: dual pair inconsistent");
}

SharpFsMonoid SharpFsMonoid::free(std::size_t k) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < k; ++i) rays.push_back(LatticeVector::unit(k, i));
  return SharpFsMonoid(IntMatrix::identity(k), std::move(rays));
}

bool SharpFsMonoid::is_standard_n() const { return *this == free(1); }

bool contains(const SharpFsMonoid& m, const LatticeVector& x) {
  require_rank(m, x);
  LatticeVector values = m.inequalities() * x;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < 0) return false;
  return true;
}

bool leq(const SharpFsMonoid& m, const LatticeVector& a, const LatticeVector& b) {
  require_rank(m, a);
  return contains(m, b - a);
}

bool is_bounded_by(const SharpFsMonoid& m, const LatticeVector& x, const LatticeVector& ell) {
  require_rank(m, x);
  if (!contains(m, ell)) throw InputError("bound " + ell.to_string() + " is not an element of the monoid");
  const IntMatrix& a = m.inequalities();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    LatticeVector v = a.row(i);
    if (dot(v, ell) == 0 && dot(v, x) != 0) return false;
  }
  return true;
}

bool validate_hom(const MonoidHom& h) {
  if (h.matrix.rows() != h.target.rank() || h.matrix.cols() != h.source.rank()) {
    throw InputError("monoid hom matrix is " + std::to_string(h.matrix.rows()) + "x" + std::to_string(h.matrix.cols()) +
                     ", expected " + std::to_string(h.target.rank()) + "x" + std::to_string(h.source.rank()));
  }
  for (const auto& r : h.source.rays())
    if (!contains(h.target, h.matrix * r)) return false;
  return true;
}

MonoidHom compose(const MonoidHom& second, const MonoidHom& first) {
  if (!(first.target == second.source)) throw InputError("cannot compose monoid homs: monoids differ");
  return MonoidHom{first.source, second.target, second.matrix * first.matrix};
}

MonoidHom identity_hom(const SharpFsMonoid& m) { return MonoidHom{m, m, IntMatrix::identity(m.rank())}; }

}  // namespace tropjac
