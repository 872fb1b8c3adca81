#include "tropjac/abgroup.hpp"

#include <algorithm>
#include <utility>

#include "tropjac/errors.hpp"

namespace tropjac {

namespace {

// Smith reduction with smallest-absolute-value pivoting. When Track is false the
// transforms are not maintained (used for cokernels of large Laplacians).
template <bool Track>
class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : a_(m),
        u_(Track ? IntMatrix::identity(m.rows()) : IntMatrix()),
        v_(Track ? IntMatrix::identity(m.cols()) : IntMatrix()) {}

  void run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!bring_min_to(t, /*whole_block=*/true)) break;
      reduce_pivot(t);
      if (a_(t, t) < 0) negate_row(t);
    }
  }

  IntMatrix& matrix() { return a_; }
  IntMatrix& left() { return u_; }
  IntMatrix& right() { return v_; }

 private:
  // Moves the nonzero entry of least absolute value to (t, t). With whole_block the
  // search covers the trailing submatrix, otherwise only row t and column t.
  bool bring_min_to(std::size_t t, bool whole_block) {
    std::size_t best_r = a_.rows(), best_c = a_.cols();
    Integer best_abs;
    auto consider = [&](std::size_t r, std::size_t c) {
      const Integer& x = a_(r, c);
      if (x == 0) return;
      if (best_r == a_.rows() || abs(x) < best_abs) {
        best_abs = abs(x);
        best_r = r;
        best_c = c;
      }
    };
    if (whole_block) {
      for (std::size_t r = t; r < a_.rows(); ++r)
        for (std::size_t c = t; c < a_.cols(); ++c) consider(r, c);
    } else {
      for (std::size_t r = t; r < a_.rows(); ++r) consider(r, t);
      for (std::size_t c = t + 1; c < a_.cols(); ++c) consider(t, c);
    }
    if (best_r == a_.rows()) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  void reduce_pivot(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        add_row_multiple(i, t, -floor_div(a_(i, t), a_(t, t)), t);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        add_col_multiple(j, t, -floor_div(a_(t, j), a_(t, t)), t);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_min_to(t, /*whole_block=*/false);
        continue;
      }
      // Row and column t are clear; enforce divisibility on the trailing block.
      const Integer& p = a_(t, t);
      std::size_t bad_row = a_.rows();
      for (std::size_t i = t + 1; i < a_.rows() && bad_row == a_.rows(); ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (!mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == a_.rows()) return;
      add_row_multiple(t, bad_row, Integer(1), t);
    }
  }

  // row[target] += factor * row[source]; entries of a_ left of `from` are zero in source.
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor, std::size_t from) {
    for (std::size_t c = from; c < a_.cols(); ++c) {
      if (a_(source, c) == 0) continue;
      a_(target, c) += factor * a_(source, c);
    }
    if constexpr (Track) {
      for (std::size_t c = 0; c < u_.cols(); ++c) {
        if (u_(source, c) == 0) continue;
        u_(target, c) += factor * u_(source, c);
      }
    }
  }

  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor, std::size_t from) {
    for (std::size_t r = from; r < a_.rows(); ++r) {
      if (a_(r, source) == 0) continue;
      a_(r, target) += factor * a_(r, source);
    }
    if constexpr (Track) {
      for (std::size_t r = 0; r < v_.rows(); ++r) {
        if (v_(r, source) == 0) continue;
        v_(r, target) += factor * v_(r, source);
      }
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    if constexpr (Track)
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    if constexpr (Track)
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    if constexpr (Track)
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
};

std::size_t nonzero_prefix(const IntMatrix& d) {
  std::size_t r = 0;
  while (r < std::min(d.rows(), d.cols()) && d(r, r) != 0) ++r;
  return r;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithReducer<true> reducer(m);
  reducer.run();
  return {std::move(reducer.left()), std::move(reducer.matrix()), std::move(reducer.right())};
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
  SmithReducer<false> reducer(m);
  reducer.run();
  const IntMatrix& d = reducer.matrix();
  std::vector<Integer> diag;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) diag.push_back(d(i, i));
  return diag;
}

FgAbelianGroup FgAbelianGroup::from_cyclic(std::size_t free_rank, const std::vector<Integer>& cyclic_orders) {
  std::vector<Integer> orders;
  for (const Integer& c : cyclic_orders) {
    if (c < 1) throw InputError("cyclic factor order must be >= 1, got " + c.get_str());
    if (c > 1) orders.push_back(c);
  }
  // Pairwise (gcd, lcm) replacement yields the divisibility chain.
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      Integer g = gcd(orders[i], orders[j]);
      Integer l = lcm(orders[i], orders[j]);
      orders[i] = g;
      orders[j] = l;
    }
  FgAbelianGroup out;
  out.free_rank_ = free_rank;
  for (auto& c : orders)
    if (c > 1) out.factors_.push_back(std::move(c));
  return out;
}

std::optional<Integer> FgAbelianGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Integer> orders = a.factors_;
  orders.insert(orders.end(), b.factors_.begin(), b.factors_.end());
  return FgAbelianGroup::from_cyclic(a.free_rank_ + b.free_rank_, orders);
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " x ";
    out += part;
  };
  if (free_rank_ == 1) append("Z");
  if (free_rank_ > 1) append("Z^" + std::to_string(free_rank_));
  for (const auto& d : factors_) append("Z/" + d.get_str());
  return out;
}

FgAbelianGroup cokernel(const IntMatrix& m) {
  std::vector<Integer> diag = smith_invariants(m);
  std::size_t nonzero = 0;
  std::vector<Integer> orders;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    orders.push_back(abs(d));
  }
  return FgAbelianGroup::from_cyclic(m.rows() - nonzero, orders);
}

FgAbelianGroup torsion_part(const FgAbelianGroup& g, const Integer& n) {
  if (n < 1) throw InputError("torsion order must be >= 1");
  std::vector<Integer> orders;
  for (const auto& d : g.invariant_factors()) orders.push_back(gcd(d, n));
  return FgAbelianGroup::from_cyclic(0, orders);
}

HomGroup hom_group(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  // Hom(Z, Z) = Z, Hom(Z, Z/e) = Z/e, Hom(Z/d, Z) = 0, Hom(Z/d, Z/e) = Z/gcd(d, e).
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < a.free_rank(); ++i)
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  for (const auto& d : a.invariant_factors())
    for (const auto& e : b.invariant_factors()) orders.push_back(gcd(d, e));
  HomGroup out;
  out.group = FgAbelianGroup::from_cyclic(a.free_rank() * b.free_rank(), orders);
  out.finiteness_violated = a.free_rank() > 0 && b.free_rank() > 0;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  SmithDecomposition snf = smith_normal_form(m);
  const std::size_t r = nonzero_prefix(snf.diagonal);
  IntMatrix basis(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) basis(i, j - r) = snf.right(i, j);
  return basis;
}

namespace {

// Solves basis * x = target given the Smith decomposition of basis.
std::optional<LatticeVector> solve_with(const SmithDecomposition& snf, std::size_t cols, const LatticeVector& target) {
  const std::size_t r = nonzero_prefix(snf.diagonal);
  LatticeVector rhs = snf.left * target;
  LatticeVector z(cols);
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i < r) {
      const Integer& d = snf.diagonal(i, i);
      if (!mpz_divisible_p(rhs[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(z[i].get_mpz_t(), rhs[i].get_mpz_t(), d.get_mpz_t());
    } else if (rhs[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.right * z;
}

}  // namespace

std::optional<LatticeVector> solve_integer(const IntMatrix& basis, const LatticeVector& target) {
  if (target.size() != basis.rows()) throw InputError("dimension mismatch in integer solve");
  if (basis.cols() == 0) {
    if (target.is_zero()) return LatticeVector(0);
    return std::nullopt;
  }
  return solve_with(smith_normal_form(basis), basis.cols(), target);
}

std::optional<IntMatrix> solve_integer(const IntMatrix& basis, const IntMatrix& targets) {
  if (targets.rows() != basis.rows()) throw InputError("dimension mismatch in integer solve");
  IntMatrix solution(basis.cols(), targets.cols());
  if (basis.cols() == 0) {
    if (targets.is_zero()) return solution;
    return std::nullopt;
  }
  SmithDecomposition snf = smith_normal_form(basis);
  for (std::size_t j = 0; j < targets.cols(); ++j) {
    auto x = solve_with(snf, basis.cols(), targets.column(j));
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < basis.cols(); ++i) solution(i, j) = (*x)[i];
  }
  return solution;
}

}  // namespace tropjac
