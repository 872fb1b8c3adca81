#include "tropjac/integer_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "tropjac/errors.hpp"

namespace tropjac {

namespace {

void require_same_size(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) {
    throw InputError("dimension mismatch: lattice vectors of length " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  }
}

}  // namespace

LatticeVector::LatticeVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long e : entries) entries_.emplace_back(e);
}

LatticeVector LatticeVector::unit(std::size_t size, std::size_t index) {
  LatticeVector v(size);
  v[index] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

std::string LatticeVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ", ";
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_size(a, b);
  Integer sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long e : r) data_.emplace_back(e);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("dimension mismatch: row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticeVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("dimension mismatch: column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

LatticeVector IntMatrix::row(std::size_t r) const {
  LatticeVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

LatticeVector IntMatrix::column(std::size_t c) const {
  LatticeVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<LatticeVector> IntMatrix::columns() const {
  std::vector<LatticeVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

LatticeVector IntMatrix::operator*(const LatticeVector& v) const {
  if (v.size() != cols_) {
    throw InputError("dimension mismatch: matrix with " + std::to_string(cols_) +
                     " columns applied to vector of length " + std::to_string(v.size()));
  }
  LatticeVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer sum = 0;
    for (std::size_t c = 0; c < cols_; ++c) sum += (*this)(r, c) * v[c];
    out[r] = sum;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("dimension mismatch in matrix product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

void IntMatrix::append_rows(const IntMatrix& other) {
  if (rows_ == 0 && data_.empty()) cols_ = other.cols_;
  if (other.cols_ != cols_) throw InputError("dimension mismatch: cannot stack matrices of different widths");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << ", ";
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << (*this)(r, c);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  // Fraction-free row echelon form.
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer g = gcd(a(r, c), a(i, c));
      Integer fr = a(i, c) / g;
      Integer fi = a(r, c) / g;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * fi - a(r, j) * fr;
    }
    ++r;
  }
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace tropjac
