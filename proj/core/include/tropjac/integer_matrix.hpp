#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tropjac {

using Integer = mpz_class;

/// An element of Z^k. Arithmetic is exact; mixing lengths throws.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t size) : entries_(size, Integer(0)) {}
  explicit LatticeVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  LatticeVector(std::initializer_list<long> entries);

  static LatticeVector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& scalar);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) { return a *= Integer(-1); }
  friend LatticeVector operator*(const Integer& s, LatticeVector a) { return a *= s; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.entries_ < b.entries_; }

  std::string to_string() const;

 private:
  std::vector<Integer> entries_;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<LatticeVector>& cols, std::size_t rows);
  static IntMatrix diagonal(const std::vector<Integer>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LatticeVector row(std::size_t r) const;
  LatticeVector column(std::size_t c) const;
  std::vector<LatticeVector> columns() const;

  IntMatrix transpose() const;
  LatticeVector operator*(const LatticeVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  /// Stacks `other` below this matrix; column counts must agree.
  void append_rows(const IntMatrix& other);

  bool is_zero() const;
  bool is_diagonal() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Floor division and the matching nonnegative remainder.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace tropjac
