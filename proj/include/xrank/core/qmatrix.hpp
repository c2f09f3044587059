#pragma once

#include <vector>

#include "xrank/core/linalg.hpp"
#include "xrank/core/rational.hpp"

namespace xrank {

/// Dense exact rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols = -1);
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<Rational>& entries() const { return e_; }

  std::vector<std::vector<Rational>> to_rows() const;
  QMatrix transposed() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

struct KernelResult {
  int rank = 0;
  std::vector<std::vector<Rational>> basis;  // reduced-echelon normalized
};

/// Exact rank and kernel by fraction-free elimination on integer-scaled rows.
KernelResult kernel(const QMatrix& m);
int rank(const QMatrix& m);
Rational determinant(const QMatrix& m);

}  // namespace xrank
