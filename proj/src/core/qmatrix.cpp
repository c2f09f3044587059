#include "xrank/core/qmatrix.hpp"

#include <gmpxx.h>

namespace xrank {

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, int cols) {
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  QMatrix m(static_cast<int>(rows.size()), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InvalidInput("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  return m;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

std::vector<std::vector<Rational>> QMatrix::to_rows() const {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back(at(i, j));
  return out;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidInput("matrix-vector size mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product size mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

namespace {

// Integer row echelon form by Bareiss elimination. Returns pivot columns; rows
// beyond the rank are dropped.
std::vector<int> bareiss_echelon(std::vector<std::vector<mpz_class>>& m, int cols) {
  std::vector<int> pivots;
  const std::size_t rows = m.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpz_class piv = m[r][static_cast<std::size_t>(c)];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class f = m[i][static_cast<std::size_t>(c)];
      for (int j = 0; j < cols; ++j) {
        mpz_class v = piv * m[i][static_cast<std::size_t>(j)] - f * m[r][static_cast<std::size_t>(j)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][static_cast<std::size_t>(j)] = v;
      }
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::vector<std::vector<mpz_class>> integer_rows(const QMatrix& a) {
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).den().get_mpz_t());
    for (int j = 0; j < a.cols(); ++j) m[static_cast<std::size_t>(i)].push_back(a.at(i, j).num() * (l / a.at(i, j).den()));
  }
  return m;
}

}  // namespace

KernelResult kernel(const QMatrix& a) {
  auto m = integer_rows(a);
  auto pivots = bareiss_echelon(m, a.cols());
  const std::size_t r = pivots.size();
  // Back substitution to reduced echelon form over Q.
  std::vector<std::vector<Rational>> red(r);
  for (std::size_t i = 0; i < r; ++i)
    for (int j = 0; j < a.cols(); ++j) red[i].push_back(Rational(m[i][static_cast<std::size_t>(j)]));
  for (std::size_t i = r; i-- > 0;) {
    auto pc = static_cast<std::size_t>(pivots[i]);
    Rational k = red[i][pc].inverse();
    for (auto& x : red[i]) x *= k;
    for (std::size_t u = 0; u < i; ++u) {
      if (red[u][pc].is_zero()) continue;
      Rational f = red[u][pc];
      for (std::size_t j = pc; j < red[u].size(); ++j) red[u][j] -= f * red[i][j];
    }
  }
  KernelResult out;
  out.rank = static_cast<int>(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(a.cols()));
    v[static_cast<std::size_t>(f)] = Rational(1);
    for (std::size_t i = 0; i < r; ++i) v[static_cast<std::size_t>(pivots[i])] = -red[i][static_cast<std::size_t>(f)];
    out.basis.push_back(std::move(v));
  }
  return out;
}

int rank(const QMatrix& a) {
  auto m = integer_rows(a);
  return static_cast<int>(bareiss_echelon(m, a.cols()).size());
}

Rational determinant(const QMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  return mat_det(a.to_rows(), Rational());
}

}  // namespace xrank
