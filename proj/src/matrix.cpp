#include "k3tau/matrix.hpp"

namespace k3tau {

Matrix matrix_from(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

QMatrix to_rational(const Matrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

QVector to_rational(const Vector& v) {
  QVector q;
  q.reserve(v.size());
  for (const Integer& x : v) q.emplace_back(x);
  return q;
}

std::optional<Matrix> to_integer(const QMatrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) return std::nullopt;
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

std::optional<Vector> to_integer(const QVector& v) {
  Vector out;
  out.reserve(v.size());
  for (const Rational& x : v) {
    if (!is_integral(x)) return std::nullopt;
    out.push_back(x.get_num());
  }
  return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t n = 0, m = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
  }
  Matrix out(n, m);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row count mismatch");
  Matrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

Integer determinant(const Matrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  Matrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Gauss-Jordan on [A | B]; returns rank of A and leaves the reduced system in place.
std::vector<std::size_t> gauss_jordan(QMatrix& a, QMatrix& b) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    b.swap_rows(row, p);
    Rational inv = 1 / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t j = 0; j < b.cols(); ++j) b(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = -a(i, col);
      a.add_row_multiple(i, row, f);
      b.add_row_multiple(i, row, f);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  QMatrix a = m;
  QMatrix b = QMatrix::identity(m.rows());
  if (gauss_jordan(a, b).size() != m.rows()) throw std::domain_error("inverse of a singular matrix");
  return b;
}

std::optional<QMatrix> solve_rational(const QMatrix& basis, const QMatrix& v) {
  if (basis.rows() != v.rows()) throw std::invalid_argument("solve_rational: row count mismatch");
  QMatrix a = basis;
  QMatrix b = v;
  auto pivots = gauss_jordan(a, b);
  if (pivots.size() != basis.cols()) throw std::domain_error("solve_rational: basis is rank deficient");
  for (std::size_t i = pivots.size(); i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) != 0) return std::nullopt;
  QMatrix x(basis.cols(), v.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) x(pivots[i], j) = b(i, j);
  return x;
}

Matrix coordinates_in_basis(const Matrix& basis, const Matrix& vectors) {
  auto x = solve_rational(to_rational(basis), to_rational(vectors));
  if (!x) throw std::domain_error("vector outside the rational span of the basis");
  auto xi = to_integer(*x);
  if (!xi) throw std::domain_error("vector outside the integer span of the basis");
  return *xi;
}

Integer dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector scale(const Vector& v, const Integer& k) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * k;
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace k3tau
