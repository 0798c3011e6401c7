#include "k3tau/normal_forms.hpp"

#include <algorithm>

namespace k3tau {

namespace {

Integer truncated_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  Matrix d = input;
  Matrix u = Matrix::identity(m);
  Matrix v = Matrix::identity(n);
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      // smallest nonzero |entry| in the active block
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == m || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = truncated_quotient(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = truncated_quotient(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the rest of the active block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithForm out{u, d, v, {}};
  out.invariants.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.invariants.push_back(d(t, t));
  return out;
}

HermiteForm hermite_normal_form(const Matrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  Matrix h = input;
  Matrix w = Matrix::identity(m);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = row; i < m; ++i)
        if (h(i, col) != 0 && (p == m || abs(h(i, col)) < abs(h(p, col)))) p = i;
      if (p == m) break;
      h.swap_rows(row, p);
      w.swap_rows(row, p);
      bool clean = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        Integer q = truncated_quotient(h(i, col), h(row, col));
        h.add_row_multiple(i, row, -q);
        w.add_row_multiple(i, row, -q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      w.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = floor_div(h(i, col), h(row, col));
      if (q == 0) continue;
      h.add_row_multiple(i, row, -q);
      w.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  return HermiteForm{h, w, row};
}

std::size_t rank(const Matrix& m) { return hermite_normal_form(m).rank; }

Matrix integer_kernel(const Matrix& a) {
  const std::size_t n = a.cols();
  HermiteForm hf = hermite_normal_form(a.transpose());
  const std::size_t dim = n - hf.rank;
  Matrix rows(dim, n);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < n; ++j) rows(k, j) = hf.transform(hf.rank + k, j);
  return hermite_normal_form(rows).hermite.transpose();
}

std::optional<Vector> solve_integer(const Matrix& a, const Vector& t) {
  if (t.size() != a.rows()) throw std::invalid_argument("solve_integer: length mismatch");
  // transform * a^T = hermite  =>  a * transform^T = hermite^T
  HermiteForm hf = hermite_normal_form(a.transpose());
  const std::size_t n = a.cols();
  Vector z(n, Integer(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < hf.rank; ++i) {
    while (hf.hermite(i, col) == 0) ++col;
    Integer rhs = t[col];
    for (std::size_t k = 0; k < i; ++k) rhs -= hf.hermite(k, col) * z[k];
    if (!mpz_divisible_p(rhs.get_mpz_t(), hf.hermite(i, col).get_mpz_t())) return std::nullopt;
    mpz_divexact(z[i].get_mpz_t(), rhs.get_mpz_t(), hf.hermite(i, col).get_mpz_t());
    ++col;
  }
  Vector y = hf.transform.transpose() * z;
  if (a * y != t) return std::nullopt;
  return y;
}

bool columns_primitive(const Matrix& columns) {
  if (columns.cols() == 0) return true;
  if (columns.cols() > columns.rows()) return false;
  SmithForm sf = smith_normal_form(columns);
  return std::all_of(sf.invariants.begin(), sf.invariants.end(), [](const Integer& x) { return x == 1; });
}

}  // namespace k3tau
