#include "lefsig/exact_linalg.hpp"

#include <algorithm>

#include "lefsig/errors.hpp"

namespace lefsig {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw ValidationError("ragged matrix rows");
    }
    for (std::size_t j = 0; j < c; ++j) {
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<std::vector<Rational>>& columns) {
  const std::size_t c = columns.size();
  const std::size_t r = c == 0 ? 0 : columns.front().size();
  RatMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    if (columns[j].size() != r) {
      throw ValidationError("ragged matrix columns");
    }
    for (std::size_t i = 0; i < r; ++i) {
      m.at(i, j) = columns[j][i];
    }
  }
  return m;
}

namespace detail {

void reduce_content(std::vector<Integer>& v) {
  Integer g = 0;
  for (const Integer& x : v) {
    g = gcd(g, x);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (Integer& x : v) {
    x /= g;
  }
}

std::vector<std::size_t> integer_rref(std::vector<std::vector<Integer>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    if (rows[r][c] < 0) {
      for (Integer& x : rows[r]) x = -x;
    }
    reduce_content(rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      // row_i <- (p/g) row_i - (q/g) row_r keeps entries integral with
      // minimal growth; p/g > 0 preserves earlier pivot signs in row_i.
      const Integer p = rows[r][c];
      const Integer q = rows[i][c];
      const Integer g = gcd(p, q);
      const Integer mi = p / g;
      const Integer mr = q / g;
      for (std::size_t j = 0; j < ncols; ++j) {
        rows[i][j] = mi * rows[i][j] - mr * rows[r][j];
      }
      reduce_content(rows[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Integer>> integer_kernel_basis(std::vector<std::vector<Integer>> rows,
                                                       std::size_t cols) {
  const std::vector<std::size_t> pivots = integer_rref(rows);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Integer scale = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (rows[r][f] != 0) scale = lcm(scale, rows[r][pivots[r]]);
    }
    std::vector<Integer> x(cols, Integer(0));
    x[f] = scale;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (rows[r][f] != 0) {
        x[pivots[r]] = -rows[r][f] * (scale / rows[r][pivots[r]]);
      }
    }
    reduce_content(x);
    for (const Integer& e : x) {
      if (e != 0) {
        if (e < 0) {
          for (Integer& y : x) y = -y;
        }
        break;
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// Clears denominators row by row; row scaling changes neither rank, row span
// nor null space.
static std::vector<std::vector<Integer>> to_integer_rows(const RatMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols(), Integer(0)));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      scale = lcm(scale, Integer(m.at(i, j).get_den()));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m.at(i, j);
      rows[i][j] = Integer(q.get_num()) * (scale / Integer(q.get_den()));
    }
  }
  return rows;
}

}  // namespace detail

std::size_t rank(const RatMatrix& m) {
  auto rows = detail::to_integer_rows(m);
  return detail::integer_rref(rows).size();
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  auto rows = detail::to_integer_rows(m);
  auto integer_basis = detail::integer_kernel_basis(std::move(rows), m.cols());
  std::vector<std::vector<Rational>> basis;
  basis.reserve(integer_basis.size());
  for (const auto& v : integer_basis) {
    std::vector<Rational> q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    basis.push_back(std::move(q));
  }
  return basis;
}

bool in_span(const std::vector<Rational>& v, const RatMatrix& basis_rows) {
  if (v.size() != basis_rows.cols()) {
    throw ValidationError("in_span: vector length does not match matrix width");
  }
  auto rows = detail::to_integer_rows(basis_rows);
  const std::vector<std::size_t> pivots = detail::integer_rref(rows);

  Integer scale = 1;
  for (const Rational& q : v) scale = lcm(scale, Integer(q.get_den()));
  std::vector<Integer> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    w[j] = Integer(v[j].get_num()) * (scale / Integer(v[j].get_den()));
  }

  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t c = pivots[r];
    if (w[c] == 0) continue;
    const Integer p = rows[r][c];
    const Integer q = w[c];
    const Integer g = gcd(p, q);
    const Integer mw = p / g;
    const Integer mr = q / g;
    for (std::size_t j = 0; j < w.size(); ++j) {
      w[j] = mw * w[j] - mr * rows[r][j];
    }
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace lefsig
