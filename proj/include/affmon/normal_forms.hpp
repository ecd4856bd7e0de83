#pragma once

// Exact integer normal forms over Eigen dense matrices. All routines are
// templated on the integer scalar; they only need +, -, *, floor division,
// comparison and abs, so any exact ring type works (GMP-backed Integer in
// this project, plain long in some tests).

#include "affmon/scalar.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace affmon {

namespace detail {

template <class Int>
Int floor_quot(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <class Int>
Int abs_of(const Int& a) {
  return a < 0 ? Int(-a) : a;
}

}  // namespace detail

template <class Int>
struct HermiteDecomposition {
  Matrix<Int> form;       ///< transform * input, row echelon, reduced above pivots
  Matrix<Int> transform;  ///< unimodular, rows x rows
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_columns;
};

/// Row-style Hermite normal form: pivots are positive, entries above a pivot
/// lie in [0, pivot), zero rows come last. The form is unique for the row
/// lattice of the input.
template <class Int>
HermiteDecomposition<Int> hermite_decompose(const Matrix<Int>& input) {
  HermiteDecomposition<Int> out;
  Matrix<Int>& h = out.form;
  Matrix<Int>& u = out.transform;
  h = input;
  const Eigen::Index rows = h.rows();
  const Eigen::Index cols = h.cols();
  u = Matrix<Int>::Identity(rows, rows);

  Eigen::Index p = 0;
  for (Eigen::Index j = 0; j < cols && p < rows; ++j) {
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = p; i < rows; ++i) {
        if (h(i, j) == 0) continue;
        if (best < 0 || detail::abs_of(h(i, j)) < detail::abs_of(h(best, j))) best = i;
      }
      if (best < 0) break;
      if (best != p) {
        h.row(p).swap(h.row(best));
        u.row(p).swap(u.row(best));
      }
      bool cleared = true;
      for (Eigen::Index i = p + 1; i < rows; ++i) {
        if (h(i, j) == 0) continue;
        const Int q = detail::floor_quot(h(i, j), h(p, j));
        h.row(i) -= q * h.row(p);
        u.row(i) -= q * u.row(p);
        if (h(i, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(p, j) == 0) continue;
    if (h(p, j) < 0) {
      h.row(p) = -h.row(p);
      u.row(p) = -u.row(p);
    }
    for (Eigen::Index i = 0; i < p; ++i) {
      const Int q = detail::floor_quot(h(i, j), h(p, j));
      if (q != 0) {
        h.row(i) -= q * h.row(p);
        u.row(i) -= q * u.row(p);
      }
    }
    out.pivot_columns.push_back(j);
    ++p;
  }
  out.rank = p;
  return out;
}

/// Nonzero rows of the Hermite normal form of the row lattice.
template <class Int>
Matrix<Int> hermite_basis(const Matrix<Int>& generators) {
  auto dec = hermite_decompose(generators);
  return dec.form.topRows(dec.rank);
}

/// Z-basis (as rows) of { y in Z^rows : y^T m = 0 }.
template <class Int>
Matrix<Int> left_integer_kernel(const Matrix<Int>& m) {
  auto dec = hermite_decompose(m);
  Matrix<Int> k = dec.transform.bottomRows(m.rows() - dec.rank);
  return hermite_basis<Int>(k);
}

/// Z-basis (as rows) of { x in Z^cols : m x = 0 }.
template <class Int>
Matrix<Int> integer_kernel(const Matrix<Int>& m) {
  return left_integer_kernel<Int>(Matrix<Int>(m.transpose()));
}

template <class Int>
struct SmithDecomposition {
  Matrix<Int> left;        ///< P, unimodular rows x rows
  Matrix<Int> diagonal;    ///< P * input * Q
  Matrix<Int> right;       ///< Q, unimodular cols x cols
  std::vector<Int> invariant_factors;  ///< positive, each divides the next
};

/// Smith normal form with both unimodular transforms.
template <class Int>
SmithDecomposition<Int> smith_decompose(const Matrix<Int>& input) {
  SmithDecomposition<Int> out;
  Matrix<Int>& d = out.diagonal;
  Matrix<Int>& p = out.left;
  Matrix<Int>& q = out.right;
  d = input;
  const Eigen::Index rows = d.rows();
  const Eigen::Index cols = d.cols();
  p = Matrix<Int>::Identity(rows, rows);
  q = Matrix<Int>::Identity(cols, cols);

  const Eigen::Index n = std::min(rows, cols);
  for (Eigen::Index t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (d(i, j) != 0 &&
              (bi < 0 || detail::abs_of(d(i, j)) < detail::abs_of(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) goto done;
      if (bi != t) {
        d.row(t).swap(d.row(bi));
        p.row(t).swap(p.row(bi));
      }
      if (bj != t) {
        d.col(t).swap(d.col(bj));
        q.col(t).swap(q.col(bj));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Int f = detail::floor_quot(d(i, t), d(t, t));
        d.row(i) -= f * d.row(t);
        p.row(i) -= f * p.row(t);
        if (d(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Int f = detail::floor_quot(d(t, j), d(t, t));
        d.col(j) -= f * d.col(t);
        q.col(j) -= f * q.col(t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the whole trailing block
      Eigen::Index offender = -1;
      for (Eigen::Index i = t + 1; i < rows && offender < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offender = i;
            break;
          }
      if (offender < 0) break;
      d.row(t) += d.row(offender);
      p.row(t) += p.row(offender);
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      p.row(t) = -p.row(t);
    }
    out.invariant_factors.push_back(d(t, t));
  }
done:
  return out;
}

/// Reduced row echelon form over a field; returns the pivot columns.
template <class Field>
std::vector<Eigen::Index> reduce_row_echelon(Matrix<Field>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < m.cols() && r < m.rows(); ++j) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i)
      if (m(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.row(r).swap(m.row(piv));
    const Field lead = m(r, j);
    m.row(r) /= lead;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != r && m(i, j) != 0) {
        const Field f = m(i, j);
        m.row(i) -= f * m.row(r);
      }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

template <class Field>
Eigen::Index field_rank(Matrix<Field> m) {
  return static_cast<Eigen::Index>(reduce_row_echelon(m).size());
}

/// Basis (as rows) of the right nullspace { x : m x = 0 } over a field.
template <class Field>
Matrix<Field> nullspace(Matrix<Field> m) {
  const Eigen::Index cols = m.cols();
  const auto pivots = reduce_row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto j : pivots) is_pivot[static_cast<std::size_t>(j)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < cols; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);

  Matrix<Field> basis = Matrix<Field>::Zero(static_cast<Eigen::Index>(free_cols.size()), cols);
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const auto row = static_cast<Eigen::Index>(b);
    basis(row, free_cols[b]) = Field(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(row, pivots[r]) = -m(static_cast<Eigen::Index>(r), free_cols[b]);
  }
  return basis;
}

}  // namespace affmon
