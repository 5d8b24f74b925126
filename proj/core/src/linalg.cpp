#include "ginv/linalg.hpp"

#include <utility>

#include "ginv/error.hpp"

namespace ginv {

namespace {

void swap_rows(Matrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

// Eliminates in place on `work`; when `track` is set the same row operations
// are replayed on `transform`.
std::vector<std::size_t> gauss_jordan(Matrix& work, Matrix* transform) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < work.cols() && row < work.rows(); ++col) {
    std::size_t p = row;
    while (p < work.rows() && work(p, col).is_zero()) ++p;
    if (p == work.rows()) continue;

    swap_rows(work, row, p);
    if (transform) swap_rows(*transform, row, p);

    const Scalar inv = work(row, col).inverse();
    for (std::size_t j = col; j < work.cols(); ++j) work(row, j) *= inv;
    if (transform) {
      for (std::size_t j = 0; j < transform->cols(); ++j) (*transform)(row, j) *= inv;
    }

    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r == row || work(r, col).is_zero()) continue;
      const Scalar factor = work(r, col);
      for (std::size_t j = col; j < work.cols(); ++j) {
        if (!work(row, j).is_zero()) work(r, j) -= factor * work(row, j);
      }
      if (transform) {
        for (std::size_t j = 0; j < transform->cols(); ++j) {
          if (!(*transform)(row, j).is_zero()) (*transform)(r, j) -= factor * (*transform)(row, j);
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& a) {
  RrefResult out{a, {}, 0, Matrix::identity(a.rows())};
  out.pivot_cols = gauss_jordan(out.rref, &out.transform);
  out.rank = out.pivot_cols.size();
  return out;
}

std::size_t rank(const Matrix& a) {
  Matrix work = a;
  return gauss_jordan(work, nullptr).size();
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("determinant: matrix must be square");
  const std::size_t n = a.rows();
  if (n == 0) return Scalar(1);

  Matrix m = a;
  Scalar prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      swap_rows(m, p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? -det : det;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse: matrix must be square");
  RrefResult r = rref(a);
  if (r.rank != a.rows()) throw SingularMatrixError("inverse: matrix is singular");
  return std::move(r.transform);
}

bool subspace_leq(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("subspace_leq: row count mismatch");
  return rank(hstack(b, a)) == rank(b);
}

bool same_range(const Matrix& a, const Matrix& b) {
  return subspace_leq(a, b) && subspace_leq(b, a);
}

Matrix null_space_basis(const Matrix& a) {
  const RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  Matrix basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis(fc, k) = Scalar(1);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
      basis(r.pivot_cols[i], k) = -r.rref(i, fc);
    }
  }
  return basis;
}

FullRankFactorization full_rank_factorization(const Matrix& a) {
  const RrefResult r = rref(a);
  return {a.select_columns(r.pivot_cols), r.rref.top_rows(r.rank), r.rank};
}

Matrix pseudo_inverse(const Matrix& a) {
  const auto [f, g, r] = full_rank_factorization(a);
  const Matrix fs = f.adjoint();
  const Matrix gs = g.adjoint();
  return gs * inverse(g * gs) * inverse(fs * f) * fs;
}

}  // namespace ginv
