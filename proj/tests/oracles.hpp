#pragma once

// Reference computations for the test suites. Each one takes a different
// route from the library code it checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "ginv/matrix.hpp"
#include "ginv/norms.hpp"

namespace ginv::oracle {

/// Leibniz expansion over all permutations.
inline Scalar leibniz_det(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Scalar term(1);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Largest k with a nonzero k x k minor. Exponential; small matrices only.
inline std::size_t minor_rank(const Matrix& a) {
  for (std::size_t k = std::min(a.rows(), a.cols()); k > 0; --k) {
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::vector<std::size_t> cols(k);
      std::iota(cols.begin(), cols.end(), 0);
      do {
        Matrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
        }
        if (!leibniz_det(sub).is_zero()) return k;
      } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
  }
  return 0;
}

/// Every column of a lies in R(b), one column at a time.
inline bool columns_in_range(const Matrix& a, const Matrix& b) {
  const std::size_t rb = minor_rank(b);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (minor_rank(hstack(b, a.column(c))) != rb) return false;
  }
  return true;
}

/// Power iteration on a* a from the all-ones vector and every basis vector;
/// the largest Rayleigh quotient wins.
inline double power_iteration_norm(const Matrix& a, int iterations = 20000) {
  const Eigen::MatrixXcd m = to_float(a);
  const Eigen::MatrixXcd h = m.adjoint() * m;
  const Eigen::Index n = h.cols();
  if (n == 0) return 0.0;
  std::vector<Eigen::VectorXcd> starts;
  starts.push_back(Eigen::VectorXcd::Ones(n));
  for (Eigen::Index i = 0; i < n; ++i) starts.push_back(Eigen::VectorXcd::Unit(n, i));
  double best = 0.0;
  for (auto v : starts) {
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < iterations; ++it) {
      Eigen::VectorXcd w = h * v;
      const double nw = w.norm();
      if (nw == 0.0) break;
      v = w / nw;
      const double next = std::real(v.dot(h * v));
      if (std::abs(next - lambda) <= 1e-15 * std::max(1.0, next)) {
        lambda = next;
        break;
      }
      lambda = next;
    }
    best = std::max(best, lambda);
  }
  return std::sqrt(best);
}

/// Floating-point pseudo-inverse through a complete orthogonal decomposition.
inline Eigen::MatrixXcd float_pinv(const Matrix& a) {
  return to_float(a).completeOrthogonalDecomposition().pseudoInverse();
}

}  // namespace ginv::oracle
