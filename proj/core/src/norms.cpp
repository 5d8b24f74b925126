#include "ginv/norms.hpp"

#include <Eigen/SVD>

namespace ginv {

Eigen::MatrixXcd to_float(const Matrix& a) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).to_complex();
    }
  }
  return out;
}

double spectral_norm(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0 || a.is_zero()) return 0.0;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_float(a));
  return svd.singularValues()(0);
}

mpq_class frobenius_norm_sq(const Matrix& a) {
  mpq_class sum = 0;
  for (const auto& v : a.entries()) sum += v.norm_sq();
  return sum;
}

}  // namespace ginv
