#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ginv {

/// Exact Gaussian rational: a complex number whose real and imaginary parts
/// are arbitrary-precision fractions kept in lowest terms with positive
/// denominators (mpq_class canonical form).
class Scalar {
public:
  Scalar() = default;
  Scalar(std::int64_t re) : re_(static_cast<long>(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar rational(std::int64_t num, std::int64_t den);
  static Scalar imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  /// |z|^2, exact and real.
  mpq_class norm_sq() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse; throws SingularMatrixError on zero.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical text: "n", "n/d", "n/d+m/ki", "m/ki" (no whitespace inside).
  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace ginv
