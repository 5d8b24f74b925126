#include "ginv/scalar.hpp"

#include "ginv/error.hpp"

namespace ginv {

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw SingularMatrixError("zero denominator");
  mpq_class q(static_cast<long>(num), static_cast<long>(den < 0 ? -den : den));
  if (den < 0) q = -q;
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw SingularMatrixError("division by zero scalar");
  if (is_real()) return Scalar(mpq_class(1) / re_);
  const mpq_class n = norm_sq();
  return {re_ / n, -im_ / n};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // Real operands dominate in practice; skip the cross terms when possible.
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw SingularMatrixError("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) {
    out = re_.get_str();
    if (sgn(im_) > 0) out += '+';
  }
  out += im_.get_str();
  out += 'i';
  return out;
}

}  // namespace ginv
