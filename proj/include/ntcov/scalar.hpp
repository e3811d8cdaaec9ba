#pragma once

#include "ntcov/numtheory.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ntcov {

using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

/// Exact complex scalar re + im*i with reduced rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0)
      : re_(std::move(re)), im_(std::move(im)) {}
  template <std::integral I>
  GaussianRational(I re) : re_(re) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational x,
                                    const GaussianRational& y) {
    return x += y;
  }
  friend GaussianRational operator-(GaussianRational x,
                                    const GaussianRational& y) {
    return x -= y;
  }
  friend GaussianRational operator*(const GaussianRational& x,
                                    const GaussianRational& y) {
    if (x.im_ == 0 && y.im_ == 0) return {x.re_ * y.re_};
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    return *this = *this * o;
  }

  friend GaussianRational operator/(const GaussianRational& x,
                                    const GaussianRational& y) {
    const Rational norm = y.re_ * y.re_ + y.im_ * y.im_;
    if (norm == 0) throw std::domain_error("GaussianRational: division by zero");
    return x * GaussianRational(y.re_ / norm, -y.im_ / norm);
  }

  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace ntcov
