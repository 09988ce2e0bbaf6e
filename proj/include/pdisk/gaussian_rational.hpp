#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace pdisk {

/// Exact complex number re + i*im with rational parts.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  GaussianRational(int r) : re(r), im(0) {}  // NOLINT

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const mpq_class d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  mpq_class norm() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  std::string to_string() const { return re.get_str() + (sgn(im) < 0 ? "" : "+") + im.get_str() + "i"; }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

}  // namespace pdisk

namespace Eigen {

template <>
struct NumTraits<pdisk::GaussianRational> : GenericNumTraits<pdisk::GaussianRational> {
  using Real = mpq_class;
  using NonInteger = pdisk::GaussianRational;
  using Nested = pdisk::GaussianRational;
  using Literal = pdisk::GaussianRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 100
  };
};

}  // namespace Eigen
