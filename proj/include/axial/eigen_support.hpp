#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include "axial/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<axial::Scalar> : GenericNumTraits<axial::Scalar> {
  typedef axial::Scalar Real;
  typedef axial::Scalar NonInteger;
  typedef axial::Scalar Nested;
  typedef axial::Scalar Literal;
  static inline Real epsilon() { return axial::Scalar(0); }
  static inline Real dummy_precision() { return axial::Scalar(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 200,
    MulCost = 200
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace axial {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <class K>
bool is_zero(const K& x) {
  return x == K(0);
}
inline bool is_zero(const Scalar& x) { return x.is_zero(); }

template <class K>
bool vec_is_zero(const Vec<K>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) return false;
  return true;
}

template <class K>
bool mat_is_zero(const Mat<K>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class K>
bool vec_equal(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

template <class K>
bool mat_equal(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace axial
