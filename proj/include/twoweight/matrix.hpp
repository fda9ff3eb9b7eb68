#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>

#include "twoweight/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<twoweight::Rational> : GenericNumTraits<twoweight::Rational> {
  typedef twoweight::Rational Real;
  typedef twoweight::Rational NonInteger;
  typedef twoweight::Rational Literal;
  typedef twoweight::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(std::numeric_limits<std::int64_t>::max()); }
  static inline Real lowest() { return Real(std::numeric_limits<std::int64_t>::min() + 1); }
};

}  // namespace Eigen

namespace twoweight {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowMajorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<std::int64_t>;
using RationalMatrix = DenseMatrix<Rational>;

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

/// True when every entry of `m` equals `value`.
template <typename Derived>
bool is_constant(const Eigen::MatrixBase<Derived>& m, const typename Derived::Scalar& value) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == value)) return false;
  return true;
}

/// M * J == c * J for the all-ones J, i.e. every row of M sums to c.
template <typename Derived>
bool has_row_sums(const Eigen::MatrixBase<Derived>& m, const typename Derived::Scalar& c) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    typename Derived::Scalar s(0);
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += m(i, j);
    if (!(s == c)) return false;
  }
  return true;
}

/// Smallest positive L such that L * m is integral, together with L * m.
struct ScaledIntegerMatrix {
  IntMatrix values;
  std::int64_t scale = 1;
};

inline ScaledIntegerMatrix scale_to_integer(const RationalMatrix& m) {
  std::int64_t scale = 1;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) scale = lcm64(scale, m(i, j).den());
  ScaledIntegerMatrix out;
  out.scale = scale;
  out.values.resize(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.values(i, j) = (m(i, j) * Rational(scale)).to_integer();
  return out;
}

}  // namespace twoweight
