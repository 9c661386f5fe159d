#pragma once

// Eigen integration for the exact scalar types, plus the small dense-matrix
// algorithms the gadget analysis needs. Everything here is templated on the
// scalar so the same code runs over Cyc12 (concrete points) and MPoly
// (symbolic identities).

#include <Eigen/Core>

#include <algorithm>
#include <string>
#include <vector>

#include "holant/cyclo.hpp"
#include "holant/errors.hpp"
#include "holant/poly.hpp"

namespace Eigen {

template <>
struct NumTraits<holant::Cyc12> : GenericNumTraits<holant::Cyc12> {
  using Real = holant::Cyc12;
  using NonInteger = holant::Cyc12;
  using Nested = holant::Cyc12;
  using Literal = holant::Cyc12;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128,
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<holant::MPoly> : GenericNumTraits<holant::MPoly> {
  using Real = holant::MPoly;
  using NonInteger = holant::MPoly;
  using Nested = holant::MPoly;
  using Literal = holant::MPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 256,
    MulCost = 1024,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace holant {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CycMatrix = Matrix<Cyc12>;
using CycVector = Vector<Cyc12>;
using PolyMatrix = Matrix<MPoly>;
using PolyVector = Vector<MPoly>;

namespace detail {

template <typename Scalar>
inline bool scalar_is_zero(const Scalar& s) {
  return s.is_zero();
}

template <typename Scalar>
Scalar laplace_det(const Matrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Scalar det(0);
  for (Eigen::Index col = 0; col < n; ++col) {
    if (scalar_is_zero(m(0, col))) continue;
    Matrix<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, mc = 0; c < n; ++c)
        if (c != col) minor(r - 1, mc++) = m(r, c);
    Scalar term = m(0, col) * laplace_det(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace detail

/// Determinant by cofactor expansion along the first row (adequate up to 6x6).
template <typename Derived>
typename Derived::Scalar cofactor_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NonSquare, "determinant of a " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
  Matrix<Scalar> dense = m;
  return detail::laplace_det(dense);
}

template <typename Derived>
typename Derived::Scalar matrix_trace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Scalar t(0);
  for (Eigen::Index k = 0; k < std::min(m.rows(), m.cols()); ++k) t += m(k, k);
  return t;
}

/// Coefficients [1, c_1, ..., c_n] of det(x I - m), where c_k is (-1)^k times the
/// sum of the principal k-minors. For 2x2 this is (1, -trace, det).
template <typename Derived>
std::vector<typename Derived::Scalar> charpoly_coefficients(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NonSquare, "characteristic polynomial of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1, Scalar(0));
  coeffs[0] = Scalar(1);
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<Eigen::Index> idx;
    for (int k = 0; k < n; ++k)
      if (mask & (1U << k)) idx.push_back(k);
    const auto size = static_cast<Eigen::Index>(idx.size());
    Matrix<Scalar> minor(size, size);
    for (Eigen::Index r = 0; r < size; ++r)
      for (Eigen::Index c = 0; c < size; ++c) minor(r, c) = m(idx[r], idx[c]);
    Scalar d = detail::laplace_det(minor);
    if (size % 2 == 0) {
      coeffs[idx.size()] += d;
    } else {
      coeffs[idx.size()] -= d;
    }
  }
  return coeffs;
}

/// Evaluates sum_k coeffs[k] * m^(n-k) for coefficients ordered as returned by
/// charpoly_coefficients; the zero matrix is expected (Cayley-Hamilton).
template <typename Derived>
Matrix<typename Derived::Scalar> apply_charpoly(const Eigen::MatrixBase<Derived>& m,
                                                const std::vector<typename Derived::Scalar>& coeffs) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(n, n);
  for (const Scalar& c : coeffs) {
    Matrix<Scalar> next = acc * m;
    for (Eigen::Index k = 0; k < n; ++k) next(k, k) += c;
    acc = std::move(next);
  }
  return acc;
}

template <typename DerivedA, typename DerivedB>
Vector<typename DerivedA::Scalar> cross3(const Eigen::MatrixBase<DerivedA>& u, const Eigen::MatrixBase<DerivedB>& v) {
  using Scalar = typename DerivedA::Scalar;
  Vector<Scalar> w(3);
  w(0) = u(1) * v(2) - u(2) * v(1);
  w(1) = u(2) * v(0) - u(0) * v(2);
  w(2) = u(0) * v(1) - u(1) * v(0);
  return w;
}

/// det[u v] for two 2-vectors; zero iff they are linearly dependent.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar det2(const Eigen::MatrixBase<DerivedA>& u, const Eigen::MatrixBase<DerivedB>& v) {
  return u(0) * v(1) - u(1) * v(0);
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!detail::scalar_is_zero(m(r, c))) return false;
  return true;
}

template <typename Scalar>
Matrix<Scalar> identity_matrix(Eigen::Index n) {
  Matrix<Scalar> id = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) id(k, k) = Scalar(1);
  return id;
}

template <typename DerivedA, typename DerivedB>
bool matrices_equal(const Eigen::MatrixBase<DerivedA>& l, const Eigen::MatrixBase<DerivedB>& r) {
  if (l.rows() != r.rows() || l.cols() != r.cols()) return false;
  for (Eigen::Index i = 0; i < l.rows(); ++i)
    for (Eigen::Index j = 0; j < l.cols(); ++j)
      if (l(i, j) != r(i, j)) return false;
  return true;
}

/// Rank of a 2x3 matrix is 2 iff some 2x2 minor is nonzero.
template <typename Derived>
bool has_full_row_rank_2x3(const Eigen::MatrixBase<Derived>& f) {
  return !is_zero_matrix(cross3(f.row(0).transpose(), f.row(1).transpose()));
}

CycMatrix evaluate(const PolyMatrix& m, const ScalarBindings& bindings);
PolyMatrix subst(const PolyMatrix& m, const PolyBindings& bindings);
/// Parses a row-major list of polynomial literals.
PolyMatrix parse_poly_matrix(Eigen::Index rows, Eigen::Index cols, const std::vector<std::string>& entries);
std::string to_string(const CycMatrix& m);
std::string to_string(const PolyMatrix& m);

}  // namespace holant
