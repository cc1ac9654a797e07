#pragma once

#include <initializer_list>
#include <vector>

#include "krein/kspace.hpp"

namespace krein::test {

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c =
      static_cast<Eigen::Index>(rows.size() ? rows.begin()->size() : 0);
  Matrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = Scalar(v, 0.0);
    ++i;
  }
  return m;
}

inline Vector vec(std::initializer_list<double> entries) {
  Vector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (double e : entries) v(i++) = Scalar(e, 0.0);
  return v;
}

inline Matrix diag(std::initializer_list<double> entries) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(entries.size()),
                          static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (double e : entries) {
    m(i, i) = Scalar(e, 0.0);
    ++i;
  }
  return m;
}

inline bool approx(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool approx_matrix(const Matrix& a, const Matrix& b,
                          double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).norm() <= tol * std::max(1.0, b.norm());
}

// The three-vector family in diag(1,-1,1) used across the suite.
inline Matrix golden_family3() {
  Matrix m(3, 3);
  m.col(0) = vec({1, 1, -1001});
  m.col(1) = vec({10, -0.005, -5});
  m.col(2) = vec({0, 1, 0});
  return m;
}

}  // namespace krein::test
