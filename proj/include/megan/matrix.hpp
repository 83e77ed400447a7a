#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "megan/errors.hpp"

namespace megan {

// Dense row-major matrix of doubles. The whole engine is desk-scale, so a
// single flat container is all we need.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> d;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), d(static_cast<size_t>(r) * c, 0.0) {}
  Matrix(int r, int c, double fill) : rows(r), cols(c), d(static_cast<size_t>(r) * c, fill) {}

  double& at(int r, int c) { return d[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return d[static_cast<size_t>(r) * cols + c]; }
  size_t size() const { return d.size(); }
  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
  std::string shape_str() const { return std::to_string(rows) + "x" + std::to_string(cols); }

  bool all_finite() const {
    for (double v : d)
      if (!std::isfinite(v)) return false;
    return true;
  }

  static Matrix from_rows(const std::vector<std::vector<double>>& rows_in) {
    if (rows_in.empty()) return Matrix(0, 0);
    Matrix m(static_cast<int>(rows_in.size()), static_cast<int>(rows_in[0].size()));
    for (size_t r = 0; r < rows_in.size(); ++r) {
      if (rows_in[r].size() != rows_in[0].size())
        throw dimension_error("ragged rows in matrix literal");
      for (size_t c = 0; c < rows_in[r].size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows_in[r][c];
    }
    return m;
  }

  static Matrix row_vector(const std::vector<double>& v) {
    Matrix m(1, static_cast<int>(v.size()));
    m.d = v;
    return m;
  }

  static Matrix col_vector(const std::vector<double>& v) {
    Matrix m(static_cast<int>(v.size()), 1);
    m.d = v;
    return m;
  }
};

inline bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.d == b.d;
}

// c += a * b
inline void matmul_acc(const Matrix& a, const Matrix& b, Matrix& c) {
  // ikj order keeps the inner loop contiguous in b and c.
  for (int i = 0; i < a.rows; ++i) {
    const double* arow = &a.d[static_cast<size_t>(i) * a.cols];
    double* crow = &c.d[static_cast<size_t>(i) * c.cols];
    for (int k = 0; k < a.cols; ++k) {
      const double aik = arow[k];
      if (aik == 0.0) continue;
      const double* brow = &b.d[static_cast<size_t>(k) * b.cols];
      for (int j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
    }
  }
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows)
    throw shape_error("matmul " + a.shape_str() + " * " + b.shape_str());
  Matrix c(a.rows, b.cols);
  matmul_acc(a, b, c);
  return c;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

inline void add_inplace(Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw shape_error("add " + a.shape_str() + " + " + b.shape_str());
  for (size_t i = 0; i < a.d.size(); ++i) a.d[i] += b.d[i];
}

inline double dot_rows(const Matrix& a, int ra, const Matrix& b, int rb) {
  double s = 0.0;
  for (int c = 0; c < a.cols; ++c) s += a.at(ra, c) * b.at(rb, c);
  return s;
}

}  // namespace megan
