#pragma once

#include <initializer_list>
#include <string>

#include "rational.hpp"

namespace dern {

// Dense row-major rational matrix.
struct MatrixQ {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  MatrixQ() = default;
  MatrixQ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  MatrixQ(std::initializer_list<std::initializer_list<Rat>> rs);

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static MatrixQ identity(int n);
  static MatrixQ zero(int r, int c) { return MatrixQ(r, c); }

  bool is_zero() const;
  bool is_square() const { return rows == cols; }
  MatrixQ transpose() const;
  MatrixQ mul(const MatrixQ& o) const;
  MatrixQ add(const MatrixQ& o) const;
  MatrixQ sub(const MatrixQ& o) const;
  MatrixQ scaled(const Rat& c) const;
  VecQ apply(const VecQ& v) const;  // this * v
  Rat trace() const;

  VecQ col(int j) const;
  VecQ row_vec(int i) const;
  void set_col(int j, const VecQ& v);

  bool operator==(const MatrixQ& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  std::string str() const;  // small debug printout
};

// Columns of m listed as vectors; inverse of from_cols.
MatrixQ from_cols(int ambient, const std::vector<VecQ>& cols);
std::vector<VecQ> to_cols(const MatrixQ& m);
MatrixQ hstack(const MatrixQ& a, const MatrixQ& b);
MatrixQ vstack(const MatrixQ& a, const MatrixQ& b);

}  // namespace dern
