#include "matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace dern {

Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

VecQ vec_zero(int n) { return VecQ(static_cast<size_t>(n)); }

bool vec_is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Rat dot(const VecQ& a, const VecQ& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(VecQ& y, const Rat& c, const VecQ& x) {
  if (sgn(c) == 0) return;
  for (size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += c * x[i];
}

VecQ vec_scale(const VecQ& v, const Rat& c) {
  VecQ r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

VecQ vec_sub(const VecQ& a, const VecQ& b) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VecQ vec_add(const VecQ& a, const VecQ& b) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rat>> rs) {
  rows = static_cast<int>(rs.size());
  cols = rows ? static_cast<int>(rs.begin()->size()) : 0;
  a.reserve(static_cast<size_t>(rows) * cols);
  for (const auto& r : rs) {
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) a.push_back(x);
  }
}

MatrixQ MatrixQ::identity(int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool MatrixQ::is_zero() const {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

MatrixQ MatrixQ::mul(const MatrixQ& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
  MatrixQ r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        if (sgn(o.at(k, j)) != 0) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

MatrixQ MatrixQ::add(const MatrixQ& o) const {
  MatrixQ r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

MatrixQ MatrixQ::sub(const MatrixQ& o) const {
  MatrixQ r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

MatrixQ MatrixQ::scaled(const Rat& c) const {
  MatrixQ r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * c;
  return r;
}

VecQ MatrixQ::apply(const VecQ& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("matrix apply shape mismatch");
  VecQ r(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (sgn(at(i, j)) != 0 && sgn(v[j]) != 0) r[i] += at(i, j) * v[j];
  return r;
}

Rat MatrixQ::trace() const {
  Rat t = 0;
  for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
  return t;
}

VecQ MatrixQ::col(int j) const {
  VecQ v(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

VecQ MatrixQ::row_vec(int i) const {
  VecQ v(static_cast<size_t>(cols));
  for (int j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

void MatrixQ::set_col(int j, const VecQ& v) {
  for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

std::string MatrixQ::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows; ++i) {
    os << (i ? "\n[" : "[");
    for (int j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j).get_str();
    os << "]";
  }
  return os.str();
}

MatrixQ from_cols(int ambient, const std::vector<VecQ>& cols) {
  MatrixQ m(ambient, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(cols[j].size()) != ambient)
      throw std::invalid_argument("from_cols: ambient dimension mismatch");
    m.set_col(j, cols[j]);
  }
  return m;
}

std::vector<VecQ> to_cols(const MatrixQ& m) {
  std::vector<VecQ> cs;
  cs.reserve(m.cols);
  for (int j = 0; j < m.cols; ++j) cs.push_back(m.col(j));
  return cs;
}

MatrixQ hstack(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows != b.rows) throw std::invalid_argument("hstack row mismatch");
  MatrixQ r(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
  }
  return r;
}

MatrixQ vstack(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols != b.cols) throw std::invalid_argument("vstack col mismatch");
  MatrixQ r(a.rows + b.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) r.at(a.rows + i, j) = b.at(i, j);
  return r;
}

}  // namespace dern
