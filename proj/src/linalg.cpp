#include "linalg.hpp"

#include <algorithm>
#include <map>

namespace dern {

namespace {

using IMat = std::vector<std::vector<Int>>;

// Clears denominators row by row; row scaling changes neither row space nor
// nullspace.
IMat to_integer_rows(const MatrixQ& m) {
  IMat b(m.rows, std::vector<Int>(m.cols));
  for (int i = 0; i < m.rows; ++i) {
    Int l = 1;
    for (int j = 0; j < m.cols; ++j) l = lcm(l, m.at(i, j).get_den());
    for (int j = 0; j < m.cols; ++j) {
      Int num = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
      b[i][j] = num;
    }
  }
  return b;
}

Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) fail(Errc::internal, "fraction-free elimination: inexact division");
  return q;
}

}  // namespace

RrefResult rref(const MatrixQ& m) {
  IMat b = to_integer_rows(m);
  const int rows = m.rows, cols = m.cols;
  std::vector<int> pivots;
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(b[i][c]) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) std::swap(b[p], b[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        b[i][j] = exact_div(b[r][c] * b[i][j] - b[i][c] * b[r][j], prev);
      b[i][c] = 0;
    }
    prev = b[r][c];
    pivots.push_back(c);
    ++r;
  }
  // Rational back-substitution to the canonical reduced form.
  MatrixQ out(rows, cols);
  const int rk = static_cast<int>(pivots.size());
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = Rat(b[i][j]) / Rat(b[i][pivots[i]]);
  for (int i = rk - 1; i >= 0; --i)
    for (int k = 0; k < i; ++k) {
      Rat f = out.at(k, pivots[i]);
      if (sgn(f) == 0) continue;
      for (int j = pivots[i]; j < cols; ++j) out.at(k, j) -= f * out.at(i, j);
    }
  return {std::move(out), std::move(pivots)};
}

int rank_of(const MatrixQ& m) { return rref(m).rank(); }

SubspaceBasis nullspace(const MatrixQ& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  MatrixQ basis(m.cols, m.cols - rr.rank());
  int k = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    basis.at(f, k) = 1;
    for (int i = 0; i < rr.rank(); ++i) basis.at(rr.pivots[i], k) = -rr.r.at(i, f);
    ++k;
  }
  return basis;
}

std::optional<VecQ> solve(const MatrixQ& m, const VecQ& b) {
  MatrixQ aug = hstack(m, from_cols(m.rows, {b}));
  RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols) return std::nullopt;
  VecQ x(static_cast<size_t>(m.cols));
  for (int i = 0; i < rr.rank(); ++i) x[rr.pivots[i]] = rr.r.at(i, m.cols);
  return x;
}

namespace {

// Characteristic polynomial of an integer matrix, monic, coefficients from
// leading to constant (Faddeev-LeVerrier; the trace divisions are exact).
std::vector<Int> charpoly_int(const IMat& b) {
  const int n = static_cast<int>(b.size());
  std::vector<Int> coef(static_cast<size_t>(n) + 1);
  coef[0] = 1;
  IMat mk(n, std::vector<Int>(n));  // running matrix M_k
  IMat tmp(n, std::vector<Int>(n));
  // M_1 = B
  for (int i = 0; i < n; ++i) mk[i] = b[i];
  for (int k = 1; k <= n; ++k) {
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += mk[i][i];
    coef[k] = exact_div(-tr, Int(k));
    if (k == n) break;
    for (int i = 0; i < n; ++i) mk[i][i] += coef[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int l = 0; l < n; ++l)
          if (sgn(b[i][l]) != 0 && sgn(mk[l][j]) != 0) s += b[i][l] * mk[l][j];
        tmp[i][j] = s;
      }
    std::swap(mk, tmp);
  }
  return coef;
}

}  // namespace

std::vector<Rat> rational_eigenvalues(const MatrixQ& m) {
  if (!m.is_square()) fail(Errc::ambient_mismatch, "rational_eigenvalues needs a square matrix");
  const int n = m.rows;
  if (n == 0) return {};
  // Scale the whole matrix by one common denominator so eigenvalues become
  // integers of the scaled matrix divided by d.
  Int d = 1;
  for (const auto& x : m.a) d = lcm(d, x.get_den());
  IMat b(n, std::vector<Int>(n));
  Int radius = 0;
  for (int i = 0; i < n; ++i) {
    Int rowsum = 0;
    for (int j = 0; j < n; ++j) {
      b[i][j] = m.at(i, j).get_num() * (d / m.at(i, j).get_den());
      rowsum += abs(b[i][j]);
    }
    if (rowsum > radius) radius = rowsum;
  }
  std::vector<Int> p = charpoly_int(b);
  // Strip the zero eigenvalue first: trailing zero coefficients.
  int zero_mult = 0;
  while (zero_mult < n && sgn(p[p.size() - 1 - zero_mult]) == 0) ++zero_mult;
  std::vector<Int> q(p.begin(), p.end() - zero_mult);
  std::vector<Rat> vals;
  if (zero_mult > 0) vals.push_back(Rat(0));
  const Int& low = q.back();  // nonzero now unless the polynomial was x^n
  if (q.size() > 1) {
    for (Int t = -radius; t <= radius; ++t) {
      if (sgn(t) == 0) continue;
      if (!mpz_divisible_p(low.get_mpz_t(), t.get_mpz_t())) continue;
      // Horner
      Int acc = 0;
      for (const auto& c : q) acc = acc * t + c;
      if (sgn(acc) == 0) vals.push_back(Rat(t) / Rat(d));
    }
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

EigenSplit eigenspaces(const MatrixQ& m) {
  EigenSplit es;
  es.values = rational_eigenvalues(m);
  int total = 0;
  for (const auto& lam : es.values) {
    MatrixQ shifted = m;
    for (int i = 0; i < m.rows; ++i) shifted.at(i, i) -= lam;
    SubspaceBasis sp = nullspace(shifted);
    total += sp.cols;
    es.spaces.push_back(std::move(sp));
  }
  es.complete = (total == m.rows);
  return es;
}

SpanSolver::SpanSolver(const MatrixQ& basis_cols) {
  ambient = basis_cols.rows;
  dim = basis_cols.cols;
  RrefResult rr = rref(hstack(basis_cols, MatrixQ::identity(ambient)));
  // With the identity appended the rank is always the ambient dimension; the
  // basis columns are independent exactly when they all carry pivots.
  for (int i = 0; i < dim; ++i)
    if (i >= rr.rank() || rr.pivots[i] != i)
      fail(Errc::internal, "SpanSolver: basis columns not independent");
  e = MatrixQ(ambient, ambient);
  for (int i = 0; i < ambient; ++i)
    for (int j = 0; j < ambient; ++j) e.at(i, j) = rr.r.at(i, dim + j);
  pivots.assign(rr.pivots.begin(), rr.pivots.end());
}

std::optional<VecQ> SpanSolver::coords(const VecQ& v) const {
  VecQ w = e.apply(v);
  for (int i = dim; i < ambient; ++i)
    if (sgn(w[i]) != 0) return std::nullopt;
  w.resize(static_cast<size_t>(dim));
  return w;
}

bool SpanSolver::contains(const VecQ& v) const { return coords(v).has_value(); }

std::vector<WeightSpace> simultaneous_eigenspaces(const std::vector<MatrixQ>& ms) {
  if (ms.empty()) fail(Errc::ambient_mismatch, "simultaneous_eigenspaces: no matrices");
  const int n = ms[0].rows;
  for (const auto& m : ms)
    if (!m.is_square() || m.rows != n)
      fail(Errc::ambient_mismatch, "simultaneous_eigenspaces: sizes differ");
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = i + 1; j < ms.size(); ++j)
      if (!(ms[i].mul(ms[j]) == ms[j].mul(ms[i])))
        fail(Errc::not_commuting, "simultaneous_eigenspaces: matrices do not commute");

  std::vector<WeightSpace> blocks{{VecQ{}, MatrixQ::identity(n)}};
  for (const auto& m : ms) {
    std::vector<WeightSpace> next;
    for (auto& blk : blocks) {
      // Restriction of m to the invariant block, in block coordinates.
      SpanSolver ss(blk.space);
      MatrixQ restr(blk.space.cols, blk.space.cols);
      for (int j = 0; j < blk.space.cols; ++j) {
        auto c = ss.coords(m.apply(blk.space.col(j)));
        if (!c)
          fail(Errc::not_diagonalizable_over_q,
               "simultaneous_eigenspaces: block not invariant");
        restr.set_col(j, *c);
      }
      EigenSplit es = eigenspaces(restr);
      if (!es.complete)
        fail(Errc::not_diagonalizable_over_q,
             "simultaneous_eigenspaces: restriction not diagonalizable over Q");
      for (size_t k = 0; k < es.values.size(); ++k) {
        WeightSpace ws;
        ws.weight = blk.weight;
        ws.weight.push_back(es.values[k]);
        ws.space = column_space_basis(blk.space.mul(es.spaces[k]));
        next.push_back(std::move(ws));
      }
    }
    blocks = std::move(next);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const WeightSpace& a, const WeightSpace& b) { return a.weight < b.weight; });
  return blocks;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.rows != b.rows) fail(Errc::ambient_mismatch, "intersect: ambient dimensions differ");
  if (a.cols == 0 || b.cols == 0) return MatrixQ(a.rows, 0);
  MatrixQ joint = hstack(a, b.scaled(Rat(-1)));
  SubspaceBasis ns = nullspace(joint);
  MatrixQ first(a.cols, ns.cols);
  for (int i = 0; i < a.cols; ++i)
    for (int j = 0; j < ns.cols; ++j) first.at(i, j) = ns.at(i, j);
  return column_space_basis(a.mul(first));
}

SubspaceBasis column_space_basis(const MatrixQ& m) {
  RrefResult rr = rref(m.transpose());
  MatrixQ basis(m.rows, rr.rank());
  for (int i = 0; i < rr.rank(); ++i)
    for (int j = 0; j < m.rows; ++j) basis.at(j, i) = rr.r.at(i, j);
  return basis;
}

bool in_span(const SubspaceBasis& basis, const VecQ& v) {
  if (vec_is_zero(v)) return true;
  if (basis.cols == 0) return false;
  return solve(basis, v).has_value();
}

bool subspace_contained(const SubspaceBasis& small, const SubspaceBasis& big) {
  for (int j = 0; j < small.cols; ++j)
    if (!in_span(big, small.col(j))) return false;
  return true;
}

bool is_positive_definite(const MatrixQ& g) {
  if (!g.is_square()) return false;
  if (!(g == g.transpose())) return false;
  MatrixQ w = g;
  for (int k = 0; k < w.rows; ++k) {
    if (sgn(w.at(k, k)) <= 0) return false;
    for (int i = k + 1; i < w.rows; ++i) {
      Rat f = w.at(i, k) / w.at(k, k);
      if (sgn(f) == 0) continue;
      for (int j = k; j < w.cols; ++j) w.at(i, j) -= f * w.at(k, j);
    }
  }
  return true;
}

MatrixQ inverse(const MatrixQ& m) {
  if (!m.is_square()) fail(Errc::ambient_mismatch, "inverse of non-square matrix");
  RrefResult rr = rref(hstack(m, MatrixQ::identity(m.rows)));
  if (rr.rank() < m.rows) fail(Errc::no_solution, "inverse of singular matrix");
  MatrixQ inv(m.rows, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) inv.at(i, j) = rr.r.at(i, m.rows + j);
  return inv;
}

}  // namespace dern
