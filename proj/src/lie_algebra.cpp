#include "lie_algebra.hpp"

namespace dern {

VecQ LieAlgebra::bracket(const VecQ& x, const VecQ& y) const {
  VecQ r = vec_zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rat f = x[i] * y[j];
      axpy(r, f, c[i][j]);
    }
  }
  return r;
}

VecQ LieAlgebra::bracket_with_basis(const VecQ& v, int k) const {
  VecQ r = vec_zero(dim);
  for (int m = 0; m < dim; ++m)
    if (sgn(v[m]) != 0) axpy(r, v[m], c[m][k]);
  return r;
}

MatrixQ LieAlgebra::ad(const VecQ& x) const {
  MatrixQ m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (int k = 0; k < dim; ++k)
        if (sgn(c[i][j][k]) != 0) m.at(k, j) += x[i] * c[i][j][k];
    }
  }
  return m;
}

Rat LieAlgebra::killing_form(const VecQ& x, const VecQ& y) const {
  Rat s = 0;
  for (int i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim; ++j)
      if (sgn(y[j]) != 0) s += x[i] * y[j] * killing.at(i, j);
  }
  return s;
}

VecQ LieAlgebra::basis_vec(int i) const {
  VecQ v = vec_zero(dim);
  v[i] = 1;
  return v;
}

Element bracket(const Element& x, const Element& y) {
  if (x.alg != y.alg) fail(Errc::algebra_mismatch, "bracket of elements of different algebras");
  return {x.alg, x.alg->bracket(x.coords, y.coords)};
}

Rat killing_form(const Element& x, const Element& y) {
  if (x.alg != y.alg) fail(Errc::algebra_mismatch, "Killing form across different algebras");
  return x.alg->killing_form(x.coords, y.coords);
}

AlgebraPtr make_algebra(int dim, std::vector<std::string> labels,
                        std::vector<std::vector<VecQ>> c, MatrixQ theta,
                        MatrixQ a_basis) {
  auto g = std::make_shared<LieAlgebra>();
  g->dim = dim;
  if (labels.empty())
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  if (static_cast<int>(labels.size()) != dim)
    fail(Errc::parse_error, "label count does not match dimension");
  g->labels = std::move(labels);
  if (static_cast<int>(c.size()) != dim)
    fail(Errc::parse_error, "structure constant tensor has wrong shape");
  for (auto& row : c) {
    if (static_cast<int>(row.size()) != dim)
      fail(Errc::parse_error, "structure constant tensor has wrong shape");
    for (auto& v : row)
      if (static_cast<int>(v.size()) != dim)
        fail(Errc::parse_error, "structure constant tensor has wrong shape");
  }
  g->c = std::move(c);

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < dim; ++k)
        if (g->c[i][j][k] != -g->c[j][i][k])
          fail(Errc::jacobi_fails, "structure constants are not antisymmetric");

  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        VecQ s = g->bracket_with_basis(g->c[i][j], k);
        axpy(s, Rat(1), g->bracket_with_basis(g->c[j][k], i));
        axpy(s, Rat(1), g->bracket_with_basis(g->c[k][i], j));
        if (!vec_is_zero(s)) fail(Errc::jacobi_fails, "Jacobi identity fails on a basis triple");
      }

  if (theta.rows != dim || theta.cols != dim)
    fail(Errc::theta_not_involutive, "theta has wrong shape");
  if (!(theta.mul(theta) == MatrixQ::identity(dim)))
    fail(Errc::theta_not_involutive, "theta squared is not the identity");
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      VecQ lhs = theta.apply(g->c[i][j]);
      VecQ rhs = g->bracket(theta.col(i), theta.col(j));
      if (lhs != rhs) fail(Errc::theta_not_involutive, "theta is not an automorphism");
    }
  g->theta = std::move(theta);

  // Killing cache: B(e_i, e_j) = sum_{a,b} c[i][b][a] c[j][a][b]
  g->killing = MatrixQ(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      Rat s = 0;
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
          if (sgn(g->c[i][b][a]) != 0 && sgn(g->c[j][a][b]) != 0)
            s += g->c[i][b][a] * g->c[j][a][b];
      g->killing.at(i, j) = s;
      g->killing.at(j, i) = s;
    }
  {
    MatrixQ kt = g->theta.transpose().mul(g->killing).mul(g->theta);
    if (!(kt == g->killing))
      fail(Errc::theta_not_involutive, "Killing form is not theta-invariant");
  }

  if (a_basis.rows != 0 && a_basis.rows != dim)
    fail(Errc::ambient_mismatch, "designated a lives in the wrong ambient space");
  g->a_basis = std::move(a_basis);
  return g;
}

CartanPair cartan_decompose(const LieAlgebra& g) {
  MatrixQ id = MatrixQ::identity(g.dim);
  SubspaceBasis k = nullspace(g.theta.sub(id));
  SubspaceBasis p = nullspace(g.theta.add(id));
  if (k.cols + p.cols != g.dim)
    fail(Errc::theta_not_involutive, "theta eigenspaces do not span");
  auto closed_into = [&](const SubspaceBasis& u, const SubspaceBasis& v,
                         const SubspaceBasis& target) {
    for (int a = 0; a < u.cols; ++a)
      for (int b = 0; b < v.cols; ++b)
        if (!in_span(target, g.bracket(u.col(a), v.col(b)))) return false;
    return true;
  };
  if (!closed_into(k, k, k) || !closed_into(k, p, p) || !closed_into(p, p, k))
    fail(Errc::theta_not_involutive, "Cartan decomposition bracket relations fail");
  return {std::move(k), std::move(p)};
}

Rat InnerProduct::pair(const VecQ& x, const VecQ& y) const {
  Rat s = 0;
  for (int i = 0; i < gram.rows; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < gram.cols; ++j)
      if (sgn(y[j]) != 0 && sgn(gram.at(i, j)) != 0) s += x[i] * y[j] * gram.at(i, j);
  }
  return s;
}

InnerProduct inner_product_build(const LieAlgebra& g, const Rat& c) {
  if (sgn(c) <= 0) fail(Errc::non_positive_c, "inner product normalization must be positive");
  MatrixQ gram = g.killing.mul(g.theta).scaled(-c);
  if (!(gram == gram.transpose()))
    fail(Errc::not_positive_definite, "inner product Gram matrix is not symmetric");
  if (!is_positive_definite(gram))
    fail(Errc::not_positive_definite, "inner product Gram matrix is not positive definite");
  // ad-transpose law: G ad(Y) = -ad(theta Y)^T G for every basis Y
  for (int y = 0; y < g.dim; ++y) {
    MatrixQ lhs = gram.mul(g.ad(g.basis_vec(y)));
    MatrixQ rhs = g.ad(g.theta.col(y)).transpose().mul(gram).scaled(Rat(-1));
    if (!(lhs == rhs))
      fail(Errc::not_positive_definite, "inner product fails the ad-transpose law");
  }
  return {c, std::move(gram)};
}

SubspaceBasis centralizer(const LieAlgebra& g, const SubspaceBasis& s,
                          const SubspaceBasis& within) {
  if (s.rows != g.dim || within.rows != g.dim)
    fail(Errc::ambient_mismatch, "centralizer: subspace of a different algebra");
  if (within.cols == 0 || s.cols == 0) return within;
  MatrixQ stacked(0, within.cols);
  for (int j = 0; j < s.cols; ++j) {
    MatrixQ rows = g.ad(s.col(j)).mul(within);
    stacked = stacked.rows ? vstack(stacked, rows) : rows;
  }
  SubspaceBasis t = nullspace(stacked);
  return column_space_basis(within.mul(t));
}

SubspaceBasis subalgebra_generated(const LieAlgebra& g, const SubspaceBasis& seed) {
  SubspaceBasis cur = column_space_basis(seed);
  for (;;) {
    std::vector<VecQ> cols = to_cols(cur);
    size_t base = cols.size();
    for (size_t a = 0; a < base; ++a)
      for (size_t b = a + 1; b < base; ++b) cols.push_back(g.bracket(cols[a], cols[b]));
    SubspaceBasis next = column_space_basis(from_cols(g.dim, cols));
    if (next.cols == cur.cols) return next;
    cur = std::move(next);
  }
}

bool is_semisimple(const LieAlgebra& g) { return rank_of(g.killing) == g.dim; }

}  // namespace dern
