#include "htype.hpp"

#include <utility>

#include "errors.hpp"

namespace dern {

namespace {

void check_symmetric_posdef(const MatrixQ& g, const char* what) {
  if (!is_positive_definite(g))
    fail(Errc::not_positive_definite, std::string(what) + " Gram matrix is not positive definite");
}

MatrixQ adjoint_wrt(const MatrixQ& gram, const MatrixQ& grami, const MatrixQ& d) {
  return grami.mul(d.transpose().mul(gram));
}

}  // namespace

MetricTwoStep make_two_step(int v_dim, int z_dim,
                            std::vector<std::vector<VecQ>> bracket,
                            MatrixQ gram_v, MatrixQ gram_z) {
  MetricTwoStep m;
  m.v_dim = v_dim;
  m.z_dim = z_dim;
  m.bracket = std::move(bracket);
  m.gram_v = std::move(gram_v);
  m.gram_z = std::move(gram_z);
  if (static_cast<int>(m.bracket.size()) != v_dim)
    fail(Errc::parse_error, "bracket tensor has the wrong shape");
  for (int i = 0; i < v_dim; ++i) {
    if (static_cast<int>(m.bracket[i].size()) != v_dim)
      fail(Errc::parse_error, "bracket tensor has the wrong shape");
    for (int j = 0; j < v_dim; ++j) {
      if (static_cast<int>(m.bracket[i][j].size()) != z_dim)
        fail(Errc::parse_error, "bracket tensor has the wrong shape");
      for (int k = 0; k < z_dim; ++k)
        if (m.bracket[i][j][k] != -m.bracket[j][i][k])
          fail(Errc::parse_error, "bracket tensor is not antisymmetric");
    }
  }
  if (m.gram_v.rows != v_dim || m.gram_v.cols != v_dim || m.gram_z.rows != z_dim ||
      m.gram_z.cols != z_dim)
    fail(Errc::parse_error, "Gram matrix has the wrong shape");
  if (v_dim > 0) check_symmetric_posdef(m.gram_v, "v");
  if (z_dim > 0) check_symmetric_posdef(m.gram_z, "z");
  return m;
}

MetricTwoStep two_step_from_roots(const RootDatum& rd,
                                  const std::vector<int>& v_roots, int z_root) {
  const LieAlgebra& g = *rd.base;
  std::vector<VecQ> vcols;
  for (int r : v_roots)
    for (int c = 0; c < rd.spaces[r].cols; ++c) vcols.push_back(rd.spaces[r].col(c));
  const SubspaceBasis& zb = rd.spaces[z_root];
  int v_dim = static_cast<int>(vcols.size());
  int z_dim = zb.cols;
  SpanSolver zspan(zb);

  std::vector<std::vector<VecQ>> bracket(v_dim, std::vector<VecQ>(v_dim, vec_zero(z_dim)));
  for (int i = 0; i < v_dim; ++i)
    for (int j = i + 1; j < v_dim; ++j) {
      VecQ w = g.bracket(vcols[i], vcols[j]);
      VecQ proj = vec_zero(z_dim);
      if (!vec_is_zero(w)) {
        // the bracket sits inside a single root space, so its z-component
        // is either everything or nothing
        if (auto co = zspan.coords(w)) proj = *co;
      }
      bracket[i][j] = proj;
      bracket[j][i] = vec_scale(proj, Rat(-1));
    }

  MatrixQ gram_v(v_dim, v_dim), gram_z(z_dim, z_dim);
  for (int i = 0; i < v_dim; ++i)
    for (int j = 0; j < v_dim; ++j) gram_v.at(i, j) = rd.ip.pair(vcols[i], vcols[j]);
  for (int i = 0; i < z_dim; ++i)
    for (int j = 0; j < z_dim; ++j) gram_z.at(i, j) = rd.ip.pair(zb.col(i), zb.col(j));
  return make_two_step(v_dim, z_dim, std::move(bracket), std::move(gram_v),
                       std::move(gram_z));
}

JOperator jz(const MetricTwoStep& m, const VecQ& z) {
  if (static_cast<int>(z.size()) != m.z_dim)
    fail(Errc::ambient_mismatch, "z vector has the wrong dimension");
  JOperator op;
  op.z_vector = z;
  // M[x][y] = <Z, [v_x, v_y]>; the defining relation reads G_v J = -M
  MatrixQ mm(m.v_dim, m.v_dim);
  VecQ gz = m.gram_z.apply(z);
  for (int x = 0; x < m.v_dim; ++x)
    for (int y = 0; y < m.v_dim; ++y) mm.at(x, y) = dot(gz, m.bracket[x][y]);
  op.matrix = inverse(m.gram_v).mul(mm.scaled(Rat(-1)));
  for (int x = 0; x < m.v_dim; ++x)
    for (int y = 0; y < m.v_dim; ++y) {
      Rat lhs = dot(op.matrix.col(x), m.gram_v.col(y));
      if (lhs != mm.at(x, y))
        fail(Errc::internal, "J operator fails its defining relation");
    }
  return op;
}

HTypeReport kaplan_check(const MetricTwoStep& m, const Rat& scale) {
  HTypeReport rep;
  std::vector<MatrixQ> js;
  for (int k = 0; k < m.z_dim; ++k) {
    VecQ e = vec_zero(m.z_dim);
    e[k] = 1;
    js.push_back(jz(m, e).matrix);
  }
  for (int i = 0; i < m.z_dim; ++i)
    for (int j = i; j < m.z_dim; ++j) {
      MatrixQ anti = js[i].mul(js[j]).add(js[j].mul(js[i]));
      MatrixQ want =
          MatrixQ::identity(m.v_dim).scaled(Rat(-2) * scale * m.gram_z.at(i, j));
      if (!(anti == want)) {
        rep.witness = "z basis pair (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ") breaks the Clifford relation";
        return rep;
      }
    }
  rep.is_htype = true;
  return rep;
}

bool is_derivation(const MetricTwoStep& m, const GradedEndo& d) {
  if (d.v_block.rows != m.v_dim || d.v_block.cols != m.v_dim ||
      d.z_block.rows != m.z_dim || d.z_block.cols != m.z_dim)
    return false;
  // z is central, so the only law to check is D[v_i, v_j] = [Dv_i, v_j] + [v_i, Dv_j]
  for (int i = 0; i < m.v_dim; ++i)
    for (int j = i + 1; j < m.v_dim; ++j) {
      VecQ lhs = d.z_block.apply(m.bracket[i][j]);
      VecQ rhs = vec_zero(m.z_dim);
      for (int k = 0; k < m.v_dim; ++k) {
        if (sgn(d.v_block.at(k, i)) != 0) axpy(rhs, d.v_block.at(k, i), m.bracket[k][j]);
        if (sgn(d.v_block.at(k, j)) != 0) axpy(rhs, d.v_block.at(k, j), m.bracket[i][k]);
      }
      if (lhs != rhs) return false;
    }
  return true;
}

GradedEndo graded_adjoint(const MetricTwoStep& m, const GradedEndo& d) {
  GradedEndo t;
  t.v_block = m.v_dim ? adjoint_wrt(m.gram_v, inverse(m.gram_v), d.v_block)
                      : MatrixQ(0, 0);
  t.z_block = m.z_dim ? adjoint_wrt(m.gram_z, inverse(m.gram_z), d.z_block)
                      : MatrixQ(0, 0);
  return t;
}

GradedEndo riehm_phi(const MetricTwoStep& m, const VecQ& z1, const VecQ& z2) {
  if (!kaplan_check(m).is_htype)
    fail(Errc::not_h_type, "two-vector generators need an H-type algebra");
  Rat ip12 = dot(z1, m.gram_z.apply(z2));
  if (ip12 != 0) fail(Errc::not_orthogonal, "generator directions must be orthogonal");
  GradedEndo phi;
  phi.v_block = jz(m, z1).matrix.mul(jz(m, z2).matrix);
  phi.z_block = MatrixQ(m.z_dim, m.z_dim);
  VecQ g1 = m.gram_z.apply(z1), g2 = m.gram_z.apply(z2);
  for (int k = 0; k < m.z_dim; ++k) {
    VecQ col = vec_scale(z2, Rat(2) * g1[k]);
    axpy(col, Rat(-2) * g2[k], z1);
    phi.z_block.set_col(k, col);
  }
  GradedEndo adj = graded_adjoint(m, phi);
  if (!(adj.v_block == phi.v_block.scaled(Rat(-1))) ||
      !(adj.z_block == phi.z_block.scaled(Rat(-1))))
    fail(Errc::internal, "two-vector generator is not skew-symmetric");
  if (!is_derivation(m, phi))
    fail(Errc::internal, "two-vector generator is not a derivation");
  return phi;
}

SplitDerivation split_derivation(const MetricTwoStep& m, const GradedEndo& d) {
  if (!is_derivation(m, d)) fail(Errc::not_a_derivation, "input is not a derivation");
  if (!kaplan_check(m).is_htype)
    fail(Errc::not_h_type, "derivation splitting needs an H-type algebra");
  GradedEndo adj = graded_adjoint(m, d);
  auto half = [](const MatrixQ& a, const MatrixQ& b, const Rat& s) {
    return a.add(b.scaled(s)).scaled(ratq(1, 2));
  };
  SplitDerivation out;
  out.sym = {half(d.v_block, adj.v_block, Rat(1)), half(d.z_block, adj.z_block, Rat(1))};
  out.skew = {half(d.v_block, adj.v_block, Rat(-1)),
              half(d.z_block, adj.z_block, Rat(-1))};
  if (!is_derivation(m, out.sym) || !is_derivation(m, out.skew))
    fail(Errc::internal, "symmetric and skew parts must stay derivations");

  // orthogonal basis of z for the two-vector expansion
  std::vector<VecQ> ob;
  for (int k = 0; k < m.z_dim; ++k) {
    VecQ x = vec_zero(m.z_dim);
    x[k] = 1;
    for (const VecQ& y : ob) {
      Rat n2 = dot(y, m.gram_z.apply(y));
      axpy(x, -dot(x, m.gram_z.apply(y)) / n2, y);
    }
    ob.push_back(x);
  }
  out.spin = {MatrixQ(m.v_dim, m.v_dim), MatrixQ(m.z_dim, m.z_dim)};
  SpanSolver zcoords(from_cols(m.z_dim, ob));
  // skew z-block written in the orthogonal basis
  for (size_t i = 0; i < ob.size(); ++i)
    for (size_t j = i + 1; j < ob.size(); ++j) {
      auto si = zcoords.coords(out.skew.z_block.apply(ob[i]));
      if (!si) fail(Errc::internal, "orthogonal basis failed to span z");
      Rat sji = (*si)[j];
      if (sji == 0) continue;
      Rat n2i = dot(ob[i], m.gram_z.apply(ob[i]));
      Rat cij = sji / (2 * n2i);
      GradedEndo phi = riehm_phi(m, ob[i], ob[j]);
      out.spin.v_block = out.spin.v_block.add(phi.v_block.scaled(cij));
      out.spin.z_block = out.spin.z_block.add(phi.z_block.scaled(cij));
    }
  out.zero_centre_skew = {out.skew.v_block.sub(out.spin.v_block),
                          out.skew.z_block.sub(out.spin.z_block)};
  if (!out.zero_centre_skew.z_block.is_zero())
    fail(Errc::internal, "two-vector span missed the skew z-block");
  for (int k = 0; k < m.z_dim; ++k) {
    VecQ e = vec_zero(m.z_dim);
    e[k] = 1;
    MatrixQ j = jz(m, e).matrix;
    if (!(out.zero_centre_skew.v_block.mul(j) == j.mul(out.zero_centre_skew.v_block)))
      fail(Errc::internal, "centre-vanishing skew part does not commute with J");
  }
  if (!is_derivation(m, out.zero_centre_skew) || !is_derivation(m, out.spin))
    fail(Errc::internal, "skew split components must stay derivations");
  return out;
}

SpectrumReport symmetric_spectrum_check(const MetricTwoStep& m, const GradedEndo& d) {
  if (!is_derivation(m, d)) fail(Errc::not_a_derivation, "input is not a derivation");
  if (!kaplan_check(m).is_htype)
    fail(Errc::not_h_type, "spectrum pairing needs an H-type algebra");
  GradedEndo adj = graded_adjoint(m, d);
  if (!(adj.v_block == d.v_block) || !(adj.z_block == d.z_block))
    fail(Errc::not_symmetric, "input derivation is not symmetric");

  SpectrumReport rep;
  MatrixQ two_mu = d.z_block;
  for (int i = 0; i < m.z_dim && rep.detail.empty(); ++i)
    for (int j = 0; j < m.z_dim; ++j)
      if ((i == j && two_mu.at(i, j) != two_mu.at(0, 0)) ||
          (i != j && two_mu.at(i, j) != 0)) {
        rep.detail = "z-block is not a scalar";
        return rep;
      }
  rep.mu = m.z_dim ? two_mu.at(0, 0) / 2 : Rat(0);

  EigenSplit es = eigenspaces(d.v_block);
  if (!es.complete) {
    rep.detail = "v-block is not diagonalizable over Q";
    return rep;
  }
  rep.lambdas = es.values;
  for (size_t i = 0; i < es.values.size(); ++i) {
    Rat partner = 2 * rep.mu - es.values[i];
    bool found = false;
    for (size_t j = 0; j < es.values.size(); ++j)
      if (es.values[j] == partner) {
        found = es.spaces[j].cols == es.spaces[i].cols;
        break;
      }
    if (!found) {
      rep.detail = "eigenvalue " + rat_str(es.values[i]) +
                   " has no partner of matching multiplicity";
      return rep;
    }
  }

  // projection combinations are derivations again
  std::vector<VecQ> allcols;
  for (const SubspaceBasis& s : es.spaces)
    for (int c = 0; c < s.cols; ++c) allcols.push_back(s.col(c));
  MatrixQ t = from_cols(m.v_dim, allcols);
  MatrixQ tinv = inverse(t);
  auto projector = [&](size_t which) {
    MatrixQ sel(m.v_dim, m.v_dim);
    int off = 0;
    for (size_t s = 0; s < es.spaces.size(); ++s) {
      for (int c = 0; c < es.spaces[s].cols; ++c, ++off)
        if (s == which) sel.at(off, off) = 1;
    }
    return t.mul(sel.mul(tinv));
  };
  for (size_t i = 0; i < es.values.size(); ++i) {
    Rat partner = 2 * rep.mu - es.values[i];
    if (partner == es.values[i]) continue;
    for (size_t j = 0; j < es.values.size(); ++j)
      if (es.values[j] == partner && i < j) {
        GradedEndo diff = {projector(i).sub(projector(j)), MatrixQ(m.z_dim, m.z_dim)};
        if (!is_derivation(m, diff)) {
          rep.detail = "projection difference is not a derivation";
          return rep;
        }
      }
  }
  GradedEndo grading = {MatrixQ::identity(m.v_dim),
                        MatrixQ::identity(m.z_dim).scaled(Rat(2))};
  if (!is_derivation(m, grading)) {
    rep.detail = "grading endomorphism is not a derivation";
    return rep;
  }
  rep.pass = true;
  rep.detail = "pairing holds with mu = " + rat_str(rep.mu);
  return rep;
}

}  // namespace dern
