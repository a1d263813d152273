#include "dersolve.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "catalog.hpp"

namespace dern {

namespace {

MatrixQ stack_positive(const RootDatum& rd) {
  MatrixQ n(rd.base->dim, 0);
  for (int r = 0; r < rd.n_pos; ++r) n = hstack(n, rd.spaces[r]);
  return n;
}

// n in its own coordinates: the stacked root space bases with the bracket
// tabulated, plus the map back to the ambient algebra.
struct NContext {
  const RootDatum& rd;
  MatrixQ n;
  std::vector<int> root_of;  // n column -> positive root index
  std::vector<int> offset;   // positive root index -> first n column
  SpanSolver span;
  std::vector<std::vector<VecQ>> br;  // [i][j] in n coordinates

  explicit NContext(const RootDatum& r) : rd(r), n(stack_positive(r)), span(n) {
    const auto& g = *rd.base;
    root_of.resize(n.cols);
    offset.assign(rd.n_pos, 0);
    int at = 0;
    for (int ri = 0; ri < rd.n_pos; ++ri) {
      offset[ri] = at;
      for (int c = 0; c < rd.mult(ri); ++c) root_of[at++] = ri;
    }
    br.assign(n.cols, std::vector<VecQ>(n.cols, vec_zero(n.cols)));
    for (int i = 0; i < n.cols; ++i)
      for (int j = i + 1; j < n.cols; ++j) {
        VecQ w = g.bracket(n.col(i), n.col(j));
        if (vec_is_zero(w)) continue;
        auto c = span.coords(w);
        if (!c) fail(Errc::internal, "bracket of n left n");
        br[j][i] = vec_scale(*c, Rat(-1));
        br[i][j] = std::move(*c);
      }
  }

  VecQ amb(const VecQ& coords) const { return n.apply(coords); }
};

// D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j] on every pair, with no block
// assumptions.
bool n_derivation_law(const NContext& nc, const MatrixQ& d, std::string* where) {
  const int nd = nc.n.cols;
  for (int i = 0; i < nd; ++i)
    for (int j = i + 1; j < nd; ++j) {
      VecQ lhs = d.apply(nc.br[i][j]);
      VecQ rhs = vec_zero(nd);
      for (int p = 0; p < nd; ++p) {
        if (sgn(d.at(p, i)) != 0) axpy(rhs, d.at(p, i), nc.br[p][j]);
        if (sgn(d.at(p, j)) != 0) axpy(rhs, d.at(p, j), nc.br[i][p]);
      }
      if (lhs != rhs) {
        if (where)
          *where = "pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
        return false;
      }
    }
  return true;
}

MatrixQ n_gram(const RootDatum& rd, const NContext& nc) {
  MatrixQ g(nc.n.cols, nc.n.cols);
  for (int i = 0; i < nc.n.cols; ++i)
    for (int j = i; j < nc.n.cols; ++j) {
      g.at(i, j) = rd.ip.pair(nc.n.col(i), nc.n.col(j));
      g.at(j, i) = g.at(i, j);
    }
  return g;
}

// Matrices flattened row-major into the columns of one tall matrix.
MatrixQ stack_flats(int rows, const std::vector<MatrixQ>& ms) {
  MatrixQ f(rows, static_cast<int>(ms.size()));
  for (int j = 0; j < f.cols; ++j)
    for (int i = 0; i < rows; ++i) f.at(i, j) = ms[j].a[i];
  return f;
}

}  // namespace

MatrixQ iwasawa_n(const RootDatum& rd) { return stack_positive(rd); }

DerivationSpace solve_derivations(const RootDatum& rd, ConstraintMode mode) {
  NContext nc(rd);
  const int nd = nc.n.cols;
  DerivationSpace out;
  out.n_dim = nd;
  out.mode = mode;
  out.root_of = nc.root_of;

  auto open_slot = [&](int i, int j) {
    switch (mode) {
      case ConstraintMode::unconstrained:
        return true;
      case ConstraintMode::grading_preserving:
        return rd.height[nc.root_of[i]] == rd.height[nc.root_of[j]];
      case ConstraintMode::root_space_preserving:
        return nc.root_of[i] == nc.root_of[j];
    }
    return false;
  };
  std::vector<int> slot_at(static_cast<size_t>(nd) * nd, -1);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j)
      if (open_slot(i, j)) {
        slot_at[static_cast<size_t>(i) * nd + j] =
            static_cast<int>(out.block_structure.size());
        out.block_structure.emplace_back(i, j);
      }
  const int s = static_cast<int>(out.block_structure.size());

  int hmax = 0;
  for (int r = 0; r < rd.n_pos; ++r) hmax = std::max(hmax, rd.height[r]);

  // Pairs that can say anything. In the root space mode every term of the
  // law lives in g_{gamma+delta}, so the pair is vacuous unless that is a
  // root; in the grading mode the analogue holds level by level.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nd; ++i)
    for (int j = i + 1; j < nd; ++j) {
      const int ri = nc.root_of[i], rj = nc.root_of[j];
      if (mode == ConstraintMode::root_space_preserving) {
        VecQ sum = rd.roots[ri];
        for (size_t t = 0; t < sum.size(); ++t) sum[t] += rd.roots[rj][t];
        if (rd.root_index(sum) < 0) continue;
      } else if (mode == ConstraintMode::grading_preserving &&
                 rd.height[ri] + rd.height[rj] > hmax) {
        continue;
      }
      pairs.emplace_back(i, j);
    }

  MatrixQ a(static_cast<int>(pairs.size()) * nd, s);
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    const auto [i, j] = pairs[pi];
    for (int k = 0; k < nd; ++k) {
      const int row = static_cast<int>(pi) * nd + k;
      for (int p = 0; p < nd; ++p) {
        int sl = slot_at[static_cast<size_t>(k) * nd + p];
        if (sl >= 0 && sgn(nc.br[i][j][p]) != 0) a.at(row, sl) += nc.br[i][j][p];
        sl = slot_at[static_cast<size_t>(p) * nd + i];
        if (sl >= 0 && sgn(nc.br[p][j][k]) != 0) a.at(row, sl) -= nc.br[p][j][k];
        sl = slot_at[static_cast<size_t>(p) * nd + j];
        if (sl >= 0 && sgn(nc.br[i][p][k]) != 0) a.at(row, sl) -= nc.br[i][p][k];
      }
    }
  }

  SubspaceBasis ns = nullspace(a);
  for (int c = 0; c < ns.cols; ++c) {
    MatrixQ d(nd, nd);
    for (int sl = 0; sl < s; ++sl)
      d.at(out.block_structure[sl].first, out.block_structure[sl].second) =
          ns.at(sl, c);
    std::string where;
    if (!n_derivation_law(nc, d, &where))
      fail(Errc::internal, "solved matrix fails the derivation law at " + where);
    out.basis.push_back(std::move(d));
  }
  return out;
}

AdImage ad_restriction(const RootDatum& rd) {
  if (rd.decomposable) fail(Errc::not_simple, "ad image needs a simple algebra");
  NContext nc(rd);
  const auto& g = *rd.base;
  const int nd = nc.n.cols;
  AdImage out;
  for (int wc = 0; wc < rd.zero_space.cols; ++wc) {
    VecQ w = rd.zero_space.col(wc);
    MatrixQ m(nd, nd);
    for (int i = 0; i < nd; ++i) {
      auto c = nc.span.coords(g.bracket(w, nc.n.col(i)));
      if (!c) fail(Errc::internal, "ad of the zero space left n");
      for (int p = 0; p < nd; ++p) {
        if (sgn((*c)[p]) != 0 && nc.root_of[p] != nc.root_of[i])
          fail(Errc::internal, "ad of the zero space mixed root spaces");
        m.at(p, i) = (*c)[p];
      }
    }
    std::string where;
    if (!n_derivation_law(nc, m, &where))
      fail(Errc::internal, "ad generator fails the derivation law at " + where);
    out.generators.push_back(std::move(m));
  }
  out.kernel_dim = nullspace(stack_flats(nd * nd, out.generators)).cols;
  if (out.kernel_dim != 0)
    fail(Errc::internal, "ad is not injective on the zero space");
  return out;
}

SymSkewSplit split_sym_skew(const RootDatum& rd, const DerivationSpace& ds) {
  if (ds.mode != ConstraintMode::root_space_preserving)
    fail(Errc::parse_error, "sym/skew split needs the root space preserving mode");
  NContext nc(rd);
  const int nd = nc.n.cols;
  if (ds.n_dim != nd)
    fail(Errc::ambient_mismatch, "derivation space does not match n");
  MatrixQ gram = n_gram(rd, nc);
  MatrixQ gram_inv = inverse(gram);
  auto adjoint = [&](const MatrixQ& d) {
    return gram_inv.mul(d.transpose().mul(gram));
  };

  std::vector<MatrixQ> sym_halves, skew_halves;
  for (const MatrixQ& d : ds.basis) {
    MatrixQ adj = adjoint(d);
    std::string where;
    if (!n_derivation_law(nc, adj, &where))
      fail(Errc::transpose_not_derivation,
           "adjoint of a basis element fails the derivation law at " + where);
    sym_halves.push_back(d.add(adj).scaled(ratq(1, 2)));
    skew_halves.push_back(d.sub(adj).scaled(ratq(1, 2)));
  }
  auto reduce = [&](const std::vector<MatrixQ>& halves, int sign) {
    SubspaceBasis b = column_space_basis(stack_flats(nd * nd, halves));
    std::vector<MatrixQ> res;
    for (int c = 0; c < b.cols; ++c) {
      MatrixQ m(nd, nd);
      m.a = b.col(c);
      if (!(adjoint(m) == m.scaled(Rat(sign))))
        fail(Errc::internal, "reduced half lost its symmetry type");
      res.push_back(std::move(m));
    }
    return res;
  };
  SymSkewSplit out;
  out.sym = reduce(sym_halves, 1);
  out.skew = reduce(skew_halves, -1);
  if (out.sym.size() + out.skew.size() != ds.basis.size())
    fail(Errc::internal, "sym/skew dimensions do not add up");
  return out;
}

EReport check_E_identity(const RootDatum& rd, const MatrixQ& d,
                         const VecQ& gamma, const VecQ& delta) {
  const int gi = rd.root_index(gamma);
  const int di = rd.root_index(delta);
  if (gi < 0 || gi >= rd.n_pos)
    fail(Errc::not_a_root, "gamma is not a positive restricted root");
  if (di < 0 || di >= rd.n_pos)
    fail(Errc::not_a_root, "delta is not a positive restricted root");
  NContext nc(rd);
  const auto& g = *rd.base;
  const int nd = nc.n.cols;
  if (d.rows != nd || d.cols != nd)
    fail(Errc::ambient_mismatch, "derivation matrix does not match n");

  const int og = nc.offset[gi], od = nc.offset[di];
  std::vector<VecQ> dz(rd.mult(di));
  for (int z = 0; z < rd.mult(di); ++z) dz[z] = nc.amb(d.col(od + z));

  EReport rep;
  for (int x = 0; x < rd.mult(gi); ++x)
    for (int y = 0; y < rd.mult(gi); ++y) {
      VecQ ex = nc.n.col(og + x);
      VecQ thy = g.apply_theta(nc.n.col(og + y));
      VecQ u = g.bracket(ex, thy);
      VecQ t1 = g.bracket(nc.amb(d.col(og + x)), thy);
      VecQ t2 = g.bracket(ex, g.apply_theta(nc.amb(d.col(og + y))));
      for (int z = 0; z < rd.mult(di); ++z) {
        VecQ ez = nc.n.col(od + z);
        auto c = nc.span.coords(g.bracket(u, ez));
        if (!c) fail(Errc::internal, "zero-space bracket left n");
        VecQ lhs = nc.amb(d.apply(*c));
        VecQ rhs = g.bracket(t1, ez);
        axpy(rhs, Rat(1), g.bracket(t2, ez));
        axpy(rhs, Rat(1), g.bracket(u, dz[z]));
        if (lhs != rhs) {
          rep.holds = false;
          rep.witness = "basis vectors " + std::to_string(x + 1) + ", " +
                        std::to_string(y + 1) + " of the first root and " +
                        std::to_string(z + 1) + " of the second break the identity";
          return rep;
        }
      }
    }
  return rep;
}

Extension build_extension(const RootDatum& rd, const MatrixQ& d) {
  if (rd.decomposable) fail(Errc::not_simple, "extension needs a simple algebra");
  NContext nc(rd);
  const auto& g = *rd.base;
  const int nd = nc.n.cols;
  if (d.rows != nd || d.cols != nd)
    fail(Errc::ambient_mismatch, "derivation matrix does not match n");
  std::string where;
  if (!n_derivation_law(nc, d, &where))
    fail(Errc::not_a_derivation, "matrix fails the derivation law at " + where);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j)
      if (sgn(d.at(i, j)) != 0 &&
          rd.height[nc.root_of[i]] != rd.height[nc.root_of[j]])
        fail(Errc::not_a_derivation, "matrix does not preserve heights");
  MatrixQ gram = n_gram(rd, nc);
  if (!(inverse(gram).mul(d.transpose().mul(gram)) == d.scaled(Rat(-1))))
    fail(Errc::not_symmetric, "matrix is not skew for the inner product on n");

  for (size_t si = 0; si < rd.simple.size(); ++si)
    for (size_t sj = 0; sj < rd.simple.size(); ++sj) {
      EReport er = check_E_identity(rd, d, rd.roots[rd.simple[si]],
                                    rd.roots[rd.simple[sj]]);
      if (!er.holds)
        fail(Errc::e_identity_fails,
             "identity fails for the simple pair (" + std::to_string(si + 1) +
                 ", " + std::to_string(sj + 1) + "): " + er.witness);
    }

  // The zero-space action, pinned down by the height-one brackets.
  SpanSolver zspan(rd.zero_space);
  const int z0 = rd.zero_space.cols;
  std::vector<int> g1;
  for (int i = 0; i < nd; ++i)
    if (rd.height[nc.root_of[i]] == 1) g1.push_back(i);

  std::vector<std::pair<VecQ, VecQ>> eqs;  // coords of [X, theta Y] and of the target
  for (int i : g1)
    for (int j : g1) {
      VecQ ex = nc.n.col(i);
      VecQ thy = g.apply_theta(nc.n.col(j));
      VecQ lhs = g.bracket(ex, thy);
      VecQ rhs = g.bracket(nc.amb(d.col(i)), thy);
      axpy(rhs, Rat(1), g.bracket(ex, g.apply_theta(nc.amb(d.col(j)))));
      auto cl = zspan.coords(lhs);
      auto cr = zspan.coords(rhs);
      if (!cl || !cr) fail(Errc::internal, "height-one bracket left the zero space");
      eqs.emplace_back(std::move(*cl), std::move(*cr));
    }

  MatrixQ a(static_cast<int>(eqs.size()) * z0, z0 * z0);
  VecQ b = vec_zero(static_cast<int>(eqs.size()) * z0);
  for (size_t e = 0; e < eqs.size(); ++e)
    for (int k = 0; k < z0; ++k) {
      const int row = static_cast<int>(e) * z0 + k;
      for (int p = 0; p < z0; ++p) a.at(row, k * z0 + p) = eqs[e].first[p];
      b[row] = eqs[e].second[k];
    }
  auto sol = solve(a, b);
  if (!sol)
    fail(Errc::inconsistent_extension,
         "no zero-space action matches the bracket data");
  if (nullspace(a).cols != 0)
    fail(Errc::internal, "zero-space action is not pinned down");
  MatrixQ dtilde(z0, z0);
  dtilde.a = std::move(*sol);

  for (int c = 0; c < z0; ++c)
    if (!in_span(rd.m_basis, rd.zero_space.apply(dtilde.col(c))))
      fail(Errc::internal, "zero-space action leaks outside m");

  // Assemble on the adapted basis n | zero space | theta n and conjugate
  // back to ambient coordinates.
  MatrixQ t = hstack(hstack(nc.n, rd.zero_space), g.theta.mul(nc.n));
  if (t.rows != g.dim || t.cols != g.dim)
    fail(Errc::internal, "adapted basis has the wrong size");
  MatrixQ blocks(g.dim, g.dim);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j) {
      blocks.at(i, j) = d.at(i, j);
      blocks.at(nd + z0 + i, nd + z0 + j) = d.at(i, j);
    }
  for (int i = 0; i < z0; ++i)
    for (int j = 0; j < z0; ++j) blocks.at(nd + i, nd + j) = dtilde.at(i, j);
  Extension out;
  out.on_g = t.mul(blocks).mul(inverse(t));
  out.on_zero = std::move(dtilde);

  for (int i = 0; i < g.dim; ++i) {
    VecQ ei = out.on_g.col(i);
    for (int j = i + 1; j < g.dim; ++j) {
      VecQ lhs = out.on_g.apply(g.c[i][j]);
      VecQ rhs = g.bracket_with_basis(ei, j);
      axpy(rhs, Rat(-1), g.bracket_with_basis(out.on_g.col(j), i));
      if (lhs != rhs)
        fail(Errc::internal, "extension fails the derivation law on g");
    }
  }
  return out;
}

WSolution reconstruct_W(const RootDatum& rd, const MatrixQ& d) {
  AdImage ad = ad_restriction(rd);
  const int nd = ad.generators.empty() ? 0 : ad.generators[0].rows;
  if (d.rows != nd || d.cols != nd)
    fail(Errc::ambient_mismatch, "matrix does not match n");
  const int z0 = static_cast<int>(ad.generators.size());
  MatrixQ flat = stack_flats(nd * nd, ad.generators);
  SpanSolver span(flat);
  const VecQ& target = d.a;
  VecQ y = span.e.apply(target);
  VecQ c(y.begin(), y.begin() + z0);
  VecQ recon = flat.apply(c);
  WSolution out;
  out.residual = MatrixQ(nd, nd);
  if (recon == target) {
    out.found = true;
    out.w = rd.zero_space.apply(c);
  } else {
    out.w = vec_zero(rd.base->dim);
    for (size_t i = 0; i < out.residual.a.size(); ++i)
      out.residual.a[i] = target[i] - recon[i];
  }
  return out;
}

Verdict main_theorem_verdict(const RootDatum& rd) {
  if (rd.decomposable) fail(Errc::not_simple, "verdict needs a simple algebra");
  DerivationSpace ds =
      solve_derivations(rd, ConstraintMode::root_space_preserving);
  AdImage ad = ad_restriction(rd);
  const int nd = ds.n_dim;
  SpanSolver der_span(stack_flats(nd * nd, ds.basis));
  for (const MatrixQ& gen : ad.generators)
    if (!der_span.contains(gen.a))
      fail(Errc::internal, "ad image escapes the solved space");

  Verdict v;
  v.dim_der = static_cast<int>(ds.basis.size());
  v.dim_ad = static_cast<int>(ad.generators.size()) - ad.kernel_dim;
  v.equal = v.dim_der == v.dim_ad;
  v.exceptional_expected = exceptional_family_expected(*rd.base);
  if (!v.equal) {
    SpanSolver ad_span(stack_flats(nd * nd, ad.generators));
    for (const MatrixQ& b : ds.basis)
      if (!ad_span.contains(b.a)) {
        v.witness = b;
        break;
      }
    if (!v.witness)
      fail(Errc::internal, "dimensions differ but no witness found");
  }
  return v;
}

}  // namespace dern
