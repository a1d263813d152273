#include "root_data.hpp"

#include <algorithm>

#include "errors.hpp"

namespace dern {

namespace {

int vec_cmp(const VecQ& a, const VecQ& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool lex_positive(const VecQ& v) {
  for (const Rat& x : v) {
    int s = sgn(x);
    if (s != 0) return s > 0;
  }
  return false;
}

VecQ neg_vec(const VecQ& v) { return vec_scale(v, Rat(-1)); }

bool is_integer_nonneg(const VecQ& v) {
  for (const Rat& x : v)
    if (x.get_den() != 1 || sgn(x) < 0) return false;
  return true;
}

}  // namespace

int RootDatum::root_index(const VecQ& cov) const {
  for (int i = 0; i < static_cast<int>(roots.size()); ++i)
    if (roots[i] == cov) return i;
  return -1;
}

Rat RootDatum::pair_cov(const VecQ& x, const VecQ& y) const {
  return dot(x, a_gram_inv.apply(y));
}

int RootDatum::height_omega() const {
  return omega >= 0 ? height[omega] : 0;
}

RootDatum decompose(const AlgebraPtr& b) {
  const LieAlgebra& g = *b;
  RootDatum rd;
  rd.base = b;
  rd.rank = g.a_basis.cols;
  if (rd.rank == 0) fail(Errc::internal, "algebra carries no designated a");

  std::vector<MatrixQ> ads;
  for (int i = 0; i < rd.rank; ++i) ads.push_back(g.ad(g.a_basis.col(i)));
  std::vector<WeightSpace> ws = simultaneous_eigenspaces(ads);

  VecQ zero_w = vec_zero(rd.rank);
  std::vector<int> pos_ws;
  bool found_zero = false;
  for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
    if (ws[i].weight == zero_w) {
      rd.zero_space = ws[i].space;
      found_zero = true;
    } else if (lex_positive(ws[i].weight)) {
      pos_ws.push_back(i);
    }
  }
  if (!found_zero) fail(Errc::internal, "joint ad(a) split has no zero weight space");

  // every nonzero weight must come with its negative, at equal multiplicity
  auto find_weight = [&](const VecQ& w) {
    for (int i = 0; i < static_cast<int>(ws.size()); ++i)
      if (ws[i].weight == w) return i;
    return -1;
  };
  for (const WeightSpace& w : ws) {
    if (w.weight == zero_w) continue;
    int j = find_weight(neg_vec(w.weight));
    if (j < 0 || ws[j].space.cols != w.space.cols)
      fail(Errc::internal, "restricted roots are not symmetric under negation");
  }
  if (static_cast<int>(ws.size()) != 2 * static_cast<int>(pos_ws.size()) + 1)
    fail(Errc::internal, "lexicographic positivity did not split the roots in half");

  // simple roots: positives that are not sums of two positives
  std::vector<VecQ> pos_cov;
  for (int i : pos_ws) pos_cov.push_back(ws[i].weight);
  std::vector<VecQ> simple_cov;
  for (const VecQ& gcov : pos_cov) {
    bool sum = false;
    for (const VecQ& d : pos_cov) {
      if (sum) break;
      for (const VecQ& e : pos_cov)
        if (vec_add(d, e) == gcov) {
          sum = true;
          break;
        }
    }
    if (!sum) simple_cov.push_back(gcov);
  }
  std::sort(simple_cov.begin(), simple_cov.end(),
            [](const VecQ& x, const VecQ& y) { return vec_cmp(x, y) < 0; });

  // heights: exact expansion over the simple roots
  MatrixQ dmat = from_cols(rd.rank, simple_cov);
  auto height_of = [&](const VecQ& gcov) {
    auto sol = solve(dmat, gcov);
    if (!sol || !is_integer_nonneg(*sol))
      fail(Errc::internal, "positive root is not a nonnegative integer sum of simple roots");
    Rat h = 0;
    for (const Rat& x : *sol) h += x;
    return static_cast<int>(h.get_num().get_si());
  };
  std::vector<std::pair<int, VecQ>> ordered;
  for (const VecQ& gcov : pos_cov) ordered.emplace_back(height_of(gcov), gcov);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& x, const auto& y) {
              if (x.first != y.first) return x.first < y.first;
              return vec_cmp(x.second, y.second) < 0;
            });

  rd.n_pos = static_cast<int>(ordered.size());
  for (const auto& [h, gcov] : ordered) {
    rd.roots.push_back(gcov);
    rd.spaces.push_back(ws[find_weight(gcov)].space);
    rd.height.push_back(h);
  }
  for (int i = 0; i < rd.n_pos; ++i) {
    VecQ m = neg_vec(rd.roots[i]);
    rd.roots.push_back(m);
    rd.spaces.push_back(ws[find_weight(m)].space);
    rd.height.push_back(-rd.height[i]);
  }
  for (const VecQ& s : simple_cov) rd.simple.push_back(rd.root_index(s));

  // decomposability: connectivity of the simple roots under the Killing
  // pairing on a (the normalization constant scales it, so c = 1 suffices
  // for the zero test)
  MatrixQ ka(rd.rank, rd.rank);
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j)
      ka.at(i, j) = g.killing_form(g.a_basis.col(i), g.a_basis.col(j));
  MatrixQ ka_inv = inverse(ka);
  auto pair0 = [&](const VecQ& x, const VecQ& y) { return dot(x, ka_inv.apply(y)); };

  int ns = static_cast<int>(rd.simple.size());
  std::vector<int> comp(ns, -1);
  int ncomp = 0;
  for (int i = 0; i < ns; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < ns; ++v)
        if (comp[v] < 0 &&
            pair0(rd.roots[rd.simple[u]], rd.roots[rd.simple[v]]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  rd.decomposable = ncomp > 1;

  if (!rd.decomposable) {
    int hmax = 0;
    for (int i = 0; i < rd.n_pos; ++i) hmax = std::max(hmax, rd.height[i]);
    std::vector<int> top;
    for (int i = 0; i < rd.n_pos; ++i)
      if (rd.height[i] == hmax) top.push_back(i);
    if (top.size() != 1) fail(Errc::internal, "highest root is not unique");
    rd.omega = top[0];
    rd.c_norm = dot(rd.roots[rd.omega], ka_inv.apply(rd.roots[rd.omega])) / 2;
    rd.normalized_by_omega = true;
  }

  rd.ip = inner_product_build(g, rd.c_norm);
  MatrixQ ga = g.a_basis.transpose().mul(rd.ip.gram.mul(g.a_basis));
  rd.a_gram_inv = inverse(ga);
  if (rd.omega >= 0 && rd.pair_cov(rd.roots[rd.omega], rd.roots[rd.omega]) != 2)
    fail(Errc::internal, "highest root normalization failed");

  // m: centralizer of a inside k, cross-checked as zero space meet k
  CartanPair cp = cartan_decompose(g);
  rd.m_basis = centralizer(g, g.a_basis, cp.k);
  if (!(rd.m_basis == intersect(rd.zero_space, cp.k)))
    fail(Errc::internal, "centralizer of a in k differs from the zero weight space in k");
  if (rd.zero_space.cols != rd.m_basis.cols + rd.rank)
    fail(Errc::internal, "zero weight space is not m plus a");
  if (!subspace_contained(g.a_basis, rd.zero_space))
    fail(Errc::internal, "designated a missed the zero weight space");

  for (int h = 1; h <= (rd.n_pos ? rd.height[rd.n_pos - 1] : 0); ++h) {
    std::vector<VecQ> cols;
    for (int i = 0; i < rd.n_pos; ++i)
      if (rd.height[i] == h)
        for (int c = 0; c < rd.spaces[i].cols; ++c) cols.push_back(rd.spaces[i].col(c));
    if (!cols.empty())
      rd.grading[h] = from_cols(g.dim, cols);
  }

  // bracket compatibility [g_x, g_y] inside g_{x+y} across all root pairs
  int nr = static_cast<int>(rd.roots.size());
  for (int i = 0; i < nr; ++i)
    for (int j = i; j < nr; ++j) {
      VecQ sum = vec_add(rd.roots[i], rd.roots[j]);
      SubspaceBasis bk = span_bracket(rd, i, j);
      if (bk.cols == 0) continue;
      int t = rd.root_index(sum);
      if (t >= 0) {
        if (!subspace_contained(bk, rd.spaces[t]))
          fail(Errc::internal, "root space bracket escaped its target root space");
      } else if (sum == vec_zero(rd.rank)) {
        if (!subspace_contained(bk, rd.zero_space))
          fail(Errc::internal, "opposite root spaces bracket outside m + a");
      } else {
        fail(Errc::internal, "root space bracket landed on a non-root weight");
      }
    }

  return rd;
}

SubspaceBasis span_bracket(const RootDatum& rd, int i, int j) {
  const LieAlgebra& g = *rd.base;
  std::vector<VecQ> cols;
  for (int x = 0; x < rd.spaces[i].cols; ++x)
    for (int y = 0; y < rd.spaces[j].cols; ++y) {
      VecQ v = g.bracket(rd.spaces[i].col(x), rd.spaces[j].col(y));
      if (!vec_is_zero(v)) cols.push_back(v);
    }
  if (cols.empty()) return MatrixQ(g.dim, 0);
  return column_space_basis(from_cols(g.dim, cols));
}

VecQ coroot(const RootDatum& rd, const VecQ& gamma) {
  int r = rd.root_index(gamma);
  if (r < 0) fail(Errc::not_a_root, "covector is not a restricted root");
  const LieAlgebra& g = *rd.base;
  VecQ a_coords = rd.a_gram_inv.apply(gamma);
  VecQ h = vec_zero(g.dim);
  for (int i = 0; i < rd.rank; ++i) axpy(h, a_coords[i], g.a_basis.col(i));
  for (int c = 0; c < rd.spaces[r].cols; ++c) {
    VecQ x = rd.spaces[r].col(c);
    VecQ lhs = g.bracket(g.apply_theta(x), x);
    VecQ rhs = vec_scale(h, rd.ip.norm2(x));
    if (lhs != rhs) fail(Errc::internal, "[theta X, X] disagrees with |X|^2 H_gamma");
  }
  return h;
}

HighestSplit highest_split(const RootDatum& rd) {
  if (rd.decomposable)
    fail(Errc::decomposable_system, "highest-root split needs an indecomposable system");
  const LieAlgebra& g = *rd.base;
  HighestSplit hs;
  const VecQ& om = rd.roots[rd.omega];
  std::vector<VecQ> vcols, n0cols;
  for (int i = 0; i < rd.n_pos; ++i) {
    Rat t = rd.pair_cov(rd.roots[i], om);
    if (t == 2) {
      if (i != rd.omega) fail(Errc::internal, "pairing 2 with omega off the highest root");
      continue;
    }
    if (t == 1) {
      hs.sigma1.push_back(i);
      for (int c = 0; c < rd.spaces[i].cols; ++c) vcols.push_back(rd.spaces[i].col(c));
    } else if (t == 0) {
      hs.sigma0_pos.push_back(i);
      for (int c = 0; c < rd.spaces[i].cols; ++c) n0cols.push_back(rd.spaces[i].col(c));
    } else {
      fail(Errc::internal, "pairing with omega outside {0,1,2}");
    }
  }
  hs.v = vcols.empty() ? MatrixQ(g.dim, 0) : from_cols(g.dim, vcols);
  hs.z = rd.spaces[rd.omega];
  hs.n0 = n0cols.empty() ? MatrixQ(g.dim, 0) : from_cols(g.dim, n0cols);
  return hs;
}

RankTwoSlice rank_two_subalgebra(const RootDatum& rd, const VecQ& gamma,
                                 const VecQ& delta) {
  if (rd.root_index(gamma) < 0 || rd.root_index(delta) < 0)
    fail(Errc::not_a_root, "slice directions must be restricted roots");
  const LieAlgebra& g = *rd.base;
  MatrixQ dirs = from_cols(rd.rank, {gamma, delta});
  RankTwoSlice slice;
  std::vector<VecQ> cols;
  for (int i = 0; i < rd.n_pos; ++i)
    if (solve(dirs, rd.roots[i])) {
      slice.pos_idx.push_back(i);
      for (int c = 0; c < rd.spaces[i].cols; ++c) cols.push_back(rd.spaces[i].col(c));
    }
  slice.n = cols.empty() ? MatrixQ(g.dim, 0) : from_cols(g.dim, cols);
  for (int a : slice.pos_idx)
    for (int b : slice.pos_idx) {
      SubspaceBasis bk = span_bracket(rd, a, b);
      if (bk.cols != 0 && !subspace_contained(bk, slice.n))
        fail(Errc::internal, "rank-two slice is not bracket closed");
    }
  return slice;
}

SubspaceBasis m_gamma(const RootDatum& rd, const VecQ& gamma) {
  int r = rd.root_index(gamma);
  if (r < 0) fail(Errc::not_a_root, "covector is not a restricted root");
  const LieAlgebra& g = *rd.base;
  // orthogonal (not normalized) basis of the root space
  std::vector<VecQ> ob;
  for (int c = 0; c < rd.spaces[r].cols; ++c) {
    VecQ x = rd.spaces[r].col(c);
    for (const VecQ& y : ob) {
      Rat coef = rd.ip.pair(x, y) / rd.ip.norm2(y);
      axpy(x, -coef, y);
    }
    ob.push_back(x);
  }
  std::vector<VecQ> cols;
  for (size_t i = 0; i < ob.size(); ++i)
    for (size_t j = 0; j < ob.size(); ++j) {
      if (i == j) continue;
      VecQ v = g.bracket(ob[i], g.apply_theta(ob[j]));
      if (!vec_is_zero(v)) cols.push_back(v);
    }
  if (cols.empty()) return MatrixQ(g.dim, 0);
  SubspaceBasis out = column_space_basis(from_cols(g.dim, cols));
  if (!subspace_contained(out, rd.m_basis))
    fail(Errc::internal, "m^gamma escaped m");
  return out;
}

StratReport stratification_check(const RootDatum& rd) {
  StratReport rep;
  if (rd.decomposable) {
    rep.detail = "decomposable system";
    return rep;
  }
  const LieAlgebra& g = *rd.base;
  int top = rd.height_omega();
  auto level = [&](int h) -> SubspaceBasis {
    auto it = rd.grading.find(h);
    return it == rd.grading.end() ? MatrixQ(g.dim, 0) : it->second;
  };
  SubspaceBasis g1 = level(1);
  for (int h = 1; h <= top; ++h) {
    SubspaceBasis gh = level(h);
    std::vector<VecQ> cols;
    for (int x = 0; x < gh.cols; ++x)
      for (int y = 0; y < g1.cols; ++y) {
        VecQ v = g.bracket(gh.col(x), g1.col(y));
        if (!vec_is_zero(v)) cols.push_back(v);
      }
    SubspaceBasis span =
        cols.empty() ? MatrixQ(g.dim, 0) : column_space_basis(from_cols(g.dim, cols));
    SubspaceBasis target = column_space_basis(level(h + 1));
    if (!(span == target)) {
      rep.detail = "[g_" + std::to_string(h) + ", g_1] differs from g_" + std::to_string(h + 1);
      return rep;
    }
  }
  for (int h = 1; h < top; ++h) {
    SubspaceBasis gh = level(h);
    if (gh.cols == 0) continue;
    MatrixQ big(g.dim * g1.cols, gh.cols);
    for (int y = 0; y < g1.cols; ++y) {
      for (int x = 0; x < gh.cols; ++x) {
        VecQ v = g.bracket(gh.col(x), g1.col(y));
        for (int rix = 0; rix < g.dim; ++rix) big.at(y * g.dim + rix, x) = v[rix];
      }
    }
    if (nullspace(big).cols != 0) {
      rep.detail = "level " + std::to_string(h) + " has a vector killing all of g_1";
      return rep;
    }
  }
  rep.pass = true;
  rep.detail = "stratified through height " + std::to_string(top);
  return rep;
}

}  // namespace dern
