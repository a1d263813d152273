#include "catalog.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace dern {

namespace {

// A family is described by explicit matrices in the (realified) ambient
// gl(N, R); structure constants are recovered by solving commutator
// coordinates against the spanned subspace.
struct MatrixFamily {
  int N = 0;
  std::vector<MatrixQ> basis;
  std::vector<std::string> labels;
  std::vector<int> a_idx;  // positions of the designated a inside basis
};

std::string pair_label(const char* stem, int r, int s) {
  std::ostringstream os;
  os << stem << "[" << r + 1 << "," << s + 1 << "]";
  return os.str();
}

std::string diag_label(const char* stem, int t) {
  std::ostringstream os;
  os << stem << "[" << t + 1 << "]";
  return os.str();
}

// Complex entry re + im*i as a 2x2 block at matrix position (r, c).
void put_cplx(MatrixQ& m, int r, int c, long re, long im) {
  if (re != 0) {
    m.at(2 * r, 2 * c) += re;
    m.at(2 * r + 1, 2 * c + 1) += re;
  }
  if (im != 0) {
    m.at(2 * r + 1, 2 * c) += im;
    m.at(2 * r, 2 * c + 1) -= im;
  }
}

// Quaternion entry w + x*i + y*j + z*k as the 4x4 left-multiplication block
// at matrix position (r, c). Transposition of the block realizes quaternion
// conjugation, so -transpose stays inside the realified algebra.
void put_quat(MatrixQ& m, int r, int c, long w, long x, long y, long z) {
  const long L[4][4] = {
      {w, -x, -y, -z},
      {x, w, -z, y},
      {y, z, w, -x},
      {z, -y, x, w},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (L[i][j] != 0) m.at(4 * r + i, 4 * c + j) += L[i][j];
}

MatrixFamily family_sl(int n) {
  MatrixFamily f;
  f.N = n;
  for (int t = 0; t + 1 < n; ++t) {
    MatrixQ m(n, n);
    m.at(t, t) = 1;
    m.at(t + 1, t + 1) = -1;
    f.a_idx.push_back(static_cast<int>(f.basis.size()));
    f.basis.push_back(std::move(m));
    f.labels.push_back(diag_label("H", t));
  }
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      if (r == s) continue;
      MatrixQ m(n, n);
      m.at(r, s) = 1;
      f.basis.push_back(std::move(m));
      f.labels.push_back(pair_label("E", r, s));
    }
  return f;
}

MatrixFamily family_so(int p, int q) {
  int n = p + q;
  MatrixFamily f;
  f.N = n;
  auto same_block = [&](int r, int s) { return (r < p) == (s < p); };
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      MatrixQ m(n, n);
      if (same_block(r, s)) {
        m.at(r, s) = 1;
        m.at(s, r) = -1;
        f.basis.push_back(std::move(m));
        f.labels.push_back(pair_label("K", r, s));
      } else {
        m.at(r, s) = 1;
        m.at(s, r) = 1;
        if (s == p + r) f.a_idx.push_back(static_cast<int>(f.basis.size()));
        f.basis.push_back(std::move(m));
        f.labels.push_back(pair_label("P", r, s));
      }
    }
  return f;
}

MatrixFamily family_su(int p, int q) {
  int n = p + q;
  MatrixFamily f;
  f.N = 2 * n;
  for (int t = 0; t + 1 < n; ++t) {
    MatrixQ m(f.N, f.N);
    put_cplx(m, t, t, 0, 1);
    put_cplx(m, t + 1, t + 1, 0, -1);
    f.basis.push_back(std::move(m));
    f.labels.push_back(diag_label("iH", t));
  }
  auto same_block = [&](int r, int s) { return (r < p) == (s < p); };
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      MatrixQ m1(f.N, f.N), m2(f.N, f.N);
      if (same_block(r, s)) {
        put_cplx(m1, r, s, 1, 0);
        put_cplx(m1, s, r, -1, 0);
        put_cplx(m2, r, s, 0, 1);
        put_cplx(m2, s, r, 0, 1);
        f.basis.push_back(std::move(m1));
        f.labels.push_back(pair_label("A", r, s));
        f.basis.push_back(std::move(m2));
        f.labels.push_back(pair_label("iS", r, s));
      } else {
        put_cplx(m1, r, s, 1, 0);
        put_cplx(m1, s, r, 1, 0);
        put_cplx(m2, r, s, 0, 1);
        put_cplx(m2, s, r, 0, -1);
        if (s == p + r) f.a_idx.push_back(static_cast<int>(f.basis.size()));
        f.basis.push_back(std::move(m1));
        f.labels.push_back(pair_label("S", r, s));
        f.basis.push_back(std::move(m2));
        f.labels.push_back(pair_label("iA", r, s));
      }
    }
  return f;
}

MatrixFamily family_sp(int p, int q) {
  int n = p + q;
  MatrixFamily f;
  f.N = 4 * n;
  const char* unit_name[3] = {"i", "j", "k"};
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < 3; ++u) {
      MatrixQ m(f.N, f.N);
      put_quat(m, t, t, 0, u == 0, u == 1, u == 2);
      f.basis.push_back(std::move(m));
      f.labels.push_back(diag_label((std::string(unit_name[u]) + "H").c_str(), t));
    }
  auto same_block = [&](int r, int s) { return (r < p) == (s < p); };
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      if (same_block(r, s)) {
        MatrixQ m(f.N, f.N);
        put_quat(m, r, s, 1, 0, 0, 0);
        put_quat(m, s, r, -1, 0, 0, 0);
        f.basis.push_back(std::move(m));
        f.labels.push_back(pair_label("A", r, s));
        for (int u = 0; u < 3; ++u) {
          MatrixQ mu(f.N, f.N);
          put_quat(mu, r, s, 0, u == 0, u == 1, u == 2);
          put_quat(mu, s, r, 0, u == 0, u == 1, u == 2);
          f.basis.push_back(std::move(mu));
          f.labels.push_back(pair_label((std::string(unit_name[u]) + "S").c_str(), r, s));
        }
      } else {
        MatrixQ m(f.N, f.N);
        put_quat(m, r, s, 1, 0, 0, 0);
        put_quat(m, s, r, 1, 0, 0, 0);
        if (s == p + r) f.a_idx.push_back(static_cast<int>(f.basis.size()));
        f.basis.push_back(std::move(m));
        f.labels.push_back(pair_label("S", r, s));
        for (int u = 0; u < 3; ++u) {
          MatrixQ mu(f.N, f.N);
          put_quat(mu, r, s, 0, u == 0, u == 1, u == 2);
          put_quat(mu, s, r, 0, -(u == 0), -(u == 1), -(u == 2));
          f.basis.push_back(std::move(mu));
          f.labels.push_back(pair_label((std::string(unit_name[u]) + "A").c_str(), r, s));
        }
      }
    }
  return f;
}

AlgebraPtr realize(const MatrixFamily& f) {
  int dim = static_cast<int>(f.basis.size());
  int amb = f.N * f.N;
  std::vector<VecQ> cols;
  cols.reserve(dim);
  for (const MatrixQ& m : f.basis) cols.push_back(m.a);
  SpanSolver span(from_cols(amb, cols));

  auto coords_of = [&](const MatrixQ& m) {
    auto co = span.coords(m.a);
    if (!co) fail(Errc::not_closed, "matrix outside the spanned algebra");
    return *co;
  };

  std::vector<std::vector<VecQ>> c(dim, std::vector<VecQ>(dim, VecQ(dim)));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      MatrixQ comm = f.basis[i].mul(f.basis[j]).sub(f.basis[j].mul(f.basis[i]));
      VecQ co = coords_of(comm);
      for (int k = 0; k < dim; ++k) c[j][i][k] = -co[k];
      c[i][j] = std::move(co);
    }

  MatrixQ theta(dim, dim);
  for (int j = 0; j < dim; ++j) theta.set_col(j, coords_of(f.basis[j].transpose().scaled(-1)));

  MatrixQ a_basis(dim, static_cast<int>(f.a_idx.size()));
  for (int j = 0; j < static_cast<int>(f.a_idx.size()); ++j) a_basis.at(f.a_idx[j], j) = 1;

  return make_algebra(dim, f.labels, std::move(c), std::move(theta), std::move(a_basis));
}

void set_meta(const AlgebraPtr& g, std::string name, std::string family, int p, int q) {
  auto mut = std::const_pointer_cast<LieAlgebra>(g);
  mut->name = std::move(name);
  mut->family = std::move(family);
  mut->fam_p = p;
  mut->fam_q = q;
}

int expect_rank(int v, bool ok, const char* msg) {
  if (!ok) fail(Errc::rank_out_of_range, msg);
  return v;
}

}  // namespace

void verify_designated_a(const LieAlgebra& g, int expected_rank) {
  if (g.a_basis.cols != expected_rank)
    fail(Errc::internal, "designated a has the wrong dimension");
  if (!is_semisimple(g)) fail(Errc::internal, "Killing form is degenerate");
  CartanPair cp = cartan_decompose(g);
  auto killing_on = [&](const SubspaceBasis& s) {
    return s.transpose().mul(g.killing.mul(s));
  };
  if (!is_positive_definite(killing_on(cp.k).scaled(-1)))
    fail(Errc::internal, "Killing form is not negative definite on k");
  if (!is_positive_definite(killing_on(cp.p)))
    fail(Errc::internal, "Killing form is not positive definite on p");
  if (!subspace_contained(g.a_basis, cp.p))
    fail(Errc::internal, "designated a is not inside p");
  for (int i = 0; i < g.a_basis.cols; ++i)
    for (int j = i + 1; j < g.a_basis.cols; ++j)
      if (!vec_is_zero(g.bracket(g.a_basis.col(i), g.a_basis.col(j))))
        fail(Errc::internal, "designated a is not abelian");
  for (int i = 0; i < g.a_basis.cols; ++i)
    if (!eigenspaces(g.ad(g.a_basis.col(i))).complete)
      fail(Errc::internal, "ad of a designated a element is not diagonalizable over Q");
  SubspaceBasis za = centralizer(g, g.a_basis, cp.p);
  if (!(za == column_space_basis(g.a_basis)))
    fail(Errc::internal, "designated a is not maximal abelian in p");
}

AlgebraPtr build_sl(int n) {
  expect_rank(n, n >= 2 && n <= 6, "sl(n,R) supported for 2 <= n <= 6");
  AlgebraPtr g = realize(family_sl(n));
  set_meta(g, "sl" + std::to_string(n) + "R", "sl", 0, n);
  verify_designated_a(*g, n - 1);
  return g;
}

AlgebraPtr build_so(int p, int q) {
  if (p > q) std::swap(p, q);
  expect_rank(p, p >= 1 && p + q >= 3 && p + q <= 9,
              "so(p,q) supported for 1 <= p <= q and 3 <= p+q <= 9");
  AlgebraPtr g = realize(family_so(p, q));
  set_meta(g, "so(" + std::to_string(p) + "," + std::to_string(q) + ")", "so", p, q);
  verify_designated_a(*g, p);
  return g;
}

AlgebraPtr build_su(int p, int q) {
  if (p > q) std::swap(p, q);
  expect_rank(p, p >= 1 && p + q >= 2 && p + q <= 6,
              "su(p,q) supported for 1 <= p <= q and p+q <= 6");
  AlgebraPtr g = realize(family_su(p, q));
  set_meta(g, "su(" + std::to_string(p) + "," + std::to_string(q) + ")", "su", p, q);
  verify_designated_a(*g, p);
  return g;
}

AlgebraPtr build_sp(int p, int q) {
  if (p > q) std::swap(p, q);
  expect_rank(p, p >= 1 && p + q >= 2 && p + q <= 4,
              "sp(p,q) supported for 1 <= p <= q and p+q <= 4");
  AlgebraPtr g = realize(family_sp(p, q));
  set_meta(g, "sp(" + std::to_string(p) + "," + std::to_string(q) + ")", "sp", p, q);
  verify_designated_a(*g, p);
  return g;
}

bool exceptional_family_expected(const LieAlgebra& g) {
  if (g.family == "so") return g.fam_p == 1 && g.fam_q >= 3;
  if (g.family == "su") return g.fam_p == 1 && g.fam_q >= 2;
  // sp(1,1) is so(1,4) in disguise; its n is the abelian R^3
  if (g.family == "sp") return g.fam_p == 1 && g.fam_q == 1;
  return false;
}

namespace {

bool parse_uint(const std::string& s, int& out) {
  if (s.empty() || s.size() > 3) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  out = std::stoi(s);
  return true;
}

// Accepts "xx(p,q)" and fills p, q.
bool parse_signature(const std::string& s, int& p, int& q) {
  if (s.size() < 7 || s[2] != '(' || s.back() != ')') return false;
  std::string inner = s.substr(3, s.size() - 4);
  auto comma = inner.find(',');
  if (comma == std::string::npos) return false;
  return parse_uint(inner.substr(0, comma), p) && parse_uint(inner.substr(comma + 1), q);
}

}  // namespace

AlgebraPtr build_algebra(const std::string& name) {
  std::string s;
  for (char ch : name)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);

  if (s.rfind("split-", 0) == 0) {
    std::string rest = s.substr(6);
    if (rest.empty()) fail(Errc::unsupported_family, "empty split type in '" + name + "'");
    char type = rest[0];
    int rank = 0;
    if (!parse_uint(rest.substr(1), rank))
      fail(Errc::unsupported_family, "cannot read split rank in '" + name + "'");
    return build_split_chevalley(type, rank);
  }
  if (s.rfind("sl", 0) == 0) {
    std::string rest = s.substr(2);
    int n = 0;
    if (!rest.empty() && rest.back() == 'R' && parse_uint(rest.substr(0, rest.size() - 1), n))
      return build_sl(n);
    if (rest.size() >= 5 && rest.front() == '(' && rest.substr(rest.size() - 3) == ",R)" &&
        parse_uint(rest.substr(1, rest.size() - 4), n))
      return build_sl(n);
    fail(Errc::unsupported_family, "cannot parse '" + name + "' as sl<n>R");
  }
  if (s.rfind("so(", 0) == 0 || s.rfind("su(", 0) == 0 || s.rfind("sp(", 0) == 0) {
    int p = 0, q = 0;
    if (!parse_signature(s, p, q))
      fail(Errc::unsupported_family, "cannot parse signature in '" + name + "'");
    if (s[1] == 'o') return build_so(p, q);
    if (s[1] == 'u') return build_su(p, q);
    return build_sp(p, q);
  }
  fail(Errc::unsupported_family, "unrecognized algebra name '" + name + "'");
}

}  // namespace dern
