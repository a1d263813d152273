#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "catalog.hpp"
#include "errors.hpp"

namespace dern {

namespace {

using Coeffs = std::vector<int>;

Coeffs add_c(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Coeffs sub_c(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Coeffs neg_c(const Coeffs& a) {
  Coeffs r = a;
  for (int& v : r) v = -v;
  return r;
}

bool all_nonneg(const Coeffs& a) {
  for (int v : a)
    if (v < 0) return false;
  return true;
}

bool all_nonpos(const Coeffs& a) {
  for (int v : a)
    if (v > 0) return false;
  return true;
}

// Root system data over a fixed simple-root basis. cartan[i][j] is the
// pairing of alpha_i against the coroot of alpha_j, and d[i] is half the
// squared length of alpha_i, so the Gram matrix cartan[i][j] * d[j] is
// symmetric.
struct RootSystem {
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<Rat> d;
  std::vector<Coeffs> pos;       // sorted by height, then lexicographically
  std::map<Coeffs, int> index;   // positions in pos

  bool is_pos(const Coeffs& g) const { return index.count(g) != 0; }
  bool is_root(const Coeffs& g) const {
    if (all_nonneg(g)) return is_pos(g);
    if (all_nonpos(g)) return is_pos(neg_c(g));
    return false;
  }
  int pairing(const Coeffs& g, int i) const {
    int v = 0;
    for (int j = 0; j < rank; ++j) v += g[j] * cartan[j][i];
    return v;
  }
  Rat ip(const Coeffs& g, const Coeffs& h) const {
    Rat v = 0;
    for (int i = 0; i < rank; ++i) {
      if (g[i] == 0) continue;
      for (int j = 0; j < rank; ++j) {
        if (h[j] == 0 || cartan[i][j] == 0) continue;
        v += Rat(g[i]) * Rat(cartan[i][j]) * d[j] * Rat(h[j]);
      }
    }
    return v;
  }
  // Length of the downward string: max k with g - k*step still a root.
  int string_down(const Coeffs& g, const Coeffs& step) const {
    int k = 0;
    Coeffs t = sub_c(g, step);
    while (is_root(t)) {
      ++k;
      t = sub_c(t, step);
    }
    return k;
  }
};

void chain_cartan(RootSystem& rs) {
  int n = rs.rank;
  rs.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rs.cartan[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) {
    rs.cartan[i][i + 1] = -1;
    rs.cartan[i + 1][i] = -1;
  }
  rs.d.assign(n, Rat(1));
}

RootSystem cartan_data(char type, int rank) {
  RootSystem rs;
  rs.rank = rank;
  switch (type) {
    case 'A':
      if (rank < 1) fail(Errc::rank_out_of_range, "type A needs rank >= 1");
      chain_cartan(rs);
      break;
    case 'B':
      if (rank < 2) fail(Errc::rank_out_of_range, "type B needs rank >= 2");
      chain_cartan(rs);
      rs.cartan[rank - 2][rank - 1] = -2;
      rs.d[rank - 1] = ratq(1, 2);
      break;
    case 'C':
      if (rank < 2) fail(Errc::rank_out_of_range, "type C needs rank >= 2");
      chain_cartan(rs);
      rs.cartan[rank - 1][rank - 2] = -2;
      for (int i = 0; i + 1 < rank; ++i) rs.d[i] = ratq(1, 2);
      break;
    case 'D':
      if (rank < 2) fail(Errc::rank_out_of_range, "type D needs rank >= 2");
      chain_cartan(rs);
      if (rank >= 3) {
        rs.cartan[rank - 2][rank - 1] = 0;
        rs.cartan[rank - 1][rank - 2] = 0;
        rs.cartan[rank - 3][rank - 1] = -1;
        rs.cartan[rank - 1][rank - 3] = -1;
      } else {
        rs.cartan[0][1] = 0;
        rs.cartan[1][0] = 0;
      }
      break;
    case 'G':
      if (rank != 2) fail(Errc::rank_out_of_range, "type G needs rank 2");
      chain_cartan(rs);
      rs.cartan[1][0] = -3;
      rs.d[0] = ratq(1, 3);
      break;
    case 'E':
    case 'F':
      fail(Errc::unsupported_type, std::string("split type ") + type + " is not available");
    default:
      fail(Errc::unsupported_type, std::string("unknown split type ") + type);
  }
  return rs;
}

// Positive roots height by height: gamma + alpha_i is a root exactly when
// the alpha_i-string through gamma continues upward, i.e. when the downward
// string length exceeds the coroot pairing.
void generate_positive(RootSystem& rs) {
  int n = rs.rank;
  std::set<Coeffs> known;
  std::vector<Coeffs> level;
  for (int i = 0; i < n; ++i) {
    Coeffs a(n, 0);
    a[i] = 1;
    known.insert(a);
    level.push_back(a);
  }
  std::vector<Coeffs> simple = level;
  while (!level.empty()) {
    for (const Coeffs& g : level) rs.pos.push_back(g);
    std::set<Coeffs> next;
    for (const Coeffs& g : level)
      for (int i = 0; i < n; ++i) {
        if (g == simple[i]) continue;
        int p = 0;
        Coeffs t = sub_c(g, simple[i]);
        while (known.count(t) != 0) {
          ++p;
          t = sub_c(t, simple[i]);
        }
        if (p - rs.pairing(g, i) > 0) next.insert(add_c(g, simple[i]));
      }
    level.assign(next.begin(), next.end());
    for (const Coeffs& g : level) known.insert(g);
  }
  // already sorted by height because levels were appended in order; ties are
  // in set order, which is lexicographic
  for (int i = 0; i < static_cast<int>(rs.pos.size()); ++i) rs.index[rs.pos[i]] = i;
}

// Structure constants N(u, v) with [x_u, x_v] = N(u, v) x_{u+v}. Signs are
// pinned by choosing N > 0 on the extraspecial pair of each positive
// non-simple root (the order-minimal way of writing it as a sum of two
// positive roots); everything else follows from the Jacobi identity.
struct Constants {
  const RootSystem& rs;
  std::map<std::pair<int, int>, Rat> memo;

  explicit Constants(const RootSystem& r) : rs(r) {}

  // index of the extraspecial partner: smallest positive root a in the total
  // order with gamma - a positive and a earlier than gamma - a
  std::pair<int, int> extraspecial(const Coeffs& gamma) const {
    for (int a = 0; a < static_cast<int>(rs.pos.size()); ++a) {
      Coeffs rest = sub_c(gamma, rs.pos[a]);
      if (!all_nonneg(rest) || !rs.is_pos(rest)) continue;
      int b = rs.index.at(rest);
      if (a < b) return {a, b};
    }
    fail(Errc::internal, "positive non-simple root with no special pair");
  }

  Rat n_of(const Coeffs& u, const Coeffs& v) {
    bool up = all_nonneg(u), vp = all_nonneg(v);
    if (up && vp) {
      int i = rs.index.at(u), j = rs.index.at(v);
      return i < j ? n_pos(i, j) : -n_pos(j, i);
    }
    if (!up && !vp) return -n_of(neg_c(u), neg_c(v));
    if (!up) return -n_of(v, u);
    // u positive, v negative, u + v a root
    Coeffs w = add_c(u, v);
    if (all_nonneg(w)) return -(rs.ip(w, w) / rs.ip(u, u)) * n_of(neg_c(v), w);
    return -(rs.ip(w, w) / rs.ip(v, v)) * n_of(u, neg_c(w));
  }

  Rat n_pos(int i, int j) {
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    const Coeffs& xi = rs.pos[i];
    const Coeffs& eta = rs.pos[j];
    Coeffs gamma = add_c(xi, eta);
    auto [ea, eb] = extraspecial(gamma);
    Rat val;
    if (ea == i && eb == j) {
      val = rs.string_down(eta, xi) + 1;
    } else {
      // Jacobi identity on (x_{-alpha}, x_xi, x_eta) for the extraspecial
      // alpha of gamma, solved for N(xi, eta); every term on the right has a
      // strictly smaller height sum
      const Coeffs& alpha = rs.pos[ea];
      Rat denom = n_of(gamma, neg_c(alpha));
      Rat t = 0;
      Coeffs xa = sub_c(xi, alpha);
      if (rs.is_root(xa)) t += n_of(neg_c(alpha), xi) * n_of(xa, eta);
      Coeffs ya = sub_c(eta, alpha);
      if (rs.is_root(ya)) t += n_of(eta, neg_c(alpha)) * n_of(ya, xi);
      val = -t / denom;
      Rat expect = rs.string_down(eta, xi) + 1;
      if (val != expect && val != -expect)
        fail(Errc::internal, "structure constant does not match its string length");
    }
    memo[{i, j}] = val;
    return val;
  }
};

std::string root_label(const char* stem, const Coeffs& g) {
  std::ostringstream os;
  os << stem << "[";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) os << ",";
    os << g[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

AlgebraPtr build_split_chevalley(char type, int rank) {
  if (rank > 6) fail(Errc::rank_out_of_range, "split ranks above 6 are not supported");
  RootSystem rs = cartan_data(type, rank);
  generate_positive(rs);
  Constants cn(rs);

  int R = static_cast<int>(rs.pos.size());
  int dim = rank + 2 * R;
  auto X = [&](int r) { return rank + r; };
  auto Y = [&](int r) { return rank + R + r; };

  std::vector<std::string> labels(dim);
  for (int t = 0; t < rank; ++t) labels[t] = "H" + std::to_string(t + 1);
  for (int r = 0; r < R; ++r) {
    labels[X(r)] = root_label("X", rs.pos[r]);
    labels[Y(r)] = root_label("Y", rs.pos[r]);
  }

  std::vector<std::vector<VecQ>> c(dim, std::vector<VecQ>(dim, VecQ(dim)));
  auto put = [&](int i, int j, int k, const Rat& v) {
    c[i][j][k] = v;
    c[j][i][k] = -v;
  };

  for (int t = 0; t < rank; ++t)
    for (int r = 0; r < R; ++r) {
      Rat pr = rs.pairing(rs.pos[r], t);
      if (pr != 0) {
        put(t, X(r), X(r), pr);
        put(t, Y(r), Y(r), -pr);
      }
    }

  for (int r = 0; r < R; ++r) {
    // [x_gamma, x_{-gamma}] is the coroot of gamma in the H basis
    const Coeffs& g = rs.pos[r];
    Rat nn = rs.ip(g, g);
    for (int t = 0; t < rank; ++t) {
      if (g[t] == 0) continue;
      Rat coef = Rat(2) * rs.d[t] * Rat(g[t]) / nn;
      if (coef.get_den() != 1) fail(Errc::internal, "coroot is not an integer vector");
      put(X(r), Y(r), t, coef);
    }
  }

  auto term_index = [&](const Coeffs& w) {
    return all_nonneg(w) ? X(rs.index.at(w)) : Y(rs.index.at(neg_c(w)));
  };
  for (int r = 0; r < R; ++r)
    for (int s = 0; s < R; ++s) {
      if (s > r) {
        Coeffs uv = add_c(rs.pos[r], rs.pos[s]);
        if (rs.is_root(uv)) {
          Rat n = cn.n_of(rs.pos[r], rs.pos[s]);
          put(X(r), X(s), term_index(uv), n);
          put(Y(r), Y(s), term_index(neg_c(uv)), -n);
        }
      }
      if (s != r) {
        Coeffs w = sub_c(rs.pos[r], rs.pos[s]);
        if (rs.is_root(w)) {
          Rat n = cn.n_of(rs.pos[r], neg_c(rs.pos[s]));
          put(X(r), Y(s), term_index(w), n);
        }
      }
    }

  MatrixQ theta(dim, dim);
  for (int t = 0; t < rank; ++t) theta.at(t, t) = -1;
  for (int r = 0; r < R; ++r) {
    theta.at(Y(r), X(r)) = -1;
    theta.at(X(r), Y(r)) = -1;
  }

  MatrixQ a_basis(dim, rank);
  for (int t = 0; t < rank; ++t) a_basis.at(t, t) = 1;

  AlgebraPtr g = make_algebra(dim, std::move(labels), std::move(c), std::move(theta),
                              std::move(a_basis));
  auto mut = std::const_pointer_cast<LieAlgebra>(g);
  mut->name = std::string("split-") + type + std::to_string(rank);
  mut->family = "split";
  mut->split_type = type;
  mut->split_rank = rank;
  verify_designated_a(*g, rank);
  return g;
}

}  // namespace dern
