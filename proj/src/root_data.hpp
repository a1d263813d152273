#pragma once

#include <map>

#include "lie_algebra.hpp"

namespace dern {

// Restricted-root decomposition of an algebra with a designated a: the joint
// ad(a) eigenspace split, a fixed positive system, simple roots, heights,
// the highest root, and the inner product normalized so the highest root has
// squared length 2. Roots are covectors, stored as exact eigenvalue tuples
// in the designated a-basis; positives come first, each negative at index
// n_pos + i mirroring positive i.
struct RootDatum {
  AlgebraPtr base;
  InnerProduct ip;
  Rat c_norm = 1;
  bool normalized_by_omega = false;
  bool decomposable = false;
  int rank = 0;

  std::vector<VecQ> roots;
  std::vector<SubspaceBasis> spaces;
  std::vector<int> height;  // signed; aligned with roots
  int n_pos = 0;
  std::vector<int> simple;  // indices into roots, all < n_pos
  int omega = -1;           // index of the highest root; -1 when decomposable

  SubspaceBasis zero_space;  // m + a
  SubspaceBasis m_basis;
  MatrixQ a_gram_inv;                   // inverse Gram of <,> on the a-basis
  std::map<int, SubspaceBasis> grading; // h >= 1 -> g_h

  int root_index(const VecQ& cov) const;  // -1 when absent
  Rat pair_cov(const VecQ& x, const VecQ& y) const;  // <x, y> on covectors
  int mult(int r) const { return spaces[r].cols; }
  int height_omega() const;
};

RootDatum decompose(const AlgebraPtr& b);

// H_gamma in algebra coordinates, the a-element representing <., gamma>;
// checked against [theta X, X] = |X|^2 H_gamma on the stored basis of
// g_gamma.
VecQ coroot(const RootDatum& rd, const VecQ& gamma);

// Partition of the positive roots by pairing with the highest root.
struct HighestSplit {
  std::vector<int> sigma1;     // <gamma, omega> = 1
  std::vector<int> sigma0_pos; // positive, <gamma, omega> = 0
  SubspaceBasis v;
  SubspaceBasis z;   // g_omega
  SubspaceBasis n0;
};
HighestSplit highest_split(const RootDatum& rd);

// Positive roots lying in the rational span of gamma and delta, with the
// stacked nilpotent part; bracket closure is checked.
struct RankTwoSlice {
  std::vector<int> pos_idx;
  SubspaceBasis n;
};
RankTwoSlice rank_two_subalgebra(const RootDatum& rd, const VecQ& gamma,
                                 const VecQ& delta);

// span{[X, theta Y]} over distinct members of an orthogonal basis of
// g_gamma; contained in m by construction (checked).
SubspaceBasis m_gamma(const RootDatum& rd, const VecQ& gamma);

// Span of all brackets between the stored bases of roots i and j.
SubspaceBasis span_bracket(const RootDatum& rd, int i, int j);

struct StratReport {
  bool pass = false;
  std::string detail;
};

// [g_h, g_1] = g_{h+1} for every level, and no element of an intermediate
// level kills all of g_1.
StratReport stratification_check(const RootDatum& rd);

}  // namespace dern
