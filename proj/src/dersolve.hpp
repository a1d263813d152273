#pragma once

#include <optional>

#include "root_data.hpp"

namespace dern {

// Everything in this module works in the coordinates of iwasawa_n: the bases
// of the positive root spaces stacked in root order. A derivation of n is an
// n_dim x n_dim matrix in those coordinates.

// Stacked bases of the positive root spaces, ambient dim x n_dim.
MatrixQ iwasawa_n(const RootDatum& rd);

enum class ConstraintMode {
  unconstrained,
  grading_preserving,
  root_space_preserving,
};

struct DerivationSpace {
  int n_dim = 0;
  ConstraintMode mode = ConstraintMode::root_space_preserving;
  std::vector<MatrixQ> basis;
  // Matrix positions left free by the mode: (row, column) pairs, row-major
  // order. Entries off this list are zero in every basis element.
  std::vector<std::pair<int, int>> block_structure;
  // n column -> positive root index, shared by all three modes.
  std::vector<int> root_of;
};

// Exact nullspace of the derivation law restricted to the mode's block
// structure. Every basis element is re-checked against the unrestricted law
// on all pairs, so the pair-skipping optimizations cannot change the answer.
DerivationSpace solve_derivations(const RootDatum& rd, ConstraintMode mode);

// ad(W)|_n for W running over the zero_space columns. Requires a simple
// algebra; injectivity (kernel_dim = 0) and the root-space block shape of
// each generator are verified.
struct AdImage {
  std::vector<MatrixQ> generators;
  int kernel_dim = 0;
};
AdImage ad_restriction(const RootDatum& rd);

// Symmetric / skew-symmetric split of a root-space-preserving derivation
// space with respect to the inner product on n. The adjoint of each basis
// element must itself be a derivation; the two halves are column-reduced to
// canonical bases and their dimensions add up to dim of the input space.
struct SymSkewSplit {
  std::vector<MatrixQ> sym;
  std::vector<MatrixQ> skew;
};
SymSkewSplit split_sym_skew(const RootDatum& rd, const DerivationSpace& ds);

// The identity
//   D[[X, theta Y], Z] = [[DX, theta Y], Z] + [[X, theta DY], Z]
//                        + [[X, theta Y], DZ]
// over all X, Y in the stored basis of g_gamma and Z in the basis of
// g_delta. Both roots must be positive.
struct EReport {
  bool holds = true;
  std::string witness;
};
EReport check_E_identity(const RootDatum& rd, const MatrixQ& d,
                         const VecQ& gamma, const VecQ& delta);

// Extension of a skew-symmetric height-preserving derivation of n to a
// derivation of the whole algebra: the action on the zero space is the
// unique solution of
//   D~ [X, theta Y] = [DX, theta Y] + [X, theta DY]   for X, Y of height 1,
// and the negative side is the theta-conjugate of D. Requires the identity
// of check_E_identity on all pairs of simple roots; the result is verified
// to be a derivation of g with the zero-space action landing in m.
struct Extension {
  MatrixQ on_g;     // derivation of the full algebra, ambient coordinates
  MatrixQ on_zero;  // induced action in zero_space coordinates
};
Extension build_extension(const RootDatum& rd, const MatrixQ& d);

// Solves ad(W)|_n = d for W in m + a. The solution is unique when it
// exists; otherwise found is false and residual holds d - ad(W0) for the
// candidate W0 determined by the pivot rows of the generator span.
struct WSolution {
  bool found = false;
  VecQ w;            // ambient coordinates, inside m + a
  MatrixQ residual;
};
WSolution reconstruct_W(const RootDatum& rd, const MatrixQ& d);

// Dimension comparison of the root-space-preserving derivations against
// ad(m + a), with containment of the latter in the former checked exactly.
// When the spaces differ, witness is the first basis element of the solved
// space outside the image of ad.
struct Verdict {
  int dim_der = 0;
  int dim_ad = 0;
  bool equal = false;
  bool exceptional_expected = false;
  std::optional<MatrixQ> witness;
};
Verdict main_theorem_verdict(const RootDatum& rd);

}  // namespace dern
