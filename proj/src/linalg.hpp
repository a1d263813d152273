#pragma once

#include <optional>
#include <utility>

#include "errors.hpp"
#include "matrix.hpp"

namespace dern {

// A subspace is carried as a matrix whose columns form a basis; rows = ambient
// dimension, zero columns = zero subspace. Bases coming out of the kernels
// below are in reduced column echelon form, so equal subspaces have equal
// representations.
using SubspaceBasis = MatrixQ;

struct RrefResult {
  MatrixQ r;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Fraction-free (Bareiss) forward elimination on an integer-scaled copy with
// first-nonzero pivoting, then rational back-substitution to the reduced
// row-echelon form.
RrefResult rref(const MatrixQ& m);

int rank_of(const MatrixQ& m);

SubspaceBasis nullspace(const MatrixQ& m);

// One solution of m x = b, or nullopt when inconsistent.
std::optional<VecQ> solve(const MatrixQ& m, const VecQ& b);

// Distinct rational eigenvalues, ascending. All of them: rational eigenvalues
// of the denominator-cleared integer matrix are integers, and every integer
// root of the characteristic polynomial inside the Gershgorin radius is tried.
std::vector<Rat> rational_eigenvalues(const MatrixQ& m);

struct EigenSplit {
  std::vector<Rat> values;
  std::vector<SubspaceBasis> spaces;
  bool complete = false;  // eigenspace dims sum to the ambient dimension
};
EigenSplit eigenspaces(const MatrixQ& m);

struct WeightSpace {
  VecQ weight;  // one eigenvalue per input matrix
  SubspaceBasis space;
};

// Joint eigenspace decomposition of pairwise commuting matrices; requires the
// full space to split (every matrix diagonalizable over Q).
std::vector<WeightSpace> simultaneous_eigenspaces(const std::vector<MatrixQ>& ms);

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

// Reduced column echelon basis of the column space; canonical per subspace.
SubspaceBasis column_space_basis(const MatrixQ& m);

bool in_span(const SubspaceBasis& basis, const VecQ& v);
bool subspace_contained(const SubspaceBasis& small, const SubspaceBasis& big);

// Solves B x = v for a fixed full-column-rank B, with the elimination done
// once up front.
struct SpanSolver {
  int ambient = 0;
  int dim = 0;
  MatrixQ e;                // row-op matrix: e * B has pivot rows first
  std::vector<int> pivots;  // pivot columns of [B], length = dim
  explicit SpanSolver(const MatrixQ& basis_cols);
  std::optional<VecQ> coords(const VecQ& v) const;
  bool contains(const VecQ& v) const;
};

// Symmetric positive definiteness via elimination pivots (exact).
bool is_positive_definite(const MatrixQ& g);

MatrixQ inverse(const MatrixQ& m);  // square nonsingular

}  // namespace dern
