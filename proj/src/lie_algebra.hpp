#pragma once

#include <memory>
#include <string>

#include "linalg.hpp"

namespace dern {

// A Lie algebra as a basis plus structure constants. Matrix-built and
// abstractly-built algebras go through the same representation, so everything
// downstream has a single code path.
struct LieAlgebra {
  int dim = 0;
  std::vector<std::string> labels;
  // c[i][j] = coordinates of [e_i, e_j]
  std::vector<std::vector<VecQ>> c;
  MatrixQ theta;
  MatrixQ killing;  // cached Gram matrix of B
  // Designated maximal abelian subspace of p (columns, basis coordinates);
  // empty for algebras that do not carry one.
  MatrixQ a_basis;

  // Identification, used for display and for the expected-verdict flag.
  std::string name = "custom";
  std::string family = "custom";  // sl | so | su | sp | split | custom
  int fam_p = 0, fam_q = 0;       // so/su/sp signature, sl size in fam_q
  char split_type = 0;            // A B C D G for family == split
  int split_rank = 0;

  VecQ bracket(const VecQ& x, const VecQ& y) const;
  // [v, e_k] for v given in coordinates
  VecQ bracket_with_basis(const VecQ& v, int k) const;
  MatrixQ ad(const VecQ& x) const;
  Rat killing_form(const VecQ& x, const VecQ& y) const;
  VecQ apply_theta(const VecQ& x) const { return theta.apply(x); }
  VecQ basis_vec(int i) const;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct Element {
  AlgebraPtr alg;
  VecQ coords;
};

Element bracket(const Element& x, const Element& y);
Rat killing_form(const Element& x, const Element& y);

// Runs the construction-time checks (antisymmetry, Jacobi, theta involutive
// and an automorphism, B theta-invariant) and caches the Killing matrix.
// A wrong structure-constant sign would silently corrupt every later
// dimension count, so these hard-fail.
AlgebraPtr make_algebra(int dim, std::vector<std::string> labels,
                        std::vector<std::vector<VecQ>> c, MatrixQ theta,
                        MatrixQ a_basis);

struct CartanPair {
  SubspaceBasis k;
  SubspaceBasis p;
};
CartanPair cartan_decompose(const LieAlgebra& g);

struct InnerProduct {
  Rat c;
  MatrixQ gram;
  Rat pair(const VecQ& x, const VecQ& y) const;
  Rat norm2(const VecQ& x) const { return pair(x, x); }
};

// <X,Y> = -c B(X, theta Y); checks symmetry, positive definiteness, and the
// ad-transpose law <X,[Y,Z]> = -<[theta Y, X], Z> on all basis pairs.
InnerProduct inner_product_build(const LieAlgebra& g, const Rat& c);

SubspaceBasis centralizer(const LieAlgebra& g, const SubspaceBasis& s,
                          const SubspaceBasis& within);

SubspaceBasis subalgebra_generated(const LieAlgebra& g, const SubspaceBasis& seed);

bool is_semisimple(const LieAlgebra& g);

}  // namespace dern
