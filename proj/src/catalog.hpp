#pragma once

#include "lie_algebra.hpp"

namespace dern {

// Constructors for the concrete families. Every algebra comes back as
// structure constants over Q with theta X = -X^T in the realified matrix
// picture, plus a designated maximal abelian a in p whose ad-eigenvalues are
// rational. The designated a is verified (commuting, inside p, Q-split,
// maximal abelian) rather than trusted.
AlgebraPtr build_sl(int n);
AlgebraPtr build_so(int p, int q);
AlgebraPtr build_su(int p, int q);
AlgebraPtr build_sp(int p, int q);

// Split form from the abstract root system: basis {H_i, X_gamma}, integer
// structure constants, theta X_gamma = -X_{-gamma}, a = span{H_i}.
// type in {A,B,C,D,G}.
AlgebraPtr build_split_chevalley(char type, int rank);

// Name grammar: "sl3R", "so(1,3)", "su(2,3)", "sp(1,2)", "split-G2".
AlgebraPtr build_algebra(const std::string& name);

// Construction-time audit of the designated a: g semisimple, B definite on
// k and p, a an abelian subspace of p of the stated dimension, every ad(a_i)
// diagonalizable over Q, and a equal to its own centralizer in p.
void verify_designated_a(const LieAlgebra& g, int expected_rank);

// True when the Iwasawa derivation count is expected to exceed ad(m + a):
// the so(1,q) family with q >= 3, the su(1,q) family with q >= 2, and
// sp(1,1), which is isomorphic to so(1,4). The smaller members have an
// abelian line as n, where equality does hold.
bool exceptional_family_expected(const LieAlgebra& g);

}  // namespace dern
