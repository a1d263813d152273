#pragma once

#include "root_data.hpp"

namespace dern {

// Two-step nilpotent algebra h = v + z with inner products on both layers:
// z is central, [v,v] lands in z, and bracket[i][j] holds the z-coordinates
// of [v_i, v_j].
struct MetricTwoStep {
  int v_dim = 0;
  int z_dim = 0;
  std::vector<std::vector<VecQ>> bracket;
  MatrixQ gram_v;
  MatrixQ gram_z;
};

// Validates antisymmetry, Gram shapes, and positive definiteness.
MetricTwoStep make_two_step(int v_dim, int z_dim,
                            std::vector<std::vector<VecQ>> bracket,
                            MatrixQ gram_v, MatrixQ gram_z);

// Slice of the Iwasawa algebra: v from the listed root spaces, z a single
// root space, brackets projected onto z along the root-space decomposition
// (components in other root spaces are dropped), inner products inherited.
MetricTwoStep two_step_from_roots(const RootDatum& rd,
                                  const std::vector<int>& v_roots, int z_root);

struct JOperator {
  VecQ z_vector;
  MatrixQ matrix;
};

// <J_Z X, Y> = <Z, [X,Y]>, solved against gram_v; skew-symmetry is forced.
JOperator jz(const MetricTwoStep& m, const VecQ& z);

struct HTypeReport {
  bool is_htype = false;
  std::string witness;  // failing pair, empty on success
};

// J_{Z}J_{Z'} + J_{Z'}J_Z = -2 scale <Z,Z'> I on all z-basis pairs; scale 1
// is the H-type condition, other positive scales cover the nearly-H-type
// slices that appear alongside doubled roots.
HTypeReport kaplan_check(const MetricTwoStep& m, const Rat& scale = Rat(1));

struct GradedEndo {
  MatrixQ v_block;
  MatrixQ z_block;
};

bool is_derivation(const MetricTwoStep& m, const GradedEndo& d);

// Adjoint with respect to the two Gram matrices.
GradedEndo graded_adjoint(const MetricTwoStep& m, const GradedEndo& d);

// J_{z1} J_{z2} on v and 2<z1,.>z2 - 2<z2,.>z1 on z; for orthogonal z1, z2
// on an H-type algebra this is a skew-symmetric derivation (checked).
GradedEndo riehm_phi(const MetricTwoStep& m, const VecQ& z1, const VecQ& z2);

struct SplitDerivation {
  GradedEndo sym;
  GradedEndo skew;
  GradedEndo spin;              // the part spanned by the two-vector generators
  GradedEndo zero_centre_skew;  // skew part vanishing on z, commutes with J
};

// D = sym + skew with both derivations; skew = zero_centre_skew + spin with
// spin the unique combination of Phi generators matching the z-block.
SplitDerivation split_derivation(const MetricTwoStep& m, const GradedEndo& d);

struct SpectrumReport {
  bool pass = false;
  std::string detail;
  Rat mu;
  std::vector<Rat> lambdas;  // distinct eigenvalues of the v-block, ascending
};

// For a symmetric derivation of an H-type algebra: z-block = 2 mu I, v-block
// eigenvalues pair up as lambda + lambda' = 2 mu with matching multiplicity,
// and the associated projection combinations are again derivations.
SpectrumReport symmetric_spectrum_check(const MetricTwoStep& m, const GradedEndo& d);

}  // namespace dern
