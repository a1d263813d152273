#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "serialize.hpp"

using namespace dern;

namespace {

int positive_root_count(const LieAlgebra& g) {
  // split forms have dim = rank + 2 * (number of positive roots)
  return (g.dim - g.split_rank) / 2;
}

}  // namespace

TEST_CASE("special linear series") {
  AlgebraPtr g = build_sl(3);
  CHECK(g->dim == 8);
  CHECK(g->a_basis.cols == 2);
  CHECK(g->name == "sl3R");
  CHECK(g->family == "sl");
  CHECK(is_semisimple(*g));
  CHECK(build_sl(2)->dim == 3);
  CHECK(build_sl(4)->dim == 15);
}

TEST_CASE("orthogonal series dimensions and rank") {
  AlgebraPtr g = build_so(1, 3);
  CHECK(g->dim == 6);
  CHECK(g->a_basis.cols == 1);
  CHECK(g->fam_p == 1);
  CHECK(g->fam_q == 3);
  CHECK(build_so(1, 4)->dim == 10);
  CHECK(build_so(1, 5)->dim == 15);
  CHECK(build_so(2, 3)->dim == 10);
  CHECK(build_so(2, 4)->dim == 15);
  CHECK(build_so(2, 5)->dim == 21);
  CHECK(build_so(3, 4)->dim == 21);
  CHECK(build_so(2, 3)->a_basis.cols == 2);
  CHECK(build_so(3, 4)->a_basis.cols == 3);
}

TEST_CASE("signature is normalized with the smaller part first") {
  AlgebraPtr g = build_so(3, 1);
  CHECK(g->name == "so(1,3)");
  CHECK(g->fam_p == 1);
  CHECK(g->fam_q == 3);
}

TEST_CASE("special unitary series dimensions and rank") {
  AlgebraPtr g = build_su(1, 2);
  CHECK(g->dim == 8);
  CHECK(g->a_basis.cols == 1);
  CHECK(build_su(1, 1)->dim == 3);
  CHECK(build_su(1, 3)->dim == 15);
  CHECK(build_su(2, 2)->dim == 15);
  CHECK(build_su(2, 3)->dim == 24);
  CHECK(build_su(2, 3)->a_basis.cols == 2);
}

TEST_CASE("quaternionic series dimensions and rank") {
  AlgebraPtr g = build_sp(1, 2);
  CHECK(g->dim == 21);
  CHECK(g->a_basis.cols == 1);
  CHECK(build_sp(1, 1)->dim == 10);
}

TEST_CASE("split forms from root systems") {
  CHECK(build_split_chevalley('A', 1)->dim == 3);
  AlgebraPtr a2 = build_split_chevalley('A', 2);
  CHECK(a2->dim == 8);
  CHECK(a2->name == "split-A2");
  CHECK(a2->a_basis.cols == 2);
  CHECK(build_split_chevalley('A', 3)->dim == 15);
  AlgebraPtr b2 = build_split_chevalley('B', 2);
  CHECK(b2->dim == 10);
  CHECK(positive_root_count(*b2) == 4);
  CHECK(build_split_chevalley('B', 3)->dim == 21);
  CHECK(build_split_chevalley('C', 2)->dim == 10);
  CHECK(build_split_chevalley('C', 3)->dim == 21);
  CHECK(build_split_chevalley('D', 2)->dim == 6);
  CHECK(build_split_chevalley('D', 3)->dim == 15);
  AlgebraPtr g2 = build_split_chevalley('G', 2);
  CHECK(g2->dim == 14);
  CHECK(positive_root_count(*g2) == 6);
}

TEST_CASE("split form theta negates the Cartan subalgebra") {
  AlgebraPtr g = build_split_chevalley('B', 2);
  for (int t = 0; t < 2; ++t) {
    VecQ h = g->basis_vec(t);
    VecQ th = g->apply_theta(h);
    CHECK(th == vec_scale(h, Rat(-1)));
  }
}

TEST_CASE("name grammar") {
  CHECK(build_algebra("sl3R")->dim == 8);
  CHECK(build_algebra("sl(3,R)")->dim == 8);
  CHECK(build_algebra("so(1,3)")->dim == 6);
  CHECK(build_algebra("so(1, 3)")->dim == 6);
  CHECK(build_algebra("su(2,3)")->dim == 24);
  CHECK(build_algebra("sp(1,2)")->dim == 21);
  CHECK(build_algebra("split-G2")->dim == 14);
}

TEST_CASE("rejected names and ranks") {
  CHECK_THROWS_WITH_AS(build_algebra("f4"), doctest::Contains("unrecognized"), Error);
  CHECK_THROWS_AS(build_algebra("split-E6"), Error);
  CHECK_THROWS_AS(build_algebra("split-F4"), Error);
  CHECK_THROWS_AS(build_algebra("split-Z3"), Error);
  try {
    build_algebra("split-E6");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::unsupported_type);
  }
  try {
    build_algebra("so(0,4)");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::rank_out_of_range);
  }
  try {
    build_algebra("split-B1");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::rank_out_of_range);
  }
  try {
    build_algebra("split-G3");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::rank_out_of_range);
  }
  try {
    build_algebra("sl9R");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::rank_out_of_range);
  }
}

TEST_CASE("expected exceptional families") {
  CHECK(exceptional_family_expected(*build_so(1, 3)));
  CHECK(exceptional_family_expected(*build_so(1, 5)));
  CHECK(exceptional_family_expected(*build_su(1, 2)));
  CHECK_FALSE(exceptional_family_expected(*build_so(1, 2)));
  CHECK_FALSE(exceptional_family_expected(*build_su(1, 1)));
  CHECK_FALSE(exceptional_family_expected(*build_so(2, 3)));
  CHECK_FALSE(exceptional_family_expected(*build_sp(1, 2)));
  CHECK_FALSE(exceptional_family_expected(*build_sl(3)));
}

TEST_CASE("catalog algebras survive the serialization round trip") {
  for (const char* name : {"so(1,3)", "su(1,2)", "split-B2"}) {
    AlgebraPtr g = build_algebra(name);
    AlgebraPtr h = algebra_from_json(algebra_to_json(*g));
    CHECK(h->dim == g->dim);
    CHECK(h->name == g->name);
    CHECK(h->family == g->family);
    CHECK(h->theta == g->theta);
    CHECK(h->a_basis == g->a_basis);
    bool same = true;
    for (int i = 0; i < g->dim && same; ++i)
      for (int j = 0; j < g->dim && same; ++j) same = g->c[i][j] == h->c[i][j];
    CHECK(same);
  }
}

TEST_CASE("decomposable orthogonal algebra still builds") {
  AlgebraPtr g = build_so(2, 2);
  CHECK(g->dim == 6);
  CHECK(g->a_basis.cols == 2);
  CHECK(is_semisimple(*g));
}
