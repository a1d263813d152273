#include "dern.h"

#include <cstring>
#include <string>

#include "catalog.hpp"
#include "report.hpp"
#include "serialize.hpp"

struct dern_algebra {
  dern::AlgebraPtr g;
};

namespace {

using dern::Errc;

#define DERN_CHECK_CODE(cpp, c) \
  static_assert(static_cast<int>(Errc::cpp) == c, "status table out of sync")
DERN_CHECK_CODE(parse_error, DERN_PARSE_ERROR);
DERN_CHECK_CODE(ambient_mismatch, DERN_AMBIENT_MISMATCH);
DERN_CHECK_CODE(not_commuting, DERN_NOT_COMMUTING);
DERN_CHECK_CODE(not_diagonalizable_over_q, DERN_NOT_DIAGONALIZABLE_OVER_Q);
DERN_CHECK_CODE(algebra_mismatch, DERN_ALGEBRA_MISMATCH);
DERN_CHECK_CODE(theta_not_involutive, DERN_THETA_NOT_INVOLUTIVE);
DERN_CHECK_CODE(not_closed, DERN_NOT_CLOSED);
DERN_CHECK_CODE(jacobi_fails, DERN_JACOBI_FAILS);
DERN_CHECK_CODE(non_positive_c, DERN_NON_POSITIVE_C);
DERN_CHECK_CODE(not_positive_definite, DERN_NOT_POSITIVE_DEFINITE);
DERN_CHECK_CODE(unsupported_family, DERN_UNSUPPORTED_FAMILY);
DERN_CHECK_CODE(rank_out_of_range, DERN_RANK_OUT_OF_RANGE);
DERN_CHECK_CODE(unsupported_type, DERN_UNSUPPORTED_TYPE);
DERN_CHECK_CODE(not_a_root, DERN_NOT_A_ROOT);
DERN_CHECK_CODE(decomposable_system, DERN_DECOMPOSABLE_SYSTEM);
DERN_CHECK_CODE(not_simple, DERN_NOT_SIMPLE);
DERN_CHECK_CODE(not_orthogonal, DERN_NOT_ORTHOGONAL);
DERN_CHECK_CODE(not_h_type, DERN_NOT_H_TYPE);
DERN_CHECK_CODE(not_a_derivation, DERN_NOT_A_DERIVATION);
DERN_CHECK_CODE(not_symmetric, DERN_NOT_SYMMETRIC);
DERN_CHECK_CODE(transpose_not_derivation, DERN_TRANSPOSE_NOT_DERIVATION);
DERN_CHECK_CODE(e_identity_fails, DERN_E_IDENTITY_FAILS);
DERN_CHECK_CODE(inconsistent_extension, DERN_INCONSISTENT_EXTENSION);
DERN_CHECK_CODE(no_solution, DERN_NO_SOLUTION);
DERN_CHECK_CODE(internal, DERN_INTERNAL_ERROR);
#undef DERN_CHECK_CODE

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int bad_argument(const char* what) {
  g_last_error = what;
  return DERN_BAD_ARGUMENT;
}

template <class F>
int guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return DERN_OK;
  } catch (const dern::Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DERN_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

const char* dern_version(void) { return dern::tool_version; }

const char* dern_status_name(int status) {
  if (status == DERN_OK) return "Ok";
  if (status == DERN_BAD_ARGUMENT) return "BadArgument";
  if (status >= DERN_PARSE_ERROR && status <= DERN_INTERNAL_ERROR)
    return dern::errc_name(static_cast<Errc>(status));
  return "UnknownError";
}

const char* dern_last_error(void) { return g_last_error.c_str(); }

int dern_build(const char* name, dern_algebra** out) {
  if (!name || !out) return bad_argument("dern_build needs a name and an out pointer");
  *out = nullptr;
  return guarded([&] { *out = new dern_algebra{dern::build_algebra(name)}; });
}

int dern_algebra_from_json(const char* text, dern_algebra** out) {
  if (!text || !out) return bad_argument("dern_algebra_from_json needs text and an out pointer");
  *out = nullptr;
  return guarded([&] { *out = new dern_algebra{dern::algebra_from_json(text)}; });
}

int dern_algebra_to_json(const dern_algebra* g, char** out) {
  if (!g || !out) return bad_argument("dern_algebra_to_json needs an algebra and an out pointer");
  *out = nullptr;
  return guarded([&] { *out = dup_string(dern::algebra_to_json(*g->g)); });
}

int dern_algebra_dim(const dern_algebra* g) { return g ? g->g->dim : -1; }

void dern_algebra_free(dern_algebra* g) { delete g; }

int dern_roots_report(const dern_algebra* g, char** out) {
  if (!g || !out) return bad_argument("dern_roots_report needs an algebra and an out pointer");
  *out = nullptr;
  return guarded([&] { *out = dup_string(dern::roots_report(g->g)); });
}

int dern_solve_report(const dern_algebra* g, const char* mode, char** out) {
  if (!g || !mode || !out)
    return bad_argument("dern_solve_report needs an algebra, a mode, and an out pointer");
  *out = nullptr;
  return guarded([&] { *out = dup_string(dern::solve_report(g->g, mode)); });
}

int dern_verify_report(const dern_algebra* g, char** out) {
  if (!g || !out) return bad_argument("dern_verify_report needs an algebra and an out pointer");
  *out = nullptr;
  return guarded([&] { *out = dup_string(dern::verify_report(g->g)); });
}

int dern_htype_check(const char* two_step_json, unsigned long long seed, char** out) {
  if (!two_step_json || !out)
    return bad_argument("dern_htype_check needs a document and an out pointer");
  *out = nullptr;
  return guarded([&] { *out = dup_string(dern::htype_report(two_step_json, seed)); });
}

void dern_string_free(char* s) { delete[] s; }

}  // extern "C"
