#pragma once

#include <stdexcept>
#include <string>

namespace dern {

enum class Errc {
  parse_error = 1,
  ambient_mismatch,
  not_commuting,
  not_diagonalizable_over_q,
  algebra_mismatch,
  theta_not_involutive,
  not_closed,
  jacobi_fails,
  non_positive_c,
  not_positive_definite,
  unsupported_family,
  rank_out_of_range,
  unsupported_type,
  not_a_root,
  decomposable_system,
  not_simple,
  not_orthogonal,
  not_h_type,
  not_a_derivation,
  not_symmetric,
  transpose_not_derivation,
  e_identity_fails,
  inconsistent_extension,
  no_solution,
  internal,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::not_commuting: return "NotCommuting";
    case Errc::not_diagonalizable_over_q: return "NotDiagonalizableOverQ";
    case Errc::algebra_mismatch: return "AlgebraMismatch";
    case Errc::theta_not_involutive: return "ThetaNotInvolutive";
    case Errc::not_closed: return "NotClosed";
    case Errc::jacobi_fails: return "JacobiFails";
    case Errc::non_positive_c: return "NonPositiveC";
    case Errc::not_positive_definite: return "NotPositiveDefinite";
    case Errc::unsupported_family: return "UnsupportedFamily";
    case Errc::rank_out_of_range: return "RankOutOfRange";
    case Errc::unsupported_type: return "UnsupportedType";
    case Errc::not_a_root: return "NotARoot";
    case Errc::decomposable_system: return "DecomposableSystem";
    case Errc::not_simple: return "NotSimple";
    case Errc::not_orthogonal: return "NotOrthogonal";
    case Errc::not_h_type: return "NotHType";
    case Errc::not_a_derivation: return "NotADerivation";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::transpose_not_derivation: return "TransposeNotDerivation";
    case Errc::e_identity_fails: return "EIdentityFails";
    case Errc::inconsistent_extension: return "InconsistentExtension";
    case Errc::no_solution: return "NoSolution";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace dern
