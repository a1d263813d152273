#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace dern {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

using VecQ = std::vector<Rat>;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Accepts "p" or "p/q"; canonicalizes.
Rat rat_parse(const std::string& s);

// mpq_class(p, q) skips canonicalization; this does not.
inline Rat ratq(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

VecQ vec_zero(int n);
bool vec_is_zero(const VecQ& v);
Rat dot(const VecQ& a, const VecQ& b);
void axpy(VecQ& y, const Rat& c, const VecQ& x);  // y += c*x
VecQ vec_scale(const VecQ& v, const Rat& c);
VecQ vec_sub(const VecQ& a, const VecQ& b);
VecQ vec_add(const VecQ& a, const VecQ& b);

}  // namespace dern
