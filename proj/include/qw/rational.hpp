#ifndef QW_RATIONAL_HPP
#define QW_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "qw/errors.hpp"

namespace qw {

// Arbitrary-precision rational coefficients. All arithmetic in the library is
// exact; there is no floating-point mode.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && r >= 0; }

// Canonical coefficient text: "p" for integers, "p/r" otherwise (always in
// lowest terms, r > 0).
inline std::string rat_to_string(const Rat& r) {
  Rat c(r);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw SchemaError("bad rational literal '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace qw

#endif
