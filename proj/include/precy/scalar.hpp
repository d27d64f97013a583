#pragma once

// Exact rational scalars. Every coefficient in the toolkit is an mpq_class in
// canonical form (positive denominator, reduced), so equality is decidable.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace precy {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// Thrown when vectors or tensors of incompatible shape meet.
class InputShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation's precondition on its mathematical input fails
/// (e.g. a non-type-B ternary operation handed to bracket_from_m3).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "p", "-p", "p/q" into a canonical rational. Whitespace, floats and
/// zero denominators are rejected.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p/q" or "p" when the denominator is 1.
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

inline Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

}  // namespace precy
