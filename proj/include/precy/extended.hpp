#pragma once

// The extended space A + A* with shifted degrees A -> -1, A* -> 0, its
// natural pairing, and the trivial-extension product m2.
//
// Extended basis vectors are addressed two ways: as ExtIndex (sort, index)
// and by a linear index in [0, 2n): Alg i -> i, Dual i -> n + i. Kernels use
// the linear form.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "precy/algebra.hpp"
#include "precy/check_report.hpp"
#include "precy/matrix.hpp"
#include "precy/sweep.hpp"

namespace precy {

enum class Sort : std::uint8_t { Alg, Dual };

constexpr int shifted_degree(Sort s) { return s == Sort::Alg ? -1 : 0; }

/// "A" / "A*".
std::string sort_name(Sort s);

struct ExtIndex {
  Sort sort = Sort::Alg;
  int index = 0;

  int linear(std::size_t n) const { return sort == Sort::Alg ? index : static_cast<int>(n) + index; }
  int degree() const { return shifted_degree(sort); }

  static ExtIndex from_linear(std::size_t n, int l) {
    return l < static_cast<int>(n) ? ExtIndex{Sort::Alg, l} : ExtIndex{Sort::Dual, l - static_cast<int>(n)};
  }

  friend bool operator==(const ExtIndex&, const ExtIndex&) = default;
};

inline ExtIndex alg(int i) { return {Sort::Alg, i}; }
inline ExtIndex dual(int i) { return {Sort::Dual, i}; }

inline int linear_degree(std::size_t n, int l) { return l < static_cast<int>(n) ? -1 : 0; }

/// Element a + f of A + A*, stored as 2n coefficients (alg part first).
class ExtElement {
 public:
  explicit ExtElement(std::size_t n) : n_(n), coeffs_(2 * n) {}
  ExtElement(const Vec& alg_part, const Vec& dual_part);

  static ExtElement basis(std::size_t n, ExtIndex e);

  std::size_t dim() const { return n_; }
  Scalar& alg(int i) { return coeffs_[i]; }
  const Scalar& alg(int i) const { return coeffs_[i]; }
  Scalar& dual(int i) { return coeffs_[n_ + i]; }
  const Scalar& dual(int i) const { return coeffs_[n_ + i]; }
  Vec alg_part() const { return Vec(coeffs_.begin(), coeffs_.begin() + n_); }
  Vec dual_part() const { return Vec(coeffs_.begin() + n_, coeffs_.end()); }

  /// Coefficients indexed by linear extended index.
  const Vec& coeffs() const { return coeffs_; }
  Vec& coeffs() { return coeffs_; }

  bool is_zero() const { return precy::is_zero(coeffs_); }

  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  ExtElement& operator*=(const Scalar& s);

  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const Scalar& s, ExtElement a) { return a *= s; }
  friend bool operator==(const ExtElement&, const ExtElement&) = default;

 private:
  std::size_t n_;
  Vec coeffs_;
};

/// Natural pairing: <f, a> = f(a), <a, f> = -f(a), zero on A x A and
/// A* x A*. This is the normalization for which
/// <x, y> = -(-1)^{|x|'|y|'} <y, x> holds.
Scalar pairing(const ExtElement& x, const ExtElement& y);
Scalar pairing(std::size_t n, ExtIndex x, ExtIndex y);

/// Gram matrix of the pairing on the extended basis (2n x 2n).
Matrix pairing_gram(std::size_t n);

/// Nonzero coefficient on an extended basis vector (linear index).
struct ExtTerm {
  int index = 0;
  Scalar coeff;
};

/// Sparse table of a bilinear operation on basis pairs of A + A*.
class BinaryTable {
 public:
  explicit BinaryTable(std::size_t n) : n_(n), cells_(4 * n * n) {}

  std::size_t dim() const { return n_; }
  std::size_t ext_dim() const { return 2 * n_; }

  void add(int u, int v, int w, const Scalar& c);

  std::span<const ExtTerm> at(int u, int v) const { return cells_[static_cast<std::size_t>(u) * ext_dim() + v]; }

  ExtElement apply(const ExtElement& x, const ExtElement& y) const;

 private:
  std::size_t n_;
  std::vector<std::vector<ExtTerm>> cells_;
};

/// Sign convention of the right action A* x A -> A*. The default is the one
/// forced by cyclic invariance; Plus exists for mutation testing.
enum class RightActionSign { Minus, Plus };

/// m2 on A + A*: ab by the structure constants, (a f)(c) = f(c a),
/// (f a)(c) = -f(a c), f g = 0.
BinaryTable trivial_extension_table(const AssocAlgebra& alg, RightActionSign sign = RightActionSign::Minus);

ExtElement trivial_extension_product(const AssocAlgebra& alg, const ExtElement& x, const ExtElement& y);

/// <m2(x1,x2), x3> = (-1)^{|x1|'(|x2|'+|x3|')} <m2(x2,x3), x1> on all extended
/// basis triples.
CheckReport check_m2_cyclicity(const BinaryTable& m2, const SweepOptions& opts = {});
CheckReport check_m2_cyclicity(const AssocAlgebra& alg, const SweepOptions& opts = {});

/// Graded associativity of m2 in shifted degrees:
/// m2(m2(x1,x2),x3) + (-1)^{|x1|'} m2(x1, m2(x2,x3)) = 0.
CheckReport check_graded_associativity(const BinaryTable& m2, const SweepOptions& opts = {});

}  // namespace precy
