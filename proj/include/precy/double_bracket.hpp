#pragma once

// Double brackets on a finite-dimensional algebra, the elements of A^{(x)r}
// they produce, and the axiom checkers.

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "precy/algebra.hpp"
#include "precy/check_report.hpp"
#include "precy/sweep.hpp"

namespace precy {

/// Dense element of A^{(x) rank} over a basis of size n, row-major in the
/// tensor factors.
class Tensor {
 public:
  Tensor(std::size_t n, int rank);

  /// a_1 (x) ... (x) a_r for coefficient vectors a_i.
  static Tensor pure(std::span<const Vec> factors);
  static Tensor basis(std::size_t n, std::span<const int> index);

  std::size_t dim() const { return n_; }
  int rank() const { return rank_; }
  const Vec& coeffs() const { return data_; }
  Vec& coeffs() { return data_; }

  std::size_t flat(std::span<const int> index) const;
  const Scalar& operator[](std::span<const int> index) const { return data_[flat(index)]; }
  Scalar& operator[](std::span<const int> index) { return data_[flat(index)]; }
  const Scalar& at(std::initializer_list<int> index) const {
    return (*this)[std::span<const int>(index.begin(), index.size())];
  }

  bool is_zero() const { return precy::is_zero(data_); }

  /// Nonzero entries, indices given per factor.
  SparseResidual entries() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

  /// tau_sigma for a permutation sigma of {0..r-1}: factor p of the result is
  /// factor sigma^{-1}(p) of the input.
  Tensor permuted(std::span<const int> sigma) const;

 private:
  std::size_t n_;
  int rank_;
  Vec data_;
};

/// The twist a (x) b -> b (x) a.
Tensor swap_factors(const Tensor& t);

enum class Side { Left, Right };

/// Multiplies tensor factor `factor` by c on the given side.
Tensor act_on_factor(const AssocAlgebra& alg, const Tensor& t, int factor, const Vec& c, Side side);

/// Outer bimodule structure on A (x) A: c.(a (x) b) = ca (x) b, (a (x) b).c = a (x) bc.
Tensor outer_left(const AssocAlgebra& alg, const Vec& c, const Tensor& t);
Tensor outer_right(const AssocAlgebra& alg, const Tensor& t, const Vec& c);
/// Inner structure: c*(a (x) b) = a (x) cb, (a (x) b)*c = ac (x) b.
Tensor inner_left(const AssocAlgebra& alg, const Vec& c, const Tensor& t);
Tensor inner_right(const AssocAlgebra& alg, const Tensor& t, const Vec& c);

using BracketKey = std::array<int, 4>;

struct BracketTerm {
  int k = 0;
  int l = 0;
  Scalar coeff;
};

/// [[e_i, e_j]] = sum_{k,l} D[i,j,k,l] e_k (x) e_l. The algebra is passed
/// alongside wherever products are needed.
class DoubleBracket {
 public:
  DoubleBracket(std::size_t n, const std::map<BracketKey, Scalar>& entries);

  static DoubleBracket zero(std::size_t n) { return DoubleBracket(n, {}); }

  std::size_t dim() const { return n_; }
  /// Canonical sparse form: no zero values.
  const std::map<BracketKey, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  const Scalar& coeff(int i, int j, int k, int l) const;
  std::span<const BracketTerm> at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

  DoubleBracket with_coefficient(const BracketKey& key, const Scalar& value) const;

  friend bool operator==(const DoubleBracket& a, const DoubleBracket& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_;
  std::map<BracketKey, Scalar> entries_;
  std::vector<std::vector<BracketTerm>> cells_;
};

Tensor bracket_eval(const DoubleBracket& d, const Vec& u, const Vec& v);
Tensor bracket_basis(const DoubleBracket& d, int i, int j);

/// [[b, a_1 (x) ... (x) a_r]]_L = [[b, a_1]] (x) a_2 (x) ... (x) a_r.
Tensor left_extended_bracket(const DoubleBracket& d, const Vec& b, const Tensor& t);

/// [[a,[[b,c]]]]_L + tau_(123) [[b,[[c,a]]]]_L + tau_(132) [[c,[[a,b]]]]_L.
Tensor jacobiator(const DoubleBracket& d, const Vec& a, const Vec& b, const Vec& c);

/// D[i,j,k,l] = -D[j,i,l,k]; witness (i, j).
CheckReport check_antisymmetry(const DoubleBracket& d, const SweepOptions& opts = {});

/// [[e_i, e_j e_k]] = e_j.[[e_i,e_k]] + [[e_i,e_j]].e_k; witness (i, j, k).
CheckReport check_leibniz_outer(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts = {});

/// [[e_j e_k, e_i]] = e_j*[[e_k,e_i]] + [[e_j,e_i]]*e_k; witness (j, k, i).
CheckReport check_leibniz_inner(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts = {});

/// Jacobiator on all basis triples; witness (i, j, k).
CheckReport check_double_jacobi(const DoubleBracket& d, const SweepOptions& opts = {});

/// Leibniz in both slots of a bilinear map A (x) A -> A (x) A given by its
/// tensor: outer form in slot 2, inner form in slot 1.
CheckReport check_polyderivation(const AssocAlgebra& alg, const DoubleBracket& map, const SweepOptions& opts = {});

/// Antisymmetry, outer Leibniz, double Jacobi.
struct AxiomReport {
  CheckReport antisymmetry;
  CheckReport leibniz;
  CheckReport jacobi;

  bool pass() const { return antisymmetry.pass && leibniz.pass && jacobi.pass; }
};

AxiomReport check_axioms(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts = {});

}  // namespace precy
