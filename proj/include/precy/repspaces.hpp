#pragma once

// Representation spaces Rep_n(A): points, the coordinate ring of the ambient
// matrix space, and the Poisson bracket a double bracket induces on it,
//
//   {x[a]_ij, x[b]_kl} = sum_{c,d} D[a,b,c,d] x[c]_kj x[d]_il.
//
// Checks are exact, either symbolic in the ambient polynomial ring or by
// evaluation at rational points.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "precy/algebra.hpp"
#include "precy/check_report.hpp"
#include "precy/double_bracket.hpp"
#include "precy/matrix.hpp"
#include "precy/sweep.hpp"
#include "precy/ternary.hpp"

namespace precy {

/// One n x n matrix per basis element.
struct RepPoint {
  std::size_t n = 0;
  std::vector<Matrix> mats;

  friend bool operator==(const RepPoint&, const RepPoint&) = default;
};

/// Homomorphism property, and unit -> identity when the algebra has a unit.
/// Witness (i, j) for a failing product, (-1) for the unit.
CheckReport validate_rep_point(const AssocAlgebra& alg, const RepPoint& p);

/// g p g^{-1} matrixwise.
RepPoint conjugate(const RepPoint& p, const Matrix& g, const Matrix& g_inv);

/// Invertible n x n matrix with entries in [-2, 2] drawn from rng.
Matrix random_invertible(std::size_t n, std::mt19937_64& rng);

/// `count` points g (seed blocks) g^{-1}. Each point draws seeds so that the
/// block sizes add up to n, then a random invertible g. Deterministic in
/// rng_seed. Throws DomainError when no seed combination has size n.
std::vector<RepPoint> sample_rep_points(const AssocAlgebra& alg, std::size_t n, const std::vector<RepPoint>& seeds,
                                        std::size_t count, std::uint64_t rng_seed);

/// Coordinate function x[a]_ij.
struct Coord {
  int a = 0;
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Variable id of x[a]_ij: (a n + i) n + j.
inline int coord_var(std::size_t n, Coord c) {
  return (c.a * static_cast<int>(n) + c.i) * static_cast<int>(n) + c.j;
}
Coord coord_of(std::size_t n, int var);

/// Polynomial in the variables x[a]_ij. A monomial is the sorted multiset of
/// its variable ids; zero coefficients are never stored.
class CoordPoly {
 public:
  using Monomial = std::vector<int>;

  CoordPoly() = default;
  static CoordPoly constant(const Scalar& c);
  static CoordPoly variable(int var);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(Monomial m, const Scalar& c);

  CoordPoly& operator+=(const CoordPoly& o);
  CoordPoly& operator-=(const CoordPoly& o);
  friend CoordPoly operator+(CoordPoly a, const CoordPoly& b) { return a += b; }
  friend CoordPoly operator-(CoordPoly a, const CoordPoly& b) { return a -= b; }
  friend CoordPoly operator*(const CoordPoly& a, const CoordPoly& b);
  friend CoordPoly operator*(const Scalar& s, const CoordPoly& a);
  friend bool operator==(const CoordPoly&, const CoordPoly&) = default;

  CoordPoly derivative(int var) const;
  Scalar eval(const RepPoint& p) const;

 private:
  std::map<Monomial, Scalar> terms_;
};

/// Trace of the matrix of basis element a.
CoordPoly trace_poly(std::size_t n, int a);

/// {x[a]_ij, x[b]_kl} as a polynomial.
CoordPoly induced_coordinate_bracket(const DoubleBracket& d, std::size_t n, Coord x, Coord y);

/// P(p)[v][w] = {x_v, x_w}(p) over all variable pairs.
Matrix coordinate_bracket_matrix(const DoubleBracket& d, std::size_t n, const RepPoint& p);

/// {f, g}(p) by the biderivation rule: grad f(p)^T P(p) grad g(p).
Scalar poisson_eval(const DoubleBracket& d, std::size_t n, const CoordPoly& f, const CoordPoly& g, const RepPoint& p);

/// {x_v, x_w} + {x_w, x_v} == 0 as polynomials for all variable pairs;
/// witness (v, w).
CheckReport check_coordinate_antisymmetry(const DoubleBracket& d, std::size_t n, const SweepOptions& opts = {});

/// {x_u,{x_v,x_w}} + {x_v,{x_w,x_u}} + {x_w,{x_u,x_v}} at every point and
/// variable triple; witness (point, u, v, w).
CheckReport check_jacobi_at_points(const DoubleBracket& d, std::size_t n, const std::vector<RepPoint>& points,
                                   const SweepOptions& opts = {});

/// {f o Ad_g, h o Ad_g}(p) == {f, h}(Ad_g p) for coordinate functions f, h,
/// count_g random g and every point; witness (g, point, f, h).
CheckReport check_gl_equivariance(const DoubleBracket& d, std::size_t n, const std::vector<RepPoint>& points,
                                  std::size_t count_g, std::uint64_t rng_seed, const SweepOptions& opts = {});

/// Entries of X_i X_j - sum_k c_ij^k X_k, and of sum_a u_a X_a - 1 when
/// there is a unit.
std::vector<CoordPoly> relation_polys(const AssocAlgebra& alg, std::size_t n);

/// {x_v, r}(p) == 0 for every coordinate, relation and point; witness
/// (point, relation, v).
CheckReport check_ideal_compatibility(const AssocAlgebra& alg, const DoubleBracket& d, std::size_t n,
                                      const std::vector<RepPoint>& points, const SweepOptions& opts = {});

/// check_polyderivation on bracket_from_m3(project_type_B(m3)).
CheckReport check_restricted_polyderivation(const AssocAlgebra& alg, const TernaryOperation& m3,
                                            const SweepOptions& opts = {});

}  // namespace precy
