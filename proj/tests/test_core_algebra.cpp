#include <gtest/gtest.h>

#include "battery.hpp"
#include "precy/algebra.hpp"
#include "precy/extended.hpp"
#include "precy/fixtures.hpp"
#include "precy/matrix.hpp"

using namespace precy;

namespace {

std::vector<AssocAlgebra> every_algebra() {
  auto algs = fixtures::all_algebras();
  for (auto& a : testkit::battery_algebras()) algs.push_back(a);
  return algs;
}

ExtElement eb(std::size_t n, int linear) { return ExtElement::basis(n, ExtIndex::from_linear(n, linear)); }

int deg(std::size_t n, int l) { return linear_degree(n, l); }

}  // namespace

TEST(Scalar, ParsesCanonically) {
  EXPECT_EQ(to_string(parse_scalar("3/6")), "1/2");
  EXPECT_EQ(to_string(parse_scalar("-4/2")), "-2");
  EXPECT_EQ(to_string(parse_scalar("0/5")), "0");
  EXPECT_EQ(to_string(parse_scalar("7")), "7");
  EXPECT_EQ(parse_scalar("-2/4"), Scalar(-1, 2));
  EXPECT_EQ(parse_scalar("-2/4").get_den(), 2);
}

TEST(Scalar, RejectsNonRationals) {
  for (const char* bad : {"", "1.5", " 1", "1 ", "1/0", "x", "1/2/3", "1e3", "+", "2/-4"}) {
    EXPECT_THROW(parse_scalar(bad), std::invalid_argument) << bad;
  }
}

TEST(Scalar, ArithmeticIsExact) {
  Scalar third(1, 3);
  Scalar sum = third + third + third;
  EXPECT_EQ(sum, 1);
  Scalar big = 1;
  for (int i = 0; i < 200; ++i) big *= Scalar(3, 2);
  for (int i = 0; i < 200; ++i) big /= Scalar(3, 2);
  EXPECT_EQ(big, 1);
}

TEST(Matrix, RankInverseNullSpace) {
  Matrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = 1;
  EXPECT_EQ(rank(m), 2u);
  EXPECT_FALSE(inverse(m).has_value());
  const auto ns = null_space(m);
  ASSERT_EQ(ns.size(), 1u);
  for (std::size_t r = 0; r < 3; ++r) {
    Scalar s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += m(r, c) * ns[0][c];
    EXPECT_EQ(s, 0);
  }
  m(1, 2) = 7;
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv * m, Matrix::identity(3));
  EXPECT_EQ(m * *inv, Matrix::identity(3));
}

TEST(Matrix, BlockDiagonal) {
  Matrix a = Matrix::identity(1);
  Matrix b(2, 2);
  b(0, 1) = 5;
  Matrix d = block_diagonal({a, b});
  EXPECT_EQ(d.rows(), 3u);
  EXPECT_EQ(d(0, 0), 1);
  EXPECT_EQ(d(1, 2), 5);
  EXPECT_EQ(d(0, 2), 0);
}

TEST(Multiply, DualNumbersExamples) {
  const auto a = fixtures::dual_numbers();
  EXPECT_EQ(multiply(a, basis_vec(2, 1), basis_vec(2, 1)), zero_vec(2));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(multiply(a, *a.unit(), basis_vec(2, i)), basis_vec(2, i));
    EXPECT_EQ(multiply(a, basis_vec(2, i), *a.unit()), basis_vec(2, i));
  }
  EXPECT_EQ(multiply(a, zero_vec(2), Vec{Scalar(3), Scalar(-1)}), zero_vec(2));
  EXPECT_THROW(multiply(a, zero_vec(3), zero_vec(2)), InputShapeError);
}

TEST(Multiply, IsBilinear) {
  const auto a = fixtures::upper_triangular();
  Vec u{Scalar(1, 2), Scalar(-3), Scalar(2)};
  Vec v{Scalar(4), Scalar(1, 3), Scalar(-1)};
  Vec w{Scalar(0), Scalar(5), Scalar(7, 2)};
  Vec vw(3);
  for (int i = 0; i < 3; ++i) vw[i] = v[i] + 2 * w[i];
  const Vec lhs = multiply(a, u, vw);
  const Vec r1 = multiply(a, u, v);
  const Vec r2 = multiply(a, u, w);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(lhs[i], r1[i] + 2 * r2[i]);
}

TEST(Associativity, BundledAlgebrasPass) {
  for (const auto& a : every_algebra()) {
    EXPECT_TRUE(check_associativity(a).pass) << a.name();
    EXPECT_TRUE(check_unit(a).pass) << a.name();
  }
}

TEST(Associativity, AlteredProductFieldFailsAtFirstTriple) {
  // e1 e1 = e1 + e2: (e1 e1) e2 = e2 but e1 (e1 e2) = 0.
  AssocAlgebra bad("altered", {"e1", "e2"}, {{0, 0, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}});
  const auto r = check_associativity(bad);
  EXPECT_FALSE(r.pass);
  ASSERT_NE(r.first_witness(), nullptr);
  EXPECT_EQ(r.first_witness()->tuple, (std::vector<int>{0, 0, 1}));

  // Brute-force the residual vector of that triple.
  const Vec lhs = multiply(bad, multiply(bad, basis_vec(2, 0), basis_vec(2, 0)), basis_vec(2, 1));
  const Vec rhs = multiply(bad, basis_vec(2, 0), multiply(bad, basis_vec(2, 0), basis_vec(2, 1)));
  SparseResidual expect;
  for (int k = 0; k < 2; ++k) {
    if (lhs[k] != rhs[k]) expect.push_back({{k}, lhs[k] - rhs[k]});
  }
  EXPECT_EQ(r.first_witness()->residual, expect);
}

TEST(Associativity, FieldPasses) { EXPECT_TRUE(check_associativity(fixtures::field()).pass); }

TEST(Unit, WrongUnitFails) {
  const auto a = fixtures::dual_numbers();
  AssocAlgebra b(a.name(), a.basis_names(), a.structure_constants(), Vec{Scalar(1), Scalar(1)});
  EXPECT_FALSE(check_unit(b).pass);
}

TEST(Pairing, BasisValues) {
  const std::size_t n = 2;
  EXPECT_EQ(pairing(n, dual(0), alg(0)), 1);
  EXPECT_EQ(pairing(n, alg(0), dual(0)), -1);
  EXPECT_EQ(pairing(n, alg(0), alg(1)), 0);
  EXPECT_EQ(pairing(n, dual(0), dual(0)), 0);
  EXPECT_EQ(pairing(n, dual(0), alg(1)), 0);
}

TEST(Pairing, GradedSymmetryOnAllBasisPairs) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const int m = static_cast<int>(2 * n);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        const Scalar s = (deg(n, x) * deg(n, y)) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(pairing(eb(n, x), eb(n, y)), -s * pairing(eb(n, y), eb(n, x)));
      }
    }
  }
}

TEST(Pairing, GramMatrixHasFullRank) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(rank(pairing_gram(n)), 2 * n);
}

TEST(Pairing, IsBilinear) {
  const Vec a1{Scalar(1), Scalar(2)}, f1{Scalar(-1), Scalar(3)};
  const Vec a2{Scalar(0), Scalar(5)}, f2{Scalar(7), Scalar(1, 2)};
  const ExtElement x(a1, f1), y(a2, f2);
  // Expand by hand: f1(a2) - f2(a1).
  const Scalar expect = (f1[0] * a2[0] + f1[1] * a2[1]) - (f2[0] * a1[0] + f2[1] * a1[1]);
  EXPECT_EQ(pairing(x, y), expect);
}

TEST(TrivialExtension, Examples) {
  const auto a = fixtures::dual_numbers();
  const std::size_t n = 2;
  // a * b is the algebra product.
  const auto xx = trivial_extension_product(a, ExtElement::basis(n, alg(1)), ExtElement::basis(n, alg(1)));
  EXPECT_TRUE(xx.is_zero());
  const auto one_x = trivial_extension_product(a, ExtElement::basis(n, alg(0)), ExtElement::basis(n, alg(1)));
  EXPECT_EQ(one_x, ExtElement::basis(n, alg(1)));
  // f g = 0.
  for (int f = 0; f < 2; ++f) {
    for (int g = 0; g < 2; ++g) {
      EXPECT_TRUE(trivial_extension_product(a, ExtElement::basis(n, dual(f)), ExtElement::basis(n, dual(g))).is_zero());
    }
  }
  // e1* . 1 is c -> -e1*(c).
  const auto f1 = trivial_extension_product(a, ExtElement::basis(n, dual(0)), ExtElement::basis(n, alg(0)));
  EXPECT_EQ(f1, Scalar(-1) * ExtElement::basis(n, dual(0)));
}

TEST(TrivialExtension, ActionsAgainstDefinition) {
  for (const auto& a : every_algebra()) {
    const std::size_t n = a.dim();
    const int ni = static_cast<int>(n);
    for (int x = 0; x < ni; ++x) {
      for (int f = 0; f < ni; ++f) {
        const auto left = trivial_extension_product(a, ExtElement::basis(n, alg(x)), ExtElement::basis(n, dual(f)));
        const auto right = trivial_extension_product(a, ExtElement::basis(n, dual(f)), ExtElement::basis(n, alg(x)));
        for (int c = 0; c < ni; ++c) {
          // (x f)(c) = f(c x), (f x)(c) = -f(x c).
          EXPECT_EQ(left.dual(c), a.coeff(c, x, f));
          EXPECT_EQ(right.dual(c), -a.coeff(x, c, f));
        }
        EXPECT_TRUE(is_zero(left.alg_part()));
        EXPECT_TRUE(is_zero(right.alg_part()));
      }
    }
  }
}

// Unknowns: L[a][f][g] = e_g* coefficient of e_a e_f*, R[f][a][g] = e_g*
// coefficient of e_f* e_a. Cyclicity over all extended basis triples is a
// linear system in them; the actions used by the library must be its unique
// solution.
TEST(TrivialExtension, ActionsAreTheUniqueCyclicSolution) {
  for (const auto& a : every_algebra()) {
    const std::size_t n = a.dim();
    const int ni = static_cast<int>(n);
    const int m = 2 * ni;
    const int nu = 2 * ni * ni * ni;
    auto lvar = [&](int x, int f, int g) { return (x * ni + f) * ni + g; };
    auto rvar = [&](int f, int x, int g) { return ni * ni * ni + (f * ni + x) * ni + g; };

    // <m2(u,v), w> as (coefficients over unknowns, constant).
    auto pair_prod = [&](int u, int v, int w) {
      Vec row = zero_vec(nu + 1);
      const ExtIndex U = ExtIndex::from_linear(n, u), V = ExtIndex::from_linear(n, v), W = ExtIndex::from_linear(n, w);
      if (U.sort == Sort::Alg && V.sort == Sort::Alg) {
        if (W.sort == Sort::Dual) {
          for (int k = 0; k < ni; ++k) row[nu] += a.coeff(U.index, V.index, k) * pairing(n, alg(k), W);
        }
      } else if (U.sort == Sort::Alg && V.sort == Sort::Dual) {
        // <sum_g L e_g*, w> is nonzero only for w in A.
        if (W.sort == Sort::Alg) row[lvar(U.index, V.index, W.index)] += pairing(n, dual(W.index), W);
      } else if (U.sort == Sort::Dual && V.sort == Sort::Alg) {
        if (W.sort == Sort::Alg) row[rvar(U.index, V.index, W.index)] += pairing(n, dual(W.index), W);
      }
      return row;
    };

    std::vector<Vec> rows;
    for (int x1 = 0; x1 < m; ++x1) {
      for (int x2 = 0; x2 < m; ++x2) {
        for (int x3 = 0; x3 < m; ++x3) {
          const Scalar s = (deg(n, x1) * (deg(n, x2) + deg(n, x3))) % 2 == 0 ? 1 : -1;
          Vec lhs = pair_prod(x1, x2, x3);
          const Vec rhs = pair_prod(x2, x3, x1);
          for (int i = 0; i <= nu; ++i) lhs[i] -= s * rhs[i];
          if (!is_zero(lhs)) rows.push_back(lhs);
        }
      }
    }
    Matrix sys(rows.size(), nu + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (int c = 0; c <= nu; ++c) sys(r, c) = rows[r][c];
    }
    const auto ns = null_space(sys);
    ASSERT_EQ(ns.size(), 1u) << a.name();
    ASSERT_NE(ns[0][nu], 0) << a.name();
    const Vec sol = [&] {
      Vec v(nu);
      for (int i = 0; i < nu; ++i) v[i] = ns[0][i] / ns[0][nu];
      return v;
    }();

    const BinaryTable m2 = trivial_extension_table(a);
    for (int x = 0; x < ni; ++x) {
      for (int f = 0; f < ni; ++f) {
        const auto lf = m2.apply(ExtElement::basis(n, alg(x)), ExtElement::basis(n, dual(f)));
        const auto rf = m2.apply(ExtElement::basis(n, dual(f)), ExtElement::basis(n, alg(x)));
        for (int g = 0; g < ni; ++g) {
          EXPECT_EQ(lf.dual(g), sol[lvar(x, f, g)]) << a.name();
          EXPECT_EQ(rf.dual(g), sol[rvar(f, x, g)]) << a.name();
        }
      }
    }
  }
}

TEST(M2Cyclicity, PassesOnAssociativeAlgebras) {
  for (const auto& a : every_algebra()) EXPECT_TRUE(check_m2_cyclicity(a).pass) << a.name();
}

TEST(M2Cyclicity, FlippedRightActionFails) {
  for (const auto& a : every_algebra()) {
    const auto r = check_m2_cyclicity(trivial_extension_table(a, RightActionSign::Plus));
    EXPECT_FALSE(r.pass) << a.name();
  }
}

TEST(M2, GradedAssociativityHolds) {
  for (const auto& a : every_algebra()) EXPECT_TRUE(check_graded_associativity(trivial_extension_table(a)).pass) << a.name();
}

TEST(M2, GradedAssociativityFailsOnNonAssociativeAlgebra) {
  AssocAlgebra bad("altered", {"e1", "e2"}, {{0, 0, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}});
  EXPECT_FALSE(check_graded_associativity(trivial_extension_table(bad)).pass);
}

TEST(M2, SerialAndParallelReportsAgree) {
  const auto a = testkit::truncated_polynomial(3);
  const auto m2 = trivial_extension_table(a, RightActionSign::Plus);
  EXPECT_EQ(check_m2_cyclicity(m2, {.jobs = 1}), check_m2_cyclicity(m2, {.jobs = 4}));
}
