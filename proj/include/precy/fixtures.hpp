#pragma once

// Built-in example algebras, brackets and seed representations. The same
// objects ship as JSON under data/.

#include <string>
#include <vector>

#include "precy/algebra.hpp"
#include "precy/double_bracket.hpp"
#include "precy/matrix.hpp"

namespace precy::fixtures {

/// Q, basis (1).
AssocAlgebra field();
/// Q[x]/(x^2), basis (1, x).
AssocAlgebra dual_numbers();
/// Q x Q, basis of orthogonal idempotents (e1, e2).
AssocAlgebra product_field();
/// Upper-triangular 2x2 matrices, basis (e11, e12, e22).
AssocAlgebra upper_triangular();

std::vector<AssocAlgebra> all_algebras();

/// [[x, x]] = x (x) 1 - 1 (x) x on the dual numbers.
DoubleBracket dual_numbers_bracket();

struct BracketFixture {
  std::string name;
  AssocAlgebra algebra;
  DoubleBracket bracket;
};

/// The zero bracket on every algebra, plus dual_numbers_bracket.
std::vector<BracketFixture> all_brackets();

/// A representation given by one matrix per basis element.
struct Seed {
  std::size_t n = 0;
  std::vector<Matrix> mats;
};

/// Dual numbers: x -> [[0,1],[0,0]] (n = 2) and x -> [0] (n = 1).
std::vector<Seed> dual_numbers_seeds();

}  // namespace precy::fixtures
