#include "precy/fixtures.hpp"

namespace precy::fixtures {

AssocAlgebra field() { return AssocAlgebra("field", {"1"}, {{0, 0, 0, 1}}, Vec{1}); }

AssocAlgebra dual_numbers() {
  return AssocAlgebra("dual-numbers", {"1", "x"}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, Vec{1, 0});
}

AssocAlgebra product_field() {
  return AssocAlgebra("product-field", {"e1", "e2"}, {{0, 0, 0, 1}, {1, 1, 1, 1}}, Vec{1, 1});
}

AssocAlgebra upper_triangular() {
  return AssocAlgebra("upper-triangular", {"e11", "e12", "e22"},
                      {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, Vec{1, 0, 1});
}

std::vector<AssocAlgebra> all_algebras() { return {field(), dual_numbers(), product_field(), upper_triangular()}; }

DoubleBracket dual_numbers_bracket() { return DoubleBracket(2, {{{1, 1, 1, 0}, 1}, {{1, 1, 0, 1}, -1}}); }

std::vector<BracketFixture> all_brackets() {
  std::vector<BracketFixture> out;
  for (auto& a : all_algebras()) {
    const std::size_t n = a.dim();
    out.push_back({a.name() + "/zero", std::move(a), DoubleBracket::zero(n)});
  }
  out.push_back({"dual-numbers/xx", dual_numbers(), dual_numbers_bracket()});
  return out;
}

std::vector<Seed> dual_numbers_seeds() {
  Seed nil{2, {Matrix::identity(2), Matrix(2, 2)}};
  nil.mats[1](0, 1) = 1;
  Seed zero{1, {Matrix::identity(1), Matrix(1, 1)}};
  return {nil, zero};
}

}  // namespace precy::fixtures
