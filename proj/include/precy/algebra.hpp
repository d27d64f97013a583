#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "precy/check_report.hpp"
#include "precy/scalar.hpp"
#include "precy/sweep.hpp"

namespace precy {

/// c_{ij}^k: e_i * e_j = sum_k c_{ij}^k e_k. Indices are 0-based.
struct StructureConstant {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar value;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// A nonzero coefficient of a sparse vector.
struct Term {
  int index = 0;
  Scalar coeff;
};

/// Finite-dimensional algebra over Q given by structure constants. The type
/// does not enforce associativity; check_associativity decides it.
class AssocAlgebra {
 public:
  AssocAlgebra(std::string name, std::vector<std::string> basis_names,
               std::vector<StructureConstant> constants, std::optional<Vec> unit = std::nullopt);

  std::size_t dim() const { return basis_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const std::optional<Vec>& unit() const { return unit_; }

  /// Dense access to c_{ij}^k.
  const Scalar& coeff(int i, int j, int k) const {
    return dense_[(static_cast<std::size_t>(i) * dim() + j) * dim() + k];
  }

  /// Nonzero terms of e_i * e_j.
  std::span<const Term> product(int i, int j) const {
    return products_[static_cast<std::size_t>(i) * dim() + j];
  }

  /// Canonical sparse listing, sorted by (i, j, k).
  std::vector<StructureConstant> structure_constants() const;

  /// Index of a basis element by name, or -1.
  int index_of(std::string_view name) const;

  friend bool operator==(const AssocAlgebra& a, const AssocAlgebra& b) {
    return a.name_ == b.name_ && a.basis_ == b.basis_ && a.unit_ == b.unit_ && a.dense_ == b.dense_;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::optional<Vec> unit_;
  std::vector<Scalar> dense_;
  std::vector<std::vector<Term>> products_;
};

/// Bilinear extension of the structure constants.
Vec multiply(const AssocAlgebra& alg, const Vec& u, const Vec& v);

/// (e_i e_j) e_k == e_i (e_j e_k) for all triples; witness (i, j, k) with the
/// residual vector on failure.
CheckReport check_associativity(const AssocAlgebra& alg, const SweepOptions& opts = {});

/// u e_i == e_i u == e_i for all i. Passes vacuously when no unit is declared.
CheckReport check_unit(const AssocAlgebra& alg);

}  // namespace precy
