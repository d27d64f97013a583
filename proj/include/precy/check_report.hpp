#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "precy/scalar.hpp"

namespace precy {

/// One nonzero coordinate of a residual (vector, tensor, scalar).
struct ResidualEntry {
  std::vector<int> index;
  Scalar value;

  friend bool operator==(const ResidualEntry&, const ResidualEntry&) = default;
};

using SparseResidual = std::vector<ResidualEntry>;

/// A failing input tuple of basis indices together with its residual.
struct Witness {
  std::vector<int> tuple;
  SparseResidual residual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Result of an exhaustive verification pass. Witnesses are kept in the
/// row-major order of the tuple space, truncated to a cap; `failures` counts
/// all of them.
struct CheckReport {
  std::string identity;
  bool pass = true;
  std::uint64_t evaluated = 0;
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;

  const Witness* first_witness() const { return witnesses.empty() ? nullptr : &witnesses.front(); }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Collapses several reports into one named report: pass iff all pass,
/// witnesses are those of the first failing part.
CheckReport combine_reports(std::string identity, const std::vector<CheckReport>& parts);

/// Nonzero entries of a dense vector, indexed by position.
SparseResidual sparse_residual(const Vec& v);

}  // namespace precy
