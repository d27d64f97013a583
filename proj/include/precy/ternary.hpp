#pragma once

// The ternary component m3 of an A-infinity structure on A + A*, stored as
// one sparse table per (input sorts, output sort) pattern, plus the
// classification of those 16 patterns into main (type A / type B) and
// secondary (C1..C4) variables.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "precy/extended.hpp"

namespace precy {

/// Ordered input sorts with an optional output sort.
struct SortPattern {
  std::vector<Sort> inputs;
  std::optional<Sort> output;

  friend bool operator==(const SortPattern&, const SortPattern&) = default;
};

/// Readable form, e.g. "A x A* x A -> A".
std::string to_string(const SortPattern& p);

/// All 2^k input rows of length k in row-major order (Alg before Dual).
std::vector<SortPattern> all_input_rows(int k);

enum class ComponentType { TypeA, TypeB, C1, C2, C3, C4 };

std::string to_string(ComponentType t);

inline bool is_main(ComponentType t) { return t == ComponentType::TypeA || t == ComponentType::TypeB; }

/// Class of a 3-input operation with output. The operation is read as the
/// 4-slot cyclic tensor dual(inputs) (x) output; type A has the two A slots
/// adjacent, type B alternating, C1 = four A, C2 = four A*, C3 = one A*,
/// C4 = one A.
ComponentType classify_component(const SortPattern& pattern);

/// A 3-input pattern with output, the key of an m3 table.
struct TernaryPattern {
  std::array<Sort, 3> inputs{};
  Sort output = Sort::Alg;

  /// Output degree equals input degree sum plus one (m3 has degree +1).
  bool degree_allowed() const;
  ComponentType type() const;
  SortPattern as_sort_pattern() const { return {{inputs.begin(), inputs.end()}, output}; }

  /// Dense code in [0, 16): input bits (Dual = 1, first input most
  /// significant) followed by the output bit.
  int code() const;
  static TernaryPattern from_code(int code);
  static std::vector<TernaryPattern> all();

  friend auto operator<=>(const TernaryPattern& a, const TernaryPattern& b) { return a.code() <=> b.code(); }
  friend bool operator==(const TernaryPattern& a, const TernaryPattern& b) { return a.code() == b.code(); }
};

std::string to_string(const TernaryPattern& p);

/// The two type-B patterns.
inline const TernaryPattern kTypeBAlg{{Sort::Alg, Sort::Dual, Sort::Alg}, Sort::Alg};
inline const TernaryPattern kTypeBDual{{Sort::Dual, Sort::Alg, Sort::Dual}, Sort::Dual};

/// (i1, i2, i3, k): coefficient of output basis element k in
/// m3(b_{i1}, b_{i2}, b_{i3}), indices within their sorts.
using TernaryKey = std::array<int, 4>;
using TernaryTableMap = std::map<TernaryKey, Scalar>;

/// Immutable m3. Construction rejects out-of-range indices and entries on
/// patterns violating the degree filter; stored zeros are dropped.
class TernaryOperation {
 public:
  TernaryOperation(std::size_t n, const std::map<TernaryPattern, TernaryTableMap>& tables);

  static TernaryOperation zero(std::size_t n) { return TernaryOperation(n, {}); }

  std::size_t dim() const { return n_; }
  std::size_t ext_dim() const { return 2 * n_; }

  /// Canonical tables; patterns with no entries are absent.
  const std::map<TernaryPattern, TernaryTableMap>& tables() const { return tables_; }
  const TernaryTableMap& table(const TernaryPattern& p) const;

  bool is_zero() const { return tables_.empty(); }

  /// Only the two type-B tables carry entries.
  bool is_type_b_only() const;

  /// Copy with one coefficient replaced (zero removes it).
  TernaryOperation with_coefficient(const TernaryPattern& p, const TernaryKey& key, const Scalar& value) const;

  /// Nonzero outputs of m3 on a basis triple given by linear extended
  /// indices.
  std::span<const ExtTerm> at(int u, int v, int w) const {
    return cells_[(static_cast<std::size_t>(u) * ext_dim() + v) * ext_dim() + w];
  }

  ExtElement apply(ExtIndex x1, ExtIndex x2, ExtIndex x3) const;
  ExtElement apply(const ExtElement& x1, const ExtElement& x2, const ExtElement& x3) const;

  friend bool operator==(const TernaryOperation& a, const TernaryOperation& b) {
    return a.n_ == b.n_ && a.tables_ == b.tables_;
  }

 private:
  std::size_t n_;
  std::map<TernaryPattern, TernaryTableMap> tables_;
  std::vector<std::vector<ExtTerm>> cells_;
};

}  // namespace precy
