#pragma once

// Symbolic view of the MC_4 and MC_5 equations: for an input row of sorts,
// every composition m_p(.., m_q(..), ..) is listed with the component types
// of the m3 factors it involves. No degree filter is applied here; the
// secondary classes are exactly the degree-forbidden patterns, so a term
// carrying a secondary tag vanishes in the model.

#include <optional>
#include <string>
#include <vector>

#include "precy/ternary.hpp"

namespace precy {

enum class OpKind { M2, M3 };

struct SymbolicTerm {
  int position = 0;  // first input consumed by the inner operation
  OpKind inner_kind = OpKind::M3;
  SortPattern inner;
  OpKind outer_kind = OpKind::M3;
  SortPattern outer;

  /// Component types of the m3 factors, inner first.
  std::vector<ComponentType> m3_types() const;
  /// Every m3 factor is type A or type B.
  bool is_main() const;
  /// Every m3 factor is type B.
  bool is_xx() const;
  bool has_type_a() const;
  /// Nonzero for some type-B-only m3 and the trivial-extension m2: m3
  /// factors are type B and m2 factors satisfy the degree filter.
  bool survives_type_b_only() const;
};

std::string to_string(const SymbolicTerm& t);

enum class EquationClass {
  PureXX,         // all main terms are type B compositions
  ContainsY,      // every main term carries a type A factor
  SecondaryOnly,  // no main terms
  Mixed,          // both kinds of main term; never occurs in MC_5
};

std::string to_string(EquationClass c);

struct SymbolicEquation {
  SortPattern row;
  std::vector<SymbolicTerm> terms;
  EquationClass label = EquationClass::SecondaryOnly;

  std::vector<SymbolicTerm> main_terms() const;
};

/// m3 o m3 terms of MC_5 on a 5-input row. With no output sort given both
/// output sorts are enumerated.
SymbolicEquation enumerate_mc5_terms(const SortPattern& row);

/// m2 o m3 and m3 o m2 terms of MC_4 on a 4-input row.
SymbolicEquation enumerate_mc4_terms(const SortPattern& row);

/// All 2^k rows for k = 4 or 5, in the order of all_input_rows.
std::vector<SymbolicEquation> mc_taxonomy(int arity);

}  // namespace precy
