#include "precy/taxonomy.hpp"

namespace precy {

namespace {

constexpr Sort kSorts[] = {Sort::Alg, Sort::Dual};

bool m2_allowed(const SortPattern& p) {
  int sum = 1;
  for (Sort s : p.inputs) sum += shifted_degree(s);
  return sum == shifted_degree(*p.output);
}

EquationClass label_of(const std::vector<SymbolicTerm>& terms) {
  bool xx = false, y = false;
  for (const auto& t : terms) {
    if (!t.is_main()) continue;
    (t.has_type_a() ? y : xx) = true;
  }
  if (xx && y) return EquationClass::Mixed;
  if (xx) return EquationClass::PureXX;
  if (y) return EquationClass::ContainsY;
  return EquationClass::SecondaryOnly;
}

std::vector<Sort> outputs_for(const SortPattern& row) {
  if (row.output) return {*row.output};
  return {Sort::Alg, Sort::Dual};
}

SymbolicEquation enumerate(const SortPattern& row, int arity) {
  if (static_cast<int>(row.inputs.size()) != arity) {
    throw InputShapeError("MC_" + std::to_string(arity) + " row needs " + std::to_string(arity) + " inputs");
  }
  SymbolicEquation eq;
  eq.row = row;
  for (int q = 2; q <= 3; ++q) {
    const int p = arity + 1 - q;
    if (p < 2 || p > 3) continue;
    for (int i = 0; i + q <= arity; ++i) {
      for (Sort s : kSorts) {
        for (Sort t : outputs_for(row)) {
          SymbolicTerm term;
          term.position = i;
          term.inner_kind = q == 2 ? OpKind::M2 : OpKind::M3;
          term.outer_kind = p == 2 ? OpKind::M2 : OpKind::M3;
          term.inner.inputs.assign(row.inputs.begin() + i, row.inputs.begin() + i + q);
          term.inner.output = s;
          term.outer.inputs.assign(row.inputs.begin(), row.inputs.begin() + i);
          term.outer.inputs.push_back(s);
          term.outer.inputs.insert(term.outer.inputs.end(), row.inputs.begin() + i + q, row.inputs.end());
          term.outer.output = t;
          // m2 is fixed by the trivial extension; only its nonzero sorts count.
          if (term.inner_kind == OpKind::M2 && !m2_allowed(term.inner)) continue;
          if (term.outer_kind == OpKind::M2 && !m2_allowed(term.outer)) continue;
          eq.terms.push_back(std::move(term));
        }
      }
    }
  }
  eq.label = label_of(eq.terms);
  return eq;
}

}  // namespace

std::vector<ComponentType> SymbolicTerm::m3_types() const {
  std::vector<ComponentType> out;
  if (inner_kind == OpKind::M3) out.push_back(classify_component(inner));
  if (outer_kind == OpKind::M3) out.push_back(classify_component(outer));
  return out;
}

bool SymbolicTerm::is_main() const {
  for (ComponentType c : m3_types()) {
    if (!precy::is_main(c)) return false;
  }
  return true;
}

bool SymbolicTerm::is_xx() const {
  for (ComponentType c : m3_types()) {
    if (c != ComponentType::TypeB) return false;
  }
  return true;
}

bool SymbolicTerm::has_type_a() const {
  for (ComponentType c : m3_types()) {
    if (c == ComponentType::TypeA) return true;
  }
  return false;
}

bool SymbolicTerm::survives_type_b_only() const { return is_xx(); }

std::string to_string(const SymbolicTerm& t) {
  auto op = [](OpKind k) { return k == OpKind::M2 ? std::string("m2") : std::string("m3"); };
  std::string out = op(t.outer_kind) + "[" + to_string(t.outer) + "] o_" + std::to_string(t.position + 1) + " " +
                    op(t.inner_kind) + "[" + to_string(t.inner) + "]";
  std::string tags;
  for (ComponentType c : t.m3_types()) tags += (tags.empty() ? "" : ",") + to_string(c);
  return out + " {" + tags + "}";
}

std::string to_string(EquationClass c) {
  switch (c) {
    case EquationClass::PureXX: return "pure-XX";
    case EquationClass::ContainsY: return "contains-Y";
    case EquationClass::SecondaryOnly: return "secondary-only";
    case EquationClass::Mixed: return "mixed";
  }
  return "?";
}

std::vector<SymbolicTerm> SymbolicEquation::main_terms() const {
  std::vector<SymbolicTerm> out;
  for (const auto& t : terms) {
    if (t.is_main()) out.push_back(t);
  }
  return out;
}

SymbolicEquation enumerate_mc5_terms(const SortPattern& row) { return enumerate(row, 5); }

SymbolicEquation enumerate_mc4_terms(const SortPattern& row) { return enumerate(row, 4); }

std::vector<SymbolicEquation> mc_taxonomy(int arity) {
  if (arity != 4 && arity != 5) throw InputShapeError("taxonomy is available for arity 4 and 5");
  std::vector<SymbolicEquation> out;
  for (const auto& row : all_input_rows(arity)) out.push_back(enumerate(row, arity));
  return out;
}

}  // namespace precy
