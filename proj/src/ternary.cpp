#include "precy/ternary.hpp"

#include <algorithm>

namespace precy {

std::string to_string(const SortPattern& p) {
  std::string out;
  for (std::size_t i = 0; i < p.inputs.size(); ++i) {
    if (i > 0) out += " x ";
    out += sort_name(p.inputs[i]);
  }
  if (p.output) out += " -> " + sort_name(*p.output);
  return out;
}

std::vector<SortPattern> all_input_rows(int k) {
  std::vector<SortPattern> rows;
  for (int bits = 0; bits < (1 << k); ++bits) {
    SortPattern p;
    for (int pos = k - 1; pos >= 0; --pos) p.inputs.push_back((bits >> pos) & 1 ? Sort::Dual : Sort::Alg);
    rows.push_back(std::move(p));
  }
  return rows;
}

std::string to_string(ComponentType t) {
  switch (t) {
    case ComponentType::TypeA: return "TypeA";
    case ComponentType::TypeB: return "TypeB";
    case ComponentType::C1: return "C1";
    case ComponentType::C2: return "C2";
    case ComponentType::C3: return "C3";
    case ComponentType::C4: return "C4";
  }
  return "?";
}

ComponentType classify_component(const SortPattern& pattern) {
  if (pattern.inputs.size() != 3 || !pattern.output) {
    throw InputShapeError("classify_component needs 3 inputs and an output sort");
  }
  // Cyclic tensor slots: each input contributes its dual, the output itself.
  std::array<Sort, 4> slots{};
  for (int i = 0; i < 3; ++i) slots[i] = pattern.inputs[i] == Sort::Alg ? Sort::Dual : Sort::Alg;
  slots[3] = *pattern.output;
  const auto alg_slots = std::count(slots.begin(), slots.end(), Sort::Alg);
  switch (alg_slots) {
    case 4: return ComponentType::C1;
    case 0: return ComponentType::C2;
    case 3: return ComponentType::C3;
    case 1: return ComponentType::C4;
    default: break;
  }
  // Two A slots: alternating around the cycle is type B, adjacent is type A.
  return slots[0] == slots[2] ? ComponentType::TypeB : ComponentType::TypeA;
}

bool TernaryPattern::degree_allowed() const {
  int sum = 1;
  for (Sort s : inputs) sum += shifted_degree(s);
  return sum == shifted_degree(output);
}

ComponentType TernaryPattern::type() const { return classify_component(as_sort_pattern()); }

int TernaryPattern::code() const {
  int c = 0;
  for (Sort s : inputs) c = 2 * c + (s == Sort::Dual ? 1 : 0);
  return 2 * c + (output == Sort::Dual ? 1 : 0);
}

TernaryPattern TernaryPattern::from_code(int code) {
  TernaryPattern p;
  p.output = (code & 1) ? Sort::Dual : Sort::Alg;
  for (int i = 0; i < 3; ++i) p.inputs[i] = (code >> (3 - i)) & 1 ? Sort::Dual : Sort::Alg;
  return p;
}

std::vector<TernaryPattern> TernaryPattern::all() {
  std::vector<TernaryPattern> out;
  for (int c = 0; c < 16; ++c) out.push_back(from_code(c));
  return out;
}

std::string to_string(const TernaryPattern& p) { return to_string(p.as_sort_pattern()); }

TernaryOperation::TernaryOperation(std::size_t n, const std::map<TernaryPattern, TernaryTableMap>& tables)
    : n_(n), cells_(8 * n * n * n) {
  if (n == 0) throw InputShapeError("TernaryOperation needs positive dimension");
  for (const auto& [pattern, table] : tables) {
    TernaryTableMap canonical;
    for (const auto& [key, value] : table) {
      for (int idx : key) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= n) throw InputShapeError("m3 entry index out of range");
      }
      if (!precy::is_zero(value)) canonical.emplace(key, value);
    }
    if (canonical.empty()) continue;
    if (!pattern.degree_allowed()) {
      throw DomainError("m3 component " + to_string(pattern) + " violates the degree filter");
    }
    tables_.emplace(pattern, std::move(canonical));
  }
  for (const auto& [pattern, table] : tables_) {
    for (const auto& [key, value] : table) {
      const int u = ExtIndex{pattern.inputs[0], key[0]}.linear(n);
      const int v = ExtIndex{pattern.inputs[1], key[1]}.linear(n);
      const int w = ExtIndex{pattern.inputs[2], key[2]}.linear(n);
      const int out = ExtIndex{pattern.output, key[3]}.linear(n);
      cells_[(static_cast<std::size_t>(u) * ext_dim() + v) * ext_dim() + w].push_back({out, value});
    }
  }
}

const TernaryTableMap& TernaryOperation::table(const TernaryPattern& p) const {
  static const TernaryTableMap kEmpty;
  const auto it = tables_.find(p);
  return it == tables_.end() ? kEmpty : it->second;
}

bool TernaryOperation::is_type_b_only() const {
  for (const auto& [pattern, table] : tables_) {
    if (pattern != kTypeBAlg && pattern != kTypeBDual) return false;
  }
  return true;
}

TernaryOperation TernaryOperation::with_coefficient(const TernaryPattern& p, const TernaryKey& key,
                                                    const Scalar& value) const {
  auto tables = tables_;
  tables[p][key] = value;
  return TernaryOperation(n_, tables);
}

ExtElement TernaryOperation::apply(ExtIndex x1, ExtIndex x2, ExtIndex x3) const {
  ExtElement out(n_);
  for (const auto& t : at(x1.linear(n_), x2.linear(n_), x3.linear(n_))) out.coeffs()[t.index] += t.coeff;
  return out;
}

ExtElement TernaryOperation::apply(const ExtElement& x1, const ExtElement& x2, const ExtElement& x3) const {
  if (x1.dim() != n_ || x2.dim() != n_ || x3.dim() != n_) throw InputShapeError("m3 apply: dimension mismatch");
  ExtElement out(n_);
  const int m = static_cast<int>(ext_dim());
  for (int u = 0; u < m; ++u) {
    if (precy::is_zero(x1.coeffs()[u])) continue;
    for (int v = 0; v < m; ++v) {
      if (precy::is_zero(x2.coeffs()[v])) continue;
      const Scalar uv = x1.coeffs()[u] * x2.coeffs()[v];
      for (int w = 0; w < m; ++w) {
        if (precy::is_zero(x3.coeffs()[w])) continue;
        const Scalar uvw = uv * x3.coeffs()[w];
        for (const auto& t : at(u, v, w)) out.coeffs()[t.index] += uvw * t.coeff;
      }
    }
  }
  return out;
}

}  // namespace precy
