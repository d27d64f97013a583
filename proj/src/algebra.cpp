#include "precy/algebra.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace precy {

AssocAlgebra::AssocAlgebra(std::string name, std::vector<std::string> basis_names,
                           std::vector<StructureConstant> constants, std::optional<Vec> unit)
    : name_(std::move(name)), basis_(std::move(basis_names)), unit_(std::move(unit)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw InputShapeError("algebra must have positive dimension");
  if (std::set<std::string>(basis_.begin(), basis_.end()).size() != n) {
    throw InputShapeError("basis names must be distinct");
  }
  if (unit_ && unit_->size() != n) throw InputShapeError("unit vector length differs from dim");

  dense_.assign(n * n * n, Scalar(0));
  std::set<std::array<int, 3>> seen;
  for (const auto& sc : constants) {
    for (int idx : {sc.i, sc.j, sc.k}) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= n) {
        throw InputShapeError("structure constant index out of range");
      }
    }
    if (!seen.insert({sc.i, sc.j, sc.k}).second) {
      throw InputShapeError("duplicate structure constant (" + std::to_string(sc.i) + ", " +
                            std::to_string(sc.j) + ", " + std::to_string(sc.k) + ")");
    }
    dense_[(static_cast<std::size_t>(sc.i) * n + sc.j) * n + sc.k] = sc.value;
  }

  products_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = dense_[(i * n + j) * n + k];
        if (!is_zero(c)) products_[i * n + j].push_back({static_cast<int>(k), c});
      }
    }
  }
}

std::vector<StructureConstant> AssocAlgebra::structure_constants() const {
  std::vector<StructureConstant> out;
  const int n = static_cast<int>(dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& t : product(i, j)) out.push_back({i, j, t.index, t.coeff});
  return out;
}

int AssocAlgebra::index_of(std::string_view name) const {
  const auto it = std::find(basis_.begin(), basis_.end(), name);
  return it == basis_.end() ? -1 : static_cast<int>(it - basis_.begin());
}

Vec multiply(const AssocAlgebra& alg, const Vec& u, const Vec& v) {
  const std::size_t n = alg.dim();
  if (u.size() != n || v.size() != n) throw InputShapeError("multiply: vector length differs from dim");
  Vec out = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(v[j])) continue;
      const Scalar uv = u[i] * v[j];
      for (const auto& t : alg.product(static_cast<int>(i), static_cast<int>(j))) {
        out[t.index] += uv * t.coeff;
      }
    }
  }
  return out;
}

CheckReport check_associativity(const AssocAlgebra& alg, const SweepOptions& opts) {
  const int n = static_cast<int>(alg.dim());
  return sweep("associativity", ipow(n, 3), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 3> t{};
    decode_tuple(idx, n, t);
    Vec r = zero_vec(n);
    // (e_i e_j) e_k
    for (const auto& p : alg.product(t[0], t[1]))
      for (const auto& q : alg.product(p.index, t[2])) r[q.index] += p.coeff * q.coeff;
    // - e_i (e_j e_k)
    for (const auto& p : alg.product(t[1], t[2]))
      for (const auto& q : alg.product(t[0], p.index)) r[q.index] -= p.coeff * q.coeff;
    if (is_zero(r)) return std::nullopt;
    return Witness{{t.begin(), t.end()}, sparse_residual(r)};
  });
}

CheckReport check_unit(const AssocAlgebra& alg) {
  const int n = static_cast<int>(alg.dim());
  SweepOptions opts;
  if (!alg.unit()) {
    CheckReport r;
    r.identity = "unit";
    return r;
  }
  const Vec& u = *alg.unit();
  return sweep("unit", static_cast<std::uint64_t>(n), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    const int i = static_cast<int>(idx);
    const Vec e = basis_vec(n, i);
    Vec left = multiply(alg, u, e);
    Vec right = multiply(alg, e, u);
    Vec r(2 * n);
    for (int k = 0; k < n; ++k) {
      r[k] = left[k] - e[k];
      r[n + k] = right[k] - e[k];
    }
    if (is_zero(r)) return std::nullopt;
    return Witness{{i}, sparse_residual(r)};
  });
}

}  // namespace precy
