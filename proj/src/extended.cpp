#include "precy/extended.hpp"

#include <array>

namespace precy {

std::string sort_name(Sort s) { return s == Sort::Alg ? "A" : "A*"; }

ExtElement::ExtElement(const Vec& alg_part, const Vec& dual_part) : n_(alg_part.size()) {
  if (dual_part.size() != n_) throw InputShapeError("ExtElement: part lengths differ");
  coeffs_ = alg_part;
  coeffs_.insert(coeffs_.end(), dual_part.begin(), dual_part.end());
}

ExtElement ExtElement::basis(std::size_t n, ExtIndex e) {
  if (e.index < 0 || static_cast<std::size_t>(e.index) >= n) throw InputShapeError("ExtIndex out of range");
  ExtElement out(n);
  out.coeffs_[e.linear(n)] = 1;
  return out;
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  if (o.n_ != n_) throw InputShapeError("ExtElement dimension mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  if (o.n_ != n_) throw InputShapeError("ExtElement dimension mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

ExtElement& ExtElement::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Scalar pairing(const ExtElement& x, const ExtElement& y) {
  if (x.dim() != y.dim()) throw InputShapeError("pairing: dimension mismatch");
  Scalar out = 0;
  for (int i = 0; i < static_cast<int>(x.dim()); ++i) {
    out += x.dual(i) * y.alg(i);
    out -= x.alg(i) * y.dual(i);
  }
  return out;
}

Scalar pairing(std::size_t n, ExtIndex x, ExtIndex y) {
  (void)n;
  if (x.index != y.index || x.sort == y.sort) return 0;
  return x.sort == Sort::Dual ? 1 : -1;
}

Matrix pairing_gram(std::size_t n) {
  Matrix g(2 * n, 2 * n);
  for (std::size_t u = 0; u < 2 * n; ++u)
    for (std::size_t v = 0; v < 2 * n; ++v)
      g(u, v) = pairing(n, ExtIndex::from_linear(n, static_cast<int>(u)), ExtIndex::from_linear(n, static_cast<int>(v)));
  return g;
}

void BinaryTable::add(int u, int v, int w, const Scalar& c) {
  if (is_zero(c)) return;
  auto& cell = cells_[static_cast<std::size_t>(u) * ext_dim() + v];
  for (auto it = cell.begin(); it != cell.end(); ++it) {
    if (it->index == w) {
      it->coeff += c;
      if (is_zero(it->coeff)) cell.erase(it);
      return;
    }
  }
  cell.push_back({w, c});
}

ExtElement BinaryTable::apply(const ExtElement& x, const ExtElement& y) const {
  if (x.dim() != n_ || y.dim() != n_) throw InputShapeError("BinaryTable::apply: dimension mismatch");
  ExtElement out(n_);
  const int m = static_cast<int>(ext_dim());
  for (int u = 0; u < m; ++u) {
    if (is_zero(x.coeffs()[u])) continue;
    for (int v = 0; v < m; ++v) {
      if (is_zero(y.coeffs()[v])) continue;
      const Scalar xy = x.coeffs()[u] * y.coeffs()[v];
      for (const auto& t : at(u, v)) out.coeffs()[t.index] += xy * t.coeff;
    }
  }
  return out;
}

BinaryTable trivial_extension_table(const AssocAlgebra& alg, RightActionSign sign) {
  const int n = static_cast<int>(alg.dim());
  BinaryTable m2(alg.dim());
  const Scalar right = sign == RightActionSign::Minus ? Scalar(-1) : Scalar(1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const auto& t : alg.product(i, j)) m2.add(i, j, t.index, t.coeff);
    }
  }
  // a = e_i, f = e_j*: (e_i e_j*)(e_c) = e_j*(e_c e_i) = c_{ci}^j.
  // (e_j* e_i)(e_c) = right * e_j*(e_i e_c) = right * c_{ic}^j.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int c = 0; c < n; ++c) {
        m2.add(i, n + j, n + c, alg.coeff(c, i, j));
        m2.add(n + j, i, n + c, right * alg.coeff(i, c, j));
      }
    }
  }
  return m2;
}

ExtElement trivial_extension_product(const AssocAlgebra& alg, const ExtElement& x, const ExtElement& y) {
  return trivial_extension_table(alg).apply(x, y);
}

namespace {

Scalar pair_terms(std::size_t n, std::span<const ExtTerm> terms, int with) {
  Scalar out = 0;
  const ExtIndex w = ExtIndex::from_linear(n, with);
  for (const auto& t : terms) {
    const Scalar p = pairing(n, ExtIndex::from_linear(n, t.index), w);
    if (!is_zero(p)) out += t.coeff * p;
  }
  return out;
}

}  // namespace

CheckReport check_m2_cyclicity(const BinaryTable& m2, const SweepOptions& opts) {
  const std::size_t n = m2.dim();
  const int m = static_cast<int>(m2.ext_dim());
  return sweep("m2-cyclicity", ipow(m, 3), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 3> x{};
    decode_tuple(idx, m, x);
    const int d0 = linear_degree(n, x[0]);
    const int exponent = d0 * (linear_degree(n, x[1]) + linear_degree(n, x[2]));
    const Scalar sign = exponent % 2 == 0 ? 1 : -1;
    const Scalar r = pair_terms(n, m2.at(x[0], x[1]), x[2]) - sign * pair_terms(n, m2.at(x[1], x[2]), x[0]);
    if (is_zero(r)) return std::nullopt;
    return Witness{{x.begin(), x.end()}, {{{}, r}}};
  });
}

CheckReport check_m2_cyclicity(const AssocAlgebra& alg, const SweepOptions& opts) {
  return check_m2_cyclicity(trivial_extension_table(alg), opts);
}

CheckReport check_graded_associativity(const BinaryTable& m2, const SweepOptions& opts) {
  const std::size_t n = m2.dim();
  const int m = static_cast<int>(m2.ext_dim());
  return sweep("mc3", ipow(m, 3), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 3> x{};
    decode_tuple(idx, m, x);
    Vec r = zero_vec(m);
    for (const auto& p : m2.at(x[0], x[1]))
      for (const auto& q : m2.at(p.index, x[2])) r[q.index] += p.coeff * q.coeff;
    const Scalar sign = linear_degree(n, x[0]) % 2 == 0 ? 1 : -1;
    for (const auto& p : m2.at(x[1], x[2]))
      for (const auto& q : m2.at(x[0], p.index)) r[q.index] += sign * p.coeff * q.coeff;
    if (is_zero(r)) return std::nullopt;
    return Witness{{x.begin(), x.end()}, sparse_residual(r)};
  });
}

}  // namespace precy
