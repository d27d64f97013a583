#include "precy/double_bracket.hpp"

#include <numeric>

namespace precy {

Tensor::Tensor(std::size_t n, int rank) : n_(n), rank_(rank), data_(ipow(n, static_cast<unsigned>(rank))) {
  if (n == 0 || rank < 1) throw InputShapeError("Tensor needs positive dimension and rank");
}

Tensor Tensor::pure(std::span<const Vec> factors) {
  if (factors.empty()) throw InputShapeError("Tensor::pure needs at least one factor");
  const std::size_t n = factors[0].size();
  Tensor out(n, static_cast<int>(factors.size()));
  for (const auto& f : factors) {
    if (f.size() != n) throw InputShapeError("Tensor::pure: factor length mismatch");
  }
  std::vector<int> idx(factors.size());
  for (std::size_t flat = 0; flat < out.data_.size(); ++flat) {
    decode_tuple(flat, static_cast<int>(n), idx);
    Scalar c = 1;
    for (std::size_t p = 0; p < idx.size() && !precy::is_zero(c); ++p) c *= factors[p][idx[p]];
    out.data_[flat] = c;
  }
  return out;
}

Tensor Tensor::basis(std::size_t n, std::span<const int> index) {
  Tensor out(n, static_cast<int>(index.size()));
  out[index] = 1;
  return out;
}

std::size_t Tensor::flat(std::span<const int> index) const {
  if (index.size() != static_cast<std::size_t>(rank_)) throw InputShapeError("Tensor index has wrong rank");
  std::size_t f = 0;
  for (int i : index) {
    if (i < 0 || static_cast<std::size_t>(i) >= n_) throw InputShapeError("Tensor index out of range");
    f = f * n_ + static_cast<std::size_t>(i);
  }
  return f;
}

SparseResidual Tensor::entries() const {
  SparseResidual out;
  std::vector<int> idx(rank_);
  for (std::size_t f = 0; f < data_.size(); ++f) {
    if (precy::is_zero(data_[f])) continue;
    decode_tuple(f, static_cast<int>(n_), idx);
    out.push_back({idx, data_[f]});
  }
  return out;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.n_ != n_ || o.rank_ != rank_) throw InputShapeError("Tensor shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.n_ != n_ || o.rank_ != rank_) throw InputShapeError("Tensor shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  for (auto& c : data_) c *= s;
  return *this;
}

Tensor Tensor::permuted(std::span<const int> sigma) const {
  if (sigma.size() != static_cast<std::size_t>(rank_)) throw InputShapeError("permutation has wrong length");
  std::vector<int> inv(rank_, -1);
  for (int p = 0; p < rank_; ++p) {
    if (sigma[p] < 0 || sigma[p] >= rank_ || inv[sigma[p]] != -1) throw InputShapeError("not a permutation");
    inv[sigma[p]] = p;
  }
  Tensor out(n_, rank_);
  std::vector<int> idx(rank_), moved(rank_);
  for (std::size_t f = 0; f < data_.size(); ++f) {
    if (precy::is_zero(data_[f])) continue;
    decode_tuple(f, static_cast<int>(n_), idx);
    for (int p = 0; p < rank_; ++p) moved[p] = idx[inv[p]];
    out[moved] = data_[f];
  }
  return out;
}

Tensor swap_factors(const Tensor& t) {
  if (t.rank() != 2) throw InputShapeError("swap_factors needs a rank-2 tensor");
  const std::array<int, 2> sigma{1, 0};
  return t.permuted(sigma);
}

Tensor act_on_factor(const AssocAlgebra& alg, const Tensor& t, int factor, const Vec& c, Side side) {
  const std::size_t n = alg.dim();
  if (t.dim() != n || c.size() != n) throw InputShapeError("act_on_factor: dimension mismatch");
  if (factor < 0 || factor >= t.rank()) throw InputShapeError("act_on_factor: factor out of range");
  Tensor out(n, t.rank());
  std::vector<int> idx(t.rank());
  for (std::size_t f = 0; f < t.coeffs().size(); ++f) {
    const Scalar& v = t.coeffs()[f];
    if (is_zero(v)) continue;
    decode_tuple(f, static_cast<int>(n), idx);
    const int a = idx[factor];
    for (int s = 0; s < static_cast<int>(n); ++s) {
      if (is_zero(c[s])) continue;
      const auto prod = side == Side::Left ? alg.product(s, a) : alg.product(a, s);
      for (const auto& term : prod) {
        idx[factor] = term.index;
        out[idx] += v * c[s] * term.coeff;
      }
      idx[factor] = a;
    }
  }
  return out;
}

Tensor outer_left(const AssocAlgebra& alg, const Vec& c, const Tensor& t) {
  return act_on_factor(alg, t, 0, c, Side::Left);
}
Tensor outer_right(const AssocAlgebra& alg, const Tensor& t, const Vec& c) {
  return act_on_factor(alg, t, t.rank() - 1, c, Side::Right);
}
Tensor inner_left(const AssocAlgebra& alg, const Vec& c, const Tensor& t) {
  return act_on_factor(alg, t, t.rank() - 1, c, Side::Left);
}
Tensor inner_right(const AssocAlgebra& alg, const Tensor& t, const Vec& c) {
  return act_on_factor(alg, t, 0, c, Side::Right);
}

DoubleBracket::DoubleBracket(std::size_t n, const std::map<BracketKey, Scalar>& entries)
    : n_(n), cells_(n * n) {
  if (n == 0) throw InputShapeError("DoubleBracket needs positive dimension");
  for (const auto& [key, value] : entries) {
    for (int idx : key) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= n) throw InputShapeError("bracket entry index out of range");
    }
    if (precy::is_zero(value)) continue;
    entries_.emplace(key, value);
    cells_[static_cast<std::size_t>(key[0]) * n + key[1]].push_back({key[2], key[3], value});
  }
}

const Scalar& DoubleBracket::coeff(int i, int j, int k, int l) const {
  static const Scalar kZero = 0;
  const auto it = entries_.find({i, j, k, l});
  return it == entries_.end() ? kZero : it->second;
}

DoubleBracket DoubleBracket::with_coefficient(const BracketKey& key, const Scalar& value) const {
  auto e = entries_;
  e[key] = value;
  return DoubleBracket(n_, e);
}

Tensor bracket_basis(const DoubleBracket& d, int i, int j) {
  Tensor out(d.dim(), 2);
  for (const auto& t : d.at(i, j)) out.coeffs()[static_cast<std::size_t>(t.k) * d.dim() + t.l] += t.coeff;
  return out;
}

Tensor bracket_eval(const DoubleBracket& d, const Vec& u, const Vec& v) {
  const std::size_t n = d.dim();
  if (u.size() != n || v.size() != n) throw InputShapeError("bracket_eval: dimension mismatch");
  Tensor out(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(v[j])) continue;
      const Scalar uv = u[i] * v[j];
      for (const auto& t : d.at(static_cast<int>(i), static_cast<int>(j))) {
        out.coeffs()[static_cast<std::size_t>(t.k) * n + t.l] += uv * t.coeff;
      }
    }
  }
  return out;
}

Tensor left_extended_bracket(const DoubleBracket& d, const Vec& b, const Tensor& t) {
  const std::size_t n = d.dim();
  if (t.dim() != n || b.size() != n) throw InputShapeError("left_extended_bracket: dimension mismatch");
  Tensor out(n, t.rank() + 1);
  const std::size_t tail = t.coeffs().size() / n;
  for (std::size_t f = 0; f < t.coeffs().size(); ++f) {
    const Scalar& v = t.coeffs()[f];
    if (is_zero(v)) continue;
    const int a1 = static_cast<int>(f / tail);
    const std::size_t rest = f % tail;
    for (std::size_t s = 0; s < n; ++s) {
      if (is_zero(b[s])) continue;
      for (const auto& term : d.at(static_cast<int>(s), a1)) {
        const std::size_t head = static_cast<std::size_t>(term.k) * n + term.l;
        out.coeffs()[head * tail + rest] += v * b[s] * term.coeff;
      }
    }
  }
  return out;
}

Tensor jacobiator(const DoubleBracket& d, const Vec& a, const Vec& b, const Vec& c) {
  static constexpr std::array<int, 3> kCycle{1, 2, 0};
  static constexpr std::array<int, 3> kCycleInv{2, 0, 1};
  Tensor out = left_extended_bracket(d, a, bracket_eval(d, b, c));
  out += left_extended_bracket(d, b, bracket_eval(d, c, a)).permuted(kCycle);
  out += left_extended_bracket(d, c, bracket_eval(d, a, b)).permuted(kCycleInv);
  return out;
}

CheckReport check_antisymmetry(const DoubleBracket& d, const SweepOptions& opts) {
  const int n = static_cast<int>(d.dim());
  return sweep("antisymmetry", ipow(n, 2), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 2> ij{};
    decode_tuple(idx, n, ij);
    const Tensor r = bracket_basis(d, ij[0], ij[1]) + swap_factors(bracket_basis(d, ij[1], ij[0]));
    if (r.is_zero()) return std::nullopt;
    return Witness{{ij.begin(), ij.end()}, r.entries()};
  });
}

CheckReport check_leibniz_outer(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts) {
  const int n = static_cast<int>(d.dim());
  if (alg.dim() != d.dim()) throw InputShapeError("bracket and algebra dimensions differ");
  return sweep("leibniz-outer", ipow(n, 3), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 3> x{};
    decode_tuple(idx, n, x);
    const auto [i, j, k] = x;
    const Vec ej = basis_vec(n, j), ek = basis_vec(n, k), ei = basis_vec(n, i);
    Tensor r = bracket_eval(d, ei, multiply(alg, ej, ek));
    r -= outer_left(alg, ej, bracket_basis(d, i, k));
    r -= outer_right(alg, bracket_basis(d, i, j), ek);
    if (r.is_zero()) return std::nullopt;
    return Witness{{x.begin(), x.end()}, r.entries()};
  });
}

CheckReport check_leibniz_inner(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts) {
  const int n = static_cast<int>(d.dim());
  if (alg.dim() != d.dim()) throw InputShapeError("bracket and algebra dimensions differ");
  return sweep("leibniz-inner", ipow(n, 3), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 3> x{};
    decode_tuple(idx, n, x);
    const auto [j, k, i] = x;
    const Vec ej = basis_vec(n, j), ek = basis_vec(n, k), ei = basis_vec(n, i);
    Tensor r = bracket_eval(d, multiply(alg, ej, ek), ei);
    r -= inner_left(alg, ej, bracket_basis(d, k, i));
    r -= inner_right(alg, bracket_basis(d, j, i), ek);
    if (r.is_zero()) return std::nullopt;
    return Witness{{x.begin(), x.end()}, r.entries()};
  });
}

CheckReport check_double_jacobi(const DoubleBracket& d, const SweepOptions& opts) {
  const int n = static_cast<int>(d.dim());
  return sweep("double-jacobi", ipow(n, 3), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 3> x{};
    decode_tuple(idx, n, x);
    const Tensor r = jacobiator(d, basis_vec(n, x[0]), basis_vec(n, x[1]), basis_vec(n, x[2]));
    if (r.is_zero()) return std::nullopt;
    return Witness{{x.begin(), x.end()}, r.entries()};
  });
}

CheckReport check_polyderivation(const AssocAlgebra& alg, const DoubleBracket& map, const SweepOptions& opts) {
  return combine_reports("polyderivation",
                         {check_leibniz_outer(alg, map, opts), check_leibniz_inner(alg, map, opts)});
}

AxiomReport check_axioms(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts) {
  return {check_antisymmetry(d, opts), check_leibniz_outer(alg, d, opts), check_double_jacobi(d, opts)};
}

}  // namespace precy
