#include "precy/ainfinity.hpp"

#include <array>

namespace precy {

namespace {

Scalar sign_of(int exponent) { return exponent % 2 == 0 ? Scalar(1) : Scalar(-1); }

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

int cyclic_rotation_sign(std::span<const int> degrees) {
  if (degrees.empty()) return 1;
  int rest = 0;
  for (std::size_t i = 1; i < degrees.size(); ++i) rest += degrees[i];
  return (degrees[0] * rest) % 2 == 0 ? 1 : -1;
}

CheckReport check_cyclic_invariance(const TernaryOperation& m3, const SweepOptions& opts) {
  const std::size_t n = m3.dim();
  const int m = static_cast<int>(m3.ext_dim());
  return sweep("m3-cyclicity", ipow(m, 4), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 4> x{};
    decode_tuple(idx, m, x);
    std::array<int, 4> deg{};
    for (int i = 0; i < 4; ++i) deg[i] = linear_degree(n, x[i]);
    const Scalar s = cyclic_rotation_sign(deg);
    const Scalar r = pair_terms(n, m3.at(x[0], x[1], x[2]), x[3]) - s * pair_terms(n, m3.at(x[1], x[2], x[3]), x[0]);
    if (is_zero(r)) return std::nullopt;
    return Witness{{x.begin(), x.end()}, {{{}, r}}};
  });
}

TernaryOperation complete_cyclic_closure(const TernaryOperation& mu) {
  const std::size_t n = mu.dim();
  const std::array<int, 4> deg{shifted_degree(Sort::Alg), shifted_degree(Sort::Dual), shifted_degree(Sort::Alg),
                               shifted_degree(Sort::Dual)};
  const Scalar s = cyclic_rotation_sign(deg);
  std::map<TernaryPattern, TernaryTableMap> tables;
  const auto& alg_table = mu.table(kTypeBAlg);
  tables[kTypeBAlg] = alg_table;
  auto& dual_table = tables[kTypeBDual];
  // Entry (a, f, b, g) of the A table is <m3(a,f,b), e_g> / <e_g, e_g*>;
  // it fixes the e_a* coefficient of m3(f, b, g).
  for (const auto& [key, c] : alg_table) {
    const auto [a, f, b, g] = key;
    const Scalar lhs = c * pairing(n, alg(g), dual(g));
    dual_table[{f, b, g, a}] = lhs / (s * pairing(n, dual(a), alg(a)));
  }
  return TernaryOperation(n, tables);
}

TernaryOperation project_type_B(const TernaryOperation& m3) {
  std::map<TernaryPattern, TernaryTableMap> tables;
  for (const auto& p : {kTypeBAlg, kTypeBDual}) {
    const auto& t = m3.table(p);
    if (!t.empty()) tables[p] = t;
  }
  return TernaryOperation(m3.dim(), tables);
}

MCStructure::MCStructure(const AssocAlgebra& alg, const TernaryOperation& m3)
    : m2_(trivial_extension_table(alg)), m3_(m3) {
  if (m3.dim() != alg.dim()) throw InputShapeError("m3 dimension differs from algebra dimension");
}

MCStructure::MCStructure(BinaryTable m2, const TernaryOperation& m3) : m2_(std::move(m2)), m3_(m3) {
  if (m3.dim() != m2_.dim()) throw InputShapeError("m3 dimension differs from m2 dimension");
}

Vec MCStructure::residual(std::span<const int> xs) const {
  const int k = static_cast<int>(xs.size());
  if (k < 3 || k > 5) throw InputShapeError("MC residual arity must be 3, 4 or 5");
  const std::size_t n = dim();
  Vec out = zero_vec(static_cast<std::size_t>(ext_dim()));
  auto eval = [&](std::span<const int> args) -> std::span<const ExtTerm> {
    return args.size() == 2 ? m2_.at(args[0], args[1]) : m3_.at(args[0], args[1], args[2]);
  };
  std::array<int, 5> outer{};
  for (int q = 2; q <= 3; ++q) {
    const int p = k + 1 - q;
    if (p < 2 || p > 3) continue;
    int eps = 0;
    for (int i = 0; i + q <= k; ++i) {
      if (i > 0) eps += linear_degree(n, xs[i - 1]);
      const Scalar sign = sign_of(eps);
      const auto inner = eval(xs.subspan(i, q));
      for (const auto& it : inner) {
        int pos = 0;
        for (int j = 0; j < i; ++j) outer[pos++] = xs[j];
        outer[pos++] = it.index;
        for (int j = i + q; j < k; ++j) outer[pos++] = xs[j];
        for (const auto& ot : eval(std::span<const int>(outer.data(), pos))) {
          out[ot.index] += sign * it.coeff * ot.coeff;
        }
      }
    }
  }
  return out;
}

ExtElement mc_residual_4(const AssocAlgebra& alg, const TernaryOperation& m3, ExtIndex x1, ExtIndex x2,
                         ExtIndex x3, ExtIndex x4) {
  const std::size_t n = alg.dim();
  const std::array<int, 4> xs{x1.linear(n), x2.linear(n), x3.linear(n), x4.linear(n)};
  ExtElement out(n);
  out.coeffs() = MCStructure(alg, m3).residual(xs);
  return out;
}

ExtElement mc_residual_5(const AssocAlgebra& alg, const TernaryOperation& m3, ExtIndex x1, ExtIndex x2,
                         ExtIndex x3, ExtIndex x4, ExtIndex x5) {
  const std::size_t n = alg.dim();
  const std::array<int, 5> xs{x1.linear(n), x2.linear(n), x3.linear(n), x4.linear(n), x5.linear(n)};
  ExtElement out(n);
  out.coeffs() = MCStructure(alg, m3).residual(xs);
  return out;
}

MCReport check_mc_arity(const MCStructure& s, int arity, const SweepOptions& opts) {
  const int m = s.ext_dim();
  MCReport report;
  report.arity = arity;
  report.check = sweep("mc" + std::to_string(arity), ipow(m, arity), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 5> xs{};
    std::span<int> tuple(xs.data(), arity);
    decode_tuple(idx, m, tuple);
    Vec r = s.residual(tuple);
    if (is_zero(r)) return std::nullopt;
    return Witness{{tuple.begin(), tuple.end()}, sparse_residual(r)};
  });
  return report;
}

std::array<MCReport, 3> check_maurer_cartan(const AssocAlgebra& alg, const TernaryOperation& m3,
                                            const SweepOptions& opts) {
  const MCStructure s(alg, m3);
  return {check_mc_arity(s, 3, opts), check_mc_arity(s, 4, opts), check_mc_arity(s, 5, opts)};
}

}  // namespace precy
