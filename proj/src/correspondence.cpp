#include "precy/correspondence.hpp"

#include <stdexcept>

namespace precy {

Scalar tensor_pairing(std::span<const ExtElement> fs, const Tensor& t) {
  if (fs.size() != static_cast<std::size_t>(t.rank())) throw InputShapeError("tensor_pairing: rank mismatch");
  const std::size_t n = t.dim();
  for (const auto& f : fs) {
    if (f.dim() != n) throw InputShapeError("tensor_pairing: dimension mismatch");
  }
  Scalar out = 0;
  std::vector<int> idx(fs.size());
  for (std::size_t flat = 0; flat < t.coeffs().size(); ++flat) {
    const Scalar& v = t.coeffs()[flat];
    if (is_zero(v)) continue;
    decode_tuple(flat, static_cast<int>(n), idx);
    Scalar c = v;
    for (std::size_t p = 0; p < fs.size() && !is_zero(c); ++p) {
      c *= pairing(fs[p], ExtElement::basis(n, alg(idx[p])));
    }
    out += c;
  }
  return out;
}

namespace {

ExtElement basis_el(std::size_t n, ExtIndex e) { return ExtElement::basis(n, e); }

Scalar pair_with(const TernaryOperation& m3, ExtIndex x1, ExtIndex x2, ExtIndex x3, ExtIndex y) {
  const std::size_t n = m3.dim();
  return pairing(m3.apply(x1, x2, x3), basis_el(n, y));
}

}  // namespace

CheckReport check_defining_identity(const DoubleBracket& d, const TernaryOperation& m3, const SweepOptions& opts) {
  const std::size_t n = d.dim();
  if (m3.dim() != n) throw InputShapeError("bracket and m3 dimensions differ");
  const int ni = static_cast<int>(n);
  return sweep("defining-identity", ipow(n, 4), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 4> x{};
    decode_tuple(idx, ni, x);
    const auto [a, f, b, g] = x;
    const std::array<ExtElement, 2> gf{basis_el(n, dual(g)), basis_el(n, dual(f))};
    const Scalar r = pair_with(m3, alg(a), dual(f), alg(b), dual(g)) - tensor_pairing(gf, bracket_basis(d, b, a));
    if (is_zero(r)) return std::nullopt;
    return Witness{{x.begin(), x.end()}, {{{}, r}}};
  });
}

TernaryOperation m3_from_bracket(const DoubleBracket& d) {
  const std::size_t n = d.dim();
  const int ni = static_cast<int>(n);
  TernaryTableMap table;
  for (int b = 0; b < ni; ++b) {
    for (int a = 0; a < ni; ++a) {
      const Tensor br = bracket_basis(d, b, a);
      if (br.is_zero()) continue;
      for (int f = 0; f < ni; ++f) {
        for (int g = 0; g < ni; ++g) {
          const std::array<ExtElement, 2> gf{basis_el(n, dual(g)), basis_el(n, dual(f))};
          const Scalar v = tensor_pairing(gf, br);
          if (is_zero(v)) continue;
          // <m3(a,f,b), e_g*> only sees the e_g coefficient.
          table[{a, f, b, g}] = v / pairing(n, alg(g), dual(g));
        }
      }
    }
  }
  TernaryOperation m3 = complete_cyclic_closure(TernaryOperation(n, {{kTypeBAlg, table}}));
  if (!check_defining_identity(d, m3).pass) throw std::logic_error("m3_from_bracket: defining identity fails");
  return m3;
}

DoubleBracket bracket_from_m3(const TernaryOperation& m3) {
  for (const auto& [pattern, table] : m3.tables()) {
    if (pattern != kTypeBAlg && pattern != kTypeBDual) {
      throw DomainError("m3 has a non-type-B component " + to_string(pattern) + " (" +
                        to_string(pattern.type()) + ")");
    }
  }
  const std::size_t n = m3.dim();
  std::map<BracketKey, Scalar> entries;
  for (const auto& [key, c] : m3.table(kTypeBAlg)) {
    const auto [a, f, b, g] = key;
    // <e_g* (x) e_f*, [[e_b, e_a]]> = D[b,a,g,f] <e_g*, e_g> <e_f*, e_f>.
    const Scalar lhs = c * pairing(n, alg(g), dual(g));
    entries[{b, a, g, f}] = lhs / (pairing(n, dual(g), alg(g)) * pairing(n, dual(f), alg(f)));
  }
  return DoubleBracket(n, entries);
}

CorrespondenceReport verify_correspondence(const AssocAlgebra& alg, const DoubleBracket& d,
                                           const SweepOptions& opts) {
  if (alg.dim() != d.dim()) throw InputShapeError("bracket and algebra dimensions differ");
  if (!check_associativity(alg).pass) throw DomainError("algebra " + alg.name() + " is not associative");
  CorrespondenceReport r;
  r.axioms = check_axioms(alg, d, opts);
  const TernaryOperation m3 = m3_from_bracket(d);
  r.cyclicity = check_cyclic_invariance(m3, opts);
  r.mc = check_maurer_cartan(alg, m3, opts);
  return r;
}

namespace {

/// Sweeps (g, a, f, b, c) and compares two pairings built from them.
template <class Fn>
CheckReport lemma_sweep(std::string name, const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts,
                        Fn&& residual) {
  const std::size_t n = alg.dim();
  if (d.dim() != n) throw InputShapeError("bracket and algebra dimensions differ");
  const int ni = static_cast<int>(n);
  const BinaryTable m2 = trivial_extension_table(alg);
  return sweep(std::move(name), ipow(n, 5), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 5> x{};
    decode_tuple(idx, ni, x);
    const auto [g, a, f, b, c] = x;
    const Scalar r = residual(m2, basis_el(n, dual(g)), basis_el(n, precy::alg(a)), basis_el(n, dual(f)),
                              basis_vec(n, a), bracket_basis(d, b, c));
    if (is_zero(r)) return std::nullopt;
    return Witness{{x.begin(), x.end()}, {{{}, r}}};
  });
}

Scalar pair2(const ExtElement& g, const ExtElement& f, const Tensor& t) {
  const std::array<ExtElement, 2> gf{g, f};
  return tensor_pairing(gf, t);
}

}  // namespace

CheckReport check_lemma_R(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts) {
  return lemma_sweep("lemma-R", alg, d, opts,
                     [&](const BinaryTable& m2, const ExtElement& g, const ExtElement& a, const ExtElement& f,
                         const Vec& av, const Tensor& bc) -> Scalar {
                       return pair2(g, m2.apply(a, f), bc) - pair2(g, f, outer_right(alg, bc, av));
                     });
}

CheckReport check_lemma_L(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts) {
  return lemma_sweep("lemma-L", alg, d, opts,
                     [&](const BinaryTable& m2, const ExtElement& g, const ExtElement& a, const ExtElement& f,
                         const Vec& av, const Tensor& bc) -> Scalar {
                       return pair2(m2.apply(g, a), f, bc) + pair2(g, f, outer_left(alg, av, bc));
                     });
}

CheckReport check_lemma_R_star(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts) {
  return lemma_sweep("lemma-R*", alg, d, opts,
                     [&](const BinaryTable& m2, const ExtElement& g, const ExtElement& a, const ExtElement& f,
                         const Vec& av, const Tensor& bc) -> Scalar {
                       return pair2(g, m2.apply(f, a), bc) + pair2(g, f, inner_left(alg, av, bc));
                     });
}

CheckReport check_lemma_L_star(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts) {
  return lemma_sweep("lemma-L*", alg, d, opts,
                     [&](const BinaryTable& m2, const ExtElement& g, const ExtElement& a, const ExtElement& f,
                         const Vec& av, const Tensor& bc) -> Scalar {
                       return pair2(m2.apply(a, g), f, bc) - pair2(g, f, inner_right(alg, bc, av));
                     });
}

namespace {

CheckReport trb_sweep(std::string name, const DoubleBracket& d, const Scalar& rhs_sign, const SweepOptions& opts) {
  const std::size_t n = d.dim();
  const int ni = static_cast<int>(n);
  const TernaryOperation m3 = m3_from_bracket(d);
  return sweep(std::move(name), ipow(n, 6), opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 6> x{};
    decode_tuple(idx, ni, x);
    const auto [a, b, c, al, be, ga] = x;
    const std::array<ExtElement, 3> abg{basis_el(n, dual(al)), basis_el(n, dual(be)), basis_el(n, dual(ga))};
    const Scalar lhs =
        tensor_pairing(abg, left_extended_bracket(d, basis_vec(n, a), bracket_basis(d, b, c)));
    const ExtElement u = m3.apply(alg(c), dual(ga), alg(b));
    const ExtElement outer = m3.apply(u, basis_el(n, dual(be)), basis_el(n, alg(a)));
    const Scalar r = lhs - rhs_sign * pairing(outer, abg[0]);
    if (is_zero(r)) return std::nullopt;
    return Witness{{x.begin(), x.end()}, {{{}, r}}};
  });
}

}  // namespace

CheckReport check_lemma_trb(const DoubleBracket& d, const SweepOptions& opts) {
  return trb_sweep("lemma-trb", d, 1, opts);
}

CheckReport check_lemma_trb_negated(const DoubleBracket& d, const SweepOptions& opts) {
  return trb_sweep("lemma-trb-negated", d, -1, opts);
}

}  // namespace precy
