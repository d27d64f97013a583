#pragma once

// The bijection between double brackets on A and type-B cyclic m3 on A + A*,
// defined by <g (x) f, [[b, a]]> = <m3(a, f, b), g>, and the pairing lemmas
// that link the two sides.

#include <array>
#include <span>

#include "precy/ainfinity.hpp"
#include "precy/double_bracket.hpp"

namespace precy {

/// <f_1 (x) ... (x) f_r, t> = sum t[k_1..k_r] prod_p <f_p, e_{k_p}>, factorwise
/// with no cross signs. Only the A* parts of the f_p contribute.
Scalar tensor_pairing(std::span<const ExtElement> fs, const Tensor& t);

/// <m3(e_a, e_f*, e_b), e_g*> == <e_g* (x) e_f*, [[e_b, e_a]]> for all
/// (a, f, b, g); witness in that order.
CheckReport check_defining_identity(const DoubleBracket& d, const TernaryOperation& m3, const SweepOptions& opts = {});

/// Type-B-only m3 of a bracket: the (A, A*, A -> A) table solved from the
/// defining identity, the dual table from cyclic closure. Throws
/// std::logic_error if the result fails the defining identity.
TernaryOperation m3_from_bracket(const DoubleBracket& d);

/// Inverse map, read off the (A, A*, A -> A) table. Throws DomainError
/// naming the first non-type-B pattern that carries entries. Cyclicity is
/// not checked here.
DoubleBracket bracket_from_m3(const TernaryOperation& m3);

struct CorrespondenceReport {
  AxiomReport axioms;
  CheckReport cyclicity;
  std::array<MCReport, 3> mc;

  bool axioms_pass() const { return axioms.pass(); }
  bool precy_pass() const { return cyclicity.pass && mc[0].pass() && mc[1].pass() && mc[2].pass(); }
  /// Both sides agree.
  bool consistent() const { return axioms_pass() == precy_pass(); }
};

/// Runs both sides of the correspondence. The algebra must be associative
/// (DomainError otherwise).
CorrespondenceReport verify_correspondence(const AssocAlgebra& alg, const DoubleBracket& d,
                                           const SweepOptions& opts = {});

/// <g (x) af, [[b,c]]> = <g (x) f, [[b,c]].a>; witness (g, a, f, b, c).
CheckReport check_lemma_R(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts = {});
/// <ga (x) f, [[b,c]]> = -<g (x) f, a.[[b,c]]>.
CheckReport check_lemma_L(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts = {});
/// <g (x) fa, [[b,c]]> = -<g (x) f, a*[[b,c]]>.
CheckReport check_lemma_R_star(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts = {});
/// <ag (x) f, [[b,c]]> = <g (x) f, [[b,c]]*a>.
CheckReport check_lemma_L_star(const AssocAlgebra& alg, const DoubleBracket& d, const SweepOptions& opts = {});

/// <alpha (x) beta (x) gamma, [[a,[[b,c]]]]_L> = <m3(m3(c,gamma,b),beta,a), alpha>
/// with m3 = m3_from_bracket(d); witness (a, b, c, alpha, beta, gamma).
CheckReport check_lemma_trb(const DoubleBracket& d, const SweepOptions& opts = {});

/// The same identity with the right-hand side negated, which is what the
/// antisymmetric pairing between A and A* produces.
CheckReport check_lemma_trb_negated(const DoubleBracket& d, const SweepOptions& opts = {});

}  // namespace precy
