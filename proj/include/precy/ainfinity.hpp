#pragma once

// Cyclic invariance and Maurer-Cartan identities for m = m2 + m3 on A + A*,
// in shifted degrees (every m_k has degree +1). MC_k is
//
//   sum_{p+q=k+1} sum_i (-1)^{|x_1|'+...+|x_{i-1}|'} m_p(x_1, .., m_q(x_i, ..), .., x_k)
//
// with m2 the trivial-extension product. m4 and higher are absent from the
// model, so MC_6 and up hold vacuously and are not evaluated.

#include <array>
#include <span>
#include <vector>

#include "precy/check_report.hpp"
#include "precy/extended.hpp"
#include "precy/sweep.hpp"
#include "precy/ternary.hpp"

namespace precy {

/// Koszul sign of moving the first of n+1 slots to the end:
/// (-1)^{d_1 (d_2 + ... + d_{n+1})}.
int cyclic_rotation_sign(std::span<const int> degrees);

/// <m3(a1,a2,a3), a4> = (-1)^{|a1|'(|a2|'+|a3|'+|a4|')} <m3(a2,a3,a4), a1>
/// over all (2n)^4 extended basis tuples.
CheckReport check_cyclic_invariance(const TernaryOperation& m3, const SweepOptions& opts = {});

/// Extends the (A, A*, A -> A) table of `mu` to a type-B-only operation. The
/// (A*, A, A* -> A*) table is solved from the rotation
/// <m3(a,f,b), g> = s <m3(f,b,g), a>. All other tables of `mu` are ignored.
TernaryOperation complete_cyclic_closure(const TernaryOperation& mu);

/// Zeroes every table but the two type-B ones.
TernaryOperation project_type_B(const TernaryOperation& m3);

/// The A-infinity structure (m2, m3) the MC kernels evaluate.
class MCStructure {
 public:
  MCStructure(const AssocAlgebra& alg, const TernaryOperation& m3);
  MCStructure(BinaryTable m2, const TernaryOperation& m3);

  std::size_t dim() const { return m2_.dim(); }
  int ext_dim() const { return static_cast<int>(m2_.ext_dim()); }
  const BinaryTable& m2() const { return m2_; }
  const TernaryOperation& m3() const { return m3_; }

  /// Signed MC_k residual on a tuple of linear extended indices, k in 3..5.
  Vec residual(std::span<const int> xs) const;

 private:
  BinaryTable m2_;
  TernaryOperation m3_;
};

ExtElement mc_residual_4(const AssocAlgebra& alg, const TernaryOperation& m3, ExtIndex x1, ExtIndex x2,
                         ExtIndex x3, ExtIndex x4);
ExtElement mc_residual_5(const AssocAlgebra& alg, const TernaryOperation& m3, ExtIndex x1, ExtIndex x2,
                         ExtIndex x3, ExtIndex x4, ExtIndex x5);

struct MCReport {
  int arity = 0;
  CheckReport check;

  bool pass() const { return check.pass; }
};

/// Exhaustive MC_k over all (2n)^k tuples.
MCReport check_mc_arity(const MCStructure& s, int arity, const SweepOptions& opts = {});

/// MC_3, MC_4, MC_5 in that order.
std::array<MCReport, 3> check_maurer_cartan(const AssocAlgebra& alg, const TernaryOperation& m3,
                                            const SweepOptions& opts = {});

}  // namespace precy
