#include "precy/repspaces.hpp"

#include <algorithm>

#include "precy/correspondence.hpp"

namespace precy {

CheckReport validate_rep_point(const AssocAlgebra& alg, const RepPoint& p) {
  const std::size_t dim = alg.dim();
  if (p.n == 0) throw InputShapeError("representation size must be positive");
  if (p.mats.size() != dim) throw InputShapeError("representation needs one matrix per basis element");
  for (const auto& m : p.mats) {
    if (m.rows() != p.n || m.cols() != p.n) throw InputShapeError("representation matrix has wrong size");
  }
  auto to_residual = [&](const Matrix& r) {
    SparseResidual out;
    for (std::size_t i = 0; i < p.n; ++i)
      for (std::size_t j = 0; j < p.n; ++j)
        if (!is_zero(r(i, j))) out.push_back({{static_cast<int>(i), static_cast<int>(j)}, r(i, j)});
    return out;
  };
  const int d = static_cast<int>(dim);
  CheckReport products = serial::sweep("homomorphism", ipow(dim, 2), 16, [&](std::uint64_t idx) -> std::optional<Witness> {
    std::array<int, 2> ij{};
    decode_tuple(idx, d, ij);
    Matrix r = p.mats[ij[0]] * p.mats[ij[1]];
    for (const auto& t : alg.product(ij[0], ij[1])) r = r - t.coeff * p.mats[t.index];
    if (r.is_zero()) return std::nullopt;
    return Witness{{ij.begin(), ij.end()}, to_residual(r)};
  });
  if (!alg.unit()) return products;
  CheckReport unit = serial::sweep("unit", 1, 1, [&](std::uint64_t) -> std::optional<Witness> {
    Matrix r = Scalar(-1) * Matrix::identity(p.n);
    for (std::size_t a = 0; a < dim; ++a) r = r + (*alg.unit())[a] * p.mats[a];
    if (r.is_zero()) return std::nullopt;
    return Witness{{-1}, to_residual(r)};
  });
  return combine_reports("rep-point", {products, unit});
}

RepPoint conjugate(const RepPoint& p, const Matrix& g, const Matrix& g_inv) {
  RepPoint out{p.n, {}};
  for (const auto& m : p.mats) out.mats.push_back(g * m * g_inv);
  return out;
}

Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = static_cast<int>(rng() % 5) - 2;
    if (rank(g) == n) return g;
  }
}

std::vector<RepPoint> sample_rep_points(const AssocAlgebra& alg, std::size_t n, const std::vector<RepPoint>& seeds,
                                        std::size_t count, std::uint64_t rng_seed) {
  if (n == 0) throw InputShapeError("representation size must be positive");
  for (const auto& s : seeds) {
    if (!validate_rep_point(alg, s).pass) throw DomainError("seed representation is not a homomorphism");
  }
  // reachable[m]: some multiset of seed sizes sums to m.
  std::vector<bool> reachable(n + 1, false);
  reachable[0] = true;
  for (std::size_t m = 1; m <= n; ++m)
    for (const auto& s : seeds)
      if (s.n <= m && reachable[m - s.n]) reachable[m] = true;
  if (!reachable[n]) throw DomainError("no combination of seed sizes adds up to " + std::to_string(n));

  std::mt19937_64 rng(rng_seed);
  std::vector<RepPoint> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::vector<Matrix>> blocks(alg.dim());
    std::size_t left = n;
    while (left > 0) {
      std::vector<const RepPoint*> fit;
      for (const auto& s : seeds)
        if (s.n <= left && reachable[left - s.n]) fit.push_back(&s);
      const RepPoint* pick = fit[rng() % fit.size()];
      for (std::size_t a = 0; a < alg.dim(); ++a) blocks[a].push_back(pick->mats[a]);
      left -= pick->n;
    }
    RepPoint p{n, {}};
    for (auto& b : blocks) p.mats.push_back(block_diagonal(b));
    const Matrix g = random_invertible(n, rng);
    out.push_back(conjugate(p, g, *inverse(g)));
  }
  return out;
}

Coord coord_of(std::size_t n, int var) {
  const int ni = static_cast<int>(n);
  return {var / (ni * ni), (var / ni) % ni, var % ni};
}

CoordPoly CoordPoly::constant(const Scalar& c) {
  CoordPoly p;
  p.add_term({}, c);
  return p;
}

CoordPoly CoordPoly::variable(int var) {
  CoordPoly p;
  p.add_term({var}, 1);
  return p;
}

int CoordPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

void CoordPoly::add_term(Monomial m, const Scalar& c) {
  if (precy::is_zero(c)) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (inserted) return;
  it->second += c;
  if (precy::is_zero(it->second)) terms_.erase(it);
}

CoordPoly& CoordPoly::operator+=(const CoordPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoordPoly& CoordPoly::operator-=(const CoordPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CoordPoly operator*(const CoordPoly& a, const CoordPoly& b) {
  CoordPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      CoordPoly::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

CoordPoly operator*(const Scalar& s, const CoordPoly& a) {
  CoordPoly out;
  for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
  return out;
}

CoordPoly CoordPoly::derivative(int var) const {
  CoordPoly out;
  for (const auto& [m, c] : terms_) {
    const auto mult = std::count(m.begin(), m.end(), var);
    if (mult == 0) continue;
    Monomial rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), var));
    out.add_term(std::move(rest), Scalar(static_cast<long>(mult)) * c);
  }
  return out;
}

Scalar CoordPoly::eval(const RepPoint& p) const {
  Scalar out = 0;
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (int var : m) {
      const Coord x = coord_of(p.n, var);
      if (x.a < 0 || static_cast<std::size_t>(x.a) >= p.mats.size()) throw InputShapeError("variable outside the point");
      v *= p.mats[x.a](x.i, x.j);
    }
    out += v;
  }
  return out;
}

CoordPoly trace_poly(std::size_t n, int a) {
  CoordPoly t;
  for (int i = 0; i < static_cast<int>(n); ++i) t.add_term({coord_var(n, {a, i, i})}, 1);
  return t;
}

CoordPoly induced_coordinate_bracket(const DoubleBracket& d, std::size_t n, Coord x, Coord y) {
  const int dim = static_cast<int>(d.dim());
  const int ni = static_cast<int>(n);
  for (const Coord& c : {x, y}) {
    if (c.a < 0 || c.a >= dim || c.i < 0 || c.i >= ni || c.j < 0 || c.j >= ni) {
      throw InputShapeError("coordinate index out of range");
    }
  }
  CoordPoly out;
  for (const auto& t : d.at(x.a, y.a)) {
    out.add_term({coord_var(n, {t.k, y.i, x.j}), coord_var(n, {t.l, x.i, y.j})}, t.coeff);
  }
  return out;
}

namespace {

std::size_t num_vars(const DoubleBracket& d, std::size_t n) { return d.dim() * n * n; }

void check_point_shape(const DoubleBracket& d, std::size_t n, const RepPoint& p) {
  if (p.n != n || p.mats.size() != d.dim()) throw InputShapeError("point does not match bracket and size");
}

}  // namespace

Matrix coordinate_bracket_matrix(const DoubleBracket& d, std::size_t n, const RepPoint& p) {
  check_point_shape(d, n, p);
  const std::size_t nv = num_vars(d, n);
  const int ni = static_cast<int>(n);
  Matrix P(nv, nv);
  for (const auto& [key, val] : d.entries()) {
    const auto [a, b, c, dd] = key;
    for (int i = 0; i < ni; ++i)
      for (int j = 0; j < ni; ++j)
        for (int k = 0; k < ni; ++k) {
          const Scalar& xc = p.mats[c](k, j);
          if (is_zero(xc)) continue;
          for (int l = 0; l < ni; ++l) {
            const Scalar& xd = p.mats[dd](i, l);
            if (is_zero(xd)) continue;
            P(coord_var(n, {a, i, j}), coord_var(n, {b, k, l})) += val * xc * xd;
          }
        }
  }
  return P;
}

Scalar poisson_eval(const DoubleBracket& d, std::size_t n, const CoordPoly& f, const CoordPoly& g, const RepPoint& p) {
  check_point_shape(d, n, p);
  const std::size_t nv = num_vars(d, n);
  auto gradient = [&](const CoordPoly& h) {
    Vec grad = zero_vec(nv);
    for (std::size_t v = 0; v < nv; ++v) grad[v] = h.derivative(static_cast<int>(v)).eval(p);
    return grad;
  };
  const Vec gf = gradient(f), gg = gradient(g);
  if (is_zero(gf) || is_zero(gg)) return 0;
  const Matrix P = coordinate_bracket_matrix(d, n, p);
  Scalar out = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (is_zero(gf[v])) continue;
    for (std::size_t w = 0; w < nv; ++w) {
      if (!is_zero(gg[w])) out += gf[v] * P(v, w) * gg[w];
    }
  }
  return out;
}

CheckReport check_coordinate_antisymmetry(const DoubleBracket& d, std::size_t n, const SweepOptions& opts) {
  if (n == 0) throw InputShapeError("representation size must be positive");
  const std::size_t nv = num_vars(d, n);
  return sweep("coordinate-antisymmetry", nv * nv, opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    const int v = static_cast<int>(idx / nv), w = static_cast<int>(idx % nv);
    const CoordPoly r =
        induced_coordinate_bracket(d, n, coord_of(n, v), coord_of(n, w)) +
        induced_coordinate_bracket(d, n, coord_of(n, w), coord_of(n, v));
    if (r.is_zero()) return std::nullopt;
    SparseResidual res;
    for (const auto& [m, c] : r.terms()) res.push_back({m, c});
    return Witness{{v, w}, res};
  });
}

namespace {

struct SparseRow {
  std::vector<std::pair<int, Scalar>> entries;
};

/// Per-point data for Jacobi: sparse rows of P(p) and the gradients of the
/// quadratic polynomials {x_v, x_w} at p.
struct JacobiData {
  std::vector<SparseRow> rows;
  std::vector<std::vector<std::pair<int, Scalar>>> grads;  // index v * nv + w
};

JacobiData jacobi_data(const DoubleBracket& d, std::size_t n, const RepPoint& p) {
  check_point_shape(d, n, p);
  const std::size_t nv = num_vars(d, n);
  const Matrix P = coordinate_bracket_matrix(d, n, p);
  JacobiData out;
  out.rows.resize(nv);
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w = 0; w < nv; ++w)
      if (!is_zero(P(v, w))) out.rows[v].entries.emplace_back(static_cast<int>(w), P(v, w));
  out.grads.resize(nv * nv);
  const int ni = static_cast<int>(n);
  for (const auto& [key, val] : d.entries()) {
    const auto [a, b, c, dd] = key;
    for (int i = 0; i < ni; ++i)
      for (int j = 0; j < ni; ++j)
        for (int k = 0; k < ni; ++k)
          for (int l = 0; l < ni; ++l) {
            const int z1 = coord_var(n, {c, k, j}), z2 = coord_var(n, {dd, i, l});
            const std::size_t vw = static_cast<std::size_t>(coord_var(n, {a, i, j})) * nv + coord_var(n, {b, k, l});
            auto& g = out.grads[vw];
            g.emplace_back(z1, val * p.mats[dd](i, l));
            g.emplace_back(z2, val * p.mats[c](k, j));
          }
  }
  for (auto& g : out.grads) {
    std::sort(g.begin(), g.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<int, Scalar>> merged;
    for (auto& e : g) {
      if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
      else merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const auto& e) { return is_zero(e.second); });
    g = std::move(merged);
  }
  return out;
}

/// {x_u, g}(p) for g = {x_v, x_w}: sum_z P[u][z] dg/dz(p).
Scalar bracket_with_grad(const SparseRow& row, const std::vector<std::pair<int, Scalar>>& grad) {
  Scalar out = 0;
  auto it = grad.begin();
  for (const auto& [z, pz] : row.entries) {
    while (it != grad.end() && it->first < z) ++it;
    if (it == grad.end()) break;
    if (it->first == z) out += pz * it->second;
  }
  return out;
}

}  // namespace

CheckReport check_jacobi_at_points(const DoubleBracket& d, std::size_t n, const std::vector<RepPoint>& points,
                                   const SweepOptions& opts) {
  const std::size_t nv = num_vars(d, n);
  std::vector<JacobiData> data(points.size());
  const std::size_t np = points.size();
  for_each_index(np, opts.jobs, [&](std::uint64_t idx) { data[idx] = jacobi_data(d, n, points[idx]); });
  const std::uint64_t per_point = ipow(nv, 3);
  return sweep("poisson-jacobi", np * per_point, opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    const std::size_t pi = idx / per_point;
    std::array<int, 3> uvw{};
    decode_tuple(idx % per_point, static_cast<int>(nv), uvw);
    const auto [u, v, w] = uvw;
    const JacobiData& jd = data[pi];
    const Scalar r = bracket_with_grad(jd.rows[u], jd.grads[static_cast<std::size_t>(v) * nv + w]) +
                     bracket_with_grad(jd.rows[v], jd.grads[static_cast<std::size_t>(w) * nv + u]) +
                     bracket_with_grad(jd.rows[w], jd.grads[static_cast<std::size_t>(u) * nv + v]);
    if (is_zero(r)) return std::nullopt;
    return Witness{{static_cast<int>(pi), u, v, w}, {{{}, r}}};
  });
}

CheckReport check_gl_equivariance(const DoubleBracket& d, std::size_t n, const std::vector<RepPoint>& points,
                                  std::size_t count_g, std::uint64_t rng_seed, const SweepOptions& opts) {
  const std::size_t nv = num_vars(d, n);
  const std::size_t ni = n;
  std::mt19937_64 rng(rng_seed);
  std::vector<Matrix> gs, ginvs;
  for (std::size_t t = 0; t < count_g; ++t) {
    gs.push_back(random_invertible(n, rng));
    ginvs.push_back(*inverse(gs.back()));
  }
  // x_f o Ad_g = sum_y L[f][y] x_y with L[(a,i,j)][(a,r,s)] = g_ir ginv_sj.
  const std::size_t pairs = count_g * points.size();
  std::vector<Matrix> lhs(pairs), rhs(pairs);
  for_each_index(pairs, opts.jobs, [&](std::uint64_t idx) {
    const std::size_t t = idx / points.size(), pi = idx % points.size();
    Matrix L(nv, nv);
    for (std::size_t a = 0; a < d.dim(); ++a)
      for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t j = 0; j < ni; ++j)
          for (std::size_t r = 0; r < ni; ++r)
            for (std::size_t s = 0; s < ni; ++s) {
              const int f = coord_var(n, {static_cast<int>(a), static_cast<int>(i), static_cast<int>(j)});
              const int y = coord_var(n, {static_cast<int>(a), static_cast<int>(r), static_cast<int>(s)});
              L(f, y) = gs[t](i, r) * ginvs[t](s, j);
            }
    Matrix Lt(nv, nv);
    for (std::size_t r = 0; r < nv; ++r)
      for (std::size_t c = 0; c < nv; ++c) Lt(c, r) = L(r, c);
    lhs[idx] = L * coordinate_bracket_matrix(d, n, points[pi]) * Lt;
    rhs[idx] = coordinate_bracket_matrix(d, n, conjugate(points[pi], gs[t], ginvs[t]));
  });
  return sweep("gl-equivariance", pairs * nv * nv, opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    const std::size_t pair = idx / (nv * nv);
    const std::size_t f = (idx / nv) % nv, h = idx % nv;
    const Scalar r = lhs[pair](f, h) - rhs[pair](f, h);
    if (is_zero(r)) return std::nullopt;
    return Witness{{static_cast<int>(pair / points.size()), static_cast<int>(pair % points.size()),
                    static_cast<int>(f), static_cast<int>(h)},
                   {{{}, r}}};
  });
}

std::vector<CoordPoly> relation_polys(const AssocAlgebra& alg, std::size_t n) {
  const int ni = static_cast<int>(n);
  const int dim = static_cast<int>(alg.dim());
  std::vector<CoordPoly> out;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int i = 0; i < ni; ++i)
        for (int j = 0; j < ni; ++j) {
          CoordPoly r;
          for (int m = 0; m < ni; ++m) r.add_term({coord_var(n, {a, i, m}), coord_var(n, {b, m, j})}, 1);
          for (const auto& t : alg.product(a, b)) r.add_term({coord_var(n, {t.index, i, j})}, -t.coeff);
          out.push_back(std::move(r));
        }
  if (alg.unit()) {
    for (int i = 0; i < ni; ++i)
      for (int j = 0; j < ni; ++j) {
        CoordPoly r;
        for (int a = 0; a < dim; ++a) r.add_term({coord_var(n, {a, i, j})}, (*alg.unit())[a]);
        if (i == j) r.add_term({}, -1);
        out.push_back(std::move(r));
      }
  }
  return out;
}

CheckReport check_ideal_compatibility(const AssocAlgebra& alg, const DoubleBracket& d, std::size_t n,
                                      const std::vector<RepPoint>& points, const SweepOptions& opts) {
  if (alg.dim() != d.dim()) throw InputShapeError("bracket and algebra dimensions differ");
  const std::size_t nv = num_vars(d, n);
  const auto rels = relation_polys(alg, n);
  const std::size_t np = points.size();
  // grads[point][relation]: gradient at the point.
  std::vector<Matrix> P(np);
  std::vector<std::vector<Vec>> grads(np);
  for_each_index(np, opts.jobs, [&](std::uint64_t pi) {
    P[pi] = coordinate_bracket_matrix(d, n, points[pi]);
    for (const auto& r : rels) {
      Vec g = zero_vec(nv);
      for (std::size_t v = 0; v < nv; ++v) g[v] = r.derivative(static_cast<int>(v)).eval(points[pi]);
      grads[pi].push_back(std::move(g));
    }
  });
  const std::uint64_t per_point = rels.size() * nv;
  return sweep("ideal-compatibility", np * per_point, opts, [&](std::uint64_t idx) -> std::optional<Witness> {
    const std::size_t pi = idx / per_point;
    const std::size_t ri = (idx % per_point) / nv, v = idx % nv;
    Scalar r = 0;
    const Vec& g = grads[pi][ri];
    for (std::size_t w = 0; w < nv; ++w) {
      if (!is_zero(g[w])) r += P[pi](v, w) * g[w];
    }
    if (is_zero(r)) return std::nullopt;
    return Witness{{static_cast<int>(pi), static_cast<int>(ri), static_cast<int>(v)}, {{{}, r}}};
  });
}

CheckReport check_restricted_polyderivation(const AssocAlgebra& alg, const TernaryOperation& m3,
                                            const SweepOptions& opts) {
  if (alg.dim() != m3.dim()) throw InputShapeError("m3 and algebra dimensions differ");
  CheckReport r = check_polyderivation(alg, bracket_from_m3(project_type_B(m3)), opts);
  r.identity = "restricted-polyderivation";
  return r;
}

}  // namespace precy
