#include "battery.hpp"

#include "precy/correspondence.hpp"
#include "precy/matrix.hpp"

namespace precy::testkit {

AssocAlgebra truncated_polynomial(int n) {
  std::vector<std::string> names;
  std::vector<StructureConstant> sc;
  Vec unit = zero_vec(n);
  unit[0] = 1;
  for (int i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "1" : "x" + std::to_string(i));
    for (int j = 0; i + j < n; ++j) sc.push_back({i, j, i + j, 1});
  }
  return AssocAlgebra("truncated-" + std::to_string(n), names, sc, unit);
}

AssocAlgebra square_zero(int m) {
  std::vector<std::string> names{"1"};
  std::vector<StructureConstant> sc{{0, 0, 0, 1}};
  for (int v = 1; v <= m; ++v) {
    names.push_back("v" + std::to_string(v));
    sc.push_back({0, v, v, 1});
    sc.push_back({v, 0, v, 1});
  }
  Vec unit = zero_vec(m + 1);
  unit[0] = 1;
  return AssocAlgebra("square-zero-" + std::to_string(m), names, sc, unit);
}

AssocAlgebra split_semisimple(int m) {
  std::vector<std::string> names;
  std::vector<StructureConstant> sc;
  for (int i = 0; i < m; ++i) {
    names.push_back("e" + std::to_string(i + 1));
    sc.push_back({i, i, i, 1});
  }
  return AssocAlgebra("split-" + std::to_string(m), names, sc, Vec(m, Scalar(1)));
}

std::vector<AssocAlgebra> battery_algebras() {
  return {truncated_polynomial(2), split_semisimple(2), truncated_polynomial(3), square_zero(2),
          AssocAlgebra("upper-triangular", {"e11", "e12", "e22"},
                       {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, Vec{1, 0, 1})};
}

std::vector<Vec> antisymmetric_leibniz_space(const AssocAlgebra& alg) {
  const int n = static_cast<int>(alg.dim());
  auto var = [n](int i, int j, int k, int l) { return ((i * n + j) * n + k) * n + l; };
  std::vector<Vec> rows;
  const std::size_t nv = static_cast<std::size_t>(n) * n * n * n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Vec r = zero_vec(nv);
          r[var(i, j, k, l)] += 1;
          r[var(j, i, l, k)] += 1;
          rows.push_back(std::move(r));
        }
  // [[e_i, e_j e_k]] - e_j.[[e_i, e_k]] - [[e_i, e_j]].e_k, coefficient of e_p (x) e_q.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            Vec r = zero_vec(nv);
            for (int m = 0; m < n; ++m) r[var(i, m, p, q)] += alg.coeff(j, k, m);
            for (int s = 0; s < n; ++s) r[var(i, k, s, q)] -= alg.coeff(j, s, p);
            for (int s = 0; s < n; ++s) r[var(i, j, p, s)] -= alg.coeff(s, k, q);
            rows.push_back(std::move(r));
          }
  Matrix m(rows.size(), nv);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < nv; ++c) m(r, c) = rows[r][c];
  return null_space(m);
}

DoubleBracket bracket_from_vector(std::size_t n, const Vec& v) {
  std::map<BracketKey, Scalar> e;
  std::array<int, 4> idx{};
  for (std::size_t f = 0; f < v.size(); ++f) {
    if (is_zero(v[f])) continue;
    decode_tuple(f, static_cast<int>(n), idx);
    e[idx] = v[f];
  }
  return DoubleBracket(n, e);
}

AxiomProfile profile(const AssocAlgebra& alg, const DoubleBracket& d) {
  return {check_antisymmetry(d).pass, check_leibniz_outer(alg, d).pass, check_double_jacobi(d).pass};
}

Scalar small_scalar(std::mt19937_64& rng, int range) {
  const auto span = static_cast<std::uint64_t>(2 * range);
  const int v = static_cast<int>(rng() % span) - range;
  return v >= 0 ? v + 1 : v;
}

DoubleBracket random_leibniz_bracket(const AssocAlgebra& alg, const std::vector<Vec>& space, std::mt19937_64& rng) {
  const std::size_t n = alg.dim();
  Vec v = zero_vec(n * n * n * n);
  if (space.empty()) return bracket_from_vector(n, v);
  // One or two basis directions: single directions often satisfy Jacobi.
  const int picks = 1 + static_cast<int>(rng() % 2);
  for (int p = 0; p < picks; ++p) {
    const Vec& b = space[rng() % space.size()];
    const Scalar c = small_scalar(rng, 3);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
  }
  return bracket_from_vector(n, v);
}

DoubleBracket random_sparse_bracket(std::size_t n, int terms, std::mt19937_64& rng) {
  std::map<BracketKey, Scalar> e;
  for (int t = 0; t < terms; ++t) {
    BracketKey k{};
    for (auto& x : k) x = static_cast<int>(rng() % n);
    e[k] = small_scalar(rng, 3);
  }
  return DoubleBracket(n, e);
}

DoubleBracket antisymmetric_mutation(const DoubleBracket& d, std::mt19937_64& rng) {
  const std::size_t n = d.dim();
  BracketKey k{};
  for (auto& x : k) x = static_cast<int>(rng() % n);
  const Scalar c = small_scalar(rng, 2);
  const BracketKey twin{k[1], k[0], k[3], k[2]};
  if (k == twin) return d;
  auto e = d.entries();
  e[k] += c;
  e[twin] -= c;
  return DoubleBracket(n, e);
}

std::vector<Instance> correspondence_battery(std::uint64_t seed, int min_total, int min_invalid, int min_leibniz_only,
                                      int min_jacobi_only) {
  std::mt19937_64 rng(seed);
  const auto algebras = battery_algebras();
  std::vector<std::vector<Vec>> spaces;
  for (const auto& a : algebras) spaces.push_back(antisymmetric_leibniz_space(a));

  std::vector<Instance> out;
  int invalid = 0, leibniz_only = 0, jacobi_only = 0;
  auto done = [&] {
    return static_cast<int>(out.size()) >= min_total && invalid >= min_invalid && leibniz_only >= min_leibniz_only &&
           jacobi_only >= min_jacobi_only;
  };
  for (std::uint64_t attempt = 0; !done() && attempt < 200000; ++attempt) {
    const std::size_t ai = attempt % algebras.size();
    const AssocAlgebra& alg = algebras[ai];
    const std::size_t n = alg.dim();
    const int gen = static_cast<int>((attempt / algebras.size()) % 4);
    std::string kind;
    DoubleBracket d = DoubleBracket::zero(n);
    switch (gen) {
      case 0:
        kind = "leibniz-space";
        d = random_leibniz_bracket(alg, spaces[ai], rng);
        break;
      case 1:
        kind = "antisymmetric-mutation";
        d = antisymmetric_mutation(random_leibniz_bracket(alg, spaces[ai], rng), rng);
        break;
      case 2:
        kind = "antisymmetric-mutation-of-zero";
        d = antisymmetric_mutation(DoubleBracket::zero(n), rng);
        break;
      default:
        kind = "random-sparse";
        d = random_sparse_bracket(n, 1 + static_cast<int>(rng() % 4), rng);
        break;
    }
    const AxiomProfile p = profile(alg, d);
    const bool fills = (!p.all() && invalid < min_invalid) || (p.leibniz_only() && leibniz_only < min_leibniz_only) ||
                       (p.jacobi_only() && jacobi_only < min_jacobi_only);
    if (static_cast<int>(out.size()) >= min_total && !fills) continue;
    const int valid = static_cast<int>(out.size()) - invalid;
    // Keep the valid share from crowding out the quotas, and vice versa.
    if (p.all() && static_cast<int>(out.size()) >= min_total - min_invalid && invalid < min_invalid) continue;
    if (!p.all() && !fills && invalid >= valid) continue;
    if (!p.all()) ++invalid;
    if (p.leibniz_only()) ++leibniz_only;
    if (p.jacobi_only()) ++jacobi_only;
    out.push_back({kind, alg, d, p});
  }
  return out;
}

AssocAlgebra with_idempotents(const AssocAlgebra& a, int k) {
  const int n = static_cast<int>(a.dim());
  auto names = a.basis_names();
  auto sc = a.structure_constants();
  std::optional<Vec> unit;
  if (a.unit()) unit = *a.unit();
  for (int i = 0; i < k; ++i) {
    names.push_back("p" + std::to_string(i + 1));
    sc.push_back({n + i, n + i, n + i, 1});
    if (unit) unit->push_back(1);
  }
  return AssocAlgebra(a.name() + "+q" + std::to_string(k), names, sc, unit);
}

namespace {

std::vector<TernaryPattern> allowed_patterns() {
  std::vector<TernaryPattern> out;
  for (const auto& p : TernaryPattern::all()) {
    if (p.degree_allowed()) out.push_back(p);
  }
  return out;
}

}  // namespace

TernaryOperation random_ternary(std::size_t n, int terms, std::mt19937_64& rng) {
  const auto patterns = allowed_patterns();
  std::map<TernaryPattern, TernaryTableMap> tables;
  for (int t = 0; t < terms; ++t) {
    const auto& p = patterns[rng() % patterns.size()];
    TernaryKey k{};
    for (auto& x : k) x = static_cast<int>(rng() % n);
    tables[p][k] = small_scalar(rng, 3);
  }
  return TernaryOperation(n, tables);
}

std::vector<PaddedInstance> padded_family(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const auto algebras = battery_algebras();
  std::vector<std::vector<Vec>> spaces;
  for (const auto& a : algebras) spaces.push_back(antisymmetric_leibniz_space(a));
  std::vector<TernaryPattern> type_a;
  for (const auto& p : allowed_patterns()) {
    if (p.type() == ComponentType::TypeA) type_a.push_back(p);
  }

  std::vector<PaddedInstance> out;
  for (std::uint64_t attempt = 0; static_cast<int>(out.size()) < count && attempt < 100000; ++attempt) {
    const std::size_t ai = attempt % algebras.size();
    const AssocAlgebra& base = algebras[ai];
    const DoubleBracket d0 = random_leibniz_bracket(base, spaces[ai], rng);
    if (!profile(base, d0).all()) continue;
    const int n0 = static_cast<int>(base.dim());
    const AssocAlgebra alg = with_idempotents(base, 3);
    const std::size_t n = alg.dim();
    std::map<BracketKey, Scalar> lifted = d0.entries();
    const DoubleBracket d(n, lifted);

    const TernaryOperation b = m3_from_bracket(d);
    std::map<TernaryPattern, TernaryTableMap> tables = b.tables();
    const int reads = n0;
    const int writes_lo = n0 + 1;
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      const auto& p = type_a[rng() % type_a.size()];
      const TernaryKey k{reads, reads, reads, writes_lo + static_cast<int>(rng() % 2)};
      tables[p][k] = small_scalar(rng, 3);
    }
    out.push_back({alg, d, TernaryOperation(n, tables)});
  }
  return out;
}

}  // namespace precy::testkit
