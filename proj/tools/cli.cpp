#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "precy/correspondence.hpp"
#include "precy/io.hpp"
#include "precy/repspaces.hpp"
#include "precy/taxonomy.hpp"

namespace precy::cli {

namespace {

struct Config {
  std::string format = "text";
  int jobs = 0;
  std::uint64_t seed = 1;
  std::string algebra, bracket, m3, seeds, out;
  std::size_t n = 2;
  std::size_t samples = 100;
  std::size_t group_samples = 5;
  int arity = 5;
};

using Labeller = std::function<std::string(int)>;

Labeller basis_labels(const AssocAlgebra& alg) {
  return [&alg](int i) { return i >= 0 && static_cast<std::size_t>(i) < alg.dim() ? alg.basis_names()[i] : std::to_string(i); };
}

Labeller ext_labels(const AssocAlgebra& alg) {
  return [&alg](int l) {
    const auto n = static_cast<int>(alg.dim());
    if (l < 0 || l >= 2 * n) return std::to_string(l);
    return l < n ? alg.basis_names()[l] : alg.basis_names()[l - n] + "*";
  };
}

Labeller plain_labels() {
  return [](int i) { return std::to_string(i); };
}

/// Accumulates checks for one command and renders them.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(const CheckReport& r, Labeller tuple_labels) {
    checks_.push_back(to_json(r));
    std::ostringstream line;
    line << (r.pass ? "PASS  " : "FAIL  ") << r.identity << "  (" << r.evaluated << " evaluated";
    if (!r.pass) line << ", " << r.failures << " failing";
    line << ")\n";
    for (std::size_t w = 0; w < r.witnesses.size() && w < 3; ++w) {
      const auto& wit = r.witnesses[w];
      line << "      at (";
      for (std::size_t i = 0; i < wit.tuple.size(); ++i) line << (i ? ", " : "") << tuple_labels(wit.tuple[i]);
      line << "):";
      for (std::size_t e = 0; e < wit.residual.size() && e < 6; ++e) {
        line << " [";
        for (std::size_t i = 0; i < wit.residual[e].index.size(); ++i) line << (i ? "," : "") << wit.residual[e].index[i];
        line << "]=" << to_string(wit.residual[e].value);
      }
      if (wit.residual.size() > 6) line << " ...";
      line << "\n";
    }
    text_ += line.str();
    pass_ = pass_ && r.pass;
  }

  void note(const std::string& key, Json value, const std::string& text) {
    extra_[key] = std::move(value);
    if (!text.empty()) text_ += text + "\n";
  }

  bool pass() const { return pass_; }
  void set_pass(bool p) { pass_ = p; }

  void emit(const Config& cfg, std::ostream& out) const {
    if (cfg.format == "json") {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["command"] = command_;
      j["pass"] = pass_;
      j["checks"] = checks_;
      for (const auto& [k, v] : extra_.items()) j[k] = v;
      out << canonical_dump(j);
      return;
    }
    out << text_ << (pass_ ? "result: pass\n" : "result: fail\n");
  }

 private:
  std::string command_;
  Json checks_ = Json::array();
  Json extra_ = Json::object();
  std::string text_;
  bool pass_ = true;
};

SweepOptions sweep_opts(const Config& cfg) { return {cfg.jobs, 16}; }

int finish(const Report& r, const Config& cfg, std::ostream& out) {
  r.emit(cfg, out);
  return r.pass() ? kPass : kCheckFailed;
}

void write_or_print(const Config& cfg, const Json& doc, std::ostream& out) {
  if (cfg.out.empty()) {
    out << canonical_dump(doc);
  } else {
    write_json_file(cfg.out, doc);
  }
}

int cmd_check_algebra(const Config& cfg, std::ostream& out) {
  const AssocAlgebra alg = load_algebra(cfg.algebra);
  const auto opts = sweep_opts(cfg);
  Report r("check-algebra");
  r.add(check_associativity(alg, opts), basis_labels(alg));
  r.add(check_unit(alg), basis_labels(alg));
  const BinaryTable m2 = trivial_extension_table(alg);
  r.add(check_m2_cyclicity(m2, opts), ext_labels(alg));
  r.add(check_graded_associativity(m2, opts), ext_labels(alg));
  return finish(r, cfg, out);
}

int cmd_check_bracket(const Config& cfg, std::ostream& out) {
  const AssocAlgebra alg = load_algebra(cfg.algebra);
  const DoubleBracket d = load_bracket(cfg.bracket, alg);
  const auto opts = sweep_opts(cfg);
  Report r("check-bracket");
  const auto labels = basis_labels(alg);
  r.add(check_antisymmetry(d, opts), labels);
  r.add(check_leibniz_outer(alg, d, opts), labels);
  r.add(check_leibniz_inner(alg, d, opts), labels);
  r.add(check_double_jacobi(d, opts), labels);
  r.add(check_polyderivation(alg, d, opts), labels);
  return finish(r, cfg, out);
}

int cmd_to_precy(const Config& cfg, std::ostream& out) {
  const AssocAlgebra alg = load_algebra(cfg.algebra);
  const DoubleBracket d = load_bracket(cfg.bracket, alg);
  write_or_print(cfg, to_json(m3_from_bracket(d)), out);
  return kPass;
}

int cmd_from_precy(const Config& cfg, std::ostream& out, std::ostream& err) {
  const AssocAlgebra alg = load_algebra(cfg.algebra);
  const TernaryOperation m3 = load_m3(cfg.m3, alg.dim());
  try {
    write_or_print(cfg, to_json(alg, bracket_from_m3(m3)), out);
  } catch (const DomainError& e) {
    err << "precy: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kPass;
}

int cmd_check_precy(const Config& cfg, std::ostream& out) {
  const AssocAlgebra alg = load_algebra(cfg.algebra);
  const TernaryOperation m3 = load_m3(cfg.m3, alg.dim());
  const auto opts = sweep_opts(cfg);
  Report r("check-precy");
  r.add(check_cyclic_invariance(m3, opts), ext_labels(alg));
  for (const auto& mc : check_maurer_cartan(alg, m3, opts)) r.add(mc.check, ext_labels(alg));
  r.note("type_b_only", m3.is_type_b_only(), std::string("type-B only: ") + (m3.is_type_b_only() ? "yes" : "no"));
  return finish(r, cfg, out);
}

int cmd_correspondence(const Config& cfg, std::ostream& out) {
  const AssocAlgebra alg = load_algebra(cfg.algebra);
  const DoubleBracket d = load_bracket(cfg.bracket, alg);
  const CorrespondenceReport c = verify_correspondence(alg, d, sweep_opts(cfg));
  Report r("correspondence");
  const auto labels = basis_labels(alg);
  r.add(c.axioms.antisymmetry, labels);
  r.add(c.axioms.leibniz, labels);
  r.add(c.axioms.jacobi, labels);
  r.add(c.cyclicity, ext_labels(alg));
  for (const auto& mc : c.mc) r.add(mc.check, ext_labels(alg));
  std::string verdict;
  if (!c.consistent()) verdict = "biconditional violated";
  else verdict = c.axioms_pass() ? "both sides pass" : "both sides fail consistently";
  r.note("axioms_pass", c.axioms_pass(), std::string("double Poisson axioms: ") + (c.axioms_pass() ? "pass" : "fail"));
  r.note("precy_pass", c.precy_pass(), std::string("cyclic MC suite: ") + (c.precy_pass() ? "pass" : "fail"));
  r.note("consistent", c.consistent(), "verdict: " + verdict);
  r.set_pass(c.consistent());
  r.emit(cfg, out);
  return c.consistent() ? kPass : kInconsistent;
}

int cmd_rep(const Config& cfg, std::ostream& out) {
  if (cfg.n == 0) throw InputShapeError("--n must be positive");
  const AssocAlgebra alg = load_algebra(cfg.algebra);
  const DoubleBracket d = load_bracket(cfg.bracket, alg);
  const auto seeds = load_seeds(cfg.seeds, alg);
  const auto points = sample_rep_points(alg, cfg.n, seeds, cfg.samples, cfg.seed);
  const auto opts = sweep_opts(cfg);
  Report r("rep");
  r.note("n", cfg.n, "n = " + std::to_string(cfg.n) + ", " + std::to_string(points.size()) + " sampled points");
  r.note("samples", points.size(), "");
  r.note("seed", cfg.seed, "");
  r.add(check_coordinate_antisymmetry(d, cfg.n, opts), plain_labels());
  r.add(check_jacobi_at_points(d, cfg.n, points, opts), plain_labels());
  r.add(check_gl_equivariance(d, cfg.n, points, cfg.group_samples, cfg.seed + 1, opts), plain_labels());
  r.add(check_ideal_compatibility(alg, d, cfg.n, points, opts), plain_labels());
  return finish(r, cfg, out);
}

int cmd_mc_terms(const Config& cfg, std::ostream& out) {
  if (cfg.arity != 4 && cfg.arity != 5) throw InputShapeError("--arity must be 4 or 5");
  const auto eqs = mc_taxonomy(cfg.arity);
  if (cfg.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "mc-terms";
    j["arity"] = cfg.arity;
    Json rows = Json::array();
    for (const auto& e : eqs) rows.push_back(to_json(e));
    j["equations"] = std::move(rows);
    out << canonical_dump(j);
    return kPass;
  }
  for (const auto& e : eqs) {
    std::string row = to_string(e.row);
    row.resize(std::max<std::size_t>(row.size(), 28), ' ');
    out << row << "  " << to_string(e.label) << "  (" << e.main_terms().size() << " main of " << e.terms.size()
        << " terms)\n";
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double Poisson brackets and cyclic A-infinity structures on A + A*", "precy"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads, 0 for all cores, 1 for the serial kernels");
  app.add_option("--seed", cfg.seed, "Seed for every randomized step");

  auto* ca = app.add_subcommand("check-algebra", "Associativity, unit and the trivial extension");
  ca->add_option("algebra", cfg.algebra)->required();
  auto* cb = app.add_subcommand("check-bracket", "Double Poisson axioms of a bracket");
  cb->add_option("algebra", cfg.algebra)->required();
  cb->add_option("bracket", cfg.bracket)->required();
  auto* tp = app.add_subcommand("to-precy", "Convert a bracket to its type-B m3");
  tp->add_option("algebra", cfg.algebra)->required();
  tp->add_option("bracket", cfg.bracket)->required();
  tp->add_option("-o,--out", cfg.out, "Output file (stdout if omitted)");
  auto* fp = app.add_subcommand("from-precy", "Convert a type-B m3 to its bracket");
  fp->add_option("algebra", cfg.algebra)->required();
  fp->add_option("m3", cfg.m3)->required();
  fp->add_option("-o,--out", cfg.out, "Output file (stdout if omitted)");
  auto* cp = app.add_subcommand("check-precy", "Cyclicity and Maurer-Cartan arities 3 to 5 of m2 + m3");
  cp->add_option("algebra", cfg.algebra)->required();
  cp->add_option("m3", cfg.m3)->required();
  auto* co = app.add_subcommand("correspondence", "Both sides of the bracket / m3 correspondence");
  co->add_option("algebra", cfg.algebra)->required();
  co->add_option("bracket", cfg.bracket)->required();
  auto* rp = app.add_subcommand("rep", "Induced Poisson bracket on Rep_n at sampled points");
  rp->add_option("algebra", cfg.algebra)->required();
  rp->add_option("bracket", cfg.bracket)->required();
  rp->add_option("seeds", cfg.seeds)->required();
  rp->add_option("--n", cfg.n, "Matrix size");
  rp->add_option("--samples", cfg.samples, "Number of sampled points");
  rp->add_option("--group-samples", cfg.group_samples, "Random g per point for equivariance");
  auto* mt = app.add_subcommand("mc-terms", "Symbolic term taxonomy of MC_4 or MC_5");
  mt->add_option("--arity", cfg.arity)->check(CLI::IsMember({4, 5}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*ca) return cmd_check_algebra(cfg, out);
    if (*cb) return cmd_check_bracket(cfg, out);
    if (*tp) return cmd_to_precy(cfg, out);
    if (*fp) return cmd_from_precy(cfg, out, err);
    if (*cp) return cmd_check_precy(cfg, out);
    if (*co) return cmd_correspondence(cfg, out);
    if (*rp) return cmd_rep(cfg, out);
    if (*mt) return cmd_mc_terms(cfg, out);
  } catch (const ParseError& e) {
    err << "precy: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "precy: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "precy: input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace precy::cli
