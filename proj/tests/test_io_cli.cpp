#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "battery.hpp"
#include "cli.hpp"
#include "precy/correspondence.hpp"
#include "precy/fixtures.hpp"
#include "precy/io.hpp"

using namespace precy;
namespace fs = std::filesystem;

namespace {

const fs::path kData = PRECY_DATA_DIR;

std::string path(const std::string& rel) { return (kData / rel).string(); }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "precy_test_io_cli";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

}  // namespace

TEST(Json, AlgebraRoundTrip) {
  for (const auto& alg : fixtures::all_algebras()) {
    EXPECT_EQ(algebra_from_json(to_json(alg), "mem"), alg);
  }
  for (const auto& alg : testkit::battery_algebras()) EXPECT_EQ(algebra_from_json(to_json(alg), "mem"), alg);
}

TEST(Json, BracketAndM3RoundTrip) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto alg = testkit::truncated_polynomial(2 + t % 2);
    const auto d = testkit::random_sparse_bracket(alg.dim(), 5, rng);
    EXPECT_EQ(bracket_from_json(to_json(alg, d), alg, "mem"), d);
    const auto m3 = m3_from_bracket(d);
    EXPECT_EQ(m3_from_json(to_json(m3), alg.dim(), "mem"), m3);
    const auto r = testkit::random_ternary(alg.dim(), 6, rng);
    EXPECT_EQ(m3_from_json(to_json(r), alg.dim(), "mem"), r);
  }
}

TEST(Json, SeedsRoundTrip) {
  const auto alg = fixtures::dual_numbers();
  for (const auto& s : fixtures::dual_numbers_seeds()) {
    const RepPoint p{s.n, s.mats};
    const auto back = seeds_from_json(to_json(alg, p), alg, "mem");
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(back[0], p);
  }
}

TEST(Json, RationalsAreStrings) {
  const auto j = to_json(fixtures::dual_numbers(), fixtures::dual_numbers_bracket());
  for (const auto& e : j["entries"]) EXPECT_TRUE(e.back().is_string());
  const auto bad = Json::parse(R"({"schema_version":1,"name":"q","dim":1,"basis":["1"],
    "structure_constants":[[0,0,0,1.5]]})");
  EXPECT_THROW(algebra_from_json(bad, "mem"), ParseError);
}

TEST(Json, SchemaErrors) {
  auto j = to_json(fixtures::dual_numbers());
  j.erase("schema_version");
  EXPECT_THROW(algebra_from_json(j, "mem"), ParseError);
  auto k = to_json(fixtures::dual_numbers());
  k["structure_constants"][0][0] = 7;
  EXPECT_THROW(algebra_from_json(k, "mem"), std::exception);
  auto b = to_json(fixtures::dual_numbers(), fixtures::dual_numbers_bracket());
  EXPECT_THROW(bracket_from_json(b, fixtures::field(), "mem"), std::exception);
}

TEST(Data, FilesMatchFixtures) {
  EXPECT_EQ(load_algebra(path("algebras/field.json")), fixtures::field());
  EXPECT_EQ(load_algebra(path("algebras/dual-numbers.json")), fixtures::dual_numbers());
  EXPECT_EQ(load_algebra(path("algebras/product-field.json")), fixtures::product_field());
  EXPECT_EQ(load_algebra(path("algebras/upper-triangular.json")), fixtures::upper_triangular());
  const auto dn = fixtures::dual_numbers();
  EXPECT_EQ(load_bracket(path("brackets/dual-numbers-xx.json"), dn), fixtures::dual_numbers_bracket());
  EXPECT_EQ(load_bracket(path("brackets/dual-numbers-zero.json"), dn), DoubleBracket::zero(2));
  EXPECT_EQ(load_m3(path("m3/dual-numbers-xx.json"), 2), m3_from_bracket(fixtures::dual_numbers_bracket()));
  const auto seeds = load_seeds(path("seeds/dual-numbers.json"), dn);
  const auto fx = fixtures::dual_numbers_seeds();
  ASSERT_EQ(seeds.size(), fx.size());
  for (std::size_t i = 0; i < fx.size(); ++i) EXPECT_EQ(seeds[i], (RepPoint{fx[i].n, fx[i].mats}));
}

TEST(Data, FileBytesAreCanonical) {
  for (const auto& entry : fs::recursive_directory_iterator(kData)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(canonical_dump(read_json_file(entry.path())), ss.str()) << entry.path();
  }
}

TEST(Cli, CheckAlgebraExitCodes) {
  EXPECT_EQ(run({"check-algebra", path("algebras/dual-numbers.json")}).code, 0);
  EXPECT_EQ(run({"check-algebra", path("algebras/upper-triangular.json")}).code, 0);
  const auto bad = run({"check-algebra", path("algebras/nonassociative.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  const auto p = scratch("malformed.json");
  write_text(p, "{ \"schema_version\": 1, \"dim\": ");
  EXPECT_EQ(run({"check-algebra", p.string()}).code, 2);
  EXPECT_EQ(run({"check-algebra", scratch("missing.json").string()}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"mc-terms", "--arity", "6"}).code, 2);
}

TEST(Cli, CheckBracket) {
  const auto alg = path("algebras/dual-numbers.json");
  EXPECT_EQ(run({"check-bracket", alg, path("brackets/dual-numbers-xx.json")}).code, 0);
  EXPECT_EQ(run({"check-bracket", alg, path("brackets/dual-numbers-zero.json")}).code, 0);
  EXPECT_EQ(run({"check-bracket", alg, path("brackets/dual-numbers-leibniz-broken.json")}).code, 1);
  EXPECT_EQ(run({"check-bracket", alg, path("brackets/dual-numbers-xx-doubled.json")}).code, 1);
  EXPECT_EQ(run({"check-bracket", path("algebras/field.json"), path("brackets/dual-numbers-xx.json")}).code, 2);
}

TEST(Cli, ConversionRoundTripIsByteIdentical) {
  const auto alg = path("algebras/dual-numbers.json");
  const auto m3_path = scratch("xx-m3.json");
  const auto br_path = scratch("xx-bracket.json");
  ASSERT_EQ(run({"to-precy", alg, path("brackets/dual-numbers-xx.json"), "-o", m3_path.string()}).code, 0);
  ASSERT_EQ(run({"from-precy", alg, m3_path.string(), "-o", br_path.string()}).code, 0);
  std::ifstream a(path("brackets/dual-numbers-xx.json")), b(br_path);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  const auto printed = run({"to-precy", alg, path("brackets/dual-numbers-xx.json")});
  std::ifstream m(path("m3/dual-numbers-xx.json"));
  std::stringstream sm;
  sm << m.rdbuf();
  EXPECT_EQ(printed.out, sm.str());
}

TEST(Cli, FromPrecyRejectsTypeA) {
  const auto r = run({"from-precy", path("algebras/dual-numbers.json"), path("m3/dual-numbers-type-a.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("A"), std::string::npos);
}

TEST(Cli, CheckPrecy) {
  const auto alg = path("algebras/dual-numbers.json");
  EXPECT_EQ(run({"check-precy", alg, path("m3/dual-numbers-xx.json")}).code, 0);
  EXPECT_EQ(run({"check-precy", alg, path("m3/dual-numbers-zero.json")}).code, 0);
  const auto r = run({"--format", "json", "check-precy", alg, path("m3/dual-numbers-leibniz-broken.json")});
  EXPECT_EQ(r.code, 1);
  const auto j = Json::parse(r.out);
  std::vector<bool> passes;
  for (const auto& c : j["checks"]) passes.push_back(c["pass"].get<bool>());
  EXPECT_EQ(passes, (std::vector<bool>{true, true, false, true}));
}

TEST(Cli, Correspondence) {
  const auto alg = path("algebras/dual-numbers.json");
  const auto ok = run({"correspondence", alg, path("brackets/dual-numbers-xx.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("both sides pass"), std::string::npos);
  const auto bad = run({"correspondence", alg, path("brackets/dual-numbers-leibniz-broken.json")});
  EXPECT_EQ(bad.code, 0);
  EXPECT_NE(bad.out.find("both sides fail consistently"), std::string::npos);
  const auto doubled = run({"correspondence", alg, path("brackets/dual-numbers-xx-doubled.json")});
  EXPECT_EQ(doubled.code, 0);
  EXPECT_EQ(run({"correspondence", path("algebras/nonassociative.json"), path("brackets/dual-numbers-xx.json")}).code,
            2);
}

TEST(Cli, Rep) {
  const auto r = run({"--format", "json", "--seed", "5", "rep", path("algebras/dual-numbers.json"),
                      path("brackets/dual-numbers-xx.json"), path("seeds/dual-numbers.json"), "--n", "2",
                      "--samples", "100"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["samples"], 100);
  EXPECT_EQ(j["checks"].size(), 4u);
  const auto bad = run({"rep", path("algebras/dual-numbers.json"), path("brackets/dual-numbers-xx.json"),
                        path("seeds/dual-numbers.json"), "--n", "0"});
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, McTerms) {
  const auto r5 = run({"--format", "json", "mc-terms", "--arity", "5"});
  EXPECT_EQ(r5.code, 0);
  EXPECT_EQ(Json::parse(r5.out)["equations"].size(), 32u);
  const auto r4 = run({"mc-terms", "--arity", "4"});
  EXPECT_EQ(r4.code, 0);
  EXPECT_EQ(std::count(r4.out.begin(), r4.out.end(), '\n'), 16);
}

TEST(Cli, JsonReportsAreDeterministic) {
  const std::vector<std::vector<std::string>> cmds{
      {"--format", "json", "check-precy", path("algebras/dual-numbers.json"), path("m3/dual-numbers-leibniz-broken.json")},
      {"--format", "json", "check-bracket", path("algebras/dual-numbers.json"),
       path("brackets/dual-numbers-xx-doubled.json")},
      {"--format", "json", "rep", path("algebras/dual-numbers.json"), path("brackets/dual-numbers-xx.json"),
       path("seeds/dual-numbers.json"), "--samples", "20"}};
  for (const auto& c : cmds) {
    const auto first = run(c).out;
    EXPECT_EQ(run(c).out, first);
    auto serial = c;
    serial.insert(serial.begin(), {"--jobs", "1"});
    auto parallel = c;
    parallel.insert(parallel.begin(), {"--jobs", "4"});
    EXPECT_EQ(run(serial).out, run(parallel).out);
  }
}
