#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "curlie/catalog.hpp"
#include "curlie/cli.hpp"
#include "curlie/current.hpp"
#include "curlie/errors.hpp"
#include "curlie/io.hpp"
#include "curlie/suites.hpp"

using namespace curlie;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("curlie_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path_ / name) << text; }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Json, LieRoundTripIsByteIdentical) {
  for (const auto& g : {catalog::abelian(1), catalog::abelian(4), catalog::solvable2(), catalog::heisenberg3(),
                        catalog::sl2()}) {
    const std::string text = to_json(g).dump(2);
    auto back = build_lie(parse_algebra(Json::parse(text)));
    EXPECT_EQ(to_json(back).dump(2), text) << g.name();
    EXPECT_TRUE(back.same_constants(g));
    EXPECT_EQ(back.marked_semisimple(), g.marked_semisimple());
  }
}

TEST(Json, AssocAndRepresentationRoundTrip) {
  for (const auto& s : {catalog::trivial_field(), catalog::dual_numbers(), catalog::split2(),
                        catalog::truncated_poly(4)}) {
    const std::string text = to_json(s).dump(2);
    EXPECT_EQ(to_json(build_assoc(parse_algebra(Json::parse(text)))).dump(2), text) << s.name();
  }
  auto g = catalog::sl2();
  for (const auto& rep : {catalog::trivial(g), catalog::adjoint(g), catalog::natural(g)}) {
    const std::string text = to_json(rep).dump(2);
    auto back = build_representation(parse_representation(Json::parse(text)), g);
    EXPECT_EQ(to_json(back).dump(2), text);
  }
}

TEST(Json, CurrentAlgebraRoundTrip) {
  auto gs = current_algebra(catalog::sl2(), catalog::truncated_poly(3));
  const std::string text = to_json(gs).dump(2);
  EXPECT_EQ(to_json(build_lie(parse_algebra(Json::parse(text)))).dump(2), text);
}

TEST(Json, ParseErrors) {
  EXPECT_THROW(parse_algebra(Json::parse(R"({"kind":"lie","name":"x"})")), ParseError);
  EXPECT_THROW(parse_algebra(Json::parse(R"({"kind":"ring","name":"x","dim":1,"basis":["a"],"constants":[]})")),
               ParseError);
  EXPECT_THROW(parse_algebra(Json::parse(
                   R"({"kind":"lie","name":"x","dim":2,"basis":["a","b"],"constants":[{"i":0,"j":1,"terms":[{"k":5,"coeff":"1"}]}]})")),
               ParseError);
  EXPECT_THROW(parse_algebra(Json::parse(
                   R"({"kind":"lie","name":"x","dim":2,"basis":["a","b"],"constants":[{"i":0,"j":1,"terms":[{"k":1,"coeff":"1/0"}]}]})")),
               ParseError);
}

TEST(Json, RepresentationForWrongAlgebraRejected) {
  auto raw = parse_representation(to_json(catalog::natural(catalog::sl2())));
  EXPECT_THROW(build_representation(raw, catalog::heisenberg3()), Error);
}

TEST(Digest, StableAndSensitive) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  auto a = digest(to_json(catalog::sl2()));
  EXPECT_EQ(a.size(), 16u);
  EXPECT_EQ(a, digest(to_json(catalog::sl2())));
  EXPECT_NE(a, digest(to_json(catalog::heisenberg3())));
}

TEST(Cli, ExportValidateAndCurrent) {
  TempDir dir;
  EXPECT_EQ(cli({"export", "--g", "sl2", "-o", dir.file("sl2.json")}).code, kPass);
  EXPECT_EQ(cli({"export", "--s", "dual2", "-o", dir.file("d2.json")}).code, kPass);
  EXPECT_EQ(cli({"export", "--g", "sl2", "--rep", "adjoint", "-o", dir.file("ad.json")}).code, kPass);
  auto r = cli({"validate", dir.file("sl2.json"), dir.file("d2.json"), dir.file("ad.json")});
  EXPECT_EQ(r.code, kPass) << r.err;

  EXPECT_EQ(cli({"current", "--g", dir.file("sl2.json"), "--s", dir.file("d2.json"), "-o", dir.file("cur.json")}).code,
            kPass);
  auto cur = read_json_file(dir.file("cur.json"));
  EXPECT_EQ(cur.at("dim"), 6);
  EXPECT_EQ(cli({"validate", dir.file("cur.json")}).code, kPass);

  // re-export of a parsed file is byte-identical
  EXPECT_EQ(cli({"export", "--g", dir.file("sl2.json"), "-o", dir.file("again.json")}).code, kPass);
  EXPECT_EQ(slurp(dir.file("again.json")), slurp(dir.file("sl2.json")));
}

TEST(Cli, ValidateReportsBrokenJacobi) {
  TempDir dir;
  dir.write("bad.json", R"({"kind":"lie","name":"bad","dim":3,"basis":["x","y","z"],"constants":[
    {"i":0,"j":1,"terms":[{"k":1,"coeff":"1"}]},
    {"i":1,"j":2,"terms":[{"k":0,"coeff":"1"}]}]})");
  auto r = cli({"validate", dir.file("bad.json")});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE((r.out + r.err).find("jacobi"), std::string::npos);
}

TEST(Cli, WarnsWhenUnitIsNotFirst) {
  TempDir dir;
  dir.write("s.json", R"({"kind":"assoc","name":"d2swap","dim":2,"basis":["e","1"],"unit_index":1,"constants":[
    {"i":1,"j":1,"terms":[{"k":1,"coeff":"1"}]},
    {"i":0,"j":1,"terms":[{"k":0,"coeff":"1"}]}]})");
  auto r = cli({"validate", dir.file("s.json")});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE((r.out + r.err).find("unit"), std::string::npos);
}

TEST(Cli, InputErrors) {
  TempDir dir;
  dir.write("junk.json", "{ not json");
  EXPECT_EQ(cli({"validate", dir.file("junk.json")}).code, kInputError);
  EXPECT_EQ(cli({"validate", dir.file("missing.json")}).code, kInputError);
  EXPECT_EQ(cli({"cohomology", "--g", "nosuch", "--rep", "trivial"}).code, kInputError);
  EXPECT_EQ(cli({"verify", "--g", "sl2", "--s", "dual2", "--rep", "adjoint", "--suite", "bogus"}).code, kInputError);
  EXPECT_NE(cli({"frobnicate"}).code, kPass);
}

TEST(Cli, CohomologyJson) {
  auto r = cli({"cohomology", "--g", "abelian1", "--rep", "trivial", "--s", "dual2", "--json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  auto j = Json::parse(r.out);
  const auto& rows = j.at("dimensions");
  ASSERT_EQ(rows.size(), 3u);
  const int current[] = {2, 4, 2};
  const int q[] = {0, 2, 2};
  const int base[] = {1, 1, 0};
  for (int p = 0; p < 3; ++p) {
    EXPECT_EQ(rows[p].at("dim_H_current"), current[p]);
    EXPECT_EQ(rows[p].at("dim_Q"), q[p]);
    EXPECT_EQ(rows[p].at("dim_H_base"), base[p]);
  }
}

TEST(Cli, VerifyExitCodes) {
  auto ok = cli({"verify", "--g", "abelian1", "--s", "dual2", "--rep", "trivial", "--suite", "ses"});
  EXPECT_EQ(ok.code, kPass) << ok.err;
  EXPECT_NE(ok.out.find("PASS"), std::string::npos);
  auto hyp = cli({"verify", "--g", "sl2", "--s", "dual2", "--rep", "trivial", "--suite", "semisimple"});
  EXPECT_EQ(hyp.code, kHypothesisFailed);
}

TEST(Verify, ReportIsDeterministic) {
  auto g = catalog::solvable2();
  auto s = catalog::dual_numbers();
  auto rep = catalog::natural(g);
  VerifyOptions opts;
  opts.suite = "all";
  opts.seed = 7;
  opts.trials = 3;
  auto a = run_verify(g, s, rep, opts);
  auto b = run_verify(g, s, rep, opts);
  EXPECT_EQ(a.status, kPass);
  EXPECT_EQ(a.report.dump(), b.report.dump());
  EXPECT_TRUE(a.report.at("passed").get<bool>());
  EXPECT_FALSE(a.report.contains("timing"));
}
