#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "hesslie/cli.hpp"
#include "hesslie/document.hpp"

using namespace hesslie;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hesslie_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string export_entry(const std::string& name) {
    const auto file = path(name + ".json");
    const auto r = run({"catalog", "show", name, "--format", "json", "-o", file});
    EXPECT_EQ(r.code, 0) << r.err;
    return file;
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, LambdaAcceptsNegativeValue) {
  const auto r = run({"lambda", "--c", "-3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rational_roots: -1, 1/3"), std::string::npos) << r.out;
  EXPECT_EQ(run({"lambda", "--c", "-1/2"}).code, 0);
  EXPECT_EQ(run({"lambda", "--c=-3"}).out, r.out);
}

TEST_F(CliTest, LambdaExitCodes) {
  EXPECT_EQ(run({"lambda", "--c", "2"}).code, 1);
  EXPECT_EQ(run({"lambda", "--c", "0"}).code, 2);
  EXPECT_EQ(run({"lambda", "--c", "1/0"}).code, 2);
  EXPECT_EQ(run({"lambda"}).code, 2);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"verify"}, {"verify", path("missing.json")}, {"construct", "twist", path("x.json")},
           {"catalog", "show", "sl2"}, {"catalog", "show", "clan-triangular", "--param", "c"},
           {"catalog", "show", "clan-triangular", "--param", "c=-1"}, {"catalog", "list", "--format", "xml"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << testing::PrintToString(args);
    EXPECT_FALSE(r.err.empty());
  }
}

TEST_F(CliTest, Su2PipelineIsNotKahler) {
  const auto su2 = export_entry("su2");
  const auto lck = path("su2_lck.json");
  EXPECT_EQ(run({"construct", "lck", su2, "--c", "1", "--t", "1", "-o", lck}).code, 0);
  const auto r = run({"verify", lck, "--as", "kahler", "--format", "json"});
  EXPECT_EQ(r.code, 1);

  // Feed the printed witness back through the library.
  const auto report = nlohmann::json::parse(r.out);
  const auto doc = parse_document(slurp(lck));
  const KForm d = ce_d(doc.algebra, doc.forms.at("omega"));
  bool found = false;
  for (const auto& w : report["witnesses"]) {
    if (w["claim"] != "d_omega") continue;
    found = true;
    const auto idx = w["indices"].get<std::vector<Index>>();
    EXPECT_EQ(w["labels"].get<std::vector<std::string>>(), (std::vector<std::string>{"u1", "rho1", "u2"}));
    const Rational value = d(idx[0], idx[1], idx[2]);
    EXPECT_FALSE(value.is_zero());
    EXPECT_EQ(value.str(), w["residual"][0].get<std::string>());
  }
  EXPECT_TRUE(found);
  // The catalog divergence note travels with the document into the report.
  bool note = false;
  for (const auto& n : report["notes"]) note = note || n.get<std::string>().find("omega_{1,1} Kaehler") == 0;
  EXPECT_TRUE(note);
}

TEST_F(CliTest, ClanPipelineIsKahler) {
  const auto clan = export_entry("clan-triangular");
  const auto lck = path("clan_lck.json");
  EXPECT_EQ(run({"construct", "lck", clan, "--c", "-1", "--t", "1", "-o", lck}).code, 0);
  EXPECT_EQ(run({"verify", lck, "--as", "kahler"}).code, 0);
  EXPECT_EQ(run({"verify", lck, "--as", "lck"}).code, 0);
}

TEST_F(CliTest, ConstructWithoutOutputWritesDocumentToStdout) {
  const auto clan = export_entry("clan-triangular");
  const auto r = run({"construct", "cone", clan});
  EXPECT_EQ(r.code, 0);
  const auto doc = parse_document(r.out);
  EXPECT_EQ(doc.dim(), 3);
  EXPECT_EQ(doc.radiant, std::optional<Index>(2));
  EXPECT_NE(r.err.find("is_flat: true"), std::string::npos);
}

TEST_F(CliTest, VerifyVerdictsAndFailures) {
  const auto clan = export_entry("clan-triangular");
  EXPECT_EQ(run({"verify", clan}).code, 0);
  EXPECT_EQ(run({"verify", clan, "--as", "statistical"}).code, 0);
  const auto hess = run({"verify", clan, "--as", "hessian"});
  EXPECT_EQ(hess.code, 1);
  EXPECT_NE(hess.out.find("witness curvature"), std::string::npos);
  EXPECT_EQ(run({"verify", clan, "--as", "kahler"}).code, 2);  // no complex structure

  const auto nonflat = export_entry("nonflat-fixture");
  const auto dbl = run({"construct", "double", nonflat});
  EXPECT_EQ(dbl.code, 1);
  EXPECT_NE(dbl.err.find("witness jacobi (u1, v1, u2): residual [0, 0, 0, -4]"), std::string::npos) << dbl.err;

  const auto torsionful = export_entry("flat-torsionful-fixture");
  EXPECT_EQ(run({"construct", "cone", torsionful, "--c", "1"}).code, 1);  // NotStatistical
  EXPECT_EQ(run({"construct", "kahler", torsionful}).code, 1);            // NotHessian
  EXPECT_EQ(run({"construct", "cone", clan, "--c", "0"}).code, 2);       // ZeroCurvature is an input error
  EXPECT_EQ(run({"construct", "cone", clan, "--c", "2"}).code, 1);       // CurvatureMismatch
  EXPECT_EQ(run({"construct", "lck", clan, "--t", "-1"}).code, 2);       // NonPositiveT

  const auto abelian = export_entry("abelian-n");
  const auto kahler = path("abelian_kahler.json");
  EXPECT_EQ(run({"construct", "kahler", abelian, "-o", kahler}).code, 0);
  EXPECT_EQ(run({"verify", kahler, "--as", "kahler"}).code, 0);
}

TEST_F(CliTest, SyntaxErrorInInputExitsTwo) {
  const auto file = path("broken.json");
  std::ofstream(file) << "{\n  \"format_version\": 1,\n  oops\n}\n";
  const auto r = run({"verify", file});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SyntaxError: line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, CatalogShowJsonIsAParseableDocument) {
  for (const auto& info : list_examples()) {
    const auto r = run({"catalog", "show", info.name, "--format", "json"});
    EXPECT_EQ(r.code, 0) << info.name;
    EXPECT_NO_THROW(parse_document(r.out)) << info.name;
  }
  EXPECT_EQ(run({"catalog", "list"}).code, 0);
  EXPECT_EQ(run({"catalog", "list", "--format", "json"}).code, 0);
  EXPECT_EQ(run({"catalog", "show", "clan-triangular", "--param", "c=2"}).code, 0);
}

TEST_F(CliTest, ReportsAreByteIdenticalAcrossRuns) {
  const auto su2 = export_entry("su2");
  const auto lck = path("lck.json");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"lambda", "--c", "-3"},
           {"catalog", "show", "su2"},
           {"catalog", "show", "clan-triangular", "--format", "json"},
           {"construct", "lck", su2, "--c", "1", "--t", "1"},
           {"verify", su2, "--as", "statistical", "--format", "json"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
}
