#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nilext.hpp"
#include "nilext/cli.hpp"

using namespace nilext;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, InfoOfExtension) {
  auto r = run({"info", "N4_17"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "non-cd")) << r.out;
  EXPECT_TRUE(contains(r.out, "Ann = <e4>")) << r.out;
}

TEST(Cli, ExtendPrintsTable) {
  auto r = run({"extend", "CD3_01", "--cocycle", "D(1,3)"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "e1e1 = e2, e1e3 = e4, e2e2 = e3")) << r.out;
}

TEST(Cli, ExtendWithNamedCocycle) {
  auto r = run({"extend", "CD3_01", "--cocycle", "N(3)"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "e1e1 = e2, e1e3 = e4, e2e2 = e3")) << r.out;
}

TEST(Cli, CohomologyDimensions) {
  auto r = run({"cohomology", "CD3_01", "--format", "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  bool saw_h2 = false;
  for (const auto& rec : j["records"])
    if (rec["check_id"] == "h2_dim") {
      saw_h2 = true;
      EXPECT_TRUE(contains(rec["detail"].get<std::string>(), "7")) << rec.dump();
    }
  EXPECT_TRUE(saw_h2);
}

TEST(Cli, ClassifyLine) {
  auto r = run({"classify-line", "CD3_01", "--cocycle", "D(3,3)"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "U1")) << r.out;
}

TEST(Cli, ClassifyCoboundaryIsInputError) {
  auto r = run({"classify-line", "CD3_01", "--cocycle", "D(1,1)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, IsoWitness) {
  auto r = run({"iso", "N4_31", "N4_31", "--params", "alpha=1", "--params2", "alpha=-1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "Witness")) << r.out;
}

TEST(Cli, IsoDistinct) {
  auto r = run({"iso", "N4_17", "N4_18"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "DistinctByInvariant")) << r.out;
}

TEST(Cli, OrbitsOverF2) {
  auto r = run({"orbits", "CD3_01"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "127")) << r.out;
}

TEST(Cli, CyclotomicParameters) {
  auto r = run({"info", "N4_05", "--params", "alpha=omega,beta=z^4-1", "--field", "QZ12"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, UnknownIdIsUsageError) {
  auto r = run({"info", "N4_99"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "N4_99")) << r.err;
}

TEST(Cli, BadFlagIsUsageError) { EXPECT_EQ(run({"info", "N4_17", "--frobnicate"}).code, 2); }

TEST(Cli, MissingSubcommandIsUsageError) { EXPECT_EQ(run({}).code, 2); }

TEST(Cli, MissingCocycleIsUsageError) { EXPECT_EQ(run({"extend", "CD3_01"}).code, 2); }

TEST(Cli, BadFieldIsUsageError) { EXPECT_EQ(run({"info", "N4_17", "--field", "R"}).code, 2); }

TEST(Cli, BadParamsIsUsageError) {
  EXPECT_EQ(run({"info", "N4_31", "--params", "alpha="}).code, 2);
  EXPECT_EQ(run({"info", "N4_31", "--params", "mu=1"}).code, 2);
}

TEST(Cli, ExcludedParameterIsUsageError) {
  EXPECT_EQ(run({"info", "N4_52", "--params", "lambda=0,alpha=1,beta=1,gamma=1"}).code, 2);
}

TEST(Cli, StubIsInfoOnly) {
  auto r = run({"info", "D4_01"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, HelpExitsCleanly) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "verify-catalog")) << r.out;
}

TEST(Cli, SearchBoundExitCode) {
  auto r = run({"orbits", "CD3_01", "--max-search", "3"});
  EXPECT_EQ(r.code, 3) << r.out << r.err;
}

TEST(Cli, CorruptedCatalogFailsVerification) {
  json doc = json::parse(embedded_catalog_json());
  for (auto& e : doc["entries"])
    if (e["id"] == "N4_17") e["products"][2][2] = "2";
  auto path = write_temp("nilext_corrupted_catalog.json", doc.dump());
  auto r = run({"verify-catalog", "--scope", "reconstruction", "--catalog", path});
  EXPECT_EQ(r.code, 1) << r.err;
  EXPECT_TRUE(contains(r.out, "N4_17")) << r.out;
}

TEST(Cli, UnreadableCatalogIsUsageError) {
  auto path = write_temp("nilext_broken_catalog.json", "{not json");
  EXPECT_EQ(run({"verify-catalog", "--scope", "cohomology", "--catalog", path}).code, 2);
}

TEST(Cli, StructuredOutputIsValidAndStable) {
  std::vector<std::vector<std::string>> commands{
      {"info", "N4_17"},
      {"info", "D4_01"},
      {"cohomology", "CD3_04", "--params", "lambda=2"},
      {"extend", "CD3_01", "--cocycle", "D(1,3)"},
      {"classify-line", "CD3_03", "--cocycle", "D(1,3)-2*D(3,1)"},
      {"iso", "N4_17", "N4_18"},
      {"orbits", "CD3_02"},
      {"verify-catalog", "--scope", "transforms"},
  };
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("structured");
    auto first = run(args);
    ASSERT_EQ(first.code, 0) << args[0] << ": " << first.err;
    EXPECT_TRUE(valid_report_json(json::parse(first.out))) << args[0];
    EXPECT_EQ(first.out, run(args).out) << args[0];
  }
}

TEST(Cli, VerifyAllScopes) {
  auto r = run({"verify-catalog", "--scope", "all", "--format", "structured"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_TRUE(valid_report_json(j));
  EXPECT_EQ(j["summary"]["fail"], 0);
}
