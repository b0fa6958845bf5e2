#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
};

Outcome fdist_run(const std::string& args) {
  std::string cmd = std::string(FDIST_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string ref() { return std::string(FDIST_DATA_DIR) + "/reference_sets.json"; }

nlohmann::json json_of(const std::string& args) {
  Outcome r = fdist_run(args);
  EXPECT_EQ(r.status, 0) << r.out;
  return nlohmann::json::parse(r.out);
}

std::string csv_value(const std::string& csv, const std::string& x) {
  auto pos = csv.find("\n" + x + ",");
  if (pos == std::string::npos) return "";
  auto start = pos + x.size() + 2;
  return csv.substr(start, csv.find('\n', start) - start);
}

}  // namespace

TEST(Cli, MassOfDiscreteSet) {
  auto j = json_of("mass " + ref() + " evidence");
  auto focals = j["sets"]["evidence"]["focals"];
  ASSERT_EQ(focals.size(), 4u);
  EXPECT_EQ(focals[0]["labels"], nlohmann::json::array({"a"}));
  EXPECT_EQ(focals[3]["labels"], nlohmann::json::array());
  EXPECT_EQ(focals[3]["mass"], 0.1);
}

TEST(Cli, MassOfShape) {
  auto j = json_of("mass " + ref() + " AD");
  EXPECT_EQ(j["sets"]["AD"]["focals"].size(), 4u);
  EXPECT_EQ(j["sets"]["AD"]["focals"][1]["intervals"], nlohmann::json::parse("[[1.5,4.5]]"));
}

TEST(Cli, ProductDistance) {
  auto j = json_of("distance " + ref() + " A B --strategy product");
  EXPECT_EQ(j["strategy"], "product");
  EXPECT_EQ(j["sets"]["D(A,B)"]["focals"],
            nlohmann::json::parse(R"([{"intervals":[[1,9]],"mass":0.25},{"intervals":[[2,8]],"mass":0.5},
                                      {"intervals":[[3,7]],"mass":0.25}])"));
}

TEST(Cli, DirectionalDiagonalNegated) {
  auto j = json_of("distance " + ref() + " B2 A2 --directional --strategy diagonal");
  EXPECT_EQ(j["sets"]["D(B2,A2)"]["focals"],
            nlohmann::json::parse(R"([{"intervals":[[-8,-2]],"mass":0.5},{"intervals":[[-6,-4]],"mass":0.5}])"));
}

TEST(Cli, MultimodalDistance) {
  auto j = json_of("distance " + ref() + " AEN B2 --directional --strategy diagonal");
  EXPECT_EQ(j["sets"]["D(AEN,B2)"]["focals"],
            nlohmann::json::parse(R"([{"intervals":[[1,8]],"mass":0.5},{"intervals":[[2,4],[5,7]],"mass":0.25},
                                      {"intervals":[[5,7]],"mass":0.25}])"));
}

TEST(Cli, DefaultStrategyFollowsNormality) {
  EXPECT_EQ(json_of("distance " + ref() + " A B")["strategy"], "diagonal");
  auto j = json_of("distance " + ref() + " AN B2");
  EXPECT_EQ(j["strategy"], "product");
  EXPECT_EQ(j["height"], 0.5);
}

TEST(Cli, PlotStep) {
  Outcome r = fdist_run("distance " + ref() + " A2 B2 --directional --strategy diagonal --plot-step 1");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(csv_value(r.out, "2"), "0.5");
  EXPECT_EQ(csv_value(r.out, "5"), "1");
  EXPECT_EQ(csv_value(r.out, "8"), "0.5");

  r = fdist_run("distance " + ref() + " AEN B2 --directional --strategy diagonal --plot-step 0.5");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(csv_value(r.out, "3"), "0.75");
  EXPECT_EQ(csv_value(r.out, "6"), "1");
}

TEST(Cli, PlotCommand) {
  Outcome r = fdist_run("plot " + ref() + " crisp --step 0.5");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out, "x,mu\n0,1\n0.5,1\n1,1\n1.5,1\n2,1\n");
}

TEST(Cli, Unify) {
  auto j = json_of("unify " + ref() + " claim evidence");
  EXPECT_EQ(j["product"], nlohmann::json::parse(R"({"{t}":0.67,"{f}":0,"{f,t}":0.23,"{}":0.1})"));
  EXPECT_EQ(j["maximal"], nlohmann::json::parse(R"({"{t}":0.5,"{f}":0,"{f,t}":0.4,"{}":0.1})"));
  auto self = json_of("unify " + ref() + " claim claim --routing maximal");
  EXPECT_FALSE(self.contains("product"));
}

TEST(Cli, UnifyRejectsNumericSets) {
  Outcome r = fdist_run("unify " + ref() + " A B");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("not discrete"), std::string::npos) << r.out;
}

TEST(Cli, Defuzz) {
  auto a = json_of("defuzz " + ref() + " A2");
  EXPECT_EQ(a["max_likelihood"], nlohmann::json::parse("[[2,3]]"));
  EXPECT_EQ(a["centre_of_gravity"], 2.5);
  auto b = json_of("defuzz " + ref() + " B2");
  EXPECT_EQ(b["max_likelihood"], nlohmann::json::parse("[[7,8]]"));
  EXPECT_EQ(b["centre_of_gravity"], 7.5);
  EXPECT_EQ(json_of("defuzz " + ref() + " crisp")["centre_of_gravity"], 1);
}

TEST(Cli, RestrictCheck) {
  auto j = json_of("restrict-check " + ref() + " D_product --basis D_diagonal,D_antidiagonal");
  EXPECT_EQ(j["linear_combination"], nlohmann::json::parse(R"({"D_diagonal":0.5,"D_antidiagonal":0.5})"));
  for (const auto& verdict : j["reachable_type1"])
    if (verdict["from"] == "D_diagonal" || verdict["to"] == "D_diagonal") EXPECT_FALSE(verdict["reachable"].get<bool>());

  auto none = json_of("restrict-check " + ref() + " DD_product --basis DD_diagonal,DD_antidiagonal");
  EXPECT_TRUE(none["linear_combination"].is_null());

  auto self = json_of("restrict-check " + ref() + " A --basis A");
  EXPECT_EQ(self["linear_combination"]["A"], 1);
}

TEST(Cli, ErrorsExitNonZero) {
  EXPECT_EQ(fdist_run("distance " + ref() + " A nope").status, 1);
  EXPECT_NE(fdist_run("distance " + ref() + " A B --strategy sideways").status, 0);
  EXPECT_EQ(fdist_run("mass /nonexistent.json A").status, 1);
  EXPECT_NE(fdist_run("").status, 0);
}

TEST(Cli, OutputIsDeterministicAndReparses) {
  Outcome first = fdist_run("distance " + ref() + " AD BD --strategy product");
  Outcome second = fdist_run("distance " + ref() + " AD BD --strategy product");
  ASSERT_EQ(first.status, 0);
  EXPECT_EQ(first.out, second.out);
  auto j = nlohmann::json::parse(first.out);
  std::string tmp = ::testing::TempDir() + "/fdist_roundtrip.json";
  FILE* f = std::fopen(tmp.c_str(), "w");
  ASSERT_NE(f, nullptr);
  nlohmann::json wrapped;
  wrapped["sets"] = j["sets"];
  std::string doc = wrapped.dump();
  std::fputs(doc.c_str(), f);
  std::fclose(f);
  auto again = json_of("mass " + tmp + " \"D(AD,BD)\"");
  EXPECT_EQ(again["sets"]["D(AD,BD)"], j["sets"]["D(AD,BD)"]);
}
