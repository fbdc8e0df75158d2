#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tset/cli.hpp"
#include "tset/harness.hpp"
#include "tset/serialize.hpp"

using namespace tset;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tset");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(TSET_TEST_TMPDIR) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

std::string fixture(const std::string& id) {
  return write_file("cli_e" + id + ".json", to_json(builtin_example(id)));
}

std::string ch3_file() {
  return write_file("cli_ch3.json",
                    R"({ "elements": ["a","b","c"], "relation": [["a","a"],["a","b"],["a","c"],["b","b"],["b","c"],["c","c"]] })");
}

}  // namespace

TEST(CliClassify, E32) {
  const auto r = run({"classify", fixture("3.2")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("interpolative: true"), std::string::npos);
  EXPECT_NE(r.out.find("abstract_base: false"), std::string::npos);
}

TEST(CliClassify, BrokenInputCitesTriple) {
  const auto path = write_file("broken.json",
                               R"({"elements":["a","b","c"],"relation":[["a","b"],["b","c"]]})");
  const auto r = run({"classify", path});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("(a,b,c)"), std::string::npos);
  const auto closed = run({"classify", path, "--close", "--json"});
  EXPECT_EQ(closed.code, 0);
  EXPECT_EQ(nlohmann::json::parse(closed.out)["reflexive"], false);
}

TEST(CliClassify, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"classify", "/nonexistent/file.json"}).code, 3);
}

TEST(CliCompute, Operators) {
  const auto e32 = fixture("3.2");
  EXPECT_EQ(run({"compute", e32, "--op", "ub", "--subset", "a,b"}).out, "x\n");
  EXPECT_EQ(run({"compute", e32, "--op", "sup", "--subset", "a,b"}).out, "\xE2\x88\x85\n");
  EXPECT_EQ(run({"compute", ch3_file(), "--op", "inf", "--subset", "a,c"}).out, "a\n");
  EXPECT_EQ(run({"compute", e32, "--op", "ub", "--subset", ""}).out, "a,b,x\n");
  EXPECT_EQ(run({"compute", e32, "--op", "ub", "--subset", "\xE2\x88\x85"}).out, "a,b,x\n");
  EXPECT_EQ(run({"compute", e32, "--op", "down", "--subset", "x"}).out, "a,b\n");
}

TEST(CliCompute, Errors) {
  const auto e32 = fixture("3.2");
  EXPECT_EQ(run({"compute", e32, "--op", "ub", "--subset", "q"}).code, 3);
  EXPECT_EQ(run({"compute", e32, "--op", "meet", "--subset", "a"}).code, 2);
  const auto json = run({"compute", e32, "--op", "up", "--subset", "a", "--json"});
  EXPECT_EQ(nlohmann::json::parse(json.out)["result"], nlohmann::json::array({"a", "x"}));
}

TEST(CliCheck, Predicates) {
  const auto e51 = fixture("5.1");
  auto r = run({"check", e51, "--pred", "bounded-complete"});
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(r.code, 1);
  r = run({"check", e51, "--pred", "finitarily-complete"});
  EXPECT_EQ(r.out, "true\n");
  EXPECT_EQ(r.code, 0);
  r = run({"check", fixture("3.2"), "--pred", "strongly-compact", "--subset", "x", "--topology",
           "alexandroff"});
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(r.code, 1);
}

TEST(CliCheck, RequiredFlags) {
  const auto e32 = fixture("3.2");
  EXPECT_EQ(run({"check", e32, "--pred", "finitary"}).code, 2);
  EXPECT_EQ(run({"check", e32, "--pred", "compact", "--subset", "a"}).code, 2);
  EXPECT_EQ(run({"check", e32, "--pred", "domain", "--subset", "a"}).code, 2);
  EXPECT_EQ(run({"check", e32, "--pred", "domain", "--topology", "alexandroff"}).code, 2);
  EXPECT_EQ(run({"check", e32, "--pred", "bogus"}).code, 2);
  EXPECT_EQ(run({"check", e32, "--pred", "finitary", "--subset", "nope"}).code, 3);
}

TEST(CliCheck, TopologyFile) {
  const auto e32 = fixture("3.2");
  const auto good = write_file("tau_good.json", R"({"opens": [[], ["x"], ["a","x"], ["b","x"], ["a","b","x"]]})");
  auto r = run({"check", e32, "--pred", "strongly-compact", "--subset", "a", "--topology-file", good, "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["value"], true);
  const auto bad = write_file("tau_bad.json", R"({"opens": [[], ["a"], ["b"], ["a","b","x"]]})");
  r = run({"check", e32, "--pred", "compactly-complete", "--topology-file", bad});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("NotClosedUnderUnion"), std::string::npos);
  const auto extra = write_file("tau_extra.json", R"({"opens": [], "x": 1})");
  EXPECT_EQ(run({"check", e32, "--pred", "compactly-complete", "--topology-file", extra}).code, 3);
  EXPECT_EQ(run({"check", e32, "--pred", "compact", "--subset", "a", "--topology", "alexandroff",
                 "--topology-file", good}).code,
            2);
}

TEST(CliTopology, ListsOpensSortedByBits) {
  const auto r = run({"topology", fixture("3.2"), "--topology", "alexandroff"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\xE2\x88\x85\nx\na,x\nb,x\na,b,x\n");
  const auto json = run({"topology", ch3_file(), "--topology", "scott-star", "--json"});
  EXPECT_EQ(nlohmann::json::parse(json.out)["opens"].size(), 4u);
  EXPECT_EQ(run({"topology", ch3_file()}).code, 2);
}

TEST(CliSweep, CleanSweepExitsZero) {
  const auto r = run({"sweep", "--theorem", "T3.1", "--n", "3", "--jobs", "2"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["checked"], 171);
  EXPECT_TRUE(doc["violations"].empty());
}

TEST(CliSweep, FalseClaimExitsOneAndWitnessReloads) {
  const auto report = write_file("false_bc.json", "");
  const auto r = run({"sweep", "--theorem", "FALSE_CLAIM_ALL_BC", "--n", "2", "--report", report});
  EXPECT_EQ(r.code, 1);
  std::ifstream in(report);
  const auto doc = nlohmann::json::parse(in);
  const auto witness = write_file("false_bc_witness.json", doc["violations"][0]["tset"].dump());
  EXPECT_EQ(run({"check", witness, "--pred", "bounded-complete"}).code, 1);
}

TEST(CliSweep, ScottStarFlagPropagates) {
  const auto r = run({"sweep", "--theorem", "T6.3", "--n", "3", "--topology", "scott-star"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NE(std::find(doc["decision_flags"].begin(), doc["decision_flags"].end(),
                      "scott_star_construction"),
            doc["decision_flags"].end());
}

TEST(CliSweep, UsageErrors) {
  EXPECT_EQ(run({"sweep", "--theorem", "T9.9", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"sweep", "--theorem", "T3.1", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"sweep", "--theorem", "T3.1", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"sweep", "--theorem", "T3.1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--theorem", "T3.1", "--n", "2", "--topology", "alexandroff"}).code, 2);
  const auto list = run({"sweep", "--list", "--json"});
  EXPECT_EQ(list.code, 0);
  EXPECT_EQ(nlohmann::json::parse(list.out).size(), theorem_registry().size());
}

TEST(CliExample, EmitsCanonicalFixtures) {
  auto r = run({"example", "--id", "3.2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, to_json(builtin_example("3.2")) + "\n");
  r = run({"example", "--id", "5.2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("infinite carrier unsupported"), std::string::npos);
  EXPECT_EQ(run({"example", "--id", "7.7"}).code, 2);
}

TEST(CliExample, OutputParsesUnderEverySubcommand) {
  for (const char* id : {"3.2", "3.3", "5.1"}) {
    const auto path = write_file(std::string("rt_") + id + ".json", run({"example", "--id", id}).out);
    EXPECT_EQ(run({"classify", path}).code, 0);
    EXPECT_EQ(run({"compute", path, "--op", "ub", "--subset", "a"}).code, 0);
    EXPECT_LE(run({"check", path, "--pred", "domain"}).code, 1);
    EXPECT_EQ(run({"topology", path, "--topology", "scott-star"}).code, 0);
  }
}
