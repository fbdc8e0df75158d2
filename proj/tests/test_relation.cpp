#include <gtest/gtest.h>

#include <functional>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tset/error.hpp"
#include "tset/harness.hpp"
#include "tset/relation.hpp"
#include "tset/serialize.hpp"

using namespace tset;
using namespace tset::fixtures;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no tset::Error thrown";
  return Errc::malformed_document;
}

}  // namespace

TEST(Build, AcceptsPaperFixtureE32) {
  const FiniteTSet t = e32();
  EXPECT_EQ(t.size(), 3u);
  EXPECT_TRUE(t.related(0, 0));
  EXPECT_TRUE(t.related(0, 2));
  EXPECT_FALSE(t.related(2, 2));
  EXPECT_EQ(t.pairs().size(), 4u);
}

TEST(Build, EmptyRelationIsVacuouslyTransitive) {
  EXPECT_TRUE(empty2().pairs().empty());
}

TEST(Build, RejectsMissingCompositeWithWitnessTriple) {
  try {
    build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    FAIL() << "expected NotTransitive";
  } catch (const NotTransitiveError& e) {
    EXPECT_EQ(e.code(), Errc::not_transitive);
    EXPECT_EQ(e.triple(), (std::array<std::size_t, 3>{0, 1, 2}));
    EXPECT_NE(std::string(e.what()).find("(a,b,c)"), std::string::npos);
  }
}

TEST(Build, ErrorCases) {
  EXPECT_EQ(code_of([] { build({}, {}); }), Errc::empty_carrier);
  EXPECT_EQ(code_of([] { build({"a", "a"}, {}); }), Errc::duplicate_label);
  EXPECT_EQ(code_of([] { build({"a"}, {{"a", "z"}}); }), Errc::unknown_label);
  EXPECT_EQ(code_of([] { build({"a", ""}, {}); }), Errc::malformed_document);
  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("v" + std::to_string(i));
  EXPECT_EQ(code_of([&] { build(many, {}); }), Errc::carrier_too_large);
}

TEST(TransitiveClosure, AddsOneComposite) {
  const FiniteTSet t = transitive_closure({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(t.pairs(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(TransitiveClosure, LeavesClosedRelationsUnchanged) {
  const FiniteTSet t51 = e51();
  EXPECT_EQ(transitive_closure(t51.labels(),
                               {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}}),
            t51);
  EXPECT_EQ(transitive_closure({"a", "b", "x"},
                               {{"a", "a"}, {"b", "b"}, {"a", "x"}, {"b", "x"}}),
            e32());
}

TEST(TransitiveClosure, IdempotentOnAllPairSetsUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto labels = default_labels(n);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      std::vector<LabelPair> pairs;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if ((code >> (i * n + j)) & 1U) pairs.emplace_back(labels[i], labels[j]);
        }
      }
      const FiniteTSet once = transitive_closure(labels, pairs);
      std::vector<LabelPair> again;
      for (auto [i, j] : once.pairs()) again.emplace_back(labels[i], labels[j]);
      EXPECT_EQ(transitive_closure(labels, again), once);
      // The closure contains the input and build() accepts it unchanged.
      for (const auto& [a, b] : pairs) {
        EXPECT_TRUE(once.related(*once.index_of(a), *once.index_of(b)));
      }
      EXPECT_EQ(build(labels, again), once);
    }
  }
}

TEST(Classify, E32IsInterpolativeButNotAbstractBase) {
  const auto r = classify(e32());
  EXPECT_TRUE(r.interpolative);
  EXPECT_TRUE(r.continuous_information_system);
  EXPECT_FALSE(r.abstract_base);
  EXPECT_FALSE(r.reflexive);
}

TEST(Classify, E33IsAbstractBaseButNotPreorder) {
  const auto r = classify(e33());
  EXPECT_TRUE(r.abstract_base);
  EXPECT_FALSE(r.reflexive);
  EXPECT_FALSE(r.preorder);
}

TEST(Classify, E51IsPosetPreorderAbstractBase) {
  const auto r = classify(e51());
  EXPECT_TRUE(r.poset);
  EXPECT_TRUE(r.preorder);
  EXPECT_TRUE(r.abstract_base);
  EXPECT_TRUE(r.equivalence);  // the identity is also symmetric
}

TEST(Classify, ChainIsPosetButNotEquivalence) {
  const auto r = classify(ch3());
  EXPECT_TRUE(r.poset);
  EXPECT_FALSE(r.symmetric);
  EXPECT_FALSE(r.equivalence);
}

TEST(Classify, ImplicationChainOnEveryTSetUpToFour) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const FiniteTSet& t : enumerate_tsets(n)) {
      const auto r = classify(t);
      EXPECT_TRUE(!r.equivalence || r.preorder);
      EXPECT_TRUE(!r.poset || r.preorder);
      EXPECT_TRUE(!r.preorder || r.abstract_base);
      EXPECT_TRUE(!r.abstract_base || r.continuous_information_system);
      EXPECT_EQ(r.poset, r.reflexive && r.antisymmetric);
      EXPECT_EQ(r.equivalence, r.reflexive && r.symmetric);
    }
  }
}

TEST(Classify, PredecessorSetAbstractBaseMatchesAllSubsetsOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const FiniteTSet& t : enumerate_tsets(n)) {
      EXPECT_EQ(is_abstract_base(t), oracle::abstract_base_all_subsets(t)) << to_json(t);
    }
  }
}

TEST(Serialize, CanonicalFormatIsBitExact) {
  EXPECT_EQ(to_json(e32()),
            R"({ "elements": ["a","b","x"], "relation": [["a","a"],["a","x"],["b","b"],["b","x"]] })");
}

TEST(Serialize, PairsSortedByIndexNotLabel) {
  const FiniteTSet t = build({"z", "a"}, {{"a", "z"}, {"z", "z"}});
  EXPECT_EQ(to_json(t), R"({ "elements": ["z","a"], "relation": [["z","z"],["a","z"]] })");
}

TEST(Serialize, RoundTripsEveryTSetUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const FiniteTSet& t : enumerate_tsets(n)) EXPECT_EQ(parse_tset(to_json(t)), t);
  }
}

TEST(Serialize, ParsesDocumentFromSpecFormat) {
  const FiniteTSet t = parse_tset(
      R"({ "elements": ["a","b","x"], "relation": [["a","a"],["b","b"],["a","x"],["b","x"]] })");
  EXPECT_EQ(t, e32());
}

TEST(Serialize, RejectsBadDocuments) {
  EXPECT_EQ(code_of([] { parse_tset(R"({"elements":["a"],"relation":[],"extra":1})"); }),
            Errc::malformed_document);
  EXPECT_EQ(code_of([] { parse_tset(R"({"elements":["a","a"],"relation":[]})"); }),
            Errc::duplicate_label);
  EXPECT_EQ(code_of([] { parse_tset(R"({"elements":["a"],"relation":[["a"]]})"); }),
            Errc::malformed_document);
  EXPECT_EQ(code_of([] { parse_tset(R"({"elements":[],"relation":[]})"); }),
            Errc::empty_carrier);
  EXPECT_EQ(code_of([] { parse_tset("not json"); }), Errc::malformed_document);
  EXPECT_EQ(code_of([] { parse_tset(R"({"elements":["a"]})"); }), Errc::malformed_document);
  const char* broken = R"({"elements":["a","b","c"],"relation":[["a","b"],["b","c"]]})";
  EXPECT_EQ(code_of([&] { parse_tset(broken); }), Errc::not_transitive);
  EXPECT_EQ(parse_tset(broken, true).pairs().size(), 3u);
}

TEST(MatrixCode, RoundTripsAndReversedIsTransitive) {
  for (const FiniteTSet& t : enumerate_tsets(3)) {
    EXPECT_EQ(FiniteTSet::from_matrix_code(3, t.matrix_code()), t);
    const FiniteTSet r = t.reversed();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(r.related(i, j), t.related(j, i));
    }
  }
  EXPECT_THROW(FiniteTSet::from_matrix_code(3, 1ULL << 9), Error);
}
