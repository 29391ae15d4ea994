#include <gtest/gtest.h>

#include <random>

#include "c4.hpp"
#include "oracle.hpp"
#include "sonet/events.hpp"
#include "synthetic.hpp"

using namespace sonet;

namespace {

std::vector<std::string> ids(const CorpusIndex& index, const DocSet& docs) {
  return index.ids(docs);
}

using Ids = std::vector<std::string>;

}  // namespace

TEST(Singleton, C4AliceSmith) {
  const auto index = test::c4();
  const auto ev = singleton_event(index, Term("alice smith"));
  EXPECT_EQ(ev.kind, EventKind::Singleton);
  EXPECT_EQ(ids(index, ev.members), (Ids{"d1", "d2", "d4"}));
  EXPECT_EQ(ids(index, ev.implication_members), (Ids{"d1", "d2"}));
  EXPECT_EQ(ev.boundary, 1u);
  EXPECT_EQ(ev.universe_size, 4u);
  EXPECT_DOUBLE_EQ(prob_singleton(ev), 0.75);
  EXPECT_DOUBLE_EQ(implication_prob(ev), 0.5);
}

TEST(Singleton, C4BobJones) {
  const auto index = test::c4();
  const auto ev = singleton_event(index, Term("bob jones"));
  EXPECT_EQ(ids(index, ev.members), (Ids{"d1", "d2", "d3"}));
  EXPECT_EQ(ev.implication_members, ev.members);
  EXPECT_EQ(ev.boundary, 0u);
}

TEST(Singleton, AbsentTerm) {
  const auto index = test::c4();
  const auto ev = singleton_event(index, Term("zelda"));
  EXPECT_TRUE(ev.members.empty());
  EXPECT_TRUE(ev.implication_members.empty());
  EXPECT_EQ(ev.boundary, 0u);
  EXPECT_EQ(prob_singleton(ev), 0.0);
  EXPECT_EQ(implication_prob(ev), 0.0);
}

TEST(Singleton, TermInEveryDocument) {
  const auto index = CorpusIndex::build(
      {make_document("a", "Ann Lee here."), make_document("b", "and Ann Lee there.")});
  const auto ev = singleton_event(index, Term("ann lee"));
  EXPECT_EQ(prob_singleton(ev), 1.0);
  EXPECT_EQ(implication_prob(ev), 1.0);
}

TEST(Singleton, EmptyUniverse) {
  const CorpusIndex empty;
  const auto ev = singleton_event(empty, Term("x"));
  EXPECT_THROW(prob_singleton(ev), EmptyUniverseError);
  EXPECT_THROW(implication_prob(ev), EmptyUniverseError);
}

TEST(Singleton, AliasUnionCountsDocumentsOnce) {
  const auto index = CorpusIndex::build({make_document("a", "Robert Jones spoke. Bob Jones too."),
                                         make_document("b", "Jones and Bob."),
                                         make_document("c", "Robert Jones only.")});
  const std::vector<Term> names{Term("bob jones"), Term("robert jones")};
  const auto ev = singleton_event(index, names);
  EXPECT_EQ(index.ids(ev.members), (Ids{"a", "b", "c"}));
  EXPECT_EQ(index.ids(ev.implication_members), (Ids{"a", "c"}));
  EXPECT_EQ(ev.boundary, 1u);
}

TEST(Doubleton, C4SameSentence) {
  const auto index = test::c4();
  const auto ev = doubleton_event(index, Term("alice smith"), Term("bob jones"), 0);
  EXPECT_EQ(ev.kind, EventKind::Doubleton);
  EXPECT_EQ(ids(index, ev.members), (Ids{"d1", "d2"}));
  EXPECT_EQ(ids(index, ev.implication_members), (Ids{"d1"}));
  EXPECT_EQ(ev.boundary, 1u);
  EXPECT_DOUBLE_EQ(prob_doubleton(ev), 0.5);
  EXPECT_DOUBLE_EQ(implication_prob(ev), 0.25);
}

TEST(Doubleton, C4AdjacentSentenceWindow) {
  const auto index = test::c4();
  const auto ev = doubleton_event(index, Term("alice smith"), Term("bob jones"), 1);
  EXPECT_EQ(ids(index, ev.implication_members), (Ids{"d1", "d2"}));
  EXPECT_EQ(ev.boundary, 0u);
}

TEST(Doubleton, SameTermRejected) {
  const auto index = test::c4();
  EXPECT_THROW(doubleton_event(index, Term("alice smith"), Term("Alice-Smith"), 3),
               InvalidPairError);
}

TEST(Doubleton, DisjointTerms) {
  const auto index = test::c4();
  const auto ev = doubleton_event(index, Term("paris"), Term("published"));
  EXPECT_EQ(prob_doubleton(ev), 0.0);
}

TEST(Doubleton, SubsetMonotonicityOnC4) {
  const auto index = test::c4();
  const auto a = singleton_event(index, Term("alice smith"));
  const auto b = singleton_event(index, Term("bob jones"));
  const auto ab = doubleton_event(index, Term("alice smith"), Term("bob jones"));
  EXPECT_LE(prob_doubleton(ab), std::min(prob_singleton(a), prob_singleton(b)));
}

TEST(Doubleton, WrongKindRejected) {
  const auto index = test::c4();
  const auto a = singleton_event(index, Term("alice smith"));
  const auto ab = doubleton_event(index, Term("alice smith"), Term("bob jones"));
  EXPECT_THROW(prob_doubleton(a), std::invalid_argument);
  EXPECT_THROW(prob_singleton(ab), std::invalid_argument);
}

TEST(WithinWindow, TwoPointerMatchesDefinition) {
  const std::vector<std::uint32_t> a{1, 7, 20};
  const std::vector<std::uint32_t> b{4, 12};
  EXPECT_FALSE(within_window(a, b, 2));
  EXPECT_TRUE(within_window(a, b, 3));
  EXPECT_FALSE(within_window(a, {}, 100));
}

class EventProperties : public ::testing::TestWithParam<int> {};

TEST_P(EventProperties, InvariantsAndOracle) {
  std::mt19937_64 rng(1000 + GetParam());
  const auto c = synth::random_corpus(rng, 120, 12);
  const auto index = synth::build(c);
  const auto docs = synth::oracle_docs(c);

  for (const auto& raw : c.terms) {
    const auto ev = singleton_event(index, Term(raw));
    const auto ref = oracle::singleton(docs, {oracle::words(raw)});
    const auto members = index.ids(ev.members);
    const auto implication = index.ids(ev.implication_members);
    EXPECT_EQ(std::set<std::string>(members.begin(), members.end()), ref.members);
    EXPECT_EQ(std::set<std::string>(implication.begin(), implication.end()), ref.implication);
    EXPECT_TRUE(std::includes(ev.members.begin(), ev.members.end(), ev.implication_members.begin(),
                              ev.implication_members.end()));
  }

  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    for (std::size_t j = i + 1; j < c.terms.size(); ++j) {
      const Term a(c.terms[i]);
      const Term b(c.terms[j]);
      const auto ea = singleton_event(index, a);
      const auto eb = singleton_event(index, b);
      DocSet previous;
      for (std::size_t w = 0; w < 4; ++w) {
        const auto ab = doubleton_event(index, a, b, w);
        EXPECT_EQ(ab, doubleton_event(index, b, a, w));
        EXPECT_LE(prob_doubleton(ab), std::min(prob_singleton(ea), prob_singleton(eb)));
        EXPECT_GE(ab.members.size(), ab.implication_members.size());
        EXPECT_TRUE(std::includes(ea.members.begin(), ea.members.end(), ab.members.begin(),
                                  ab.members.end()));
        EXPECT_TRUE(std::includes(ab.implication_members.begin(), ab.implication_members.end(),
                                  previous.begin(), previous.end()));
        previous = ab.implication_members;

        const auto ref = oracle::doubleton(docs, {oracle::words(c.terms[i])},
                                           {oracle::words(c.terms[j])}, w);
        EXPECT_EQ(ab.members.size(), ref.members.size());
        EXPECT_EQ(ab.boundary, ref.boundary());
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Random, EventProperties, ::testing::Range(0, 8));
