#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "c4.hpp"
#include "oracle.hpp"
#include "sonet/corpus.hpp"
#include "synthetic.hpp"

using namespace sonet;

using Words = std::vector<std::string>;

TEST(Tokenize, LowercasesAndStripsPunctuation) {
  EXPECT_EQ(tokenize("Alice Smith wrote."), (Words{"alice", "smith", "wrote"}));
}

TEST(Tokenize, EmptyText) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, UnicodeDashAndCommaSeparate) {
  // em dash is U+2014
  EXPECT_EQ(tokenize("Bob\xE2\x80\x94Jones,  2010"), (Words{"bob", "jones", "2010"}));
}

TEST(Tokenize, KeepsNonAsciiLetters) {
  EXPECT_EQ(tokenize("Zo\xC3\xAB M\xC3\x9CLLER"), (Words{"zo\xC3\xAB", "m\xC3\xBCller"}));
}

TEST(Tokenize, InvalidUtf8ActsAsSeparator) {
  EXPECT_EQ(tokenize("ab\xFF" "cd"), (Words{"ab", "cd"}));
  EXPECT_EQ(tokenize("ab\xC3"), (Words{"ab"}));
}

TEST(Tokenize, AgreesWithReferenceOnAscii) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto c = synth::random_corpus(rng, 3, 6);
    for (const auto& [id, text] : c.docs) {
      EXPECT_EQ(tokenize(text), oracle::words(text)) << text;
      EXPECT_EQ(tokenize(text), tokenize(text));
    }
  }
}

TEST(SplitSentences, TwoTerminalPeriods) {
  const auto s = split_sentences("A b. C d.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].tokens, (Words{"a", "b"}));
  EXPECT_EQ(s[1].tokens, (Words{"c", "d"}));
  EXPECT_EQ(s[1].index, 1u);
}

TEST(SplitSentences, NoTerminatorIsOneSentence) {
  EXPECT_EQ(split_sentences("No terminator").size(), 1u);
}

TEST(SplitSentences, NoAbbreviationHandling) {
  const auto s = split_sentences("Dr. Smith left. Bob stayed.");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].tokens, (Words{"dr"}));
  EXPECT_EQ(s[1].tokens, (Words{"smith", "left"}));
  EXPECT_EQ(s[2].tokens, (Words{"bob", "stayed"}));
}

TEST(SplitSentences, PeriodInsideTokenDoesNotSplit) {
  EXPECT_EQ(split_sentences("version 1.5 shipped! ok?").size(), 2u);
}

TEST(SplitSentences, EmptyPiecesDropped) {
  EXPECT_TRUE(split_sentences("").empty());
  EXPECT_TRUE(split_sentences(" ... !? ").empty());
}

TEST(SplitSentences, TokensConcatenateToTokenization) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto c = synth::random_corpus(rng, 3, 6);
    for (const auto& [id, text] : c.docs) {
      Words joined;
      for (const auto& s : split_sentences(text)) {
        EXPECT_FALSE(s.tokens.empty());
        joined.insert(joined.end(), s.tokens.begin(), s.tokens.end());
      }
      EXPECT_EQ(joined, tokenize(text));
      const auto ref = oracle::sentences(text);
      const auto got = split_sentences(text);
      ASSERT_EQ(got.size(), ref.size()) << text;
      for (std::size_t k = 0; k < got.size(); ++k) EXPECT_EQ(got[k].tokens, ref[k]);
    }
  }
}

TEST(TermType, NormalizesAndComparesByWords) {
  Term a("Alice  SMITH");
  Term b("alice-smith");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.raw(), "Alice  SMITH");
  EXPECT_EQ(a.normalized(), "alice smith");
  EXPECT_NE(a, Term("smith alice"));
  EXPECT_THROW(Term("  ,. "), std::invalid_argument);
}

TEST(Ingest, C4) {
  const auto index = test::c4();
  EXPECT_EQ(index.total_docs(), 4u);
  EXPECT_EQ(index.doc_id(DocId{0}), "d1");
  EXPECT_EQ(index.document(index.require("d2")).sentences.size(), 2u);
}

TEST(Ingest, EmptyStream) {
  std::istringstream in("");
  EXPECT_EQ(ingest_corpus(in, CorpusFormat::Jsonl).total_docs(), 0u);
}

TEST(Ingest, DuplicateIdRejected) {
  std::istringstream in(R"({"id":"d1","text":"a"})"
                        "\n"
                        R"({"id":"d1","text":"b"})"
                        "\n");
  try {
    ingest_corpus(in, CorpusFormat::Jsonl);
    FAIL() << "expected CorpusError";
  } catch (const CorpusError& e) {
    EXPECT_NE(std::string(e.what()).find("d1"), std::string::npos);
  }
}

TEST(Ingest, MalformedLineReportsLineNumber) {
  std::istringstream in(R"({"id":"d1","text":"a"})"
                        "\n\n"
                        R"({"id":"d2")"
                        "\n");
  try {
    ingest_corpus(in, CorpusFormat::Jsonl);
    FAIL() << "expected CorpusError";
  } catch (const CorpusError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream wrong_type(R"({"id":1,"text":"a"})");
  EXPECT_THROW(ingest_corpus(wrong_type, CorpusFormat::Jsonl), CorpusError);
}

TEST(Ingest, FileListAndDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "sonet_corpus_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  for (const auto& [id, text] : test::c4_documents()) {
    std::ofstream(dir / (id + ".txt")) << text;
  }
  std::ofstream(dir / "ignored.md") << "not a corpus file";

  const auto from_dir = ingest_path(dir);
  EXPECT_EQ(from_dir, test::c4());

  std::istringstream listing((dir / "d3.txt").string() + "\n" + (dir / "d1.txt").string() + "\n");
  const auto from_list = ingest_corpus(listing, CorpusFormat::FileList);
  EXPECT_EQ(from_list.total_docs(), 2u);
  EXPECT_TRUE(from_list.find("d1").has_value());

  std::istringstream missing((dir / "nope.txt").string());
  EXPECT_THROW(ingest_corpus(missing, CorpusFormat::FileList), CorpusError);
  EXPECT_THROW(ingest_path(dir / "nope.jsonl"), CorpusError);
  std::filesystem::remove_all(dir);
}

TEST(Ingest, PostingsAreCompleteAndExact) {
  std::mt19937_64 rng(3);
  const auto c = synth::random_corpus(rng, 60, 10);
  const auto index = synth::build(c);
  std::size_t expected = 0;
  for (std::uint32_t d = 0; d < index.total_docs(); ++d) {
    for (const auto& s : index.document(DocId{d}).sentences) {
      for (std::uint32_t p = 0; p < s.tokens.size(); ++p) {
        const auto postings = index.postings(s.tokens[p]);
        EXPECT_TRUE(std::binary_search(postings.begin(), postings.end(),
                                       Posting{DocId{d}, s.index, p}));
        ++expected;
      }
    }
  }
  std::size_t total = 0;
  for (const auto& [word, postings] : index.word_postings()) {
    total += postings.size();
    for (const auto& p : postings) {
      EXPECT_EQ(index.document(p.doc).sentences.at(p.sentence).tokens.at(p.position), word);
    }
  }
  EXPECT_EQ(total, expected);
}

TEST(MatchTerm, C4Examples) {
  const auto index = test::c4();
  const Term alice("alice smith");
  EXPECT_EQ(match_term(index, "d1", alice), MatchKind::SentencePattern);
  EXPECT_EQ(match_term(index, "d4", alice), MatchKind::BagOfWords);
  EXPECT_EQ(match_term(index, "d3", alice), MatchKind::None);
  EXPECT_THROW(match_term(index, "d9", alice), LookupError);
}

TEST(MatchTerm, PatternMustStayInsideOneSentence) {
  const auto index = CorpusIndex::build({make_document("x", "He met Alice. Smith left.")});
  EXPECT_EQ(match_term(index, "x", Term("alice smith")), MatchKind::BagOfWords);
  EXPECT_EQ(pattern_sentences(index, DocId{0}, Term("smith left")), (std::vector<std::uint32_t>{1}));
}

TEST(MatchTerm, AgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    const auto c = synth::random_corpus(rng, 40, 12);
    const auto index = synth::build(c);
    for (const auto& [id, text] : c.docs) {
      const auto doc = oracle::make_doc(id, text);
      for (const auto& raw : c.terms) {
        const auto want = oracle::match(doc, oracle::words(raw));
        const auto got = match_term(index, id, Term(raw));
        const MatchKind expected = want == oracle::Match::Pattern ? MatchKind::SentencePattern
                                   : want == oracle::Match::Bag   ? MatchKind::BagOfWords
                                                                  : MatchKind::None;
        EXPECT_EQ(got, expected) << raw << " in " << text;
      }
    }
  }
}
