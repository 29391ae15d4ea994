#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sonet/error.hpp"

namespace sonet {

/// Ordinal of a document inside a CorpusIndex. Documents are kept sorted by
/// their string id, so ordinal order and id order agree.
enum class DocId : std::uint32_t {};

constexpr std::uint32_t to_underlying(DocId d) noexcept { return static_cast<std::uint32_t>(d); }

/// Sorted, duplicate-free list of document ordinals.
using DocSet = std::vector<DocId>;

DocSet intersect(const DocSet& a, const DocSet& b);
DocSet unite(const DocSet& a, const DocSet& b);

/// Lowercases and splits on whitespace and punctuation. ASCII letters and
/// digits are word characters; non-ASCII code points are word characters
/// unless they are Unicode punctuation, symbols or spaces from the common
/// blocks (general punctuation, Latin-1 punctuation, CJK punctuation,
/// full-width forms). Invalid UTF-8 bytes act as separators.
std::vector<std::string> tokenize(std::string_view text);

struct Sentence {
  std::uint32_t index = 0;
  std::vector<std::string> tokens;

  bool operator==(const Sentence&) const = default;
};

/// Splits at '.', '!' or '?' when followed by whitespace or end of text.
/// No abbreviation handling. Sentences without tokens are dropped and the
/// remaining ones are numbered consecutively from 0.
std::vector<Sentence> split_sentences(std::string_view text);

struct Document {
  std::string id;
  std::string text;
  std::vector<Sentence> sentences;

  bool operator==(const Document&) const = default;
};

Document make_document(std::string id, std::string text);

/// A name pattern: an ordered, nonempty list of normalized words.
/// Equality looks at the words only, never at the raw surface string.
class Term {
 public:
  /// Normalizes `raw` with tokenize(); throws std::invalid_argument when it
  /// yields no words.
  explicit Term(std::string_view raw);

  const std::vector<std::string>& words() const noexcept { return words_; }
  const std::string& raw() const noexcept { return raw_; }
  std::size_t size() const noexcept { return words_.size(); }
  /// Words joined by single spaces.
  std::string normalized() const;

  bool operator==(const Term& other) const { return words_ == other.words_; }
  std::strong_ordering operator<=>(const Term& other) const { return words_ <=> other.words_; }

 private:
  std::vector<std::string> words_;
  std::string raw_;
};

struct Posting {
  DocId doc{};
  std::uint32_t sentence = 0;
  std::uint32_t position = 0;

  auto operator<=>(const Posting&) const = default;
};

enum class MatchKind {
  None,
  BagOfWords,       // every word somewhere in the document, pattern in no sentence
  SentencePattern,  // contiguous, in-order pattern inside one sentence
};

std::string_view to_string(MatchKind kind) noexcept;

/// Immutable positional index over a document collection.
class CorpusIndex {
 public:
  static constexpr std::string_view kVersionTag = "SRIDX1";

  CorpusIndex() = default;

  /// Throws CorpusError on a duplicate id. Input order is irrelevant.
  static CorpusIndex build(std::vector<Document> documents);

  std::size_t total_docs() const noexcept { return documents_.size(); }
  std::size_t distinct_words() const noexcept { return words_.size(); }
  std::string_view version() const noexcept { return kVersionTag; }

  std::span<const Document> documents() const noexcept { return documents_; }
  const Document& document(DocId d) const { return documents_.at(to_underlying(d)); }
  const std::string& doc_id(DocId d) const { return document(d).id; }

  std::optional<DocId> find(std::string_view id) const;
  /// Like find() but throws LookupError.
  DocId require(std::string_view id) const;

  /// Postings sorted by (doc, sentence, position); empty for unknown words.
  std::span<const Posting> postings(std::string_view word) const;
  /// Documents containing `word`.
  const DocSet& docs_with(std::string_view word) const;

  /// Every indexed word with its postings, in lexicographic order.
  std::vector<std::pair<std::string_view, std::span<const Posting>>> word_postings() const;

  std::vector<std::string> ids(const DocSet& docs) const;

  /// Structural equality over documents and postings.
  bool operator==(const CorpusIndex& other) const;

 private:
  struct WordEntry {
    std::vector<Posting> postings;
    DocSet docs;
  };

  friend CorpusIndex load_index(std::istream& source);

  void index_postings();

  std::vector<Document> documents_;
  std::map<std::string, WordEntry, std::less<>> words_;
};

enum class CorpusFormat {
  Jsonl,     // one {"id": ..., "text": ...} object per line
  FileList,  // one path per line; id is the file name without its extension
};

/// Throws CorpusError naming the offending line or id.
CorpusIndex ingest_corpus(std::istream& source, CorpusFormat format);

/// A directory is read as every *.txt file inside it; anything else as JSONL.
CorpusIndex ingest_path(const std::filesystem::path& path);

MatchKind match_term(const CorpusIndex& index, std::string_view doc_id, const Term& term);
MatchKind match_term(const CorpusIndex& index, DocId doc, const Term& term);

/// Ascending indices of the sentences in `doc` that contain `term` as a
/// contiguous pattern.
std::vector<std::uint32_t> pattern_sentences(const CorpusIndex& index, DocId doc, const Term& term);

/// Documents that contain every word of `term` anywhere.
DocSet docs_with_all_words(const CorpusIndex& index, const Term& term);

/// Writes the versioned binary index format; returns the number of bytes.
std::size_t save_index(const CorpusIndex& index, std::ostream& sink);
/// Throws UnsupportedVersionError or CorruptIndexError.
CorpusIndex load_index(std::istream& source);

}  // namespace sonet
