// Binary index layout (all integers little-endian):
//
//   "SRIDX1\n"
//   u64 document count
//     str id, str text, u32 sentence count
//       u32 sentence index, u32 token count, str token...
//   u64 word count
//     str word, u64 posting count, (u32 doc, u32 sentence, u32 position)...
//   u64 FNV-1a hash of everything after the tag line
//
// str is a u32 byte length followed by the bytes.

#include <array>
#include <istream>
#include <ostream>

#include "sonet/corpus.hpp"

namespace sonet {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;
constexpr std::size_t kMaxTagLength = 32;
constexpr std::size_t kChunk = 1 << 20;

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void bytes(const char* data, std::size_t n) {
    out_.write(data, static_cast<std::streamsize>(n));
    for (std::size_t i = 0; i < n; ++i) {
      hash_ = (hash_ ^ static_cast<unsigned char>(data[i])) * kFnvPrime;
    }
    written_ += n;
  }

  template <typename T>
  void integer(T value) {
    std::array<char, sizeof(T)> buf{};
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buf[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF);
    }
    bytes(buf.data(), buf.size());
  }

  void str(std::string_view s) {
    if (s.size() > UINT32_MAX) throw Error("string too long for index format");
    integer<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
    bytes(s.data(), s.size());
  }

  void finish() {
    const std::uint64_t h = hash_;
    integer<std::uint64_t>(h);
  }

  std::size_t written() const { return written_; }

 private:
  std::ostream& out_;
  std::uint64_t hash_ = kFnvOffset;
  std::size_t written_ = 0;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  void bytes(char* data, std::size_t n) {
    in_.read(data, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) throw CorruptIndexError("truncated index");
    for (std::size_t i = 0; i < n; ++i) {
      hash_ = (hash_ ^ static_cast<unsigned char>(data[i])) * kFnvPrime;
    }
  }

  template <typename T>
  T integer() {
    std::array<char, sizeof(T)> buf{};
    bytes(buf.data(), buf.size());
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    }
    return static_cast<T>(v);
  }

  std::string str() {
    const auto len = integer<std::uint32_t>();
    std::string s;
    // Grow in chunks so a corrupted length cannot force a huge allocation.
    while (s.size() < len) {
      const std::size_t take = std::min<std::size_t>(kChunk, len - s.size());
      const std::size_t at = s.size();
      s.resize(at + take);
      bytes(s.data() + at, take);
    }
    return s;
  }

  std::uint64_t hash() const { return hash_; }

 private:
  std::istream& in_;
  std::uint64_t hash_ = kFnvOffset;
};

std::size_t bounded_reserve(std::uint64_t n) { return static_cast<std::size_t>(std::min<std::uint64_t>(n, 1 << 16)); }

}  // namespace

std::size_t save_index(const CorpusIndex& index, std::ostream& sink) {
  sink.write(CorpusIndex::kVersionTag.data(),
             static_cast<std::streamsize>(CorpusIndex::kVersionTag.size()));
  sink.put('\n');

  Writer w(sink);
  const auto docs = index.documents();
  w.integer<std::uint64_t>(docs.size());
  for (const auto& doc : docs) {
    w.str(doc.id);
    w.str(doc.text);
    w.integer<std::uint32_t>(static_cast<std::uint32_t>(doc.sentences.size()));
    for (const auto& s : doc.sentences) {
      w.integer<std::uint32_t>(s.index);
      w.integer<std::uint32_t>(static_cast<std::uint32_t>(s.tokens.size()));
      for (const auto& t : s.tokens) w.str(t);
    }
  }
  const auto words = index.word_postings();
  w.integer<std::uint64_t>(words.size());
  for (const auto& [word, postings] : words) {
    w.str(word);
    w.integer<std::uint64_t>(postings.size());
    for (const auto& p : postings) {
      w.integer<std::uint32_t>(to_underlying(p.doc));
      w.integer<std::uint32_t>(p.sentence);
      w.integer<std::uint32_t>(p.position);
    }
  }
  w.finish();
  if (!sink) throw Error("failed writing index");
  return CorpusIndex::kVersionTag.size() + 1 + w.written();
}

CorpusIndex load_index(std::istream& source) {
  std::string tag;
  bool newline = false;
  for (char c; tag.size() <= kMaxTagLength && source.get(c);) {
    if (c == '\n') {
      newline = true;
      break;
    }
    tag.push_back(c);
  }
  if (tag.empty() && !newline) throw CorruptIndexError("empty index stream");
  if (tag != CorpusIndex::kVersionTag) {
    throw UnsupportedVersionError("unsupported index version '" + tag.substr(0, kMaxTagLength) +
                                  "' (expected " + std::string(CorpusIndex::kVersionTag) + ")");
  }
  if (!newline) throw CorruptIndexError("truncated index header");

  Reader r(source);
  CorpusIndex index;
  const auto ndocs = r.integer<std::uint64_t>();
  if (ndocs > UINT32_MAX) throw CorruptIndexError("document count out of range");
  std::vector<Document> docs;
  docs.reserve(bounded_reserve(ndocs));
  for (std::uint64_t d = 0; d < ndocs; ++d) {
    Document doc;
    doc.id = r.str();
    doc.text = r.str();
    const auto nsent = r.integer<std::uint32_t>();
    doc.sentences.reserve(bounded_reserve(nsent));
    for (std::uint32_t s = 0; s < nsent; ++s) {
      Sentence sentence;
      sentence.index = r.integer<std::uint32_t>();
      const auto ntok = r.integer<std::uint32_t>();
      sentence.tokens.reserve(bounded_reserve(ntok));
      for (std::uint32_t t = 0; t < ntok; ++t) sentence.tokens.push_back(r.str());
      doc.sentences.push_back(std::move(sentence));
    }
    docs.push_back(std::move(doc));
  }

  const auto nwords = r.integer<std::uint64_t>();
  std::vector<std::pair<std::string, std::vector<Posting>>> stored;
  stored.reserve(bounded_reserve(nwords));
  for (std::uint64_t i = 0; i < nwords; ++i) {
    auto word = r.str();
    const auto npost = r.integer<std::uint64_t>();
    std::vector<Posting> postings;
    postings.reserve(bounded_reserve(npost));
    for (std::uint64_t p = 0; p < npost; ++p) {
      const auto doc = r.integer<std::uint32_t>();
      const auto sentence = r.integer<std::uint32_t>();
      const auto position = r.integer<std::uint32_t>();
      postings.push_back({DocId{doc}, sentence, position});
    }
    stored.emplace_back(std::move(word), std::move(postings));
  }

  const std::uint64_t expected = r.hash();
  if (r.integer<std::uint64_t>() != expected) throw CorruptIndexError("index checksum mismatch");

  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0 && !(docs[i - 1].id < docs[i].id)) {
      throw CorruptIndexError("documents out of order at '" + docs[i].id + "'");
    }
    if (docs[i].sentences != split_sentences(docs[i].text)) {
      throw CorruptIndexError("sentences of '" + docs[i].id + "' do not match its text");
    }
  }
  index.documents_ = std::move(docs);
  index.index_postings();

  // Stored postings must be exactly what the documents produce.
  if (stored.size() != index.words_.size()) throw CorruptIndexError("posting table mismatch");
  auto it = index.words_.begin();
  for (const auto& [word, postings] : stored) {
    if (it->first != word || it->second.postings != postings) {
      throw CorruptIndexError("postings for '" + word + "' do not match the documents");
    }
    ++it;
  }
  return index;
}

}  // namespace sonet
