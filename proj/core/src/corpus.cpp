#include "sonet/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sonet {

DocSet intersect(const DocSet& a, const DocSet& b) {
  DocSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DocSet unite(const DocSet& a, const DocSet& b) {
  DocSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Term::Term(std::string_view raw) : words_(tokenize(raw)), raw_(raw) {
  if (words_.empty()) {
    throw std::invalid_argument("term '" + std::string(raw) + "' has no words");
  }
}

std::string Term::normalized() const {
  std::string out;
  for (const auto& w : words_) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

std::string_view to_string(MatchKind kind) noexcept {
  switch (kind) {
    case MatchKind::SentencePattern:
      return "SentencePattern";
    case MatchKind::BagOfWords:
      return "BagOfWords";
    case MatchKind::None:
      break;
  }
  return "None";
}

CorpusIndex CorpusIndex::build(std::vector<Document> documents) {
  std::sort(documents.begin(), documents.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  auto dup = std::adjacent_find(documents.begin(), documents.end(),
                                [](const Document& a, const Document& b) { return a.id == b.id; });
  if (dup != documents.end()) {
    throw CorpusError("duplicate document id '" + dup->id + "'");
  }
  CorpusIndex index;
  index.documents_ = std::move(documents);
  index.index_postings();
  return index;
}

void CorpusIndex::index_postings() {
  words_.clear();
  for (std::uint32_t d = 0; d < documents_.size(); ++d) {
    for (const auto& sentence : documents_[d].sentences) {
      for (std::uint32_t p = 0; p < sentence.tokens.size(); ++p) {
        auto& entry = words_[sentence.tokens[p]];
        entry.postings.push_back({DocId{d}, sentence.index, p});
        if (entry.docs.empty() || entry.docs.back() != DocId{d}) entry.docs.push_back(DocId{d});
      }
    }
  }
}

std::optional<DocId> CorpusIndex::find(std::string_view id) const {
  auto it = std::lower_bound(documents_.begin(), documents_.end(), id,
                             [](const Document& d, std::string_view key) { return d.id < key; });
  if (it == documents_.end() || it->id != id) return std::nullopt;
  return DocId{static_cast<std::uint32_t>(it - documents_.begin())};
}

DocId CorpusIndex::require(std::string_view id) const {
  if (auto d = find(id)) return *d;
  throw LookupError("unknown document id '" + std::string(id) + "'");
}

std::span<const Posting> CorpusIndex::postings(std::string_view word) const {
  auto it = words_.find(word);
  if (it == words_.end()) return {};
  return it->second.postings;
}

const DocSet& CorpusIndex::docs_with(std::string_view word) const {
  static const DocSet kEmpty;
  auto it = words_.find(word);
  return it == words_.end() ? kEmpty : it->second.docs;
}

std::vector<std::pair<std::string_view, std::span<const Posting>>> CorpusIndex::word_postings()
    const {
  std::vector<std::pair<std::string_view, std::span<const Posting>>> out;
  out.reserve(words_.size());
  for (const auto& [word, entry] : words_) out.emplace_back(word, entry.postings);
  return out;
}

std::vector<std::string> CorpusIndex::ids(const DocSet& docs) const {
  std::vector<std::string> out;
  out.reserve(docs.size());
  for (DocId d : docs) out.push_back(doc_id(d));
  return out;
}

bool CorpusIndex::operator==(const CorpusIndex& other) const {
  if (documents_ != other.documents_ || words_.size() != other.words_.size()) return false;
  return std::equal(words_.begin(), words_.end(), other.words_.begin(),
                    [](const auto& a, const auto& b) {
                      return a.first == b.first && a.second.postings == b.second.postings;
                    });
}

namespace {

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

std::vector<Document> read_jsonl(std::istream& source) {
  std::vector<Document> docs;
  std::map<std::string, std::size_t, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (blank(line)) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw CorpusError("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string() ||
        !obj.contains("text") || !obj["text"].is_string()) {
      throw CorpusError("line " + std::to_string(line_no) +
                        ": expected an object with string fields \"id\" and \"text\"");
    }
    auto id = obj["id"].get<std::string>();
    if (id.empty()) throw CorpusError("line " + std::to_string(line_no) + ": empty document id");
    if (auto [it, fresh] = seen.emplace(id, line_no); !fresh) {
      throw CorpusError("line " + std::to_string(line_no) + ": duplicate document id '" + id +
                        "' (first seen on line " + std::to_string(it->second) + ")");
    }
    docs.push_back(make_document(std::move(id), obj["text"].get<std::string>()));
  }
  return docs;
}

Document read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read corpus file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return make_document(path.stem().string(), buf.str());
}

std::vector<Document> read_file_list(std::istream& source) {
  std::vector<Document> docs;
  std::string line;
  while (std::getline(source, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;
    docs.push_back(read_text_file(line));
  }
  return docs;
}

}  // namespace

CorpusIndex ingest_corpus(std::istream& source, CorpusFormat format) {
  switch (format) {
    case CorpusFormat::FileList:
      return CorpusIndex::build(read_file_list(source));
    case CorpusFormat::Jsonl:
      break;
  }
  return CorpusIndex::build(read_jsonl(source));
}

CorpusIndex ingest_path(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::exists(path, ec)) throw CorpusError("corpus not found: " + path.string());
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    std::vector<Document> docs;
    docs.reserve(files.size());
    for (const auto& f : files) docs.push_back(read_text_file(f));
    return CorpusIndex::build(std::move(docs));
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read corpus file '" + path.string() + "'");
  return ingest_corpus(in, CorpusFormat::Jsonl);
}

namespace {

struct DocOrder {
  bool operator()(const Posting& p, DocId d) const { return p.doc < d; }
  bool operator()(DocId d, const Posting& p) const { return d < p.doc; }
};

}  // namespace

std::vector<std::uint32_t> pattern_sentences(const CorpusIndex& index, DocId doc,
                                             const Term& term) {
  const auto& words = term.words();
  std::vector<std::span<const Posting>> lists;
  lists.reserve(words.size());
  for (const auto& w : words) {
    auto all = index.postings(w);
    auto [lo, hi] = std::equal_range(all.begin(), all.end(), doc, DocOrder{});
    if (lo == hi) return {};
    lists.emplace_back(lo, hi);
  }

  std::vector<std::uint32_t> out;
  for (const Posting& first : lists.front()) {
    if (!out.empty() && out.back() == first.sentence) continue;
    bool whole = true;
    for (std::size_t i = 1; i < lists.size() && whole; ++i) {
      const Posting want{doc, first.sentence, first.position + static_cast<std::uint32_t>(i)};
      whole = std::binary_search(lists[i].begin(), lists[i].end(), want);
    }
    if (whole) out.push_back(first.sentence);
  }
  return out;
}

DocSet docs_with_all_words(const CorpusIndex& index, const Term& term) {
  std::vector<const DocSet*> sets;
  for (const auto& w : term.words()) sets.push_back(&index.docs_with(w));
  std::sort(sets.begin(), sets.end(),
            [](const DocSet* a, const DocSet* b) { return a->size() < b->size(); });
  DocSet out = *sets.front();
  for (std::size_t i = 1; i < sets.size() && !out.empty(); ++i) out = intersect(out, *sets[i]);
  return out;
}

MatchKind match_term(const CorpusIndex& index, DocId doc, const Term& term) {
  if (!pattern_sentences(index, doc, term).empty()) return MatchKind::SentencePattern;
  for (const auto& w : term.words()) {
    const auto& docs = index.docs_with(w);
    if (!std::binary_search(docs.begin(), docs.end(), doc)) return MatchKind::None;
  }
  return MatchKind::BagOfWords;
}

MatchKind match_term(const CorpusIndex& index, std::string_view doc_id, const Term& term) {
  return match_term(index, index.require(doc_id), term);
}

}  // namespace sonet
