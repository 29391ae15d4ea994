#pragma once

// The four-document corpus used by the worked examples throughout the tests.

#include <string>
#include <utility>
#include <vector>

#include "sonet/corpus.hpp"
#include "sonet/network.hpp"

namespace test {

inline std::vector<std::pair<std::string, std::string>> c4_documents() {
  return {
      {"d1", "Alice Smith wrote a paper with Bob Jones."},
      {"d2", "Alice Smith visited Paris. Bob Jones stayed home."},
      {"d3", "Bob Jones published alone."},
      {"d4", "Smith and Alice are common names."},
  };
}

inline sonet::CorpusIndex c4() {
  std::vector<sonet::Document> docs;
  for (const auto& [id, text] : c4_documents()) docs.push_back(sonet::make_document(id, text));
  return sonet::CorpusIndex::build(std::move(docs));
}

inline sonet::Actor alice() { return {"alice", sonet::Term("Alice Smith"), {}}; }
inline sonet::Actor bob() { return {"bob", sonet::Term("Bob Jones"), {}}; }

}  // namespace test
