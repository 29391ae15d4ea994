#include "sonet/events.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace sonet {
namespace {

void require_distinct(std::span<const Term> a, std::span<const Term> b) {
  for (const auto& t : a) {
    if (std::find(b.begin(), b.end(), t) != b.end()) {
      throw InvalidPairError("doubleton needs two distinct terms, got '" + t.normalized() +
                             "' on both sides");
    }
  }
}

}  // namespace

bool within_window(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                   std::size_t window) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const std::uint32_t x = a[i];
    const std::uint32_t y = b[j];
    const std::size_t gap = x > y ? x - y : y - x;
    if (gap <= window) return true;
    if (x < y) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

PatternProfile profile(const CorpusIndex& index, std::span<const Term> variants) {
  if (variants.empty()) throw std::invalid_argument("profile needs at least one term");
  PatternProfile p;
  p.variants.assign(variants.begin(), variants.end());
  p.universe_size = index.total_docs();

  for (const auto& term : variants) p.members = unite(p.members, docs_with_all_words(index, term));

  for (DocId doc : p.members) {
    std::vector<std::uint32_t> merged;
    for (const auto& term : variants) {
      auto s = pattern_sentences(index, doc, term);
      if (s.empty()) continue;
      std::vector<std::uint32_t> next;
      std::set_union(merged.begin(), merged.end(), s.begin(), s.end(), std::back_inserter(next));
      merged = std::move(next);
    }
    if (!merged.empty()) {
      p.implication.push_back(doc);
      p.sentences.push_back(std::move(merged));
    }
  }
  return p;
}

EventSpace singleton_event(const PatternProfile& p) {
  return EventSpace{
      EventKind::Singleton,         p.variants.front(),
      std::nullopt,                 p.members,
      p.implication,                p.members.size() - p.implication.size(),
      p.universe_size,
  };
}

EventSpace singleton_event(const CorpusIndex& index, const Term& term) {
  return singleton_event(profile(index, std::span<const Term>(&term, 1)));
}

EventSpace singleton_event(const CorpusIndex& index, std::span<const Term> variants) {
  return singleton_event(profile(index, variants));
}

EventSpace doubleton_event(const PatternProfile& a, const PatternProfile& b, std::size_t window) {
  require_distinct(a.variants, b.variants);
  const bool swap = b.variants.front() < a.variants.front();
  const PatternProfile& first = swap ? b : a;
  const PatternProfile& second = swap ? a : b;

  DocSet members = intersect(first.members, second.members);
  DocSet implication;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < first.implication.size() && j < second.implication.size()) {
    const DocId x = first.implication[i];
    const DocId y = second.implication[j];
    if (x < y) {
      ++i;
    } else if (y < x) {
      ++j;
    } else {
      if (within_window(first.sentences[i], second.sentences[j], window)) implication.push_back(x);
      ++i;
      ++j;
    }
  }
  const std::size_t boundary = members.size() - implication.size();
  return EventSpace{
      EventKind::Doubleton,  first.variants.front(), second.variants.front(), std::move(members),
      std::move(implication), boundary,              first.universe_size,
  };
}

EventSpace doubleton_event(const CorpusIndex& index, const Term& a, const Term& b,
                           std::size_t window) {
  return doubleton_event(index, std::span<const Term>(&a, 1), std::span<const Term>(&b, 1), window);
}

EventSpace doubleton_event(const CorpusIndex& index, std::span<const Term> a,
                           std::span<const Term> b, std::size_t window) {
  require_distinct(a, b);
  return doubleton_event(profile(index, a), profile(index, b), window);
}

namespace {

double ratio(std::size_t count, const EventSpace& ev) {
  if (ev.universe_size == 0) throw EmptyUniverseError("probability over an empty corpus");
  return static_cast<double>(count) / static_cast<double>(ev.universe_size);
}

}  // namespace

double prob_singleton(const EventSpace& ev) {
  if (ev.kind != EventKind::Singleton) throw std::invalid_argument("expected a singleton event");
  return ratio(ev.members.size(), ev);
}

double prob_doubleton(const EventSpace& ev) {
  if (ev.kind != EventKind::Doubleton) throw std::invalid_argument("expected a doubleton event");
  return ratio(ev.members.size(), ev);
}

double implication_prob(const EventSpace& ev) {
  return ratio(ev.members.size() - ev.boundary, ev);
}

}  // namespace sonet
