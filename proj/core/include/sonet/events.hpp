#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sonet/corpus.hpp"

namespace sonet {

enum class EventKind { Singleton, Doubleton };

/// A set of documents in which a term (or a pair of terms) occurs, the
/// subset in which the occurrence is a genuine sentence-level match, and the
/// gap between them.
///
/// For a doubleton the two terms are stored in ascending order so that
/// doubleton_event(a, b) and doubleton_event(b, a) compare equal.
struct EventSpace {
  EventKind kind = EventKind::Singleton;
  Term term_a;
  std::optional<Term> term_b;
  DocSet members;
  DocSet implication_members;
  std::size_t boundary = 0;  // |members| - |implication_members|
  std::size_t universe_size = 0;

  bool operator==(const EventSpace&) const = default;
};

/// Per-document match data for one entity, possibly under several name
/// variants. Computing it once lets many pairs share the posting work.
struct PatternProfile {
  std::vector<Term> variants;
  DocSet members;      // every word of some variant occurs in the document
  DocSet implication;  // some variant occurs as a sentence pattern
  std::vector<std::vector<std::uint32_t>> sentences;  // parallel to `implication`
  std::size_t universe_size = 0;
};

/// Throws std::invalid_argument when `variants` is empty.
PatternProfile profile(const CorpusIndex& index, std::span<const Term> variants);

EventSpace singleton_event(const PatternProfile& p);
EventSpace singleton_event(const CorpusIndex& index, const Term& term);
/// Union over name variants, taken on document sets before counting.
EventSpace singleton_event(const CorpusIndex& index, std::span<const Term> variants);

/// `window` is the largest allowed distance between the sentences holding
/// the two patterns; 0 means the same sentence. Throws InvalidPairError when
/// the two sides share a term.
EventSpace doubleton_event(const PatternProfile& a, const PatternProfile& b, std::size_t window);
EventSpace doubleton_event(const CorpusIndex& index, const Term& a, const Term& b,
                           std::size_t window = 0);
EventSpace doubleton_event(const CorpusIndex& index, std::span<const Term> a,
                           std::span<const Term> b, std::size_t window = 0);

/// |members| / |universe|. Throws EmptyUniverseError, or std::invalid_argument
/// for the wrong event kind.
double prob_singleton(const EventSpace& ev);
double prob_doubleton(const EventSpace& ev);
/// (|members| - boundary) / |universe|.
double implication_prob(const EventSpace& ev);

/// True when some pair of entries, one from each sorted list, differs by at
/// most `window`.
bool within_window(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                   std::size_t window);

}  // namespace sonet
