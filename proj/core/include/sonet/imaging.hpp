#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sonet/corpus.hpp"
#include "sonet/network.hpp"

namespace sonet {

enum class QueryMode { Entity, Relation };

struct ExpandedTerm {
  Term term;
  double strength = 0.0;  // strength of the edge that introduced it

  bool operator==(const ExpandedTerm&) const = default;
};

/// Entity names to search for. One name is an entity query, two or more a
/// relation query. Expansion never changes the mode.
class Query {
 public:
  /// Duplicates are dropped keeping first occurrence. Throws
  /// std::invalid_argument when no terms remain.
  explicit Query(std::vector<Term> entity_terms);
  static Query parse(std::span<const std::string> raw_terms);

  const std::vector<Term>& entity_terms() const noexcept { return entity_terms_; }
  const std::vector<ExpandedTerm>& expanded_terms() const noexcept { return expanded_; }
  QueryMode mode() const noexcept {
    return entity_terms_.size() == 1 ? QueryMode::Entity : QueryMode::Relation;
  }

  /// Entity terms followed by expanded terms.
  std::vector<Term> all_terms() const;
  bool contains(const Term& t) const;
  /// Returns false (and changes nothing) when `t` is already present.
  bool add_expansion(const Term& t, double strength);

  bool operator==(const Query&) const = default;

 private:
  std::vector<Term> entity_terms_;
  std::vector<ExpandedTerm> expanded_;
};

/// One extracted relation ρ between two actors.
struct Relation {
  std::string a;
  std::string b;
  std::vector<Term> names_a;
  std::vector<Term> names_b;
  double strength = 0.0;
  std::vector<std::string> support;  // sorted doc ids

  bool operator==(const Relation&) const = default;
};

/// Relations with a prior P(ρ); `prior[i]` belongs to `relations[i]`. An
/// empty space is valid input to rank() and scores every document 0.
struct RelationSpace {
  std::vector<Relation> relations;
  std::vector<double> prior;

  bool empty() const noexcept { return relations.empty(); }
};

/// Uniform P(ω) = 1/|Ω|. Throws EmptyUniverseError on an empty index.
std::map<std::string, double> doc_prior(const CorpusIndex& index);

/// P(ρ) proportional to edge strength. Throws EmptyRelationSpaceError when
/// the network has no edges.
RelationSpace relation_prior(const SocialNetwork& net);

/// 1 iff doc_id supports the relation.
int truth_doc(const Relation& rel, std::string_view doc_id);

/// Relation mode: 1 iff two different query terms (expansions included) name
/// the two endpoints. Entity mode: 1 iff the queried entity names an endpoint.
int truth_query(const Relation& rel, const Query& query);

/// Σ P(ρ)·truth_doc(ρ, doc)
double imaging_doc_relevance(const RelationSpace& space, std::string_view doc_id);
/// Σ P(ρ)·truth_query(ρ, q)
double imaging_query_relevance(const RelationSpace& space, const Query& query);
/// Σ P(ρ)·truth_doc(ρ, doc)·truth_query(ρ, q), capped at 1.
double score(const RelationSpace& space, std::string_view doc_id, const Query& query);

/// Adds, for every entity term that names an actor, up to `max_neighbors`
/// network neighbors with strength >= min_strength (strongest first, ties by
/// actor id). Neighbors already among the entity terms are skipped before
/// the limit is applied, which keeps the operation idempotent.
Query expand_query(Query query, const SocialNetwork& net, double min_strength,
                   std::size_t max_neighbors);

enum class Band {
  Relation,  // scored through the relation space
  Fallback,  // only sentence-pattern evidence for individual terms
};

std::string_view to_string(Band band) noexcept;

struct RankedEntry {
  std::string doc;
  double score = 0.0;
  Band band = Band::Relation;
  /// "relation:<a>|<b>" for contributing relations, "term:<words>" for
  /// fallback term matches.
  std::vector<std::string> evidence;

  bool operator==(const RankedEntry&) const = default;
};

struct RankedResult {
  std::vector<RankedEntry> entries;
  Query query;
  bool fallback = false;
};

/// Relation-band entries (score > 0) by score descending then doc id, then,
/// when `fallback` is set, documents without relation score that contain at
/// least one entity term as a sentence pattern. A fallback score is the
/// fraction of entity terms so matched; the band always sorts below every
/// relation-band entry regardless of its numeric value.
RankedResult rank(const CorpusIndex& index, const RelationSpace& space, const Query& query,
                  bool fallback);

}  // namespace sonet
