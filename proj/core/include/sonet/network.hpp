#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sonet/corpus.hpp"
#include "sonet/events.hpp"

namespace sonet {

/// An entity with its name pattern and optional alternate names.
struct Actor {
  std::string id;
  Term term;
  std::vector<Term> aliases;

  /// term followed by aliases.
  std::vector<Term> variants() const;
  /// True when `t` is the actor's term or one of its aliases.
  bool named_by(const Term& t) const;

  bool operator==(const Actor&) const = default;
};

/// Throws std::invalid_argument when the id is empty or two name variants coincide.
void validate(const Actor& actor);

/// Reads actors as JSONL: {"id": ..., "name": ..., "aliases": [...]} per line.
/// Throws CorpusError naming the line on malformed input.
std::vector<Actor> read_actors(std::istream& source);

/// Raw counts entering the boundary-corrected Jaccard coefficient.
struct EdgeCounts {
  std::int64_t both = 0;     // |Ωa ∩ Ωb|
  std::int64_t a = 0;        // |Ωa|
  std::int64_t b = 0;        // |Ωb|
  std::int64_t beta_a = 0;
  std::int64_t beta_b = 0;
  std::int64_t beta_ab = 0;

  bool operator==(const EdgeCounts&) const = default;
};

/// (both - βab) / (a + b - both - βa - βb + βab), clamped into [0, 1]. A
/// nonpositive denominator or a negative numerator gives 0.
double boundary_jaccard(const EdgeCounts& c) noexcept;

struct NodeRecord {
  Actor actor;
  double weight = 0.0;  // (|Ωa| - βa) / |Ω|
  std::size_t members = 0;
  std::size_t boundary = 0;

  bool operator==(const NodeRecord&) const = default;
};

struct EdgeRecord {
  double strength = 0.0;
  std::vector<std::string> support;  // doc ids where the pair co-occurs within the window
  EdgeCounts counts;

  bool operator==(const EdgeRecord&) const = default;
};

using ActorPair = std::pair<std::string, std::string>;

/// Makes (a, b) with a < b.
ActorPair canonical_pair(std::string a, std::string b);

/// Undirected weighted co-occurrence network over actors. Edges are keyed by
/// canonically ordered actor id pairs.
struct SocialNetwork {
  std::map<std::string, NodeRecord> nodes;
  std::map<ActorPair, EdgeRecord> edges;
  double threshold = 0.0;
  std::size_t window = 0;

  const NodeRecord& node(const std::string& id) const;
  /// Neighbor ids with edge strength, strongest first, ties by id.
  std::vector<std::pair<std::string, double>> neighbors(const std::string& id) const;

  bool operator==(const SocialNetwork&) const = default;
};

/// Throws EmptyUniverseError on an empty index.
double node_weight(const CorpusIndex& index, const Actor& actor);

/// Throws InvalidPairError when a and b are the same actor or share a name.
double edge_strength(const CorpusIndex& index, const Actor& a, const Actor& b,
                     std::size_t window = 0);

/// One node per actor and an edge for every pair whose strength is positive
/// and at least `threshold`. Throws std::invalid_argument on duplicate actor
/// ids or a threshold outside [0, 1]. The result does not depend on actor order.
SocialNetwork extract_network(const CorpusIndex& index, std::vector<Actor> actors,
                              double threshold = 0.0, std::size_t window = 0);

enum class GraphFormat { Json, Tsv };

/// JSON: {"edges":[{source,strength,support,target}],"nodes":[{id,label,weight}]}
/// with sorted keys, nodes by id and edges by (source, target).
/// TSV: one "source<TAB>target<TAB>strength" line per edge.
/// Returns the number of bytes written.
std::size_t export_network(const SocialNetwork& net, std::ostream& sink, GraphFormat format);

/// Shortest decimal form that round-trips.
std::string format_number(double value);

}  // namespace sonet
