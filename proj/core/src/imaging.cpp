#include "sonet/imaging.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "sonet/events.hpp"

namespace sonet {

Query::Query(std::vector<Term> entity_terms) {
  for (auto& t : entity_terms) {
    if (!contains(t)) entity_terms_.push_back(std::move(t));
  }
  if (entity_terms_.empty()) throw std::invalid_argument("query needs at least one term");
}

Query Query::parse(std::span<const std::string> raw_terms) {
  std::vector<Term> terms;
  terms.reserve(raw_terms.size());
  for (const auto& raw : raw_terms) terms.emplace_back(raw);
  return Query(std::move(terms));
}

std::vector<Term> Query::all_terms() const {
  std::vector<Term> out = entity_terms_;
  for (const auto& e : expanded_) out.push_back(e.term);
  return out;
}

bool Query::contains(const Term& t) const {
  return std::find(entity_terms_.begin(), entity_terms_.end(), t) != entity_terms_.end() ||
         std::any_of(expanded_.begin(), expanded_.end(),
                     [&](const ExpandedTerm& e) { return e.term == t; });
}

bool Query::add_expansion(const Term& t, double strength) {
  if (contains(t)) return false;
  expanded_.push_back({t, strength});
  return true;
}

std::map<std::string, double> doc_prior(const CorpusIndex& index) {
  if (index.total_docs() == 0) throw EmptyUniverseError("document prior over an empty corpus");
  const double p = 1.0 / static_cast<double>(index.total_docs());
  std::map<std::string, double> out;
  for (const auto& doc : index.documents()) out.emplace(doc.id, p);
  return out;
}

RelationSpace relation_prior(const SocialNetwork& net) {
  if (net.edges.empty()) throw EmptyRelationSpaceError("network has no edges");
  RelationSpace space;
  double total = 0.0;
  for (const auto& [pair, edge] : net.edges) {
    if (edge.support.empty()) {
      throw std::invalid_argument("edge " + pair.first + "|" + pair.second + " has no support");
    }
    space.relations.push_back(Relation{pair.first, pair.second,
                                       net.node(pair.first).actor.variants(),
                                       net.node(pair.second).actor.variants(), edge.strength,
                                       edge.support});
    total += edge.strength;
  }
  if (!(total > 0.0)) throw EmptyRelationSpaceError("network edges carry no strength");
  space.prior.reserve(space.relations.size());
  for (const auto& rel : space.relations) space.prior.push_back(rel.strength / total);
  return space;
}

namespace {

bool names(const std::vector<Term>& names, const Term& t) {
  return std::find(names.begin(), names.end(), t) != names.end();
}

}  // namespace

int truth_doc(const Relation& rel, std::string_view doc_id) {
  return std::binary_search(rel.support.begin(), rel.support.end(), doc_id) ? 1 : 0;
}

int truth_query(const Relation& rel, const Query& query) {
  if (query.mode() == QueryMode::Entity) {
    const Term& t = query.entity_terms().front();
    return names(rel.names_a, t) || names(rel.names_b, t) ? 1 : 0;
  }
  const auto terms = query.all_terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!names(rel.names_a, terms[i])) continue;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (j != i && names(rel.names_b, terms[j])) return 1;
    }
  }
  return 0;
}

double imaging_doc_relevance(const RelationSpace& space, std::string_view doc_id) {
  double sum = 0.0;
  for (std::size_t i = 0; i < space.relations.size(); ++i) {
    sum += space.prior[i] * truth_doc(space.relations[i], doc_id);
  }
  return std::min(sum, 1.0);
}

double imaging_query_relevance(const RelationSpace& space, const Query& query) {
  double sum = 0.0;
  for (std::size_t i = 0; i < space.relations.size(); ++i) {
    sum += space.prior[i] * truth_query(space.relations[i], query);
  }
  return std::min(sum, 1.0);
}

double score(const RelationSpace& space, std::string_view doc_id, const Query& query) {
  double sum = 0.0;
  for (std::size_t i = 0; i < space.relations.size(); ++i) {
    const auto& rel = space.relations[i];
    sum += space.prior[i] * truth_doc(rel, doc_id) * truth_query(rel, query);
  }
  return std::min(sum, 1.0);
}

Query expand_query(Query query, const SocialNetwork& net, double min_strength,
                   std::size_t max_neighbors) {
  if (max_neighbors == 0) return query;
  const auto originals = query.entity_terms();
  for (const auto& term : originals) {
    for (const auto& [id, node] : net.nodes) {
      if (!node.actor.named_by(term)) continue;
      std::size_t taken = 0;
      for (const auto& [neighbor, strength] : net.neighbors(id)) {
        if (taken == max_neighbors || strength < min_strength) break;
        const Actor& other = net.node(neighbor).actor;
        const bool is_entity = std::any_of(originals.begin(), originals.end(),
                                           [&](const Term& t) { return other.named_by(t); });
        if (is_entity) continue;
        ++taken;
        query.add_expansion(other.term, strength);
      }
    }
  }
  return query;
}

std::string_view to_string(Band band) noexcept {
  return band == Band::Relation ? "relation" : "fallback";
}

RankedResult rank(const CorpusIndex& index, const RelationSpace& space, const Query& query,
                  bool fallback) {
  RankedResult result{{}, query, fallback};

  // Accumulate relation mass per supported document, in relation order.
  struct Accum {
    double score = 0.0;
    std::vector<std::string> evidence;
  };
  std::map<std::string, Accum, std::less<>> scored;
  for (std::size_t i = 0; i < space.relations.size(); ++i) {
    const auto& rel = space.relations[i];
    if (truth_query(rel, query) == 0) continue;
    for (const auto& doc : rel.support) {
      if (!index.find(doc)) continue;
      auto& acc = scored[doc];
      acc.score += space.prior[i];
      acc.evidence.push_back("relation:" + rel.a + "|" + rel.b);
    }
  }
  for (auto& [doc, acc] : scored) {
    if (acc.score <= 0.0) continue;
    std::sort(acc.evidence.begin(), acc.evidence.end());
    result.entries.push_back({doc, std::min(acc.score, 1.0), Band::Relation, std::move(acc.evidence)});
  }

  if (fallback) {
    const auto& terms = query.entity_terms();
    std::unordered_map<std::uint32_t, std::vector<std::string>> matched;
    for (const auto& term : terms) {
      for (DocId d : profile(index, std::span<const Term>(&term, 1)).implication) {
        matched[to_underlying(d)].push_back("term:" + term.normalized());
      }
    }
    for (auto& [d, evidence] : matched) {
      const auto& id = index.doc_id(DocId{d});
      if (auto it = scored.find(id); it != scored.end() && it->second.score > 0.0) continue;
      const double s = static_cast<double>(evidence.size()) / static_cast<double>(terms.size());
      std::sort(evidence.begin(), evidence.end());
      result.entries.push_back({id, s, Band::Fallback, std::move(evidence)});
    }
  }

  std::sort(result.entries.begin(), result.entries.end(),
            [](const RankedEntry& x, const RankedEntry& y) {
              if (x.band != y.band) return x.band == Band::Relation;
              if (x.score != y.score) return x.score > y.score;
              return x.doc < y.doc;
            });
  return result;
}

}  // namespace sonet
