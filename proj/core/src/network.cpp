#include "sonet/network.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sonet {

std::vector<Term> Actor::variants() const {
  std::vector<Term> out;
  out.reserve(1 + aliases.size());
  out.push_back(term);
  out.insert(out.end(), aliases.begin(), aliases.end());
  return out;
}

bool Actor::named_by(const Term& t) const {
  return term == t || std::find(aliases.begin(), aliases.end(), t) != aliases.end();
}

void validate(const Actor& actor) {
  if (actor.id.empty()) throw std::invalid_argument("actor with empty id");
  auto names = actor.variants();
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    throw std::invalid_argument("actor '" + actor.id + "' lists the same name twice");
  }
}

std::vector<Actor> read_actors(std::istream& source) {
  std::vector<Actor> actors;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto where = "actors line " + std::to_string(line_no) + ": ";
    try {
      const auto obj = nlohmann::json::parse(line);
      if (!obj.is_object() || !obj.contains("id") || !obj.contains("name")) {
        throw CorpusError(where + "expected an object with \"id\" and \"name\"");
      }
      Actor actor{obj.at("id").get<std::string>(), Term(obj.at("name").get<std::string>()), {}};
      if (obj.contains("aliases")) {
        for (const auto& alias : obj.at("aliases")) {
          actor.aliases.emplace_back(alias.get<std::string>());
        }
      }
      validate(actor);
      actors.push_back(std::move(actor));
    } catch (const nlohmann::json::exception& e) {
      throw CorpusError(where + e.what());
    } catch (const std::invalid_argument& e) {
      throw CorpusError(where + e.what());
    }
  }
  return actors;
}

double boundary_jaccard(const EdgeCounts& c) noexcept {
  const std::int64_t numerator = c.both - c.beta_ab;
  const std::int64_t denominator = c.a + c.b - c.both - c.beta_a - c.beta_b + c.beta_ab;
  if (denominator <= 0 || numerator < 0) return 0.0;
  if (numerator >= denominator) return 1.0;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

ActorPair canonical_pair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

const NodeRecord& SocialNetwork::node(const std::string& id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) throw LookupError("unknown actor '" + id + "'");
  return it->second;
}

std::vector<std::pair<std::string, double>> SocialNetwork::neighbors(const std::string& id) const {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [pair, edge] : edges) {
    if (pair.first == id) out.emplace_back(pair.second, edge.strength);
    if (pair.second == id) out.emplace_back(pair.first, edge.strength);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second > y.second : x.first < y.first;
  });
  return out;
}

namespace {

std::int64_t count(std::size_t n) { return static_cast<std::int64_t>(n); }

EdgeCounts edge_counts(const EventSpace& a, const EventSpace& b, const EventSpace& ab) {
  return EdgeCounts{count(ab.members.size()), count(a.members.size()), count(b.members.size()),
                    count(a.boundary),        count(b.boundary),        count(ab.boundary)};
}

}  // namespace

double node_weight(const CorpusIndex& index, const Actor& actor) {
  const auto names = actor.variants();
  return implication_prob(singleton_event(index, names));
}

double edge_strength(const CorpusIndex& index, const Actor& a, const Actor& b,
                     std::size_t window) {
  if (a.id == b.id) throw InvalidPairError("edge needs two distinct actors, got '" + a.id + "'");
  const auto pa = profile(index, a.variants());
  const auto pb = profile(index, b.variants());
  const auto ab = doubleton_event(pa, pb, window);
  return boundary_jaccard(edge_counts(singleton_event(pa), singleton_event(pb), ab));
}

SocialNetwork extract_network(const CorpusIndex& index, std::vector<Actor> actors,
                              double threshold, std::size_t window) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in [0, 1]");
  }
  std::sort(actors.begin(), actors.end(),
            [](const Actor& x, const Actor& y) { return x.id < y.id; });
  auto dup = std::adjacent_find(actors.begin(), actors.end(),
                                [](const Actor& x, const Actor& y) { return x.id == y.id; });
  if (dup != actors.end()) throw std::invalid_argument("duplicate actor id '" + dup->id + "'");

  SocialNetwork net;
  net.threshold = threshold;
  net.window = window;
  if (actors.empty()) return net;
  if (index.total_docs() == 0) throw EmptyUniverseError("cannot weigh actors over an empty corpus");

  std::vector<PatternProfile> profiles;
  std::vector<EventSpace> singles;
  profiles.reserve(actors.size());
  singles.reserve(actors.size());
  for (const auto& actor : actors) {
    validate(actor);
    profiles.push_back(profile(index, actor.variants()));
    singles.push_back(singleton_event(profiles.back()));
    const auto& ev = singles.back();
    net.nodes.emplace(actor.id,
                      NodeRecord{actor, implication_prob(ev), ev.members.size(), ev.boundary});
  }

  for (std::size_t i = 0; i < actors.size(); ++i) {
    for (std::size_t j = i + 1; j < actors.size(); ++j) {
      // Cheap reject: no shared document means no edge.
      if (intersect(singles[i].members, singles[j].members).empty()) continue;
      const auto ab = doubleton_event(profiles[i], profiles[j], window);
      const auto counts = edge_counts(singles[i], singles[j], ab);
      const double strength = boundary_jaccard(counts);
      if (strength <= 0.0 || strength < threshold) continue;
      net.edges.emplace(ActorPair{actors[i].id, actors[j].id},
                        EdgeRecord{strength, index.ids(ab.implication_members), counts});
    }
  }
  return net;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

std::size_t export_network(const SocialNetwork& net, std::ostream& sink, GraphFormat format) {
  std::string out;
  if (format == GraphFormat::Tsv) {
    for (const auto& [pair, edge] : net.edges) {
      out += pair.first + '\t' + pair.second + '\t' + format_number(edge.strength) + '\n';
    }
  } else {
    auto nodes = nlohmann::json::array();
    for (const auto& [id, node] : net.nodes) {
      nodes.push_back({{"id", id}, {"label", node.actor.term.raw()}, {"weight", node.weight}});
    }
    auto edges = nlohmann::json::array();
    for (const auto& [pair, edge] : net.edges) {
      edges.push_back({{"source", pair.first},
                       {"target", pair.second},
                       {"strength", edge.strength},
                       {"support", edge.support}});
    }
    nlohmann::json graph{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
    out = graph.dump() + '\n';
  }
  sink.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!sink) throw Error("failed writing graph");
  return out.size();
}

}  // namespace sonet
