#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eval.hpp"
#include "sonet/corpus.hpp"
#include "sonet/imaging.hpp"
#include "sonet/network.hpp"

namespace sonet::cli {
namespace {

struct RunConfig {
  std::string corpus;
  std::string index;
  std::string actors;
  std::string out;
  std::size_t window = 0;
  double threshold = 0.0;
  bool expand = false;
  double min_strength = 0.1;
  std::size_t max_neighbors = 5;
  bool no_fallback = false;
  std::string format = "json";
  std::vector<std::string> terms;
  std::string queries;
  std::string qrels;
  std::size_t k = 10;
};

CorpusIndex open_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("index not found: " + path);
  return load_index(in);
}

std::vector<Actor> open_actors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("actors not found: " + path);
  return read_actors(in);
}

std::ifstream open_input(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw Error(what + " not found: " + path);
  return in;
}

GraphFormat graph_format(const RunConfig& cfg) {
  return cfg.format == "tsv" ? GraphFormat::Tsv : GraphFormat::Json;
}

// Network and relation space for query-style commands; both empty without --actors.
struct Retrieval {
  CorpusIndex index;
  std::optional<SocialNetwork> network;
  RelationSpace space;
};

Retrieval prepare(const RunConfig& cfg) {
  Retrieval r{open_index(cfg.index), std::nullopt, {}};
  if (!cfg.actors.empty()) {
    r.network = extract_network(r.index, open_actors(cfg.actors), cfg.threshold, cfg.window);
    if (!r.network->edges.empty()) r.space = relation_prior(*r.network);
  }
  return r;
}

RankedResult run_query(const Retrieval& r, const RunConfig& cfg,
                       std::span<const std::string> terms) {
  Query query = Query::parse(terms);
  if (cfg.expand && r.network) {
    query = expand_query(std::move(query), *r.network, cfg.min_strength, cfg.max_neighbors);
  }
  return rank(r.index, r.space, query, !cfg.no_fallback);
}

int cmd_index(const RunConfig& cfg, std::ostream& out) {
  const auto index = ingest_path(cfg.corpus);
  std::ofstream sink(cfg.out, std::ios::binary | std::ios::trunc);
  if (!sink) throw Error("cannot write index: " + cfg.out);
  save_index(index, sink);
  sink.close();
  if (!sink) throw Error("failed writing index: " + cfg.out);
  out << index.total_docs() << " docs, " << index.distinct_words() << " distinct words\n";
  return 0;
}

int cmd_network(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto index = open_index(cfg.index);
  const auto net = extract_network(index, open_actors(cfg.actors), cfg.threshold, cfg.window);
  const std::string summary =
      std::to_string(net.nodes.size()) + " nodes, " + std::to_string(net.edges.size()) + " edges\n";
  if (cfg.out.empty()) {
    export_network(net, out, graph_format(cfg));
    err << summary;
  } else {
    std::ofstream sink(cfg.out, std::ios::binary | std::ios::trunc);
    if (!sink) throw Error("cannot write graph: " + cfg.out);
    export_network(net, sink, graph_format(cfg));
    out << summary;
  }
  return 0;
}

void print_ranked(const RankedResult& result, const RunConfig& cfg, std::ostream& out) {
  for (const auto& e : result.entries) {
    if (cfg.format == "tsv") {
      out << e.doc << '\t' << format_number(e.score) << '\t' << to_string(e.band) << '\t';
      for (std::size_t i = 0; i < e.evidence.size(); ++i) out << (i ? "," : "") << e.evidence[i];
      out << '\n';
    } else {
      nlohmann::json line{{"doc", e.doc},
                          {"score", e.score},
                          {"band", std::string(to_string(e.band))},
                          {"evidence", e.evidence}};
      out << line.dump() << '\n';
    }
  }
}

int cmd_query(const RunConfig& cfg, std::ostream& out) {
  const auto r = prepare(cfg);
  print_ranked(run_query(r, cfg, cfg.terms), cfg, out);
  return 0;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto queries_in = open_input(cfg.queries, "queries");
  auto qrels_in = open_input(cfg.qrels, "qrels");
  const auto queries = read_eval_queries(queries_in);
  const auto qrels = read_qrels(qrels_in);

  for (const auto& q : queries) {
    if (!qrels.count(q.qid)) throw Error("qid '" + q.qid + "' has no relevance judgments");
  }
  for (const auto& [qid, docs] : qrels) {
    const bool known = std::any_of(queries.begin(), queries.end(),
                                   [&](const EvalQuery& q) { return q.qid == qid; });
    if (!known) throw Error("qrels qid '" + qid + "' is not in the queries file");
  }

  const std::string suffix = "@" + std::to_string(cfg.k);
  double sum_p = 0.0;
  double sum_r = 0.0;
  if (!queries.empty()) {
    const auto r = prepare(cfg);
    for (const auto& q : queries) {
      const auto result = run_query(r, cfg, q.terms);
      std::vector<std::string> ranked;
      for (const auto& e : result.entries) ranked.push_back(e.doc);
      const auto c = at_k(ranked, qrels.at(q.qid), cfg.k);
      sum_p += c.precision;
      sum_r += c.recall;
      out << q.qid << "\tP" << suffix << '=' << fixed4(c.precision) << "\tR" << suffix << '='
          << fixed4(c.recall) << '\n';
    }
  } else {
    err << "warning: no queries; reporting mean over zero queries as 0\n";
  }
  const double n = queries.empty() ? 1.0 : static_cast<double>(queries.size());
  out << "mean\tP" << suffix << '=' << fixed4(sum_p / n) << "\tR" << suffix << '='
      << fixed4(sum_r / n) << '\n';
  return 0;
}

void add_retrieval_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--index", cfg.index, "Index file written by `index`")->required();
  cmd->add_option("--actors", cfg.actors, "Actors JSONL {id,name,aliases}");
  cmd->add_option("--window", cfg.window, "Sentence window for co-occurrence")->capture_default_str();
  cmd->add_option("--threshold", cfg.threshold, "Minimum edge strength")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_flag("--expand", cfg.expand, "Expand queries with network neighbors");
  cmd->add_option("--min-strength", cfg.min_strength, "Expansion edge threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--max-neighbors", cfg.max_neighbors, "Expansion neighbors per term")
      ->capture_default_str();
  cmd->add_flag("--no-fallback", cfg.no_fallback, "Drop documents without relation score");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Entity network extraction and relation-based document ranking", "sonet"};
  app.require_subcommand(1);

  auto* index = app.add_subcommand("index", "Build an index from a corpus");
  index->add_option("--corpus", cfg.corpus, "JSONL corpus or directory of .txt files")->required();
  index->add_option("--out", cfg.out, "Index file to write")->required();

  auto* network = app.add_subcommand("network", "Extract and export the actor network");
  network->add_option("--index", cfg.index, "Index file")->required();
  network->add_option("--actors", cfg.actors, "Actors JSONL {id,name,aliases}")->required();
  network->add_option("--out", cfg.out, "Graph file (stdout when omitted)");
  network->add_option("--window", cfg.window, "Sentence window")->capture_default_str();
  network->add_option("--threshold", cfg.threshold, "Minimum edge strength")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  network->add_option("--format", cfg.format, "Graph format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();

  auto* query = app.add_subcommand("query", "Rank documents for entity names");
  add_retrieval_flags(query, cfg);
  query->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  query->add_option("terms", cfg.terms, "Entity names")->required();

  auto* eval = app.add_subcommand("eval", "Precision and recall at k against qrels");
  add_retrieval_flags(eval, cfg);
  eval->add_option("--queries", cfg.queries, "Queries JSONL {qid,terms}")->required();
  eval->add_option("--qrels", cfg.qrels, "Relevance judgments qid<TAB>docid")->required();
  eval->add_option("--k", cfg.k, "Cutoff")->check(CLI::PositiveNumber)->capture_default_str();

  std::vector<const char*> argv{"sonet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (index->parsed()) return cmd_index(cfg, out);
    if (network->parsed()) return cmd_network(cfg, out, err);
    if (query->parsed()) return cmd_query(cfg, out);
    if (eval->parsed()) return cmd_eval(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace sonet::cli
