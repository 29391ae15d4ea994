#include "eval.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sonet/error.hpp"

namespace sonet::cli {

Qrels read_qrels(std::istream& in) {
  Qrels qrels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error("qrels line " + std::to_string(line_no) + ": expected qid<TAB>docid");
    }
    qrels[line.substr(0, tab)].insert(line.substr(tab + 1));
  }
  return qrels;
}

std::vector<EvalQuery> read_eval_queries(std::istream& in) {
  std::vector<EvalQuery> queries;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto where = "queries line " + std::to_string(line_no) + ": ";
    EvalQuery q;
    try {
      const auto obj = nlohmann::json::parse(line);
      q.qid = obj.at("qid").get<std::string>();
      q.terms = obj.at("terms").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(where + e.what());
    }
    if (!seen.insert(q.qid).second) throw Error(where + "duplicate qid '" + q.qid + "'");
    queries.push_back(std::move(q));
  }
  return queries;
}

Cutoff at_k(const std::vector<std::string>& ranked, const std::set<std::string>& relevant,
            std::size_t k) {
  if (k == 0) return {};
  const std::size_t depth = std::min(k, ranked.size());
  const auto hits = std::count_if(ranked.begin(), ranked.begin() + static_cast<long>(depth),
                                  [&](const std::string& d) { return relevant.count(d) > 0; });
  Cutoff c;
  c.precision = static_cast<double>(hits) / static_cast<double>(k);
  c.recall = relevant.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(relevant.size());
  return c;
}

std::string fixed4(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

}  // namespace sonet::cli
