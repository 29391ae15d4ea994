#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace sonet::cli {

/// Query id -> relevant document ids.
using Qrels = std::map<std::string, std::set<std::string>>;

/// "qid<TAB>docid" per line; blank lines are skipped.
Qrels read_qrels(std::istream& in);

struct EvalQuery {
  std::string qid;
  std::vector<std::string> terms;
};

/// {"qid": ..., "terms": [...]} per line. Throws on duplicate qids.
std::vector<EvalQuery> read_eval_queries(std::istream& in);

struct Cutoff {
  double precision = 0.0;
  double recall = 0.0;
};

/// Precision and recall of the first k ranked ids. Precision divides by k,
/// recall by the number of relevant documents (0 when there are none).
Cutoff at_k(const std::vector<std::string>& ranked, const std::set<std::string>& relevant,
            std::size_t k);

/// Fixed four-decimal rendering.
std::string fixed4(double value);

}  // namespace sonet::cli
