#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mcnum/report.hpp"
#include "mcnum/solver.hpp"

namespace mcnum {

/// format, bounds, fastpaths, thm21, thm24, prop13, planar-table,
/// constructions, oracle.
const std::vector<std::string>& all_checks();

/// Comma-separated tags, or "all". Throws PreconditionError on unknown tags.
std::vector<std::string> parse_check_list(std::string_view list);

struct CorpusLimits {
  int max_n = 16;
  int jobs = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct Violation {
  std::size_t line = 0;
  std::string graph6;
  std::string check;
  std::string expected;
  std::string actual;
};

struct SkippedGraph {
  std::size_t line = 0;
  std::string graph6;
};

struct CorpusReport {
  std::size_t graphs_processed = 0;
  std::vector<SkippedGraph> skipped;
  std::vector<Violation> violations;
  std::vector<std::string> checks_run;
  /// Wall time per check in seconds. Not part of the deterministic records.
  std::map<std::string, double> timing;
};

/// Reads one graph6 record per nonblank line and evaluates the checks on
/// each. Parse failures and disconnected graphs are reported under "format"
/// whether or not it is enabled; an exhausted solver budget under "budget".
/// Results are merged by line regardless of `jobs`. Throws Error when the
/// stream cannot be read.
CorpusReport run_corpus(std::istream& in, const std::vector<std::string>& checks, const CorpusLimits& limits);

/// The summary record followed by one record per skip and per violation, in
/// line order.
std::vector<Record> corpus_records(const CorpusReport& report);

}  // namespace mcnum
