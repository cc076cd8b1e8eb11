#include "mcnum/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mcnum/classifier.hpp"
#include "mcnum/corpus.hpp"
#include "mcnum/errors.hpp"
#include "mcnum/graph6.hpp"
#include "mcnum/report.hpp"
#include "mcnum/solver.hpp"

namespace mcnum {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> graph_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::uint64_t parse_budget(const std::string& text, const std::string& source) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used == text.size() && v > 0 && text.find('-') == std::string::npos) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(source + " must be a positive integer, got '" + text + "'");
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("MCNUM_NODE_BUDGET"); env != nullptr && *env != '\0') {
    return parse_budget(env, "MCNUM_NODE_BUDGET");
  }
  return kDefaultNodeBudget;
}

Record error_record(std::string_view kind, std::string_view input, std::string_view message) {
  return Record{{"error", kind}, {"input", input}, {"message", message}};
}

class Session {
 public:
  CommandResult result;

  void emit(const Record& r) { result.out += to_line(r) + "\n"; }
  void report(int code, const Record& r) {
    result.err += to_line(r) + "\n";
    result.exit_code = std::max(result.exit_code, code);
  }

  /// Applies `body` to each input graph, mapping library errors to exit codes.
  template <typename Body>
  void for_each_graph(const std::vector<std::string>& inputs, Body body) {
    for (const auto& text : inputs) {
      try {
        const Graph g = parse_graph6(text);
        body(text, g);
      } catch (const FormatError& e) {
        report(kExitUsage, error_record("format", text, e.what()));
      } catch (const UnsupportedSizeError& e) {
        report(kExitUsage, error_record("format", text, e.what()));
      } catch (const PreconditionError& e) {
        report(kExitUsage, error_record("precondition", text, e.what()));
      } catch (const ResourceError& e) {
        report(kExitViolation, error_record("budget", text, e.what()));
      }
    }
  }
};

struct Inputs {
  std::string graph6;
  std::string file;

  std::vector<std::string> lines() const {
    if (graph6.empty() == file.empty()) throw UsageError("give exactly one of <g6> or -f FILE");
    return file.empty() ? std::vector<std::string>{graph6} : graph_lines(read_file(file));
  }
};

void add_inputs(CLI::App& cmd, Inputs& in) {
  cmd.add_option("g6", in.graph6, "graph6 string");
  cmd.add_option("-f,--file", in.file, "file with one graph6 string per line");
}

}  // namespace

CommandResult execute_command(const std::vector<std::string>& args) {
  CLI::App app{"Monochromatic connection numbers of small graphs", "mcnum"};
  app.require_subcommand(1);

  Inputs exact_in;
  auto* exact_cmd = app.add_subcommand("exact", "exact mc by branch and bound");
  add_inputs(*exact_cmd, exact_in);

  Inputs classify_in;
  auto* classify_cmd = app.add_subcommand("classify", "exact value or bounds from structure");
  add_inputs(*classify_cmd, classify_in);

  std::string color_g6;
  auto* color_cmd = app.add_subcommand("color", "coloring from the recognized family");
  color_cmd->add_option("g6", color_g6, "graph6 string")->required();

  std::string verify_g6;
  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a coloring file");
  verify_cmd->add_option("--graph", verify_g6, "graph6 string")->required();
  verify_cmd->add_option("--coloring", verify_path, "coloring file")->required();

  std::string corpus_path;
  std::string checks = "all";
  CorpusLimits limits;
  std::optional<std::string> budget_flag;
  auto* corpus_cmd = app.add_subcommand("corpus", "cross-validate a graph6 corpus");
  corpus_cmd->add_option("-f,--file", corpus_path, "graph6 corpus")->required();
  corpus_cmd->add_option("--checks", checks, "comma-separated check tags or 'all'");
  corpus_cmd->add_option("--max-n", limits.max_n, "skip graphs with more vertices");
  corpus_cmd->add_option("--jobs", limits.jobs, "worker threads")->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--node-budget", budget_flag, "solver node budget per graph");

  Session s;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    s.result.out = out.str();
    s.result.err = err.str();
    s.result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return s.result;
  }

  try {
    const std::uint64_t budget = budget_flag ? parse_budget(*budget_flag, "--node-budget") : default_budget();
    if (*exact_cmd) {
      s.for_each_graph(exact_in.lines(), [&](const std::string& text, const Graph& g) {
        s.emit(exact_record(text, g, mc_exact(g, SearchOptions{budget})));
      });
    } else if (*classify_cmd) {
      s.for_each_graph(classify_in.lines(), [&](const std::string& text, const Graph& g) {
        s.emit(classification_record(text, g, classify(g)));
      });
    } else if (*color_cmd) {
      s.for_each_graph({color_g6}, [&](const std::string& text, const Graph& g) {
        const MCClassification c = classify(g);
        if (c.is_exact() && c.exact().witness) {
          s.emit(coloring_record(construct_coloring(g, *c.exact().witness)));
        } else {
          s.report(kExitViolation, error_record("no-family", text, "no family recognizer fires"));
        }
      });
    } else if (*verify_cmd) {
      const MCColoring c = parse_coloring(read_file(verify_path));
      s.for_each_graph({verify_g6}, [&](const std::string&, const Graph& g) {
        if (c.n != g.order()) {
          throw PreconditionError("coloring has n=" + std::to_string(c.n) + " but the graph has " +
                                  std::to_string(g.order()) + " vertices");
        }
        const VerificationReport r = verify_coloring(g, c);
        s.emit(verification_record(r));
        if (!r.valid) s.result.exit_code = std::max(s.result.exit_code, kExitViolation);
      });
    } else if (*corpus_cmd) {
      limits.node_budget = budget;
      const auto tags = parse_check_list(checks);
      std::ifstream in(corpus_path);
      if (!in) throw UsageError("cannot open '" + corpus_path + "'");
      const CorpusReport report = run_corpus(in, tags, limits);
      for (const Record& r : corpus_records(report)) s.emit(r);
      Record timing{{"record", "timing"}};
      for (const auto& [tag, seconds] : report.timing) timing[tag] = seconds;
      s.result.err += to_line(timing) + "\n";
      if (!report.violations.empty()) s.result.exit_code = kExitViolation;
    }
  } catch (const UsageError& e) {
    s.report(kExitUsage, error_record("usage", "", e.what()));
  } catch (const FormatError& e) {
    s.report(kExitUsage, error_record("format", "", e.what()));
  } catch (const PreconditionError& e) {
    s.report(kExitUsage, error_record("usage", "", e.what()));
  } catch (const Error& e) {
    s.report(kExitUsage, error_record("input", "", e.what()));
  }
  return s.result;
}

}  // namespace mcnum
