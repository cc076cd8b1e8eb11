#include "mcnum/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cctype>
#include <functional>
#include <optional>
#include <set>
#include <thread>

#include "mcnum/classifier.hpp"
#include "mcnum/errors.hpp"
#include "mcnum/graph6.hpp"
#include "mcnum/structure.hpp"

namespace mcnum {

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> tags{"format", "bounds",        "fastpaths",     "thm21", "thm24",
                                             "prop13", "planar-table", "constructions", "oracle"};
  return tags;
}

std::vector<std::string> parse_check_list(std::string_view list) {
  if (list == "all") return all_checks();
  std::set<std::string> wanted;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string tag(list.substr(start, comma - start));
    if (!tag.empty()) {
      if (std::find(all_checks().begin(), all_checks().end(), tag) == all_checks().end()) {
        throw PreconditionError("unknown check '" + tag + "'");
      }
      wanted.insert(tag);
    }
    start = comma + 1;
  }
  std::vector<std::string> out;
  for (const auto& tag : all_checks()) {
    if (wanted.count(tag) != 0) out.push_back(tag);
  }
  return out;
}

namespace {

std::string eq(int v) { return "mc = " + std::to_string(v); }

struct GraphOutcome {
  bool skipped = false;
  bool parsed = false;
  std::vector<Violation> violations;
  std::map<std::string, double> timing;
};

class GraphChecker {
 public:
  GraphChecker(std::size_t line, std::string text, const std::vector<std::string>& checks, const CorpusLimits& limits)
      : line_(line), text_(std::move(text)), checks_(checks), limits_(limits) {}

  GraphOutcome run() {
    Graph g;
    try {
      g = parse_graph6(text_);
    } catch (const Error& e) {
      fail("format", "valid graph6", e.what());
      return std::move(out_);
    }
    out_.parsed = true;
    if (g.order() > limits_.max_n) {
      out_.skipped = true;
      return std::move(out_);
    }
    if (g.order() == 0 || !g.is_connected()) {
      fail("format", "connected graph", std::to_string(g.components().size()) + " components");
      return std::move(out_);
    }
    g_ = &g;
    try {
      timed("solver", [&] { mc_ = mc_exact(g, SearchOptions{limits_.node_budget}).mc; });
    } catch (const ResourceError& e) {
      fail("budget", "search within node budget", e.what());
      return std::move(out_);
    }
    for (const auto& check : checks_) {
      timed(check, [&] { dispatch(check); });
    }
    return std::move(out_);
  }

 private:
  void fail(const std::string& check, std::string expected, std::string actual) {
    out_.violations.push_back(Violation{line_, text_, check, std::move(expected), std::move(actual)});
  }

  void timed(const std::string& tag, const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    out_.timing[tag] += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  int n() const { return g_->order(); }
  int m() const { return g_->edge_count(); }

  const MCClassification& classification() {
    if (!classification_) classification_ = classify(*g_);
    return *classification_;
  }

  void dispatch(const std::string& check) {
    if (check == "bounds") return bounds();
    if (check == "fastpaths") return fastpaths();
    if (check == "thm21") return thm21();
    if (check == "thm24") return thm24();
    if (check == "prop13") return prop13();
    if (check == "planar-table") return planar_table();
    if (check == "constructions") return constructions();
    if (check == "oracle") return oracle();
  }

  void bounds() {
    if (n() >= 2) {
      const int lo = m() - n() + 2;
      const int hi = m() - n() + chromatic_number(*g_);
      if (mc_ < lo || mc_ > hi) {
        fail("bounds", std::to_string(lo) + " <= mc <= " + std::to_string(hi), eq(mc_));
      }
      if (!g_->is_complete()) {
        const int cap = m() - n() + vertex_connectivity(*g_) + 1;
        if (mc_ > cap) fail("bounds", "mc <= " + std::to_string(cap), eq(mc_));
      }
    }
    const auto& c = classification();
    if (mc_ < c.lower() || mc_ > c.upper()) {
      fail("bounds", "classifier [" + std::to_string(c.lower()) + ", " + std::to_string(c.upper()) + "]", eq(mc_));
    }
  }

  void fastpaths() {
    if (n() < 3) return;
    if (auto rule = quick_floor(*g_)) {
      if (mc_ != m() - n() + 2) fail("fastpaths", eq(m() - n() + 2) + " (" + std::string(*rule) + ")", eq(mc_));
    }
  }

  void thm21() {
    if (n() < 2) return;
    const int k = vertex_connectivity(*g_);
    if (k < 2) return;
    const bool family = recognize_family_A(*g_, k) || recognize_perfectly_connected(*g_, k);
    const bool top = mc_ == m() - n() + k + 1;
    if (family != top) {
      fail("thm21", family ? eq(m() - n() + k + 1) : "mc != " + std::to_string(m() - n() + k + 1), eq(mc_));
    }
  }

  void thm24() {
    if (n() < 2) return;
    const int k = vertex_connectivity(*g_);
    if (k < 3) return;
    const bool family = recognize_family_B(*g_, k).has_value();
    const bool hit = mc_ == m() - n() + k;
    if (family != hit) fail("thm24", family ? eq(m() - n() + k) : "mc != " + std::to_string(m() - n() + k), eq(mc_));
  }

  void prop13() {
    const int s = g_->min_degree();
    if (recognize_perfectly_connected(*g_, s)) {
      if (mc_ != m() - n() + s + 1) fail("prop13", eq(m() - n() + s + 1), eq(mc_));
    } else if (mc_ > m() - n() + s) {
      fail("prop13", "mc <= " + std::to_string(m() - n() + s), eq(mc_));
    }
  }

  void planar_table() {
    if (!is_planar(*g_)) return;
    const auto& c = classification();
    if (!c.is_exact()) {
      fail("planar-table", "exact verdict", "bounds");
    } else if (c.exact().value != mc_) {
      fail("planar-table", eq(c.exact().value), eq(mc_));
    }
    const int ceiling = m() - n() + 4;
    const bool special = find_special_join(*g_, JoinKind::K2JoinPath).has_value();
    if (mc_ > ceiling || (mc_ == ceiling) != special) {
      fail("planar-table", special ? eq(ceiling) : "mc < " + std::to_string(ceiling), eq(mc_));
    }
  }

  void constructed(const FamilyWitness& w, int expected, bool exact) {
    const std::string family(family_name(w));
    const MCColoring c = construct_coloring(*g_, w);
    const VerificationReport r = verify_coloring(*g_, c);
    if (!r.valid) {
      fail("constructions", family + " coloring valid", std::string(to_string(*r.failing_reason)));
    } else if (r.colors_used != expected || r.colors_used > mc_ || (exact && r.colors_used != mc_)) {
      fail("constructions", family + " coloring with " + std::to_string(expected) + " colors",
           std::to_string(r.colors_used) + " colors, " + eq(mc_));
    }
  }

  void constructions() {
    const auto& c = classification();
    if (c.is_exact() && c.exact().witness) constructed(*c.exact().witness, c.exact().value, true);
    const int base = m() - n();
    if (auto w = recognize_P1(*g_)) constructed(*w, base + 3, false);
    if (auto w = recognize_P2(*g_)) constructed(*w, base + 3, false);
    if (auto w = recognize_special_join(*g_)) {
      constructed(*w, base + (w->kind == JoinKind::K2JoinPath ? 4 : 3), false);
    }
  }

  void oracle() {
    if (m() > 12) return;
    const int u = mc_exact_unrestricted(*g_).mc;
    if (u != mc_) fail("oracle", eq(u), eq(mc_));
  }

  std::size_t line_;
  std::string text_;
  const std::vector<std::string>& checks_;
  const CorpusLimits& limits_;
  GraphOutcome out_;
  const Graph* g_ = nullptr;
  int mc_ = 0;
  std::optional<MCClassification> classification_;
};

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch) != 0; });
}

}  // namespace

CorpusReport run_corpus(std::istream& in, const std::vector<std::string>& checks, const CorpusLimits& limits) {
  if (!in) throw Error("corpus input stream is not readable");
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (!blank(text)) lines.emplace_back(number, text);
  }
  if (in.bad()) throw Error("error while reading corpus input");

  std::vector<GraphOutcome> outcomes(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      outcomes[i] = GraphChecker(lines[i].first, lines[i].second, checks, limits).run();
    }
  };
  const int jobs = std::max(1, limits.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  CorpusReport report;
  report.checks_run = checks;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (o.parsed) ++report.graphs_processed;
    if (o.skipped) report.skipped.push_back(SkippedGraph{lines[i].first, lines[i].second});
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
    for (const auto& [tag, seconds] : o.timing) report.timing[tag] += seconds;
  }
  return report;
}

std::vector<Record> corpus_records(const CorpusReport& report) {
  std::vector<Record> out;
  out.push_back(Record{{"record", "summary"},
                       {"graphs_processed", report.graphs_processed},
                       {"skipped", report.skipped.size()},
                       {"violations", report.violations.size()},
                       {"checks_run", report.checks_run}});
  std::size_t s = 0;
  std::size_t v = 0;
  while (s < report.skipped.size() || v < report.violations.size()) {
    const bool take_skip = v == report.violations.size() ||
                           (s < report.skipped.size() && report.skipped[s].line < report.violations[v].line);
    if (take_skip) {
      const SkippedGraph& x = report.skipped[s++];
      out.push_back(Record{{"record", "skipped"}, {"line", x.line}, {"graph6", x.graph6}});
    } else {
      const Violation& x = report.violations[v++];
      out.push_back(Record{{"record", "violation"},
                           {"line", x.line},
                           {"graph6", x.graph6},
                           {"check", x.check},
                           {"expected", x.expected},
                           {"actual", x.actual}});
    }
  }
  return out;
}

}  // namespace mcnum
