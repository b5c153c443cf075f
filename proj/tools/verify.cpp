// Corpus harness: every check over every entry, reported in corpus order.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "common.hpp"
#include "jonesdeg/adequacy.hpp"
#include "jonesdeg/corpus.hpp"
#include "jonesdeg/error.hpp"
#include "jonesdeg/jones.hpp"

namespace jonesdeg::cli {
namespace {

// Column order of the report.
const std::vector<std::string> kChecks = {"labels",  "engines", "ceilings", "degree", "cable-top",
                                          "T",       "beta1",   "mirror",   "kink"};

enum class Status { not_run, pass, fail, skipped };

const char* status_text(Status s) {
  switch (s) {
    case Status::pass:
      return "ok";
    case Status::fail:
      return "FAIL";
    case Status::skipped:
      return "skip";
    case Status::not_run:
      break;
  }
  return "-";
}

struct EntryResult {
  std::map<std::string, Status> status;
  std::vector<std::string> failures;  // "check: detail"
  std::vector<std::string> notes;
  bool a_adequate = false;
  bool b_adequate = false;
  bool aborted = false;  // a resource limit cut the checks short
};

void record(EntryResult& r, const std::string& check, bool ok, const std::string& detail) {
  Status& s = r.status[check];
  if (!ok) {
    s = Status::fail;
    r.failures.push_back(check + ": " + detail);
  } else if (s == Status::not_run) {
    s = Status::pass;
  }
}

// Which column a named failure of the adequacy report belongs to.
std::string column_of(const std::string& failure) {
  const auto starts = [&](const char* p) { return failure.rfind(p, 0) == 0; };
  if (starts("bracket-degree-ceiling") || starts("colored-degree-bound")) return "ceilings";
  if (starts("degree-characterization") || starts("leading-coefficient") || starts("top-coefficient-identification")) {
    return "degree";
  }
  if (starts("T-") || starts("alpha")) return "T";
  if (starts("beta")) return "beta1";
  return "cable-top";
}

void label_checks(const CorpusEntry& e, EntryResult& r) {
  if (e.a_adequate) {
    record(r, "labels", *e.a_adequate == r.a_adequate,
           "label A=" + yes_no(*e.a_adequate) + " but computed A-adequacy is " + yes_no(r.a_adequate));
  }
  if (e.b_adequate) {
    record(r, "labels", *e.b_adequate == r.b_adequate,
           "label B=" + yes_no(*e.b_adequate) + " but computed B-adequacy is " + yes_no(r.b_adequate));
  }
}

void engine_checks(const LinkDiagram& d, const BracketOptions& opt, EntryResult& r) {
  if (d.crossing_count() > opt.cap) {
    r.status["engines"] = Status::skipped;
    r.notes.push_back("engine cross-check skipped: " + std::to_string(d.crossing_count()) +
                      " crossings is above the cap");
    return;
  }
  const StateTally s = tally_statesum(d, opt);
  record(r, "engines", tally_subgraph(d, opt) == s, "subgraph engine differs from the state sum");
  record(r, "engines", tally_fast(d, opt) == s, "sweep engine differs from the state sum");
}

void mirror_checks(const LinkDiagram& d, EntryResult& r) {
  const LinkDiagram m = mirror(d);
  record(r, "mirror", bracket(m) == bracket(d).inverted(), "mirror bracket is not A -> A^-1");
  record(r, "mirror", r.b_adequate == is_A_adequate(m), "B-adequacy differs from A-adequacy of the mirror");
}

void kink_checks(const LinkDiagram& d, const Globals& g, int n_max, EntryResult& r) {
  for (int n = 1; n <= std::min(n_max, 2); ++n) {
    const LaurentPoly base = reduced(d, n, g.engine_kind(), g.bracket_options()).a_form;
    for (int sign : {1, -1}) {
      const LaurentPoly k = reduced(add_kink(d, 1, sign), n, g.engine_kind(), g.bracket_options()).a_form;
      record(r, "kink", k == base,
             std::string(sign > 0 ? "positive" : "negative") + " kink changes J at n=" + std::to_string(n));
    }
  }
}

EntryResult check_entry(const CorpusEntry& e, const Globals& g, int n_max) {
  EntryResult r;
  const LinkDiagram& d = e.diagram;
  if (d.is_empty()) {
    r.notes.push_back("empty diagram: nothing to check");
    return r;
  }
  const BracketOptions opt = g.bracket_options();
  r.a_adequate = is_A_adequate(d);
  r.b_adequate = is_B_adequate(d);
  label_checks(e, r);
  try {
    engine_checks(d, opt, r);
    ReportConfig cfg;
    cfg.n_max = n_max;
    cfg.series = n_max >= 2 ? n_max - 1 : 0;
    cfg.engine = g.engine_kind();
    cfg.bracket = opt;
    const AdequacyReport rep = adequacy_report(d, cfg);
    for (const char* c : {"ceilings", "cable-top"}) r.status[c] = Status::pass;
    if (n_max >= 2) r.status["degree"] = r.status["beta1"] = Status::pass;
    if (n_max >= 3) r.status["T"] = Status::pass;
    for (const auto& f : rep.failures) record(r, column_of(f), false, f);
    for (const auto& note : rep.notes) r.notes.push_back(note);
    mirror_checks(d, r);
    kink_checks(d, g, n_max, r);
  } catch (const ResourceLimit& ex) {
    r.aborted = true;
    for (const auto& c : kChecks) {
      if (r.status[c] == Status::not_run) r.status[c] = Status::skipped;
    }
    r.notes.push_back(std::string("resource limit: ") + ex.what() +
                      (ex.progress().empty() ? "" : " (" + ex.progress() + ")"));
  }
  return r;
}

bool unknot_anchor(std::string& detail) {
  for (int n = 1; n <= 4; ++n) {
    const ReducedJones j = reduced(LinkDiagram::unknot(), n);
    if (!j.in_q || j.q_form != LaurentPoly(1)) {
      detail = "reduced J of the unknot is not 1 at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

}  // namespace

int cmd_verify(const Globals& g, const VerifyConfig& cfg) {
  const std::vector<CorpusEntry> corpus = load_corpus(cfg.path);

  // Entries are spread over the workers; each engine runs single-threaded,
  // and results land in corpus order.
  Globals inner = g;
  const unsigned workers = std::max(1u, std::min<unsigned>(g.workers, static_cast<unsigned>(corpus.size())));
  if (workers > 1) inner.workers = 1;
  std::vector<EntryResult> results(corpus.size());
  std::vector<std::string> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        results[i] = check_entry(corpus[i], inner, cfg.n_max);
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!errors[i].empty()) throw InvariantViolation(corpus[i].name + ": " + errors[i]);
  }

  std::string anchor_detail;
  const bool anchor_ok = unknot_anchor(anchor_detail);
  int failed = anchor_ok ? 0 : 1;
  int skipped = 0;
  for (const auto& r : results) {
    failed += r.failures.empty() ? 0 : 1;
    skipped += r.aborted ? 1 : 0;
  }

  if (g.json) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& e = corpus[i];
      const auto& r = results[i];
      Json checks = Json::object();
      for (const auto& c : kChecks) {
        const auto it = r.status.find(c);
        checks[c] = status_text(it == r.status.end() ? Status::not_run : it->second);
      }
      Json j{{"name", e.name},
             {"crossings", e.diagram.crossing_count()},
             {"checks", checks},
             {"failures", r.failures},
             {"notes", r.notes}};
      if (!e.diagram.is_empty()) {
        j["a_adequate"] = r.a_adequate;
        j["b_adequate"] = r.b_adequate;
      }
      entries.push_back(j);
    }
    print_json(Json{{"command", "verify"},
                    {"n_max", cfg.n_max},
                    {"entries", entries},
                    {"unknot_anchor", anchor_ok},
                    {"failed_entries", failed},
                    {"skipped_entries", skipped}});
  } else {
    std::size_t width = 5;
    for (const auto& e : corpus) width = std::max(width, e.name.size());
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "entry" << std::right << std::setw(4) << "c"
              << std::setw(4) << "A" << std::setw(4) << "B";
    for (const auto& c : kChecks) std::cout << std::setw(10) << c;
    std::cout << "\n";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& e = corpus[i];
      const auto& r = results[i];
      const bool empty = e.diagram.is_empty();
      std::cout << std::left << std::setw(static_cast<int>(width) + 2) << e.name << std::right << std::setw(4)
                << e.diagram.crossing_count() << std::setw(4) << (empty ? "-" : r.a_adequate ? "y" : "n")
                << std::setw(4) << (empty ? "-" : r.b_adequate ? "y" : "n");
      for (const auto& c : kChecks) {
        const auto it = r.status.find(c);
        std::cout << std::setw(10) << status_text(it == r.status.end() ? Status::not_run : it->second);
      }
      std::cout << "\n";
    }
    std::cout << "unknot anchor (J = 1 for n = 1..4): " << (anchor_ok ? "ok" : "FAIL") << "\n";
    // Notes shared by several entries are printed once.
    std::map<std::string, int> seen;
    for (const auto& r : results) {
      for (const auto& n : r.notes) ++seen[n];
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (const auto& n : results[i].notes) {
        if (seen[n] == 1) std::cout << "note " << corpus[i].name << ": " << n << "\n";
      }
    }
    for (const auto& [n, k] : seen) {
      if (k > 1) std::cout << "note (" << k << " entries): " << n << "\n";
    }
  }

  if (!anchor_ok) std::cerr << "jonesdeg: check failed: unknot-anchor: " << anchor_detail << "\n";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const auto& f : results[i].failures) std::cerr << "jonesdeg: check failed: " << corpus[i].name << ": " << f << "\n";
  }
  if (failed > 0) {
    if (!g.json) std::cout << failed << " entries failed\n";
    return EXIT_FAILURE;
  }
  if (skipped > 0) {
    if (!g.json) std::cout << skipped << " entries not fully checked (resource limits)\n";
    return 3;
  }
  if (!g.json) std::cout << "all checks passed (" << corpus.size() << " entries, n <= " << cfg.n_max << ")\n";
  return EXIT_SUCCESS;
}

}  // namespace jonesdeg::cli
