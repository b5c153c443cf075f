#include "jonesdeg/corpus.hpp"

#include <fstream>
#include <sstream>

#include "jonesdeg/error.hpp"

namespace jonesdeg {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \r\n");
  return s.substr(b, e - b + 1);
}

bool parse_flag(const std::string& v, const std::string& where) {
  if (v == "yes" || v == "true" || v == "1") return true;
  if (v == "no" || v == "false" || v == "0") return false;
  throw ParseError(where + ": bad label value '" + v + "'");
}

void parse_labels(const std::string& text, CorpusEntry& e, const std::string& where) {
  if (text.empty() || text == "-") return;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError(where + ": bad label '" + item + "'");
    const std::string key = item.substr(0, eq);
    const bool v = parse_flag(item.substr(eq + 1), where);
    if (key == "A") {
      e.a_adequate = v;
    } else if (key == "B") {
      e.b_adequate = v;
    } else {
      throw ParseError(where + ": unknown label '" + key + "'");
    }
  }
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& source) {
  std::vector<CorpusEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const std::string where = source + ":" + std::to_string(lineno);
    const auto cols = split_tabs(line);
    if (cols.size() < 2) throw ParseError(where + ": expected name<TAB>pd-code");
    if (cols.size() > 4) throw ParseError(where + ": too many columns");
    CorpusEntry e;
    e.line = lineno;
    e.name = trim(cols[0]);
    if (e.name.empty()) throw ParseError(where + ": empty name");
    e.pd = trim(cols[1]);
    if (cols.size() > 2) parse_labels(trim(cols[2]), e, where);
    if (cols.size() > 3) e.notes = trim(cols[3]);
    try {
      e.diagram = parse_pd(e.pd);
    } catch (const ParseError& err) {
      throw ParseError(where + " (" + e.name + "): " + err.what());
    }
    for (const auto& prev : out) {
      if (prev.name == e.name) throw ParseError(where + ": duplicate name '" + e.name + "'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file '" + path + "'");
  return parse_corpus(in, path);
}

LinkDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  if (text.find('\t') != std::string::npos) {
    std::istringstream cs(text);
    const auto entries = parse_corpus(cs, path);
    if (entries.size() != 1) throw ParseError(path + ": expected exactly one corpus entry");
    return entries.front().diagram;
  }
  try {
    return parse_pd(text);
  } catch (const ParseError& err) {
    throw ParseError(path + ": " + err.what());
  }
}

}  // namespace jonesdeg
