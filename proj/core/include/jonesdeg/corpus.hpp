#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "jonesdeg/diagram.hpp"

namespace jonesdeg {

/// One line of a corpus file:
///   name <TAB> pd-code [<TAB> labels [<TAB> notes]]
/// `labels` is `-` or a comma list of `A=yes|no` / `B=yes|no`.
/// Blank lines and lines starting with `#` are skipped.
struct CorpusEntry {
  std::string name;
  std::string pd;
  std::optional<bool> a_adequate;
  std::optional<bool> b_adequate;
  std::string notes;
  LinkDiagram diagram;
  int line = 0;
};

/// Throws ParseError naming the source and line on any malformed entry.
std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& source = "<corpus>");
std::vector<CorpusEntry> load_corpus(const std::string& path);

/// Reads a single diagram: the whole file is PD text, or a one-line corpus
/// entry whose second column is PD text.
LinkDiagram load_diagram(const std::string& path);

}  // namespace jonesdeg
