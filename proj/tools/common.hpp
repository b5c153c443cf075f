#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

#include "jonesdeg/bracket.hpp"
#include "jonesdeg/laurent.hpp"

namespace jonesdeg::cli {

using Json = nlohmann::json;

struct Globals {
  int cap = BracketOptions{}.cap;
  std::string engine = "fast";
  unsigned workers = 1;
  bool json = false;
  std::uint64_t sweep_budget = BracketOptions{}.sweep_cell_budget;

  Engine engine_kind() const { return parse_engine(engine); }
  BracketOptions bracket_options() const;
};

/// {"variable": v, "terms": [[exponent, "coefficient"], ...]}, highest
/// exponent first. Coefficients are decimal strings so that big values
/// survive any JSON reader.
Json poly_json(const LaurentPoly& p, const std::string& var = "A");
Json fraction_json(const DeltaFraction& f);

/// Pretty-printed JSON with sorted keys and a trailing newline.
void print_json(const Json& j);

std::string yes_no(bool b);

struct VerifyConfig {
  std::string path;
  int n_max = 2;
};

/// Runs the corpus harness; returns the process exit status.
int cmd_verify(const Globals& g, const VerifyConfig& cfg);

}  // namespace jonesdeg::cli
