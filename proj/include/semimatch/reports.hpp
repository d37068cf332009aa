#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "semimatch/json_io.hpp"

namespace semimatch {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Deterministic command report: echoed inputs, command payload, and a list
/// of named pass/fail checks. Status is the conjunction of the checks.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;

  void check(const std::string& name, bool pass, const std::string& detail);
  bool all_pass() const;
  Json to_json() const;
  void print_text(std::ostream& out) const;
};

struct MatchSweepOptions {
  int n = 0;
  int sweep_bound = 7;
};

RunReport cmd_coords_encode(const std::string& map_json, bool one_indexed);
RunReport cmd_coords_decode(const std::string& coords_json);

/// method: natural | dual | half | mixed. Exactly one of map_json / sweep.
RunReport cmd_match_single(const std::string& method,
                           const std::string& map_json, bool one_indexed);
RunReport cmd_match_sweep(const std::string& method,
                          const MatchSweepOptions& options);

/// target: t4-strong | t3-unique | t8-witness | strong (with degree n).
RunReport cmd_census(const std::string& target, int n);

RunReport cmd_esolid(const std::string& cayley_path);

/// One check per worked rebuild of the library's reference computations.
RunReport cmd_verify_examples();

}  // namespace semimatch
