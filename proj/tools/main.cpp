#include <chrono>
#include <ctime>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "semimatch/reports.hpp"

namespace {

std::string timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

int emit(const semimatch::RunReport& report, bool as_json) {
  if (as_json) {
    // The report payload is deterministic; only the envelope carries time.
    semimatch::Json envelope{
        {"meta",
         {{"tool", "semimatch"}, {"generated_at", timestamp_utc()}}},
        {"report", report.to_json()}};
    std::cout << envelope.dump(2) << "\n";
  } else {
    report.print_text(std::cout);
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semimatch: matchings, orientation coordinates, and strong "
               "inverses for finite transformation semigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report");

  // coords encode/decode
  auto* coords = app.add_subcommand("coords", "KRik coordinates of P_n maps");
  coords->fallthrough();
  coords->require_subcommand(1);
  std::string map_json, coords_json;
  bool one_indexed = false;
  auto* encode = coords->add_subcommand("encode", "map -> coordinates");
  encode->fallthrough();
  encode->add_option("--map", map_json, "image array, e.g. '[1,1,2]'")
      ->required();
  encode->add_flag("--one-indexed", one_indexed,
                   "interpret the array as one-indexed");
  auto* decode = coords->add_subcommand("decode", "coordinates -> map");
  decode->fallthrough();
  decode
      ->add_option("--coords", coords_json,
                   R"(e.g. '{"n":8,"K":[0,2,4,6],"R":[1,3,5,7],"i":3,"k":-1}')")
      ->required();

  // match
  auto* match = app.add_subcommand("match", "matchings on P_n");
  match->fallthrough();
  std::string method = "natural";
  match->add_option("--method", method, "natural | dual | half | mixed")
      ->check(CLI::IsMember({"natural", "dual", "half", "mixed"}));
  std::string match_map;
  match->add_option("--map", match_map, "single map to match");
  match->add_flag("--one-indexed", one_indexed,
                  "interpret --map as one-indexed");
  bool sweep = false;
  match->add_flag("--sweep", sweep, "verify the matching laws over all of P_n");
  int sweep_n = 0;
  match->add_option("--n", sweep_n, "degree for --sweep");
  int sweep_bound = 7;
  match->add_option("--sweep-bound", sweep_bound,
                    "largest degree a sweep may use");

  // census
  auto* census = app.add_subcommand("census", "strong-inverse censuses");
  census->fallthrough();
  std::string target;
  census
      ->add_option("target", target,
                   "t4-strong | t3-unique | t8-witness | strong")
      ->required()
      ->check(CLI::IsMember({"t4-strong", "t3-unique", "t8-witness", "strong"}));
  int census_n = 4;
  census->add_option("--n", census_n, "degree for the generic sweep");

  // esolid
  auto* esolid = app.add_subcommand(
      "esolid", "matching decision for an E-solid Cayley table");
  esolid->fallthrough();
  std::string cayley_path;
  esolid->add_option("--cayley", cayley_path, "cayley table csv")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "reference computations");
  verify->fallthrough();
  std::string verify_what = "examples";
  verify->add_option("what", verify_what, "examples")
      ->check(CLI::IsMember({"examples"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (encode->parsed()) {
      return emit(semimatch::cmd_coords_encode(map_json, one_indexed), as_json);
    }
    if (decode->parsed()) {
      return emit(semimatch::cmd_coords_decode(coords_json), as_json);
    }
    if (match->parsed()) {
      if (sweep == !match_map.empty()) {
        throw std::invalid_argument("match: give exactly one of --map, --sweep");
      }
      if (sweep) {
        return emit(semimatch::cmd_match_sweep(
                        method, {sweep_n, sweep_bound}),
                    as_json);
      }
      return emit(semimatch::cmd_match_single(method, match_map, one_indexed),
                  as_json);
    }
    if (census->parsed()) {
      return emit(semimatch::cmd_census(target, census_n), as_json);
    }
    if (esolid->parsed()) {
      return emit(semimatch::cmd_esolid(cayley_path), as_json);
    }
    if (verify->parsed()) {
      return emit(semimatch::cmd_verify_examples(), as_json);
    }
  } catch (const std::exception& e) {
    if (as_json) {
      std::cout << semimatch::Json{{"error", e.what()}}.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
  return 0;
}
