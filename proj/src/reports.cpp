#include "semimatch/reports.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace semimatch {

namespace {

Transformation parse_map(const std::string& map_json, bool one_indexed) {
  Json j = Json::parse(map_json);
  return transformation_from_json(j, one_indexed);
}

std::string brief(const Transformation& a) { return to_string(a); }

bool involution_on(const std::vector<Transformation>& elements,
                   Transformation (*f)(const Transformation&),
                   std::string* failure) {
  for (const Transformation& a : elements) {
    if (f(f(a)) != a) {
      *failure = "f(f(a)) != a at a = " + brief(a);
      return false;
    }
  }
  return true;
}

bool inverse_law_on(const std::vector<Transformation>& elements,
                    Transformation (*f)(const Transformation&),
                    std::string* failure) {
  for (const Transformation& a : elements) {
    if (!is_inverse_pair(a, f(a))) {
      *failure = "f(a) is not an inverse of a = " + brief(a);
      return false;
    }
  }
  return true;
}

Transformation (*match_function(const std::string& method))(
    const Transformation&) {
  if (method == "natural") {
    return natural_match;
  }
  if (method == "dual") {
    return dual_match;
  }
  if (method == "half") {
    return half_dual_match;
  }
  if (method == "mixed") {
    return mixed_match;
  }
  throw std::invalid_argument("unknown matching method: " + method);
}

}  // namespace

void RunReport::check(const std::string& name, bool pass,
                      const std::string& detail) {
  checks.push_back(Check{name, pass, detail});
}

bool RunReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

Json RunReport::to_json() const {
  Json check_list = Json::array();
  for (const Check& c : checks) {
    check_list.push_back(
        Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return Json{{"command", command},
              {"inputs", inputs},
              {"results", results},
              {"checks", std::move(check_list)},
              {"status", all_pass() ? "pass" : "fail"}};
}

void RunReport::print_text(std::ostream& out) const {
  out << "== " << command << "\n";
  if (!inputs.empty()) {
    out << "inputs:  " << inputs.dump() << "\n";
  }
  if (!results.empty()) {
    out << "results: " << results.dump(2) << "\n";
  }
  for (const Check& c : checks) {
    out << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name;
    if (!c.detail.empty()) {
      out << ": " << c.detail;
    }
    out << "\n";
  }
  out << (all_pass() ? "status: pass" : "status: FAIL") << "\n";
}

RunReport cmd_coords_encode(const std::string& map_json, bool one_indexed) {
  RunReport report;
  report.command = "coords encode";
  Transformation a = parse_map(map_json, one_indexed);
  report.inputs["map"] = transformation_to_json(a);
  report.results["classification"] = classification_to_json(classify(a));
  report.results["rank"] = rank(a);
  KRik c = phi_inv(a);
  report.results["coords"] = krik_to_json(c);
  report.check("round-trip", phi(c) == a, "decode(encode(map)) == map");
  return report;
}

RunReport cmd_coords_decode(const std::string& coords_json) {
  RunReport report;
  report.command = "coords decode";
  KRik c = krik_from_json(Json::parse(coords_json));
  report.inputs["coords"] = krik_to_json(c);
  Transformation a = phi(c);
  report.results["map"] = transformation_display_json(a);
  report.results["classification"] = classification_to_json(classify(a));
  KRik back = phi_inv(a);
  bool canonical_match =
      back.kernel_starts == c.kernel_starts && back.range == c.range &&
      back.shift == c.shift && (back.parity == c.parity || c.rank() == 2);
  report.check("round-trip", canonical_match,
               "encode(decode(coords)) == coords up to the rank-2 parity "
               "canonicalization");
  return report;
}

RunReport cmd_match_single(const std::string& method,
                           const std::string& map_json, bool one_indexed) {
  RunReport report;
  report.command = "match " + method;
  auto f = match_function(method);
  Transformation a = parse_map(map_json, one_indexed);
  report.inputs["map"] = transformation_to_json(a);
  report.inputs["method"] = method;
  Transformation b = f(a);
  report.results["match"] = transformation_display_json(b);
  report.check("inverse-law", is_inverse_pair(a, b),
               "aba = a and bab = b for b = f(a)");
  if (method == "half") {
    if (rank(a) >= 2) {
      auto [k1, r1] = rho(b);
      report.results["match_rho"] = Json{{"K", k1}, {"R", r1}};
    }
    report.check("permutation-law", is_inverse_pair(b, f(b)),
                 "the half dual of the half dual is again an inverse");
  } else {
    report.check("involution-law", f(f(a)) == a, "f(f(a)) == a");
  }
  return report;
}

RunReport cmd_match_sweep(const std::string& method,
                          const MatchSweepOptions& options) {
  RunReport report;
  report.command = "match " + method + " sweep";
  auto f = match_function(method);
  if (options.n < 1 || options.n > options.sweep_bound) {
    throw std::invalid_argument(
        "sweep degree " + std::to_string(options.n) + " outside [1, " +
        std::to_string(options.sweep_bound) + "] (adjust --sweep-bound)");
  }
  report.inputs["method"] = method;
  report.inputs["n"] = options.n;

  std::vector<Transformation> elements = pn_elements(options.n);
  report.results["element_count"] = elements.size();

  std::string failure;
  report.check("inverse-law", inverse_law_on(elements, f, &failure), failure);
  if (method == "half") {
    std::set<Transformation> images;
    for (const Transformation& a : elements) {
      images.insert(f(a));
    }
    report.check("permutation-law", images.size() == elements.size(),
                 "f is injective on P_n");
    bool involution = involution_on(elements, f, &failure);
    report.check("not-involution", options.n < 2 || !involution,
                 "some a has f(f(a)) != a");
  } else {
    report.check("involution-law", involution_on(elements, f, &failure),
                 failure);
  }

  std::vector<int> matching(elements.size());
  std::map<Transformation, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<int>(i));
  }
  bool total = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto it = index.find(f(elements[i]));
    if (it == index.end()) {
      total = false;
      break;
    }
    matching[i] = it->second;
  }
  report.check("closed-on-pn", total, "f maps P_n into P_n");
  if (total) {
    HPreservationReport h = check_h_preservation(elements, matching);
    report.results["h_preserving"] = h.preserved;
    if (!h.preserved) {
      report.results["h_witness"] = Json::array(
          {transformation_to_json(elements[static_cast<std::size_t>(
               h.witness.first)]),
           transformation_to_json(
               elements[static_cast<std::size_t>(h.witness.second)])});
    }
  }
  return report;
}

namespace {

void census_consistency_checks(RunReport& report,
                               const StrongInverseCensus& census) {
  long long classified = census.idempotents +
                         census.self_inverse_non_idempotents +
                         census.unique_distinct_strong + census.two_strong +
                         census.larger_strong;
  report.check("counts-sum", classified == census.total,
               std::to_string(classified) + " classified of " +
                   std::to_string(census.total));
  report.check(
      "loops-are-self-paired",
      census.loop_components ==
          census.idempotents + census.self_inverse_non_idempotents,
      "singleton components = self-paired elements");
  // Mutual uniqueness makes a pair; a unique strong inverse that itself has
  // several lives in a larger component, so only the inequality is general.
  report.check("pairs-bounded",
               2 * census.pair_components <= census.unique_distinct_strong,
               "pair components never exceed the distinct-unique elements");
  bool symmetric = true;
  for (std::size_t i = 0; i < census.strong_sets.size() && symmetric; ++i) {
    for (int j : census.strong_sets[i]) {
      const auto& back = census.strong_sets[static_cast<std::size_t>(j)];
      if (!std::binary_search(back.begin(), back.end(), static_cast<int>(i))) {
        symmetric = false;
        break;
      }
    }
  }
  report.check("symmetric", symmetric, "b in S(a) iff a in S(b)");
}

}  // namespace

RunReport cmd_census(const std::string& target, int n) {
  RunReport report;
  if (target == "t3-unique") {
    report.command = "census t3-unique";
    T3UniquenessReport t3 = t3_unique_strong_inverses();
    report.results["elements"] = t3.elements.size();
    report.results["self_paired"] = t3.self_paired;
    report.results["tail_pairs_verified"] = t3.tail_pairs_verified;
    report.check("all-unique", t3.all_unique,
                 "every member of T_3 has exactly one strong inverse");
    report.check("tail-pairing", t3.tail_pairs_verified == 6,
                 "all six 3-step tails pair by swapping their first two "
                 "points");
    return report;
  }
  if (target == "t8-witness") {
    report.command = "census t8-witness";
    StrongWitnessReport witness = t8_witness(n >= 8 ? n : 8);
    report.inputs["degree"] = witness.degree;
    report.results = witness_report_to_json(witness);
    report.check("alpha1-unique",
                 witness.strong_sets[0] ==
                     std::vector<Transformation>{witness.beta1},
                 "S(alpha1) = {beta1}");
    report.check("alpha2-unique",
                 witness.strong_sets[1] ==
                     std::vector<Transformation>{witness.beta2},
                 "S(alpha2) = {beta2}");
    std::vector<Transformation> both{witness.beta1, witness.beta2};
    std::sort(both.begin(), both.end());
    report.check("beta-two", witness.strong_sets[2] == both,
                 "S(beta) = {beta1, beta2}");
    report.check("hall-violation",
                 witness.hall_violation && witness.certificate.set.size() == 3 &&
                     witness.certificate.neighborhood.size() == 2,
                 "|U| = 3 > |S(U)| = 2");
    return report;
  }
  if (target == "t4-strong" || target == "strong") {
    int degree = target == "t4-strong" ? 4 : n;
    report.command = "census " + target;
    report.inputs["degree"] = degree;
    StrongInverseCensus census = strong_inverse_census(degree);
    report.results = census_to_json(census);
    census_consistency_checks(report, census);
    if (degree == 4) {
      report.check("idempotents", census.idempotents == 41, "expected 41");
      report.check("self-inverse-non-idempotents",
                   census.self_inverse_non_idempotents == 69, "expected 69");
      report.check("unique-distinct", census.unique_distinct_strong == 110,
                   "expected 110");
      report.check("two-strong", census.two_strong == 24,
                   "expected 24 (the chains)");
      report.check("four-strong", census.larger_strong == 12,
                   "expected 12 (the forks)");
      bool nine = census.multi_components.size() == 4 &&
                  std::all_of(census.multi_components.begin(),
                              census.multi_components.end(),
                              [](const std::vector<int>& c) {
                                return c.size() == 9;
                              });
      report.check("components",
                   census.loop_components == 110 &&
                       census.pair_components == 55 &&
                       census.cycles.empty() && nine,
                   "110 loops, 55 pairs, four 9-element components");
      InverseGraph graph = strong_graph_of(census);
      report.results["permutation_matching_count"] =
          count_permutation_matchings(graph);
      report.check("permutation-count",
                   count_permutation_matchings(graph) == 65536,
                   "16 per 9-element component, 16^4 in total");
      InvolutionMatchingResult involution = find_involution_matching(graph);
      report.check("no-strong-involution",
                   !involution.exists() && !involution.odd_components.empty(),
                   "odd components block an involution by strong inverses");
      report.check("strong-permutation-exists",
                   find_permutation_matching(graph).exists(),
                   "a permutation matching by strong inverses exists");
    }
    return report;
  }
  throw std::invalid_argument("unknown census target: " + target);
}

RunReport cmd_esolid(const std::string& cayley_path) {
  RunReport report;
  report.command = "esolid";
  report.inputs["cayley"] = cayley_path;
  FiniteSemigroup s = read_cayley_csv_file(cayley_path);
  report.results["order"] = s.order();
  MatchingDecision decision = decide_permutation_matching(s);
  report.results.update(decision_to_json(decision));

  InverseGraph graph = inverse_graph_of(s);
  PermutationMatchingResult oracle = find_permutation_matching(graph);
  report.results["oracle_matching_exists"] = oracle.exists();
  if (decision.applicable) {
    bool agree = decision.matching_exists == oracle.exists();
    report.results["oracle_agreement"] = agree;
    report.check("oracle-agreement", agree,
                 "block similarity decision matches the bipartite matcher");
    if (decision.matching_exists) {
      report.check("involution-exists",
                   find_involution_matching(graph).exists(),
                   "a yes decision also carries an involution matching");
    }
  } else {
    report.results["oracle_agreement"] = nullptr;
    report.check("inapplicable-reported", !decision.reason.empty(),
                 decision.reason);
  }
  return report;
}

namespace {

void verify_reflection_conjugation(RunReport& report) {
  Transformation a(10, {3, 2, 2, 8, 8, 6, 6, 4, 3, 3});
  KRik c = phi_inv(a);
  bool coords_ok = c.kernel_starts == std::vector<int>{1, 3, 5, 7, 8} &&
                   c.range == std::vector<int>{2, 3, 4, 6, 8} && c.shift == 0 &&
                   c.parity == -1;
  KRik conj = gamma_conj(c);
  bool conj_ok = conj.kernel_starts == std::vector<int>{2, 3, 5, 7, 9} &&
                 conj.range == std::vector<int>{1, 3, 5, 6, 7} &&
                 conj.shift == 2 && conj.parity == -1;
  Transformation g = gamma(10);
  Transformation direct = compose(compose(g, a), g);
  bool value_ok =
      phi(conj) == direct &&
      direct == Transformation(10, {6, 6, 5, 3, 3, 1, 1, 7, 7, 6});
  report.check("reflection-conjugation-or10", coords_ok && conj_ok && value_ok,
               "coordinate formula for the reflection conjugate of a "
               "degree-10 reversing map");
}

void verify_natural_or8(RunReport& report) {
  KRik c{8, {0, 2, 4, 6}, {1, 3, 5, 7}, 3, -1};
  Transformation a = phi(c);
  Transformation am = natural_match(a);
  KRik cm = phi_inv(am);
  bool ok = a == Transformation(8, {7, 7, 5, 5, 3, 3, 1, 1}) &&
            am == Transformation(8, {0, 6, 6, 4, 4, 2, 2, 0}) &&
            cm.kernel_starts == c.range && cm.range == c.kernel_starts &&
            cm.shift == 3 && cm.parity == -1 && natural_match(am) == a &&
            is_inverse_pair(a, am);
  report.check("natural-match-or8", ok,
               "natural match of a degree-8 reversing map");
}

void verify_natural_op10(RunReport& report) {
  KRik c{10, {0, 2, 4, 7, 8, 9}, {0, 1, 2, 5, 6, 7}, 4, 1};
  Transformation a = phi(c);
  Transformation am = natural_match(a);
  KRik cm = phi_inv(am);
  bool ok = a == Transformation(10, {6, 6, 7, 7, 0, 0, 0, 1, 2, 5}) &&
            am == Transformation(10, {4, 7, 8, 8, 8, 9, 0, 2, 2, 2}) &&
            cm.kernel_starts == c.range && cm.range == c.kernel_starts &&
            cm.shift == 2 && cm.parity == 1 && is_inverse_pair(a, am);
  report.check("natural-match-op10", ok,
               "natural match of a degree-10 preserving map");
}

void verify_natural_degree3(RunReport& report) {
  Transformation a(3, {1, 1, 2});
  Transformation am = natural_match(a);
  Transformation sq = compose(am, am);
  std::vector<int> images = am.images();
  bool nondecreasing = std::is_sorted(images.begin(), images.end());
  bool ok = am == Transformation(3, {2, 0, 2}) && is_idempotent(a) &&
            rank(sq) == 1 && range_of(sq) == std::vector<int>{2} &&
            !nondecreasing;
  report.check("natural-match-degree3", ok,
               "an order-preserving idempotent with a non-order-preserving, "
               "non-group natural inverse");
}

void verify_natural_interleave(RunReport& report) {
  // Degree 2m idempotent fixing the odd points; its natural inverse carries a
  // single m-cycle on the even points.
  Transformation a(8, {1, 1, 3, 3, 5, 5, 7, 7});
  Transformation am = natural_match(a);
  DigraphProfile pa = digraph_profile(a);
  DigraphProfile pm = digraph_profile(am);
  bool ok = am == Transformation(8, {6, 0, 0, 2, 2, 4, 4, 6}) &&
            pa.cycle_lengths == std::vector<int>{1, 1, 1, 1} &&
            pm.cycle_lengths == std::vector<int>{4} &&
            fixed_points(am).empty() && is_idempotent(a);
  report.check("natural-match-interleave", ok,
               "idempotent with all cycles trivial, natural inverse with one "
               "4-cycle");
}

void verify_dual_idempotent(RunReport& report) {
  KRik c{8, {0, 2, 4, 6}, {1, 3, 5, 7}, 0, 1};
  Transformation a = phi(c);
  Transformation dual = dual_match(a);
  Transformation natural = natural_match(a);
  bool ok = a == Transformation(8, {1, 1, 3, 3, 5, 5, 7, 7}) &&
            is_idempotent(a) && dual_case(c) == 4 && dual == a &&
            natural == Transformation(8, {6, 0, 0, 2, 2, 4, 4, 6}) &&
            natural != dual;
  report.check("dual-match-op8-idempotent", ok,
               "self-dual idempotent whose natural match differs");
}

void verify_dual_self_dual(RunReport& report) {
  KRik c{8, {0, 2, 4, 6}, {1, 3, 5, 7}, 3, -1};
  Transformation a = phi(c);
  Transformation dual = dual_match(a);
  bool ok = dual == a && dual_match(dual) == a &&
            compose(compose(a, a), a) == a &&
            natural_match(a) == Transformation(8, {0, 6, 6, 4, 4, 2, 2, 0}) &&
            natural_match(a) != dual;
  report.check("dual-match-or8-self-dual", ok,
               "reversing map fixed by the dual matching but moved by the "
               "natural one");
}

void verify_dual_or10(RunReport& report) {
  KRik c{10, {1, 3, 5, 7, 8}, {2, 3, 4, 6, 8}, 4, -1};
  Transformation a = phi(c);
  Transformation dual = dual_match(a);
  KRik cd = phi_inv(dual);
  Transformation natural = natural_match(a);
  KRik cn = phi_inv(natural);
  bool ok = a == Transformation(10, {2, 8, 8, 6, 6, 4, 4, 3, 2, 2}) &&
            dual_case(c) == 1 &&
            dual == Transformation(10, {0, 0, 0, 7, 6, 4, 4, 2, 2, 0}) &&
            cd.kernel_starts == std::vector<int>{3, 4, 5, 7, 9} &&
            cd.range == std::vector<int>{0, 2, 4, 6, 7} && cd.shift == 4 &&
            cd.parity == -1 && dual_case(cd) == 1 && dual_match(dual) == a &&
            is_inverse_pair(a, dual) && cn.shift == 4 && cn.parity == -1 &&
            is_inverse_pair(a, natural);
  report.check("dual-match-or10", ok,
               "reversing-parity dual keeps its shift and stays in the "
               "no-wrap case");
}

void verify_dual_case_swap(RunReport& report) {
  KRik c{10, {1, 2, 5, 7, 8, 9}, {0, 4, 5, 6, 7, 9}, 4, 1};
  Transformation a = phi(c);
  Transformation dual = dual_match(a);
  KRik cd = phi_inv(dual);
  bool ok = a == Transformation(10, {6, 7, 9, 9, 9, 0, 0, 4, 5, 6}) &&
            dual_case(c) == 2 && cd.shift == 3 &&
            cd.kernel_starts == std::vector<int>{0, 1, 5, 6, 7, 8} &&
            cd.range == std::vector<int>{0, 1, 4, 6, 7, 8} &&
            dual == Transformation(10, {6, 7, 7, 7, 7, 8, 0, 1, 4, 4}) &&
            dual_case(cd) == 3 && dual_match(dual) == a &&
            phi_inv(dual_match(dual)).shift == 4;
  report.check("dual-match-op10-case-swap", ok,
               "wrap cases exchange 2 <-> 3 and the shift returns after two "
               "duals");
}

void verify_strong_degree3(RunReport& report) {
  Transformation a(3, {1, 2, 2});        // 0 -> 1 -> 2 -> 2
  Transformation am(3, {2, 0, 2});       // 1 -> 0 -> 2 -> 2
  Transformation gamma3(3, {2, 0, 0});   // 0 -> 2, 1,2 -> 0
  Transformation a1(3, {0, 0, 1});       // reversing tail, inverse but not strong

  std::vector<Transformation> sa = strong_inverses(a);
  GeneratedSubsemigroup brandt = closure({a, am});
  GeneratedSubsemigroup seven = closure({a, a1});
  Transformation aam = compose(a, am);
  Transformation ama = compose(am, a);
  Transformation asq = compose(a, a);

  bool brandt_ok = sa == std::vector<Transformation>{am} &&
                   brandt.elements.size() == 5 &&
                   is_inverse_subsemigroup(brandt) &&
                   aam == Transformation(3, {0, 2, 2}) &&
                   ama == Transformation(3, {2, 1, 2}) &&
                   asq == Transformation(3, {2, 2, 2}) &&
                   asq == compose(am, am);

  std::vector<Transformation> sg = strong_inverses(gamma3);
  GeneratedSubsemigroup gsq = closure({gamma3});
  std::vector<Transformation> intersection;
  std::set_intersection(gsq.elements.begin(), gsq.elements.end(),
                        brandt.elements.begin(), brandt.elements.end(),
                        std::back_inserter(intersection));
  bool gamma_ok = sg == std::vector<Transformation>{gamma3} &&
                  compose(gamma3, gamma3) == aam &&
                  intersection == std::vector<Transformation>{aam};

  Transformation e = compose(a, a1);
  Transformation fzero = asq;
  long long constants = std::count_if(
      seven.elements.begin(), seven.elements.end(),
      [](const Transformation& t) { return rank(t) == 1; });
  bool seven_ok = is_inverse_pair(a, a1) &&
                  sa != std::vector<Transformation>{a1} &&
                  seven.elements.size() == 7 &&
                  !is_inverse_subsemigroup(seven) &&
                  e == Transformation(3, {0, 1, 1}) &&
                  compose(e, fzero) == fzero &&
                  compose(fzero, e) == Transformation::constant(3, 1) &&
                  constants == 3;

  report.check("strong-inverse-degree3", brandt_ok && gamma_ok && seven_ok,
               "5-element Brandt closure, self-paired reflection tail, and "
               "the non-commuting 7-element counterexample");
}

void verify_strong_census_degree4(RunReport& report) {
  StrongInverseCensus census = strong_inverse_census(4);
  bool counts_ok = census.idempotents == 41 &&
                   census.self_inverse_non_idempotents == 69 &&
                   census.unique_distinct_strong == 110 &&
                   census.two_strong == 24 && census.larger_strong == 12 &&
                   census.total == 256;
  bool comp_ok =
      census.loop_components == 110 && census.pair_components == 55 &&
      census.cycles.empty() && census.multi_components.size() == 4 &&
      std::all_of(census.multi_components.begin(),
                  census.multi_components.end(),
                  [](const std::vector<int>& c) { return c.size() == 9; });

  // The Hamiltonian cycle through the chain [3,3,0,3] (fixed point 3), in the
  // order forced by the chain edges.
  std::vector<Transformation> expected{
      Transformation(4, {3, 3, 0, 3}), Transformation(4, {2, 2, 3, 3}),
      Transformation(4, {3, 3, 1, 3}), Transformation(4, {3, 2, 3, 3}),
      Transformation(4, {1, 3, 1, 3}), Transformation(4, {3, 0, 3, 3}),
      Transformation(4, {1, 3, 3, 3}), Transformation(4, {3, 0, 0, 3}),
      Transformation(4, {2, 3, 3, 3})};
  std::vector<Transformation> walk = nine_cycle_walk(expected.front());
  bool walk_ok = walk == expected;

  InverseGraph graph = strong_graph_of(census);
  bool count_ok = count_permutation_matchings(graph) == 65536;
  InvolutionMatchingResult strong_involution = find_involution_matching(graph);
  bool no_involution = !strong_involution.exists() &&
                       !strong_involution.odd_components.empty();
  InverseGraph mutual =
      build_inverse_graph(census.elements, InverseRelation::kMutual);
  bool mutual_involution = find_involution_matching(mutual).exists();

  report.check("strong-census-degree4",
               counts_ok && comp_ok && walk_ok && count_ok && no_involution &&
                   mutual_involution,
               "41+69+110+24+12 census, four 9-element components with "
               "Hamiltonian 9-cycles, 16^4 strong permutation matchings, no "
               "strong involution, yet one exists by ordinary inverses");
}

void verify_strong_witness_degree8(RunReport& report) {
  StrongWitnessReport witness = t8_witness();
  std::vector<Transformation> both{witness.beta1, witness.beta2};
  std::sort(both.begin(), both.end());
  bool sets_ok =
      witness.strong_sets[0] == std::vector<Transformation>{witness.beta1} &&
      witness.strong_sets[1] == std::vector<Transformation>{witness.beta2} &&
      witness.strong_sets[2] == both;
  bool cert_ok = witness.hall_violation &&
                 witness.certificate.set.size() == 3 &&
                 witness.certificate.neighborhood.size() == 2;
  report.check("strong-witness-degree8", sets_ok && cert_ok,
               "three degree-8 maps with only two strong inverses between "
               "them");
}

}  // namespace

RunReport cmd_verify_examples() {
  RunReport report;
  report.command = "verify examples";
  verify_reflection_conjugation(report);
  verify_natural_or8(report);
  verify_natural_op10(report);
  verify_natural_degree3(report);
  verify_natural_interleave(report);
  verify_dual_idempotent(report);
  verify_dual_self_dual(report);
  verify_dual_or10(report);
  verify_dual_case_swap(report);
  verify_strong_degree3(report);
  verify_strong_census_degree4(report);
  verify_strong_witness_degree8(report);
  long long passed =
      std::count_if(report.checks.begin(), report.checks.end(),
                    [](const Check& c) { return c.pass; });
  report.results["checks_passed"] = passed;
  report.results["checks_total"] = report.checks.size();
  return report;
}

}  // namespace semimatch
