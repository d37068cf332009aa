#include "semimatch/strong_inverse.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "semimatch/parallel.hpp"

namespace semimatch {

namespace {

std::vector<std::vector<int>> preimage_sets(const Transformation& a,
                                            const std::vector<int>& range) {
  std::vector<std::vector<int>> preimages(range.size());
  for (int x = 0; x < a.degree(); ++x) {
    auto it = std::lower_bound(range.begin(), range.end(), a[x]);
    preimages[static_cast<std::size_t>(it - range.begin())].push_back(x);
  }
  return preimages;
}

std::vector<std::vector<int>> max_depth_candidates(
    const Transformation& a, const DigraphProfile& profile,
    const std::vector<int>& range) {
  auto preimages = preimage_sets(a, range);
  std::vector<std::vector<int>> candidates(range.size());
  for (std::size_t j = 0; j < range.size(); ++j) {
    int best = -1;
    for (int x : preimages[j]) {
      best = std::max(best, profile.depth[static_cast<std::size_t>(x)]);
    }
    for (int x : preimages[j]) {
      if (profile.depth[static_cast<std::size_t>(x)] == best) {
        candidates[j].push_back(x);
      }
    }
  }
  return candidates;
}

/// Necessary conditions for b in S(a): maximal-depth preimages on the range
/// and the grasp/height constraints at the endpoints.
bool passes_strong_filter(const Transformation& a, const Transformation& b,
                          const DigraphProfile& profile,
                          const std::vector<int>& range,
                          const std::vector<std::vector<int>>& candidates) {
  for (std::size_t j = 0; j < range.size(); ++j) {
    int image = b[range[j]];
    if (!std::binary_search(candidates[j].begin(), candidates[j].end(),
                            image)) {
      return false;
    }
  }
  for (int x = 0; x < a.degree(); ++x) {
    if (profile.depth[static_cast<std::size_t>(x)] != 0) {
      continue;
    }
    int h = profile.height[static_cast<std::size_t>(x)];
    int y = b[x];
    if (grasp(a, b, y) < grasp(a, b, x) + 1) {
      return false;
    }
    int lhs = y;
    for (int step = 0; step <= h; ++step) {
      lhs = a[lhs];
    }
    int rhs = x;
    for (int step = 0; step < h; ++step) {
      rhs = a[rhs];
    }
    if (lhs != rhs) {
      return false;
    }
  }
  return true;
}

}  // namespace

GeneratedSubsemigroup closure(std::vector<Transformation> generators,
                              bool with_table) {
  GeneratedSubsemigroup result;
  result.generators = generators;
  if (generators.empty()) {
    return result;
  }
  int n = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n) {
      throw std::invalid_argument("closure: generators of mixed degree");
    }
  }

  std::unordered_set<Transformation, TransformationHash> seen;
  std::vector<Transformation> elements;
  for (const auto& g : generators) {
    if (seen.insert(g).second) {
      elements.push_back(g);
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      for (const Transformation& p : {compose(elements[i], elements[j]),
                                      compose(elements[j], elements[i])}) {
        if (seen.insert(p).second) {
          elements.push_back(p);
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  result.elements = std::move(elements);

  if (with_table) {
    std::unordered_map<Transformation, int, TransformationHash> index;
    for (std::size_t i = 0; i < result.elements.size(); ++i) {
      index.emplace(result.elements[i], static_cast<int>(i));
    }
    std::size_t m = result.elements.size();
    result.cayley.assign(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        result.cayley[i][j] =
            index.at(compose(result.elements[i], result.elements[j]));
      }
    }
  }
  return result;
}

bool is_inverse_subsemigroup(const GeneratedSubsemigroup& s) {
  const auto& elems = s.elements;
  if (elems.empty()) {
    return true;
  }
  std::vector<const Transformation*> idem;
  for (const auto& e : elems) {
    if (is_idempotent(e)) {
      idem.push_back(&e);
    }
  }
  for (std::size_t i = 0; i < idem.size(); ++i) {
    for (std::size_t j = i + 1; j < idem.size(); ++j) {
      if (compose(*idem[i], *idem[j]) != compose(*idem[j], *idem[i])) {
        return false;
      }
    }
  }
  // Regularity: a weak inverse within a closed set yields a genuine one.
  for (const auto& a : elems) {
    bool regular = false;
    for (const auto& b : elems) {
      bool weak = true;
      for (int x = 0; x < a.degree(); ++x) {
        if (a[b[a[x]]] != a[x]) {
          weak = false;
          break;
        }
      }
      if (weak) {
        regular = true;
        break;
      }
    }
    if (!regular) {
      return false;
    }
  }
  return true;
}

bool generates_inverse_subsemigroup(const Transformation& a,
                                    const Transformation& b) {
  thread_local std::unordered_map<std::string, bool> memo;
  const Transformation& lo = a <= b ? a : b;
  const Transformation& hi = a <= b ? b : a;
  std::string key;
  key.reserve(2 * static_cast<std::size_t>(a.degree()) + 1);
  for (int v : lo.images()) {
    key.push_back(static_cast<char>(v));
  }
  key.push_back('|');
  for (int v : hi.images()) {
    key.push_back(static_cast<char>(v));
  }
  auto it = memo.find(key);
  if (it != memo.end()) {
    return it->second;
  }
  bool verdict = is_inverse_subsemigroup(closure({a, b}));
  memo.emplace(std::move(key), verdict);
  return verdict;
}

std::vector<Transformation> strong_inverses(const Transformation& a) {
  DigraphProfile profile = digraph_profile(a);
  std::vector<int> range = range_of(a);
  auto candidates = max_depth_candidates(a, profile, range);

  std::vector<Transformation> result;
  for (const Transformation& b : inverses_of(a)) {
    if (!passes_strong_filter(a, b, profile, range, candidates)) {
      continue;
    }
    if (generates_inverse_subsemigroup(a, b)) {
      result.push_back(b);
    }
  }
  return result;
}

namespace {

Transformation finish_construction(const Transformation& a,
                                   const DigraphProfile& profile,
                                   std::vector<int> images) {
  int n = a.degree();
  for (int x = 0; x < n; ++x) {
    if (profile.depth[static_cast<std::size_t>(x)] != 0) {
      continue;
    }
    int h = profile.height[static_cast<std::size_t>(x)];
    int y = x;
    for (int step = 0; step < h; ++step) {
      y = a[y];
    }
    for (int step = 0; step <= h; ++step) {
      if (images[static_cast<std::size_t>(y)] < 0) {
        throw std::logic_error("construct_strong_inverse: walk left the range");
      }
      y = images[static_cast<std::size_t>(y)];
    }
    images[static_cast<std::size_t>(x)] = y;
  }
  return Transformation(n, std::move(images));
}

}  // namespace

Transformation construct_strong_inverse(const Transformation& a,
                                        const PreimageChooser& chooser) {
  DigraphProfile profile = digraph_profile(a);
  std::vector<int> range = range_of(a);
  auto candidates = max_depth_candidates(a, profile, range);

  std::vector<int> images(static_cast<std::size_t>(a.degree()), -1);
  for (std::size_t j = 0; j < range.size(); ++j) {
    int pick = chooser ? chooser(range[j], candidates[j]) : candidates[j].front();
    if (!std::binary_search(candidates[j].begin(), candidates[j].end(), pick)) {
      throw std::invalid_argument(
          "construct_strong_inverse: chooser left the candidate set");
    }
    images[static_cast<std::size_t>(range[j])] = pick;
  }
  return finish_construction(a, profile, std::move(images));
}

std::vector<Transformation> construct_strong_inverse_variants(
    const Transformation& a) {
  DigraphProfile profile = digraph_profile(a);
  std::vector<int> range = range_of(a);
  auto candidates = max_depth_candidates(a, profile, range);

  std::vector<Transformation> out;
  std::vector<std::size_t> choice(range.size(), 0);
  for (;;) {
    std::vector<int> images(static_cast<std::size_t>(a.degree()), -1);
    for (std::size_t j = 0; j < range.size(); ++j) {
      images[static_cast<std::size_t>(range[j])] = candidates[j][choice[j]];
    }
    out.push_back(finish_construction(a, profile, std::move(images)));
    std::size_t pos = range.size();
    while (pos > 0 && choice[pos - 1] + 1 == candidates[pos - 1].size()) {
      choice[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) {
      break;
    }
    ++choice[pos - 1];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool strong_inverse_commutation_holds(const Transformation& a,
                                      const Transformation& b) {
  int n = a.degree();
  for (int x = 0; x < n; ++x) {
    int g = grasp(a, b, x);
    auto push = [&](int start, int a_steps, int b_steps) {
      int y = start;
      for (int s = 0; s < a_steps; ++s) {
        y = a[y];
      }
      for (int s = 0; s < b_steps; ++s) {
        y = b[y];
      }
      return y;
    };
    int lhs = push(a[b[x]], g + 1, g + 1);
    int rhs_mid = push(x, g + 1, g + 1);
    int rhs = a[b[rhs_mid]];
    if (lhs != rhs) {
      return false;
    }
  }
  return true;
}

std::optional<RankTwoShape> rank_two_shape(const Transformation& a) {
  if (a.degree() != 4 || rank(a) != 2) {
    return std::nullopt;
  }
  DigraphProfile profile = digraph_profile(a);
  if (profile.stable_range.size() != 1) {
    return std::nullopt;  // group elements and two-component maps
  }
  int fixed = profile.stable_range.front();
  std::vector<int> range = range_of(a);
  int other = range[0] == fixed ? range[1] : range[0];
  int preimages = 0;
  for (int x = 0; x < a.degree(); ++x) {
    if (a[x] == other) {
      ++preimages;
    }
  }
  return preimages == 2 ? RankTwoShape::kFork : RankTwoShape::kChain;
}

StrongInverseCensus strong_inverse_census(int n) {
  if (n < 1 || n > 5) {
    throw std::invalid_argument(
        "strong_inverse_census: full sweeps are supported for n <= 5");
  }
  StrongInverseCensus census;
  census.degree = n;
  census.elements = all_transformations(n);
  std::size_t m = census.elements.size();
  census.total = static_cast<long long>(m);
  census.strong_sets.assign(m, {});

  std::unordered_map<Transformation, int, TransformationHash> index;
  for (std::size_t i = 0; i < m; ++i) {
    index.emplace(census.elements[i], static_cast<int>(i));
  }
  parallel_chunks(
      m,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          for (const Transformation& b : strong_inverses(census.elements[i])) {
            census.strong_sets[i].push_back(index.at(b));
          }
          std::sort(census.strong_sets[i].begin(), census.strong_sets[i].end());
        }
      },
      64);

  for (std::size_t i = 0; i < m; ++i) {
    const auto& set = census.strong_sets[i];
    bool self = std::binary_search(set.begin(), set.end(), static_cast<int>(i));
    if (set.size() == 1 && self) {
      if (is_idempotent(census.elements[i])) {
        ++census.idempotents;
      } else {
        ++census.self_inverse_non_idempotents;
      }
    } else if (set.size() == 1) {
      ++census.unique_distinct_strong;
    } else if (set.size() == 2) {
      ++census.two_strong;
    } else {
      ++census.larger_strong;
    }
  }

  InverseGraph graph = strong_graph_of(census);
  for (const auto& comp : analyze_components(graph)) {
    switch (comp.kind) {
      case ComponentKind::kLoop:
        ++census.loop_components;
        break;
      case ComponentKind::kPair:
        ++census.pair_components;
        break;
      case ComponentKind::kCycle:
        census.cycles.push_back(comp.order);
        break;
      default:
        census.multi_components.push_back(comp.vertices);
        break;
    }
  }
  return census;
}

StrongInverseCensus t4_census() { return strong_inverse_census(4); }

InverseGraph strong_graph_of(const StrongInverseCensus& census) {
  InverseGraph g;
  g.adjacency = census.strong_sets;
  return g;
}

std::vector<Transformation> nine_cycle_walk(const Transformation& start) {
  if (!rank_two_shape(start).has_value()) {
    throw std::invalid_argument(
        "nine_cycle_walk: start is not a rank-2 fork or chain of degree 4");
  }
  // A chain has exactly two strong inverses, so both its edges lie on every
  // Hamiltonian cycle of the component; the cycle through the forced edges is
  // unique. Fork-fork adjacencies are chords and are skipped.
  auto step = [](const Transformation& cur,
                 const Transformation* prev) -> Transformation {
    bool cur_is_fork = rank_two_shape(cur) == RankTwoShape::kFork;
    std::vector<Transformation> moves;
    for (const Transformation& cand : strong_inverses(cur)) {
      if (prev != nullptr && cand == *prev) {
        continue;
      }
      if (cur_is_fork && rank_two_shape(cand) == RankTwoShape::kFork) {
        continue;
      }
      moves.push_back(cand);
    }
    if (moves.empty()) {
      throw std::logic_error("nine_cycle_walk: no admissible step");
    }
    return *std::min_element(moves.begin(), moves.end());
  };

  std::vector<Transformation> cycle{start};
  Transformation prev = start;
  Transformation cur = step(start, nullptr);
  while (cur != start) {
    cycle.push_back(cur);
    Transformation next = step(cur, &prev);
    prev = cur;
    cur = next;
    if (cycle.size() > 9) {
      break;
    }
  }
  if (cycle.size() != 9) {
    throw std::logic_error("nine_cycle_walk: cycle closed at length " +
                           std::to_string(cycle.size()));
  }
  return cycle;
}

StrongWitnessReport t8_witness(int degree) {
  if (degree < 8) {
    throw std::invalid_argument("t8_witness: degree must be at least 8");
  }
  auto extend = [degree](std::vector<int> base) {
    for (int x = 8; x < degree; ++x) {
      base.push_back(x);
    }
    return Transformation(degree, std::move(base));
  };
  StrongWitnessReport report;
  report.degree = degree;
  report.alpha1 = extend({1, 2, 3, 4, 4, 2, 7, 3});
  report.alpha2 = extend({1, 2, 3, 4, 4, 7, 2, 3});
  report.beta = extend({1, 2, 3, 4, 4, 7, 7, 3});
  report.beta1 = extend({4, 0, 1, 2, 4, 0, 0, 6});
  report.beta2 = extend({4, 0, 1, 2, 4, 0, 0, 5});

  report.strong_sets = {strong_inverses(report.alpha1),
                        strong_inverses(report.alpha2),
                        strong_inverses(report.beta)};
  std::vector<Transformation> union_set;
  for (const auto& set : report.strong_sets) {
    union_set.insert(union_set.end(), set.begin(), set.end());
  }
  std::sort(union_set.begin(), union_set.end());
  union_set.erase(std::unique(union_set.begin(), union_set.end()),
                  union_set.end());
  report.hall_violation = union_set.size() < 3;

  std::vector<Transformation> elements{report.alpha1, report.alpha2,
                                       report.beta};
  elements.insert(elements.end(), union_set.begin(), union_set.end());
  InverseGraph g = build_inverse_graph(elements, InverseRelation::kStrong);
  PermutationMatchingResult matching = find_permutation_matching(g);
  if (matching.witness.has_value()) {
    report.certificate = *matching.witness;
  }
  return report;
}

T3UniquenessReport t3_unique_strong_inverses() {
  T3UniquenessReport report;
  report.elements = all_transformations(3);
  report.all_unique = true;
  for (const Transformation& a : report.elements) {
    std::vector<Transformation> set = strong_inverses(a);
    if (set.size() != 1) {
      report.all_unique = false;
      report.partner.push_back(a);
      continue;
    }
    report.partner.push_back(set.front());
    if (set.front() == a) {
      ++report.self_paired;
      continue;
    }
    // Tails x -> y -> z -> z must pair by swapping their first two points.
    int z = -1;
    for (int v = 0; v < 3; ++v) {
      if (a[v] == v) {
        z = v;
      }
    }
    if (z >= 0) {
      std::vector<int> expected(3, z);
      for (int v = 0; v < 3; ++v) {
        if (v != z && a[v] != z) {
          expected[static_cast<std::size_t>(a[v])] = v;
          expected[static_cast<std::size_t>(v)] = a[a[v]];
        }
      }
      // expected was built from the tail pattern; compare when a is a tail.
      bool is_tail = rank(a) == 2 && !is_group_element(a);
      if (is_tail && set.front() == Transformation(3, expected)) {
        ++report.tail_pairs_verified;
      }
    }
  }
  return report;
}

}  // namespace semimatch
