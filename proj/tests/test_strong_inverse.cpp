#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "semimatch/strong_inverse.hpp"
#include "support.hpp"

using namespace semimatch;
namespace st = semimatch::testing;

TEST_CASE("closure of generating sets") {
  Transformation a(3, {1, 2, 2});    // 0 -> 1 -> 2 -> 2
  Transformation am(3, {2, 0, 2});   // its strong partner
  Transformation a1(3, {0, 0, 1});   // reversing tail

  CHECK(closure({a, am}).elements.size() == 5);
  CHECK(closure({a, a1}).elements.size() == 7);
  CHECK(closure({Transformation::identity(4)}).elements.size() == 1);
  CHECK(closure({}).elements.empty());
  CHECK_THROWS_AS(closure({a, Transformation::identity(4)}),
                  std::invalid_argument);

  GeneratedSubsemigroup with_table = closure({a, am}, /*with_table=*/true);
  REQUIRE(with_table.cayley.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(with_table.elements[static_cast<std::size_t>(
                with_table.cayley[i][j])] ==
            compose(with_table.elements[i], with_table.elements[j]));
    }
  }
}

TEST_CASE("inverse subsemigroup recognition") {
  Transformation a(3, {1, 2, 2});
  Transformation am(3, {2, 0, 2});
  Transformation a1(3, {0, 0, 1});

  CHECK(is_inverse_subsemigroup(closure({a, am})));     // Brandt
  CHECK_FALSE(is_inverse_subsemigroup(closure({a, a1})));
  CHECK(is_inverse_subsemigroup(closure({Transformation(3, {1, 2, 0})})));
  CHECK(is_inverse_subsemigroup(GeneratedSubsemigroup{}));

  // the non-commuting pair of idempotents in the 7-element closure
  Transformation e = compose(a, a1);
  Transformation f = compose(a, a);
  CHECK(e == Transformation(3, {0, 1, 1}));
  CHECK(f == Transformation(3, {2, 2, 2}));
  CHECK(compose(e, f) == f);
  CHECK(compose(f, e) == Transformation::constant(3, 1));
}

TEST_CASE("strong inverse sets at degree 3") {
  Transformation a(3, {1, 2, 2});
  CHECK(strong_inverses(a) ==
        std::vector<Transformation>{Transformation(3, {2, 0, 2})});

  // the reflection-like tail is its own strong inverse
  Transformation g(3, {2, 0, 0});
  CHECK(strong_inverses(g) == std::vector<Transformation>{g});
  CHECK(compose(g, g) == compose(a, strong_inverses(a).front()));

  // intersecting the two closures leaves the shared idempotent
  GeneratedSubsemigroup brandt = closure({a, Transformation(3, {2, 0, 2})});
  GeneratedSubsemigroup cyclic = closure({g});
  std::vector<Transformation> meet;
  std::set_intersection(cyclic.elements.begin(), cyclic.elements.end(),
                        brandt.elements.begin(), brandt.elements.end(),
                        std::back_inserter(meet));
  CHECK(meet == std::vector<Transformation>{Transformation(3, {0, 2, 2})});
}

TEST_CASE("depth-grasp pruning never changes the strong inverse set") {
  for (int n : {1, 2, 3, 4}) {
    for_each_transformation(n, [&](const Transformation& a) {
      CHECK(strong_inverses(a) == st::brute_strong_inverses(a));
    });
  }
}

TEST_CASE("group elements have their group inverse as the unique strong one") {
  for_each_transformation(4, [&](const Transformation& a) {
    if (!is_group_element(a)) {
      return;
    }
    std::vector<Transformation> set = strong_inverses(a);
    REQUIRE(set.size() == 1);
    const Transformation& b = set.front();
    CHECK(is_inverse_pair(a, b));
    CHECK(compose(a, b) == compose(b, a));
  });
}

TEST_CASE("strong sets of the fork and chain shapes") {
  // the fork [2,2,3,3] has four strong inverses: the two printed chains and
  // the two other forks over the same fixed point
  Transformation fork(4, {2, 2, 3, 3});
  REQUIRE(rank_two_shape(fork) == RankTwoShape::kFork);
  std::vector<Transformation> set = strong_inverses(fork);
  std::vector<Transformation> expected{
      Transformation(4, {1, 3, 1, 3}), Transformation(4, {3, 0, 0, 3}),
      Transformation(4, {3, 3, 0, 3}), Transformation(4, {3, 3, 1, 3})};
  CHECK(set == expected);
  CHECK(rank_two_shape(expected[0]) == RankTwoShape::kFork);
  CHECK(rank_two_shape(expected[1]) == RankTwoShape::kFork);
  CHECK(rank_two_shape(expected[2]) == RankTwoShape::kChain);
  CHECK(rank_two_shape(expected[3]) == RankTwoShape::kChain);

  // a fork-fork pair generates a five-element Brandt semigroup
  GeneratedSubsemigroup cross = closure({fork, expected[0]});
  CHECK(cross.elements.size() == 5);
  CHECK(is_inverse_subsemigroup(cross));

  // chains have exactly two strong inverses, one fork and one chain
  Transformation chain(4, {3, 3, 0, 3});
  REQUIRE(rank_two_shape(chain) == RankTwoShape::kChain);
  std::vector<Transformation> cset = strong_inverses(chain);
  REQUIRE(cset.size() == 2);
  CHECK(rank_two_shape(cset[0]) == RankTwoShape::kFork);
  CHECK(rank_two_shape(cset[1]) == RankTwoShape::kChain);

  // non-shapes are rejected by the classifier
  CHECK_FALSE(rank_two_shape(Transformation::identity(4)).has_value());
  CHECK_FALSE(rank_two_shape(Transformation(4, {1, 0, 0, 0})).has_value());
  CHECK_FALSE(rank_two_shape(Transformation::constant(4, 0)).has_value());
  CHECK_FALSE(rank_two_shape(Transformation(3, {1, 2, 2})).has_value());
}

TEST_CASE("two-stage construction lands in the strong set") {
  // the degree-8 reference map has all choices forced
  Transformation a8(8, {1, 2, 3, 4, 4, 2, 7, 3});
  Transformation b8(8, {4, 0, 1, 2, 4, 0, 0, 6});
  CHECK(construct_strong_inverse(a8) == b8);
  CHECK(construct_strong_inverse_variants(a8) ==
        std::vector<Transformation>{b8});

  // idempotents rebuild themselves under any chooser
  PreimageChooser take_last = [](int, const std::vector<int>& c) {
    return c.back();
  };
  for_each_transformation(3, [&](const Transformation& e) {
    if (is_idempotent(e)) {
      CHECK(construct_strong_inverse(e) == e);
      CHECK(construct_strong_inverse(e, take_last) == e);
    }
  });

  // all branches over all of T_4 are strong and satisfy the commuting law
  for_each_transformation(4, [&](const Transformation& a) {
    for (const Transformation& b : construct_strong_inverse_variants(a)) {
      CHECK(is_inverse_pair(a, b));
      CHECK(generates_inverse_subsemigroup(a, b));
      CHECK(strong_inverse_commutation_holds(a, b));
    }
  });

  PreimageChooser bad = [](int, const std::vector<int>&) { return -1; };
  CHECK_THROWS_AS(construct_strong_inverse(a8, bad), std::invalid_argument);
}

TEST_CASE("construction on random degree-6 maps") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::size_t> pick;
  PreimageChooser random_choice = [&](int, const std::vector<int>& c) {
    return c[pick(rng) % c.size()];
  };
  for (int trial = 0; trial < 1000; ++trial) {
    Transformation a = st::random_transformation(6, rng);
    Transformation b = trial % 2 == 0 ? construct_strong_inverse(a)
                                      : construct_strong_inverse(a, random_choice);
    CHECK(is_inverse_pair(a, b));
    CHECK(generates_inverse_subsemigroup(a, b));
    CHECK(strong_inverse_commutation_holds(a, b));
  }
}

TEST_CASE("census at small degrees") {
  StrongInverseCensus c2 = strong_inverse_census(2);
  CHECK(c2.total == 4);
  CHECK(c2.idempotents == 3);
  CHECK(c2.self_inverse_non_idempotents == 1);
  CHECK(c2.loop_components == 4);
  CHECK(c2.pair_components == 0);

  StrongInverseCensus c3 = strong_inverse_census(3);
  CHECK(c3.total == 27);
  CHECK(c3.idempotents == 10);
  CHECK(c3.self_inverse_non_idempotents == 9);
  CHECK(c3.unique_distinct_strong == 8);
  CHECK(c3.two_strong == 0);
  CHECK(c3.loop_components == 19);
  CHECK(c3.pair_components == 4);
  CHECK(c3.cycles.empty());
  CHECK(c3.multi_components.empty());

  CHECK_THROWS_AS(strong_inverse_census(6), std::invalid_argument);
}

TEST_CASE("census of degree 4") {
  StrongInverseCensus census = t4_census();
  CHECK(census.total == 256);
  CHECK(census.idempotents == 41);
  CHECK(census.self_inverse_non_idempotents == 69);
  CHECK(census.unique_distinct_strong == 110);
  CHECK(census.two_strong == 24);
  CHECK(census.larger_strong == 12);
  CHECK(census.loop_components == 110);
  CHECK(census.pair_components == 55);
  CHECK(census.cycles.empty());
  REQUIRE(census.multi_components.size() == 4);

  std::set<int> fixed_points_seen;
  for (const auto& comp : census.multi_components) {
    REQUIRE(comp.size() == 9);
    // every member of a component fixes the same single point
    std::set<int> shared{0, 1, 2, 3};
    for (int idx : comp) {
      const Transformation& m =
          census.elements[static_cast<std::size_t>(idx)];
      std::set<int> fixed;
      for (int x = 0; x < 4; ++x) {
        if (m[x] == x) {
          fixed.insert(x);
        }
      }
      std::set<int> meet;
      std::set_intersection(shared.begin(), shared.end(), fixed.begin(),
                            fixed.end(), std::inserter(meet, meet.begin()));
      shared = meet;
    }
    REQUIRE(shared.size() == 1);
    fixed_points_seen.insert(*shared.begin());
  }
  CHECK(fixed_points_seen == std::set<int>{0, 1, 2, 3});

  // strong graph: no involution (odd components), permutation matching with
  // 16 choices per component
  InverseGraph graph = strong_graph_of(census);
  InvolutionMatchingResult involution = find_involution_matching(graph);
  CHECK_FALSE(involution.exists());
  CHECK(involution.odd_components.size() == 4);
  CHECK(find_permutation_matching(graph).exists());
  CHECK(count_permutation_matchings(graph) == 65536);
  CHECK_THROWS_AS(count_orientation_matchings(graph), std::invalid_argument);
}

TEST_CASE("repairing the strong matching into an ordinary involution") {
  // pair one member of each 9-element component with an outside idempotent
  // inverse, pair the remaining eight along the component cycle
  StrongInverseCensus census = t4_census();
  std::vector<int> partner(static_cast<std::size_t>(census.total), -1);
  for (std::size_t i = 0; i < census.strong_sets.size(); ++i) {
    const auto& set = census.strong_sets[i];
    if (set.size() == 1) {
      partner[i] = set.front();  // loops and pairs
    }
  }
  for (const auto& comp : census.multi_components) {
    // walk the forced cycle from the smallest chain member
    int start = -1;
    for (int idx : comp) {
      if (census.strong_sets[static_cast<std::size_t>(idx)].size() == 2) {
        start = idx;
        break;
      }
    }
    REQUIRE(start >= 0);
    std::vector<Transformation> cycle =
        nine_cycle_walk(census.elements[static_cast<std::size_t>(start)]);
    std::map<Transformation, int> index;
    for (int idx : comp) {
      index.emplace(census.elements[static_cast<std::size_t>(idx)], idx);
    }
    // an idempotent inverse of the first cycle member, outside the component
    int head = index.at(cycle.front());
    int epsilon = -1;
    for_each_transformation(4, [&](const Transformation& e) {
      if (epsilon < 0 && is_idempotent(e) &&
          is_inverse_pair(census.elements[static_cast<std::size_t>(head)], e) &&
          !index.count(e)) {
        auto found = std::lower_bound(census.elements.begin(),
                                      census.elements.end(), e);
        epsilon = static_cast<int>(found - census.elements.begin());
      }
    });
    REQUIRE(epsilon >= 0);
    REQUIRE(partner[static_cast<std::size_t>(epsilon)] == epsilon);
    partner[static_cast<std::size_t>(head)] = epsilon;
    partner[static_cast<std::size_t>(epsilon)] = head;
    for (std::size_t j = 1; j + 1 < cycle.size(); j += 2) {
      int u = index.at(cycle[j]);
      int v = index.at(cycle[j + 1]);
      partner[static_cast<std::size_t>(u)] = v;
      partner[static_cast<std::size_t>(v)] = u;
    }
  }
  // the repaired map is an involution matching by ordinary inverses
  for (std::size_t i = 0; i < partner.size(); ++i) {
    REQUIRE(partner[i] >= 0);
    CHECK(partner[static_cast<std::size_t>(partner[i])] ==
          static_cast<int>(i));
    CHECK(is_inverse_pair(census.elements[i],
                          census.elements[static_cast<std::size_t>(partner[i])]));
  }
}

TEST_CASE("the forced Hamiltonian walk reproduces the reference cycle") {
  std::vector<Transformation> expected{
      Transformation(4, {3, 3, 0, 3}), Transformation(4, {2, 2, 3, 3}),
      Transformation(4, {3, 3, 1, 3}), Transformation(4, {3, 2, 3, 3}),
      Transformation(4, {1, 3, 1, 3}), Transformation(4, {3, 0, 3, 3}),
      Transformation(4, {1, 3, 3, 3}), Transformation(4, {3, 0, 0, 3}),
      Transformation(4, {2, 3, 3, 3})};
  CHECK(nine_cycle_walk(expected.front()) == expected);

  // shape pattern (chain, fork, chain) repeated
  std::vector<RankTwoShape> shapes;
  for (const Transformation& m : expected) {
    shapes.push_back(*rank_two_shape(m));
  }
  for (std::size_t j = 0; j < 9; ++j) {
    CHECK(shapes[j] == (j % 3 == 1 ? RankTwoShape::kFork : RankTwoShape::kChain));
  }

  // starting from the fork yields the same cycle through its lex-least chain
  std::vector<Transformation> from_fork = nine_cycle_walk(expected[1]);
  CHECK(from_fork.size() == 9);
  std::set<Transformation> a(expected.begin(), expected.end());
  std::set<Transformation> b(from_fork.begin(), from_fork.end());
  CHECK(a == b);

  CHECK_THROWS_AS(nine_cycle_walk(Transformation::identity(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(nine_cycle_walk(Transformation(4, {1, 0, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("degree-8 witness configuration") {
  StrongWitnessReport w = t8_witness();
  CHECK(w.alpha1 == Transformation(8, {1, 2, 3, 4, 4, 2, 7, 3}));
  CHECK(w.alpha2 == Transformation(8, {1, 2, 3, 4, 4, 7, 2, 3}));
  CHECK(w.beta == Transformation(8, {1, 2, 3, 4, 4, 7, 7, 3}));
  CHECK(w.strong_sets[0] == std::vector<Transformation>{w.beta1});
  CHECK(w.strong_sets[1] == std::vector<Transformation>{w.beta2});
  CHECK(w.strong_sets[2] ==
        std::vector<Transformation>{w.beta2, w.beta1});  // sorted
  CHECK(w.hall_violation);
  CHECK(w.certificate.set == std::vector<int>{0, 1, 2});
  CHECK(w.certificate.neighborhood.size() == 2);

  // acting identically on an extra point preserves the violation
  StrongWitnessReport w9 = t8_witness(9);
  CHECK(w9.strong_sets[0] == std::vector<Transformation>{w9.beta1});
  CHECK(w9.strong_sets[1] == std::vector<Transformation>{w9.beta2});
  CHECK(w9.hall_violation);
  CHECK(w9.certificate.set.size() == 3);
}

TEST_CASE("the witness graph fails the exhaustive Hall check on U") {
  StrongWitnessReport w = t8_witness();
  std::vector<Transformation> elements{w.alpha1, w.alpha2, w.beta, w.beta2,
                                       w.beta1};
  InverseGraph g = build_inverse_graph(elements, InverseRelation::kStrong);
  HallCheckResult hall = hall_check_exact(g, 5);
  CHECK_FALSE(hall.ok);
  CHECK(hall.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("degree-8 witness strong sets survive the unpruned oracle") {
  StrongWitnessReport w = t8_witness();
  CHECK(st::brute_strong_inverses(w.alpha1) ==
        std::vector<Transformation>{w.beta1});
  CHECK(st::brute_strong_inverses(w.beta) == w.strong_sets[2]);
}

TEST_CASE("degree-3 uniqueness report") {
  T3UniquenessReport report = t3_unique_strong_inverses();
  CHECK(report.all_unique);
  CHECK(report.elements.size() == 27);
  CHECK(report.self_paired == 19);
  CHECK(report.tail_pairs_verified == 6);

  // identity pairs with itself; the 3-step tails swap their first two points
  for (std::size_t i = 0; i < report.elements.size(); ++i) {
    if (report.elements[i] == Transformation::identity(3)) {
      CHECK(report.partner[i] == report.elements[i]);
    }
    if (report.elements[i] == Transformation(3, {1, 2, 2})) {
      CHECK(report.partner[i] == Transformation(3, {2, 0, 2}));
    }
  }
}
