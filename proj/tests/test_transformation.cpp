#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "semimatch/transformation.hpp"
#include "support.hpp"

using namespace semimatch;
namespace st = semimatch::testing;

TEST_CASE("construction validates images") {
  Transformation a(3, {1, 1, 2});
  CHECK(a.degree() == 3);
  CHECK(a[0] == 1);
  CHECK(Transformation::identity(4).images() == std::vector<int>{0, 1, 2, 3});

  CHECK_THROWS_WITH_AS(Transformation(3, {1, 3, 2}),
                       doctest::Contains("index 1"), std::invalid_argument);
  CHECK_THROWS_AS(Transformation(3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Transformation(2, {0, -1}), std::invalid_argument);
}

TEST_CASE("composition acts left to right") {
  Transformation a(3, {1, 1, 2});
  CHECK(compose(Transformation::identity(3), a) == a);
  CHECK(compose(a, Transformation::identity(3)) == a);

  // The reflection is an involution.
  Transformation g10(10, {9, 8, 7, 6, 5, 4, 3, 2, 1, 0});
  CHECK(compose(g10, g10) == Transformation::identity(10));

  // x(ab) = (xa)b: constant-after-anything is the constant.
  Transformation c = Transformation::constant(3, 0);
  CHECK(compose(a, c) == c);
  CHECK(compose(c, a) == Transformation::constant(3, 1));

  CHECK_THROWS_AS(compose(a, Transformation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("rank, range, kernel") {
  Transformation a(10, {3, 2, 2, 8, 8, 6, 6, 4, 3, 3});
  CHECK(rank(a) == 5);
  CHECK(range_of(a) == std::vector<int>{2, 3, 4, 6, 8});

  auto classes = kernel_partition(Transformation::identity(5));
  CHECK(classes.size() == 5);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CHECK(classes[i] == std::vector<int>{static_cast<int>(i)});
  }

  CHECK(range_of(Transformation::constant(4, 3)) == std::vector<int>{3});
  CHECK(kernel_partition(Transformation::constant(4, 3)) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});

  // Kernel classes ordered by minimum element.
  auto kc = kernel_partition(a);
  CHECK(kc.front().front() == 0);
  CHECK(std::is_sorted(kc.begin(), kc.end(),
                       [](const auto& p, const auto& q) {
                         return p.front() < q.front();
                       }));
}

TEST_CASE("digraph profile on the degree-8 witness map") {
  Transformation a(8, {1, 2, 3, 4, 4, 2, 7, 3});
  DigraphProfile p = digraph_profile(a);

  std::vector<int> depth_zero;
  for (int x = 0; x < 8; ++x) {
    if (p.depth[static_cast<std::size_t>(x)] == 0) {
      depth_zero.push_back(x);
    }
  }
  CHECK(depth_zero == std::vector<int>{0, 5, 6});
  CHECK(p.height[5] == 1);
  CHECK(p.stable_range == std::vector<int>{4});
  CHECK(p.cycle_lengths == std::vector<int>{1});
}

TEST_CASE("identity profile is all stable") {
  DigraphProfile p = digraph_profile(Transformation::identity(6));
  for (int x = 0; x < 6; ++x) {
    CHECK(p.depth[static_cast<std::size_t>(x)] == DigraphProfile::kInfinite);
    CHECK(p.height[static_cast<std::size_t>(x)] == DigraphProfile::kInfinite);
  }
  CHECK(p.stable_range == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(p.cycle_lengths == std::vector<int>(6, 1));
}

TEST_CASE("depth equals the longest-dipath oracle for degree <= 5") {
  for (int n = 1; n <= 4; ++n) {
    for_each_transformation(n, [&](const Transformation& a) {
      DigraphProfile p = digraph_profile(a);
      CHECK(p.stable_range == range_of(pow(a, n)));
      long long cycle_sum = 0;
      for (int len : p.cycle_lengths) {
        cycle_sum += len;
      }
      CHECK(cycle_sum == static_cast<long long>(p.stable_range.size()));
      for (int x = 0; x < n; ++x) {
        CHECK(p.depth[static_cast<std::size_t>(x)] == st::brute_depth(a, x));
      }
    });
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Transformation a = st::random_transformation(5, rng);
    DigraphProfile p = digraph_profile(a);
    CHECK(p.stable_range == range_of(pow(a, 5)));
    for (int x = 0; x < 5; ++x) {
      CHECK(p.depth[static_cast<std::size_t>(x)] == st::brute_depth(a, x));
    }
  }
}

TEST_CASE("grasp on the degree-8 witness pair") {
  Transformation a(8, {1, 2, 3, 4, 4, 2, 7, 3});
  Transformation b(8, {4, 0, 1, 2, 4, 0, 0, 6});
  CHECK(grasp(a, b, 0) == 3);
  CHECK(grasp(a, b, 6) == 1);

  Transformation id = Transformation::identity(5);
  for (int x = 0; x < 5; ++x) {
    CHECK(grasp(id, id, x) == 5);
  }
  CHECK_THROWS_AS(grasp(a, Transformation::identity(5), 0),
                  std::invalid_argument);
}

TEST_CASE("group elements") {
  CHECK(is_group_element(Transformation::identity(4)));
  CHECK(is_group_element(Transformation::constant(4, 2)));
  CHECK(is_group_element(Transformation(3, {1, 1, 2})));  // idempotent
  CHECK_FALSE(is_group_element(Transformation(3, {1, 2, 2})));

  // a lies in a subgroup iff some power is an idempotent with the same range
  for_each_transformation(4, [&](const Transformation& a) {
    bool witness = false;
    Transformation power = a;
    for (int k = 1; k <= 8; ++k) {
      if (is_idempotent(power) && range_of(power) == range_of(a)) {
        witness = true;
        break;
      }
      power = compose(power, a);
    }
    CHECK(is_group_element(a) == witness);
  });
}

TEST_CASE("structural inverse enumeration") {
  // All n constants are the inverses of a constant.
  Transformation c = Transformation::constant(4, 1);
  std::vector<Transformation> expected;
  for (int v = 0; v < 4; ++v) {
    expected.push_back(Transformation::constant(4, v));
  }
  CHECK(inverses_of(c) == expected);

  CHECK(inverses_of(Transformation::identity(4)) ==
        std::vector<Transformation>{Transformation::identity(4)});

  // |V([1,1,2])| = 4: two transversals times two placements of the leftover
  Transformation a(3, {1, 1, 2});
  auto structural = inverses_of(a);
  CHECK(structural.size() == 4);
  CHECK(structural == st::brute_inverses(a));
}

TEST_CASE("structural inverses equal the brute-force scan exhaustively") {
  for (int n : {1, 2, 3, 4}) {
    for_each_transformation(n, [&](const Transformation& a) {
      CHECK(inverses_of(a) == st::brute_inverses(a));
    });
  }
}

TEST_CASE("inverse membership at degree 8 via the defining equations") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 3; ++trial) {
    Transformation a = st::random_transformation(8, rng);
    auto inverses = inverses_of(a);
    std::set<Transformation> set(inverses.begin(), inverses.end());
    for (const Transformation& b : inverses) {
      CHECK(is_inverse_pair(a, b));
    }
    for (int probe = 0; probe < 2000; ++probe) {
      Transformation b = st::random_transformation(8, rng);
      CHECK(is_inverse_pair(a, b) == (set.count(b) > 0));
    }
  }
}

TEST_CASE("enumeration order and count") {
  int count = 0;
  Transformation last = Transformation::identity(2);
  for_each_transformation(2, [&](const Transformation& t) {
    ++count;
    last = t;
  });
  CHECK(count == 4);
  CHECK(last == Transformation::constant(2, 1));
  CHECK(all_transformations(3).size() == 27);
}
