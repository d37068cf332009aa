#pragma once

// Shared builders and brute-force oracles for the test suites. Oracles here
// deliberately avoid the library's optimized paths so that agreement is
// meaningful.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "semimatch/inverse_graph.hpp"
#include "semimatch/semigroup.hpp"
#include "semimatch/strong_inverse.hpp"
#include "semimatch/transformation.hpp"

#ifndef SEMIMATCH_FIXTURE_DIR
#define SEMIMATCH_FIXTURE_DIR "tests/fixtures"
#endif

namespace semimatch::testing {

inline std::string fixture(const std::string& name) {
  return std::string(SEMIMATCH_FIXTURE_DIR) + "/" + name;
}

/// V(a) by scanning all of T_n.
inline std::vector<Transformation> brute_inverses(const Transformation& a) {
  std::vector<Transformation> out;
  for_each_transformation(a.degree(), [&](const Transformation& b) {
    if (is_inverse_pair(a, b)) {
      out.push_back(b);
    }
  });
  return out;
}

/// S(a) by checking the closure of every structural inverse, with no
/// depth/grasp pruning.
inline std::vector<Transformation> brute_strong_inverses(
    const Transformation& a) {
  std::vector<Transformation> out;
  for (const Transformation& b : inverses_of(a)) {
    if (generates_inverse_subsemigroup(a, b)) {
      out.push_back(b);
    }
  }
  return out;
}

/// Longest dipath ending at x, walked backwards one preimage at a time;
/// returns DigraphProfile::kInfinite once a walk exceeds n steps (cycle).
inline int brute_depth(const Transformation& a, int x) {
  int n = a.degree();
  std::vector<std::vector<int>> preimages(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y) {
    preimages[static_cast<std::size_t>(a[y])].push_back(y);
  }
  int best = 0;
  auto dfs = [&](auto&& self, int v, int len) -> bool {
    if (len > n) {
      return true;  // cycle reached
    }
    best = std::max(best, len);
    for (int y : preimages[static_cast<std::size_t>(v)]) {
      if (self(self, y, len + 1)) {
        return true;
      }
    }
    return false;
  };
  if (dfs(dfs, x, 0)) {
    return DigraphProfile::kInfinite;
  }
  return best;
}

inline Transformation random_transformation(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, n - 1);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int& v : images) {
    v = dist(rng);
  }
  return Transformation(n, std::move(images));
}

inline InverseGraph random_graph(int m, double edge_p, double loop_p,
                                 std::mt19937& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (coin(rng) < loop_p) {
      adjacency[static_cast<std::size_t>(i)].push_back(i);
    }
    for (int j = i + 1; j < m; ++j) {
      if (coin(rng) < edge_p) {
        adjacency[static_cast<std::size_t>(i)].push_back(j);
      }
    }
  }
  return graph_from_adjacency(std::move(adjacency));
}

// --- abstract semigroup builders -----------------------------------------

inline FiniteSemigroup left_zero(int n) {
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = i;
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

inline FiniteSemigroup right_zero(int n) {
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = j;
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

/// p x q rectangular band: (i,j)(k,l) = (i,l), element index = i*q + j.
inline FiniteSemigroup rect_band(int p, int q) {
  int n = p * q;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] = (a / q) * q + (b % q);
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

inline FiniteSemigroup cyclic_group(int n) {
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

/// 0-Rees matrix semigroup over the trivial group: rows x cols plus a zero,
/// with (i,l)(j,m) = (i,m) when cell (j,l) is marked, else 0. Element 0 is
/// the zero; (i,l) has index 1 + i*cols + l.
inline FiniteSemigroup zero_rect_band(int rows, int cols,
                                      const std::vector<std::pair<int, int>>&
                                          group_cells) {
  int n = 1 + rows * cols;
  std::vector<std::vector<char>> cell(
      static_cast<std::size_t>(rows),
      std::vector<char>(static_cast<std::size_t>(cols), 0));
  for (auto [r, c] : group_cells) {
    cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < rows; ++i) {
    for (int l = 0; l < cols; ++l) {
      for (int j = 0; j < rows; ++j) {
        for (int m = 0; m < cols; ++m) {
          int a = 1 + i * cols + l;
          int b = 1 + j * cols + m;
          table[static_cast<std::size_t>(a) * n + b] =
              cell[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]
                  ? 1 + i * cols + m
                  : 0;
        }
      }
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

/// Direct product of two semigroups.
inline FiniteSemigroup direct_product(const FiniteSemigroup& a,
                                      const FiniteSemigroup& b) {
  int n = a.order() * b.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1) {
    for (int y1 = 0; y1 < b.order(); ++y1) {
      for (int x2 = 0; x2 < a.order(); ++x2) {
        for (int y2 = 0; y2 < b.order(); ++y2) {
          table[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
              idx(a.product(x1, x2), b.product(y1, y2));
        }
      }
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

/// Chain semilattice e_0 > e_1 > ... with product = lower element.
inline FiniteSemigroup semilattice_chain(int n) {
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = std::max(i, j);
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

/// Symmetric inverse monoid on 2 points (partial injections), 7 elements.
/// Built from first principles so the unique-inverse property is intrinsic.
inline FiniteSemigroup symmetric_inverse_monoid_2(void) {
  // Partial injections as image arrays with -1 for undefined.
  std::vector<std::vector<int>> maps;
  for (int a : {-1, 0, 1}) {
    for (int b : {-1, 0, 1}) {
      if (a >= 0 && a == b) {
        continue;  // not injective
      }
      maps.push_back({a, b});
    }
  }
  auto pcomp = [](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(2, -1);
    for (int x = 0; x < 2; ++x) {
      if (f[static_cast<std::size_t>(x)] >= 0) {
        h[static_cast<std::size_t>(x)] =
            g[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])];
      }
    }
    return h;
  };
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    index[maps[i]] = static_cast<int>(i);
  }
  int n = static_cast<int>(maps.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] =
          index.at(pcomp(maps[static_cast<std::size_t>(i)],
                         maps[static_cast<std::size_t>(j)]));
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

}  // namespace semimatch::testing
