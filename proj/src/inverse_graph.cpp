#include "semimatch/inverse_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "semimatch/parallel.hpp"
#include "semimatch/strong_inverse.hpp"

namespace semimatch {

bool InverseGraph::has_edge(int i, int j) const {
  const auto& adj = adjacency[static_cast<std::size_t>(i)];
  return std::binary_search(adj.begin(), adj.end(), j);
}

std::vector<int> InverseGraph::loops() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (has_loop(i)) {
      out.push_back(i);
    }
  }
  return out;
}

int InverseGraph::neighbor_count(int i) const {
  const auto& adj = adjacency[static_cast<std::size_t>(i)];
  return static_cast<int>(adj.size()) - (has_loop(i) ? 1 : 0);
}

InverseGraph graph_from_adjacency(std::vector<std::vector<int>> adjacency) {
  InverseGraph g;
  g.adjacency = std::move(adjacency);
  std::size_t m = g.adjacency.size();
  std::vector<std::vector<int>> sym(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (int j : g.adjacency[i]) {
      if (j < 0 || j >= static_cast<int>(m)) {
        throw std::invalid_argument("graph_from_adjacency: index out of range");
      }
      sym[i].push_back(j);
      if (j != static_cast<int>(i)) {
        sym[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
      }
    }
  }
  for (auto& adj : sym) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  g.adjacency = std::move(sym);
  return g;
}

InverseGraph build_inverse_graph(std::span<const Transformation> elements,
                                 InverseRelation relation) {
  std::size_t m = elements.size();
  std::vector<std::vector<int>> adjacency(m);
  if (relation == InverseRelation::kMutual) {
    parallel_chunks(
        m,
        [&](std::size_t begin, std::size_t end) {
          for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
              if (is_inverse_pair(elements[i], elements[j])) {
                adjacency[i].push_back(static_cast<int>(j));
              }
            }
          }
        },
        64);
  } else {
    std::unordered_map<Transformation, int, TransformationHash> index;
    for (std::size_t i = 0; i < m; ++i) {
      index.emplace(elements[i], static_cast<int>(i));
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (const Transformation& b : strong_inverses(elements[i])) {
        auto it = index.find(b);
        if (it != index.end()) {
          adjacency[i].push_back(it->second);
        }
      }
      std::sort(adjacency[i].begin(), adjacency[i].end());
    }
  }
  InverseGraph g;
  g.adjacency = std::move(adjacency);
  return g;
}

namespace {

constexpr int kNil = -1;

struct HopcroftKarp {
  const InverseGraph& g;
  int m;
  std::vector<int> match_left, match_right, dist;

  explicit HopcroftKarp(const InverseGraph& graph)
      : g(graph),
        m(graph.size()),
        match_left(static_cast<std::size_t>(m), kNil),
        match_right(static_cast<std::size_t>(m), kNil),
        dist(static_cast<std::size_t>(m), 0) {}

  bool bfs() {
    std::queue<int> queue;
    bool reachable_free = false;
    for (int u = 0; u < m; ++u) {
      if (match_left[static_cast<std::size_t>(u)] == kNil) {
        dist[static_cast<std::size_t>(u)] = 0;
        queue.push(u);
      } else {
        dist[static_cast<std::size_t>(u)] = kNil;
      }
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
        int w = match_right[static_cast<std::size_t>(v)];
        if (w == kNil) {
          reachable_free = true;
        } else if (dist[static_cast<std::size_t>(w)] == kNil) {
          dist[static_cast<std::size_t>(w)] =
              dist[static_cast<std::size_t>(u)] + 1;
          queue.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int u) {
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      int w = match_right[static_cast<std::size_t>(v)];
      if (w == kNil || (dist[static_cast<std::size_t>(w)] ==
                            dist[static_cast<std::size_t>(u)] + 1 &&
                        dfs(w))) {
        match_left[static_cast<std::size_t>(u)] = v;
        match_right[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = kNil;
    return false;
  }

  int run() {
    int size = 0;
    while (bfs()) {
      for (int u = 0; u < m; ++u) {
        if (match_left[static_cast<std::size_t>(u)] == kNil && dfs(u)) {
          ++size;
        }
      }
    }
    return size;
  }
};

}  // namespace

PermutationMatchingResult find_permutation_matching(const InverseGraph& g) {
  PermutationMatchingResult result;
  int m = g.size();
  HopcroftKarp hk(g);
  int size = hk.run();
  if (size == m) {
    result.matching = std::move(hk.match_left);
    return result;
  }

  // Alternating reachability from the unmatched left vertices: the reached
  // left set A has |A| = |N(A)| + (number of unmatched members of A).
  std::vector<char> left_seen(static_cast<std::size_t>(m), 0);
  std::vector<char> right_seen(static_cast<std::size_t>(m), 0);
  std::deque<int> queue;
  for (int u = 0; u < m; ++u) {
    if (hk.match_left[static_cast<std::size_t>(u)] == kNil) {
      left_seen[static_cast<std::size_t>(u)] = 1;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      if (right_seen[static_cast<std::size_t>(v)]) {
        continue;
      }
      right_seen[static_cast<std::size_t>(v)] = 1;
      int w = hk.match_right[static_cast<std::size_t>(v)];
      if (w != kNil && !left_seen[static_cast<std::size_t>(w)]) {
        left_seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  HallWitness witness;
  for (int u = 0; u < m; ++u) {
    if (left_seen[static_cast<std::size_t>(u)]) {
      witness.set.push_back(u);
    }
    if (right_seen[static_cast<std::size_t>(u)]) {
      witness.neighborhood.push_back(u);
    }
  }
  result.witness = std::move(witness);
  return result;
}

std::vector<int> InvolutionMatching::as_map(int size) const {
  std::vector<int> map(static_cast<std::size_t>(size), kNil);
  for (int v : fixed) {
    map[static_cast<std::size_t>(v)] = v;
  }
  for (auto [i, j] : pairs) {
    map[static_cast<std::size_t>(i)] = j;
    map[static_cast<std::size_t>(j)] = i;
  }
  return map;
}

namespace {

/// Edmonds maximum matching via blossom contraction, array form.
struct Blossom {
  int n;
  const std::vector<std::vector<int>>& g;
  std::vector<int> match, parent, base;
  std::vector<char> used, blossom;

  explicit Blossom(const std::vector<std::vector<int>>& adjacency)
      : n(static_cast<int>(adjacency.size())),
        g(adjacency),
        match(static_cast<std::size_t>(n), kNil),
        parent(static_cast<std::size_t>(n), kNil),
        base(static_cast<std::size_t>(n), 0),
        used(static_cast<std::size_t>(n), 0),
        blossom(static_cast<std::size_t>(n), 0) {}

  int lowest_common_ancestor(int a, int b) {
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    for (;;) {
      a = base[static_cast<std::size_t>(a)];
      on_path[static_cast<std::size_t>(a)] = 1;
      if (match[static_cast<std::size_t>(a)] == kNil) {
        break;
      }
      a = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base[static_cast<std::size_t>(b)];
      if (on_path[static_cast<std::size_t>(b)]) {
        return b;
      }
      b = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[static_cast<std::size_t>(v)] != b) {
      int mv = match[static_cast<std::size_t>(v)];
      blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
      blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(mv)])] = 1;
      parent[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent[static_cast<std::size_t>(mv)];
    }
  }

  int find_path(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), kNil);
    for (int i = 0; i < n; ++i) {
      base[static_cast<std::size_t>(i)] = i;
    }
    used[static_cast<std::size_t>(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : g[static_cast<std::size_t>(v)]) {
        if (base[static_cast<std::size_t>(v)] ==
                base[static_cast<std::size_t>(to)] ||
            match[static_cast<std::size_t>(v)] == to) {
          continue;
        }
        if (to == root ||
            (match[static_cast<std::size_t>(to)] != kNil &&
             parent[static_cast<std::size_t>(
                 match[static_cast<std::size_t>(to)])] != kNil)) {
          // Odd cycle: contract the blossom.
          int cur = lowest_common_ancestor(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[static_cast<std::size_t>(
                    base[static_cast<std::size_t>(i)])]) {
              base[static_cast<std::size_t>(i)] = cur;
              if (!used[static_cast<std::size_t>(i)]) {
                used[static_cast<std::size_t>(i)] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[static_cast<std::size_t>(to)] == kNil) {
          parent[static_cast<std::size_t>(to)] = v;
          if (match[static_cast<std::size_t>(to)] == kNil) {
            return to;
          }
          int next = match[static_cast<std::size_t>(to)];
          used[static_cast<std::size_t>(next)] = 1;
          queue.push_back(next);
        }
      }
    }
    return kNil;
  }

  void augment(int v) {
    while (v != kNil) {
      int pv = parent[static_cast<std::size_t>(v)];
      int ppv = match[static_cast<std::size_t>(pv)];
      match[static_cast<std::size_t>(v)] = pv;
      match[static_cast<std::size_t>(pv)] = v;
      v = ppv;
    }
  }

  void run() {
    // Greedy seed speeds up the augmenting phase.
    for (int v = 0; v < n; ++v) {
      if (match[static_cast<std::size_t>(v)] != kNil) {
        continue;
      }
      for (int to : g[static_cast<std::size_t>(v)]) {
        if (to != v && match[static_cast<std::size_t>(to)] == kNil) {
          match[static_cast<std::size_t>(v)] = to;
          match[static_cast<std::size_t>(to)] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (match[static_cast<std::size_t>(v)] == kNil) {
        int end = find_path(v);
        if (end != kNil) {
          augment(end);
        }
      }
    }
  }
};

std::vector<std::vector<int>> components_of(const InverseGraph& g) {
  int m = g.size();
  std::vector<int> comp(static_cast<std::size_t>(m), kNil);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < m; ++start) {
    if (comp[static_cast<std::size_t>(start)] != kNil) {
      continue;
    }
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> queue{start};
    comp[static_cast<std::size_t>(start)] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      out[static_cast<std::size_t>(id)].push_back(v);
      for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(w)] == kNil) {
          comp[static_cast<std::size_t>(w)] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(out[static_cast<std::size_t>(id)].begin(),
              out[static_cast<std::size_t>(id)].end());
  }
  return out;
}

}  // namespace

std::vector<int> maximum_matching_blossom(
    const std::vector<std::vector<int>>& adjacency) {
  Blossom b(adjacency);
  b.run();
  return b.match;
}

InvolutionMatchingResult find_involution_matching(const InverseGraph& g) {
  InvolutionMatchingResult result;
  int m = g.size();
  std::vector<int> loop_list = g.loops();
  int loops = static_cast<int>(loop_list.size());

  // Pendant mate per looped vertex; unmatched mates pair off inside a clique,
  // with one extra absorber vertex when the total is odd.
  int total = m + loops;
  bool odd = (total % 2) != 0;
  int extra = odd ? 1 : 0;
  std::vector<std::vector<int>> adjacency(
      static_cast<std::size_t>(total + extra));
  for (int v = 0; v < m; ++v) {
    for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
      if (w != v) {
        adjacency[static_cast<std::size_t>(v)].push_back(w);
      }
    }
  }
  for (int p = 0; p < loops; ++p) {
    int pendant = m + p;
    int v = loop_list[static_cast<std::size_t>(p)];
    adjacency[static_cast<std::size_t>(v)].push_back(pendant);
    adjacency[static_cast<std::size_t>(pendant)].push_back(v);
    for (int q = 0; q < p; ++q) {
      adjacency[static_cast<std::size_t>(pendant)].push_back(m + q);
      adjacency[static_cast<std::size_t>(m + q)].push_back(pendant);
    }
    if (odd) {
      adjacency[static_cast<std::size_t>(pendant)].push_back(total);
      adjacency[static_cast<std::size_t>(total)].push_back(pendant);
    }
  }

  std::vector<int> mate = maximum_matching_blossom(adjacency);
  bool originals_covered = true;
  for (int v = 0; v < m; ++v) {
    if (mate[static_cast<std::size_t>(v)] == kNil) {
      originals_covered = false;
      result.unmatched.push_back(v);
    }
  }
  bool gadget_covered = true;
  for (int v = m; v < total + extra; ++v) {
    if (mate[static_cast<std::size_t>(v)] == kNil) {
      gadget_covered = false;
    }
  }

  if (originals_covered && gadget_covered) {
    InvolutionMatching inv;
    for (int v = 0; v < m; ++v) {
      int w = mate[static_cast<std::size_t>(v)];
      if (w >= m) {
        inv.fixed.push_back(v);
      } else if (v < w) {
        inv.pairs.emplace_back(v, w);
      }
    }
    result.matching = std::move(inv);
    return result;
  }

  for (const auto& comp : components_of(g)) {
    if (comp.size() % 2 == 0) {
      continue;
    }
    bool loopless = std::none_of(comp.begin(), comp.end(),
                                 [&](int v) { return g.has_loop(v); });
    if (loopless) {
      result.odd_components.push_back(comp);
    }
  }
  return result;
}

namespace {

struct InvolutionSearch {
  const InverseGraph& g;
  int m;
  std::vector<int> assigned;  // kNil, self, or partner

  explicit InvolutionSearch(const InverseGraph& graph)
      : g(graph),
        m(graph.size()),
        assigned(static_cast<std::size_t>(graph.size()), kNil) {}

  std::vector<int> moves_of(int v) const {
    std::vector<int> moves;
    for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
      if (w == v || assigned[static_cast<std::size_t>(w)] == kNil) {
        moves.push_back(w);
      }
    }
    return moves;
  }

  bool solve() {
    int best = kNil;
    std::size_t best_count = 0;
    for (int v = 0; v < m; ++v) {
      if (assigned[static_cast<std::size_t>(v)] != kNil) {
        continue;
      }
      std::vector<int> moves = moves_of(v);
      if (moves.empty()) {
        return false;
      }
      if (best == kNil || moves.size() < best_count) {
        best = v;
        best_count = moves.size();
        if (best_count == 1) {
          break;  // forced move; handle immediately
        }
      }
    }
    if (best == kNil) {
      return true;
    }
    for (int w : moves_of(best)) {
      assigned[static_cast<std::size_t>(best)] = w;
      assigned[static_cast<std::size_t>(w)] = best;
      if (solve()) {
        return true;
      }
      assigned[static_cast<std::size_t>(best)] = kNil;
      assigned[static_cast<std::size_t>(w)] = kNil;
    }
    return false;
  }
};

}  // namespace

std::optional<InvolutionMatching> find_involution_matching_backtracking(
    const InverseGraph& g) {
  if (g.size() > 300) {
    throw std::invalid_argument(
        "find_involution_matching_backtracking: graph exceeds 300 vertices");
  }
  InvolutionSearch search(g);
  if (!search.solve()) {
    return std::nullopt;
  }
  InvolutionMatching inv;
  for (int v = 0; v < g.size(); ++v) {
    int w = search.assigned[static_cast<std::size_t>(v)];
    if (w == v) {
      inv.fixed.push_back(v);
    } else if (v < w) {
      inv.pairs.emplace_back(v, w);
    }
  }
  return inv;
}

namespace {

HallCheckResult hall_over_masks(const InverseGraph& g,
                                const std::vector<std::uint64_t>& unit_masks,
                                const std::vector<std::uint64_t>& unit_nbrs,
                                int max_units) {
  // unit_masks[u]: vertex set of unit u; unit_nbrs[u]: its neighborhood.
  std::size_t units = unit_masks.size();
  if (units > 22) {
    throw std::invalid_argument("hall check: size guard exceeded (2^" +
                                std::to_string(units) + " subsets)");
  }
  HallCheckResult result;
  result.ok = true;
  for (std::uint64_t pick = 1; pick < (1ull << units); ++pick) {
    if (std::popcount(pick) > max_units) {
      continue;
    }
    std::uint64_t members = 0;
    std::uint64_t neighborhood = 0;
    for (std::size_t u = 0; u < units; ++u) {
      if (pick & (1ull << u)) {
        members |= unit_masks[u];
        neighborhood |= unit_nbrs[u];
      }
    }
    if (std::popcount(members) > std::popcount(neighborhood)) {
      result.ok = false;
      for (int v = 0; v < g.size(); ++v) {
        if (members & (1ull << v)) {
          result.witness.push_back(v);
        }
      }
      return result;
    }
  }
  return result;
}

}  // namespace

HallCheckResult hall_check_exact(const InverseGraph& g, int max_size) {
  int m = g.size();
  if (m >= 22) {
    throw std::invalid_argument(
        "hall_check_exact: size guard exceeded (use hall_check_blocks)");
  }
  std::vector<std::uint64_t> unit_masks(static_cast<std::size_t>(m), 0);
  std::vector<std::uint64_t> unit_nbrs(static_cast<std::size_t>(m), 0);
  for (int v = 0; v < m; ++v) {
    unit_masks[static_cast<std::size_t>(v)] = 1ull << v;
    for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
      unit_nbrs[static_cast<std::size_t>(v)] |= 1ull << w;
    }
  }
  return hall_over_masks(g, unit_masks, unit_nbrs, max_size);
}

HallCheckResult hall_check_blocks(const InverseGraph& g,
                                  const std::vector<std::vector<int>>& blocks,
                                  int max_blocks) {
  if (g.size() > 64) {
    throw std::invalid_argument(
        "hall_check_blocks: graphs beyond 64 vertices are unsupported");
  }
  std::vector<std::uint64_t> unit_masks(blocks.size(), 0);
  std::vector<std::uint64_t> unit_nbrs(blocks.size(), 0);
  for (std::size_t u = 0; u < blocks.size(); ++u) {
    for (int v : blocks[u]) {
      unit_masks[u] |= 1ull << v;
      for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
        unit_nbrs[u] |= 1ull << w;
      }
    }
  }
  return hall_over_masks(g, unit_masks, unit_nbrs, max_blocks);
}

std::vector<GraphComponent> analyze_components(const InverseGraph& g) {
  std::vector<GraphComponent> out;
  for (auto& members : components_of(g)) {
    GraphComponent comp;
    comp.vertices = members;
    if (members.size() == 1) {
      comp.kind = g.has_loop(members.front()) ? ComponentKind::kLoop
                                              : ComponentKind::kIsolated;
      comp.order = members;
      out.push_back(std::move(comp));
      continue;
    }
    bool has_loop = false;
    int degree_one = 0;
    bool all_degree_small = true;
    for (int v : members) {
      if (g.has_loop(v)) {
        has_loop = true;
      }
      int d = g.neighbor_count(v);
      if (d == 1) {
        ++degree_one;
      } else if (d != 2) {
        all_degree_small = false;
      }
    }
    if (has_loop || !all_degree_small || degree_one > 2) {
      comp.kind = ComponentKind::kOther;
      out.push_back(std::move(comp));
      continue;
    }
    if (members.size() == 2) {
      comp.kind = ComponentKind::kPair;
      comp.order = members;
      out.push_back(std::move(comp));
      continue;
    }
    comp.kind = degree_one == 2 ? ComponentKind::kPath : ComponentKind::kCycle;
    // Traversal order from an endpoint (path) or the smallest vertex (cycle).
    int start = members.front();
    if (comp.kind == ComponentKind::kPath) {
      for (int v : members) {
        if (g.neighbor_count(v) == 1) {
          start = v;
          break;
        }
      }
    }
    std::vector<int> order{start};
    int prev = kNil;
    int cur = start;
    while (order.size() < members.size()) {
      for (int w : g.adjacency[static_cast<std::size_t>(cur)]) {
        if (w != cur && w != prev) {
          order.push_back(w);
          prev = cur;
          cur = w;
          break;
        }
      }
    }
    comp.order = std::move(order);
    out.push_back(std::move(comp));
  }
  return out;
}

long long count_orientation_matchings(const InverseGraph& g) {
  long long count = 1;
  for (const auto& comp : analyze_components(g)) {
    switch (comp.kind) {
      case ComponentKind::kLoop:
      case ComponentKind::kPair:
        break;
      case ComponentKind::kIsolated:
        count = 0;
        break;
      case ComponentKind::kPath:
        if (comp.vertices.size() % 2 != 0) {
          count = 0;
        }
        break;
      case ComponentKind::kCycle:
        count *= 2;
        break;
      case ComponentKind::kOther:
        throw std::invalid_argument(
            "count_orientation_matchings: component is not a loop, pair, "
            "path, or cycle");
    }
  }
  return count;
}

namespace {

long long count_component_matchings(const InverseGraph& g,
                                    const std::vector<int>& members) {
  std::vector<int> local(members.begin(), members.end());
  auto local_index = [&](int v) {
    return static_cast<int>(
        std::lower_bound(local.begin(), local.end(), v) - local.begin());
  };
  std::size_t size = local.size();
  std::vector<std::vector<int>> adj(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (int w : g.adjacency[static_cast<std::size_t>(local[i])]) {
      adj[i].push_back(local_index(w));
    }
  }
  long long count = 0;
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == size) {
      ++count;
      return;
    }
    for (int j : adj[pos]) {
      if (!(used & (1ull << j))) {
        used |= 1ull << j;
        self(self, pos + 1);
        used &= ~(1ull << j);
      }
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

long long count_permutation_matchings(const InverseGraph& g,
                                      int max_component) {
  long long total = 1;
  for (const auto& comp : components_of(g)) {
    if (static_cast<int>(comp.size()) > max_component) {
      throw std::invalid_argument(
          "count_permutation_matchings: component of size " +
          std::to_string(comp.size()) + " exceeds the guard");
    }
    total *= count_component_matchings(g, comp);
    if (total == 0) {
      return 0;
    }
  }
  return total;
}

std::vector<std::vector<int>> h_class_blocks(
    std::span<const Transformation> elements) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>>
      classes;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    classes[{kernel_signature(elements[i]), range_of(elements[i])}].push_back(
        static_cast<int>(i));
  }
  std::vector<std::vector<int>> blocks;
  blocks.reserve(classes.size());
  for (auto& [key, members] : classes) {
    blocks.push_back(std::move(members));
  }
  return blocks;
}

HPreservationReport check_h_preservation(
    std::span<const Transformation> elements, std::span<const int> matching) {
  HPreservationReport report;
  auto h_key = [&](int idx) {
    return std::pair{kernel_signature(elements[static_cast<std::size_t>(idx)]),
                     range_of(elements[static_cast<std::size_t>(idx)])};
  };
  for (const auto& block : h_class_blocks(elements)) {
    auto first_image = h_key(matching[static_cast<std::size_t>(block.front())]);
    for (std::size_t j = 1; j < block.size(); ++j) {
      if (h_key(matching[static_cast<std::size_t>(block[j])]) != first_image) {
        report.preserved = false;
        report.witness = {block.front(), block[j]};
        return report;
      }
    }
  }
  return report;
}

}  // namespace semimatch
