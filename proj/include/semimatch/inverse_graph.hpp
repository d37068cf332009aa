#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semimatch/transformation.hpp"

namespace semimatch {

/// Undirected graph on an indexed element set whose edges are given by a
/// chosen inverse relation; self-inverse elements carry loops.
struct InverseGraph {
  /// adjacency[i] is sorted and contains i itself when i is looped.
  std::vector<std::vector<int>> adjacency;

  int size() const { return static_cast<int>(adjacency.size()); }
  bool has_edge(int i, int j) const;
  bool has_loop(int i) const { return has_edge(i, i); }
  std::vector<int> loops() const;
  /// Degree not counting a loop.
  int neighbor_count(int i) const;
};

enum class InverseRelation {
  kMutual,  // b in V(a): aba = a and bab = b
  kStrong,  // b in S(a): additionally <a,b> is an inverse semigroup
};

/// Adjacency restricted to the given element set, with inverses computed in
/// the ambient T_n.
InverseGraph build_inverse_graph(std::span<const Transformation> elements,
                                 InverseRelation relation);

/// Builds the graph directly from precomputed neighbor lists (symmetrized and
/// sorted here).
InverseGraph graph_from_adjacency(std::vector<std::vector<int>> adjacency);

struct HallWitness {
  std::vector<int> set;           // A with |A| > |V(A)|
  std::vector<int> neighborhood;  // V(A)
};

struct PermutationMatchingResult {
  /// map[i] = j with j an inverse of i; a bijection.
  std::optional<std::vector<int>> matching;
  std::optional<HallWitness> witness;

  bool exists() const { return matching.has_value(); }
};

/// Maximum bipartite matching (Hopcroft-Karp) on the left/right doubling of
/// the graph; on deficiency the witness is read off the final alternating
/// reachability cut. Tie-breaking is by element index.
PermutationMatchingResult find_permutation_matching(const InverseGraph& g);

struct InvolutionMatching {
  std::vector<std::pair<int, int>> pairs;  // i < j, mutual inverses
  std::vector<int> fixed;                  // looped vertices fixed pointwise

  /// Total map form: map[i] = partner or i itself.
  std::vector<int> as_map(int size) const;
};

struct InvolutionMatchingResult {
  std::optional<InvolutionMatching> matching;
  /// Loopless odd-cardinality components; each one alone forbids an
  /// involution matching.
  std::vector<std::vector<int>> odd_components;
  /// Vertices left unmatched by the maximum matching when none exists.
  std::vector<int> unmatched;

  bool exists() const { return matching.has_value(); }
};

/// Decides whether the vertex set splits into mutual-inverse 2-cycles plus
/// fixed looped points. Reduction: pendant mate per looped vertex (plus a
/// pendant clique to absorb unused mates), then Edmonds blossom search for a
/// perfect matching.
InvolutionMatchingResult find_involution_matching(const InverseGraph& g);

/// Exhaustive involution search with forced-move propagation; cross-check for
/// the blossom route. Guarded to <= 300 vertices.
std::optional<InvolutionMatching> find_involution_matching_backtracking(
    const InverseGraph& g);

/// Maximum matching in a general undirected graph (Edmonds blossom
/// contraction). Returns mate[] with -1 for exposed vertices.
std::vector<int> maximum_matching_blossom(
    const std::vector<std::vector<int>>& adjacency);

struct HallCheckResult {
  bool ok = false;
  std::vector<int> witness;  // deficient subset when !ok
};

/// Verifies |A| <= |V(A)| over all subsets of cardinality <= max_size.
/// Exponential; guarded to < 22 vertices.
HallCheckResult hall_check_exact(const InverseGraph& g, int max_size);

/// Same check over unions of the given candidate blocks (at most max_blocks
/// of them per union). Intended for H-class blocks, where deficiency hides
/// when the element set is a transformation semigroup.
HallCheckResult hall_check_blocks(const InverseGraph& g,
                                  const std::vector<std::vector<int>>& blocks,
                                  int max_blocks);

enum class ComponentKind { kLoop, kIsolated, kPair, kPath, kCycle, kOther };

struct GraphComponent {
  ComponentKind kind = ComponentKind::kOther;
  std::vector<int> vertices;  // sorted; for paths/cycles also see order
  std::vector<int> order;     // traversal order along the path/cycle
};

std::vector<GraphComponent> analyze_components(const InverseGraph& g);

/// Number of permutation matchings obtained by orienting each component:
/// cycles contribute 2, pairs and loops 1. Throws when a component is not a
/// loop, pair, path, or cycle. Odd paths and loopless isolated vertices
/// contribute 0.
long long count_orientation_matchings(const InverseGraph& g);

/// Exact number of permutation matchings (permanent of the adjacency,
/// computed per component by backtracking). Guarded to components of at most
/// max_component vertices.
long long count_permutation_matchings(const InverseGraph& g,
                                      int max_component = 16);

struct HPreservationReport {
  bool preserved = true;
  std::pair<int, int> witness{-1, -1};  // indices with a H b, a' !H b'
};

/// Checks a H b => a' H b' for a matching map over a transformation element
/// set (H on T_n: equal kernel and equal range).
HPreservationReport check_h_preservation(
    std::span<const Transformation> elements, std::span<const int> matching);

/// Groups element indices into H-classes (equal kernel and range).
std::vector<std::vector<int>> h_class_blocks(
    std::span<const Transformation> elements);

}  // namespace semimatch
