#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semimatch/inverse_graph.hpp"
#include "semimatch/transformation.hpp"

namespace semimatch {

/// Closure of a generating set under composition, inside the ambient T_n.
struct GeneratedSubsemigroup {
  std::vector<Transformation> generators;
  std::vector<Transformation> elements;  // sorted
  /// cayley[i][j] = index of elements[i] * elements[j]; filled on request.
  std::vector<std::vector<int>> cayley;
};

GeneratedSubsemigroup closure(std::vector<Transformation> generators,
                              bool with_table = false);

/// True iff every element of s has an inverse within s and all idempotents of
/// s commute pairwise. The empty semigroup counts as inverse.
bool is_inverse_subsemigroup(const GeneratedSubsemigroup& s);

/// True iff <a, b> is an inverse subsemigroup; results are memoized per
/// unordered pair within a thread.
bool generates_inverse_subsemigroup(const Transformation& a,
                                    const Transformation& b);

/// S(a) = { b in V(a) : <a,b> is inverse }. Candidates are the structural
/// V(a) enumeration filtered by the necessary depth/grasp conditions before
/// the definitive closure check. Sorted.
std::vector<Transformation> strong_inverses(const Transformation& a);

/// Deterministic selector of one preimage among the maximal-depth candidates
/// for a range point; the default takes the smallest.
using PreimageChooser =
    std::function<int(int range_point, const std::vector<int>& candidates)>;

/// Two-stage construction of a strong inverse: maximal-depth preimages on the
/// range, then x b = x a^k b^(k+1) for each endpoint x with height k.
Transformation construct_strong_inverse(const Transformation& a,
                                        const PreimageChooser& chooser = {});

/// Every output of the construction over all chooser branches.
std::vector<Transformation> construct_strong_inverse_variants(
    const Transformation& a);

/// The auxiliary commuting identity satisfied by constructed strong inverses:
/// x ba a^(g+1) b^(g+1) = x a^(g+1) b^(g+1) ba with g = grasp(a, b, x),
/// for every point x.
bool strong_inverse_commutation_holds(const Transformation& a,
                                      const Transformation& b);

/// Rank-2 single-component maps with a fixed point, the degree-4 shapes with
/// more than one strong inverse: a fork ('Y') has two endpoints feeding the
/// pre-fixed point and four strong inverses (two chains plus the two other
/// forks with the same fixed point); a chain is a 3-step tail with exactly
/// two (one fork, one chain).
enum class RankTwoShape { kFork, kChain };

std::optional<RankTwoShape> rank_two_shape(const Transformation& a);

/// Full sweep of T_n classifying every element by its strong-inverse set and
/// the component structure of the strong-inverse graph.
struct StrongInverseCensus {
  int degree = 0;
  long long total = 0;
  long long idempotents = 0;
  long long self_inverse_non_idempotents = 0;
  long long unique_distinct_strong = 0;
  long long two_strong = 0;
  long long larger_strong = 0;  // |S(a)| >= 3; empty at degree 4

  long long loop_components = 0;
  long long pair_components = 0;
  std::vector<std::vector<int>> cycles;  // pure cycle components, walk order
  /// Components that are neither loops, pairs, nor pure cycles. At degree 4
  /// these are the four 9-element sets: a 9-cycle with a triangle of chords
  /// on the three forks.
  std::vector<std::vector<int>> multi_components;

  std::vector<Transformation> elements;      // all of T_n, enumeration order
  std::vector<std::vector<int>> strong_sets;  // S(a) as indices, sorted
};

/// Guarded to n <= 5 (the n = 4 sweep is the one of record).
StrongInverseCensus strong_inverse_census(int n);
StrongInverseCensus t4_census();

InverseGraph strong_graph_of(const StrongInverseCensus& census);

/// Walks the unique Hamiltonian cycle of the start map's strong-inverse
/// component (the chain vertices have exactly two strong inverses, so both
/// their edges are forced; fork-fork chords are never used). The result has
/// length 9 with shape pattern (chain, fork, chain) repeated.
std::vector<Transformation> nine_cycle_walk(const Transformation& start);

/// The degree-8 configuration showing that strong inverses admit no
/// permutation matching: three maps whose strong-inverse sets share only two
/// elements.
struct StrongWitnessReport {
  int degree = 8;
  Transformation alpha1, alpha2, beta;  // the deficient set U
  Transformation beta1, beta2;          // S(U)
  std::vector<std::vector<Transformation>> strong_sets;  // S(alpha1), S(alpha2), S(beta)
  bool hall_violation = false;  // |U| = 3 > |S(U)| = 2
  HallWitness certificate;      // over the U + S(U) graph
};

/// degree = 8 for the base configuration; larger degrees act identically on
/// the added points and inherit the violation.
StrongWitnessReport t8_witness(int degree = 8);

/// Per-element verification that every member of T_3 has exactly one strong
/// inverse, with the 3-step tails pairing by swapping their first two points.
struct T3UniquenessReport {
  bool all_unique = false;
  std::vector<Transformation> elements;
  std::vector<Transformation> partner;  // the unique strong inverse
  long long self_paired = 0;
  long long tail_pairs_verified = 0;  // (a b c) ~ (b a c) instances
};

T3UniquenessReport t3_unique_strong_inverses();

}  // namespace semimatch
