#pragma once

#include <span>
#include <utility>
#include <vector>

#include "semimatch/transformation.hpp"

namespace semimatch {

/// A sequence is cyclic when it has at most one cyclic descent (reading the
/// pair (last, first) as well); anti-cyclic when its reverse is cyclic.
bool is_cyclic(std::span<const int> seq);
bool is_anticyclic(std::span<const int> seq);

enum class OrientationClass {
  kPreservingOnly,  // image list cyclic but not anti-cyclic
  kReversingOnly,   // anti-cyclic but not cyclic
  kBoth,            // rank <= 2 members of P_n
  kNeither,
};

OrientationClass classify(const Transformation& a);
bool is_orientation_preserving(const Transformation& a);
bool is_orientation_reversing(const Transformation& a);
/// Membership in P_n = OP_n + OR_n.
bool in_pn(const Transformation& a);

/// Coordinates (K, R, i, k) for a rank >= 2 element of P_n: kernel classes are
/// the cyclic intervals [K_j, K_{j+1} - 1], the class starting at K_j maps to
/// R_{(i + k j) mod t}, and k = +1 (preserving) or -1 (reversing). At rank 2
/// the parity is degenerate and canonicalized to +1.
struct KRik {
  int n = 0;
  std::vector<int> kernel_starts;  // K, strictly increasing
  std::vector<int> range;         // R, strictly increasing
  int shift = 0;                  // i, taken mod t
  int parity = 1;                 // k, +1 or -1

  int rank() const { return static_cast<int>(kernel_starts.size()); }
  /// Throws std::invalid_argument when malformed.
  void validate() const;

  bool operator==(const KRik&) const = default;
};

/// Decode coordinates into the transformation they name.
Transformation phi(const KRik& c);
/// Encode a rank >= 2 element of P_n; inverse of phi up to the rank-2 parity
/// canonicalization. Throws on non-P_n input or rank < 2.
KRik phi_inv(const Transformation& a);

/// The (K, R) pair alone; equal pairs characterize the H-relation on P_n.
std::pair<std::vector<int>, std::vector<int>> rho(const Transformation& a);

/// The reflection x -> n-1-x.
Transformation gamma(int n);

/// Coordinates of a*gamma, gamma*a, gamma*a*gamma computed from coordinates
/// alone (no composition).
KRik gamma_right(const KRik& c);
KRik gamma_left(const KRik& c);
KRik gamma_conj(const KRik& c);

/// H-class-preserving involution matching on P_n: rank >= 2 maps go to
/// Phi(R, K, -k i, k); constants are fixed.
Transformation natural_match(const Transformation& a);

/// Which of the four wrap-around cases of the dual construction applies,
/// numbered 1..4 by (0 in K?, n-1 in R?).
int dual_case(const KRik& c);

/// Involution matching obtained from the reversed ordering of X_n: rank >= 2
/// maps go to Phi(R+1, K-1, i', k) with i' given by the four-case table;
/// constants are fixed.
Transformation dual_match(const Transformation& a);

/// The unique inverse of a in the H-class (R, K-1). A permutation matching
/// but not an involution. Constants are fixed.
Transformation half_dual_match(const Transformation& a);

/// natural_match on OP_n, dual_match on the rest of P_n; an involution
/// matching that is not H-class-preserving.
Transformation mixed_match(const Transformation& a);

/// Factorization a = cycle^r * phi with phi order-preserving; unique for
/// non-constant members of OP_n.
struct OpFactorization {
  int rotations = 0;
  Transformation order_preserving;
};
OpFactorization op_factorize(const Transformation& a);

/// Enumerates every valid quadruple of degree n (t = 2..n; at t = 2 only
/// parity +1 is emitted since -1 names the same map).
template <class F>
void for_each_krik(int n, F&& f);

/// Every element of P_n: the n constants plus all decoded quadruples.
std::vector<Transformation> pn_elements(int n);

/// Number of rank-t elements of P_n predicted by the coordinate bijection:
/// 2 t C(n,t)^2 for t >= 3, t C(n,t)^2 for t = 2.
long long pn_rank_count(int n, int t);

namespace detail {
/// Calls f(sorted subset) for every t-subset of [0, n).
template <class F>
void for_each_subset(int n, int t, F&& f) {
  std::vector<int> pick(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    pick[static_cast<std::size_t>(i)] = i;
  }
  for (;;) {
    f(pick);
    int pos = t - 1;
    while (pos >= 0 &&
           pick[static_cast<std::size_t>(pos)] == n - t + pos) {
      --pos;
    }
    if (pos < 0) {
      return;
    }
    ++pick[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < t; ++j) {
      pick[static_cast<std::size_t>(j)] =
          pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}
}  // namespace detail

template <class F>
void for_each_krik(int n, F&& f) {
  for (int t = 2; t <= n; ++t) {
    detail::for_each_subset(n, t, [&](const std::vector<int>& kset) {
      detail::for_each_subset(n, t, [&](const std::vector<int>& rset) {
        for (int i = 0; i < t; ++i) {
          for (int k : {1, -1}) {
            if (t == 2 && k == -1) {
              continue;
            }
            f(KRik{n, kset, rset, i, k});
          }
        }
      });
    });
  }
}

}  // namespace semimatch
