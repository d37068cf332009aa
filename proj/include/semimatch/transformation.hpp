#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace semimatch {

/// A total map on X_n = {0, ..., n-1}, acting on the right: the image of x is
/// images()[x]. Values are immutable after construction.
class Transformation {
 public:
  Transformation() = default;
  Transformation(int degree, std::vector<int> images);

  static Transformation identity(int n);
  static Transformation constant(int n, int value);
  /// The n-cycle x -> x+1 (mod n).
  static Transformation cycle(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Transformation&) const = default;
  auto operator<=>(const Transformation&) const = default;

 private:
  std::vector<int> images_;
};

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : t.images()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

/// Left-to-right action: x(ab) = (xa)b.
Transformation compose(const Transformation& a, const Transformation& b);
Transformation pow(const Transformation& a, int k);

int rank(const Transformation& a);
/// Sorted set of image points.
std::vector<int> range_of(const Transformation& a);
/// Kernel classes as sorted point sets, ordered by minimum element.
std::vector<std::vector<int>> kernel_partition(const Transformation& a);
/// Per-point kernel-class label in order of first occurrence; two maps have
/// equal kernels iff their signatures are equal.
std::vector<int> kernel_signature(const Transformation& a);
std::vector<int> fixed_points(const Transformation& a);

bool is_idempotent(const Transformation& a);
/// True iff a lies in a subgroup, i.e. range(a) = range(a^2).
bool is_group_element(const Transformation& a);

/// Functional-digraph parameters of a map.
struct DigraphProfile {
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  /// depth[x]: length of the longest dipath ending at x; kInfinite on the
  /// stable range.
  std::vector<int> depth;
  /// height[x]: least k >= 1 with depth(x a^k) >= depth(x) + k + 1; kInfinite
  /// on the stable range.
  std::vector<int> height;
  /// Points lying in the range of every power; these are the cycle vertices.
  std::vector<int> stable_range;
  /// Cycle lengths of the components, sorted ascending.
  std::vector<int> cycle_lengths;
};

DigraphProfile digraph_profile(const Transformation& a);

/// Greatest k in [0, n] with x a^k b^k = x.
int grasp(const Transformation& a, const Transformation& b, int x);

/// True iff aba = a and bab = b.
bool is_inverse_pair(const Transformation& a, const Transformation& b);

/// All inverses of a within T_n, enumerated structurally: one maximal-free
/// choice of preimage per range point plus arbitrary assignment of the
/// remaining points into the chosen transversal. Sorted.
std::vector<Transformation> inverses_of(const Transformation& a);

/// Calls f on every element of T_n in lexicographic image order (n^n maps).
template <class F>
void for_each_transformation(int n, F&& f) {
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (;;) {
    f(Transformation(n, images));
    int pos = n - 1;
    while (pos >= 0 && images[static_cast<std::size_t>(pos)] == n - 1) {
      images[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      return;
    }
    ++images[static_cast<std::size_t>(pos)];
  }
}

std::vector<Transformation> all_transformations(int n);

/// Display helper: "[1, 1, 2]".
std::string to_string(const Transformation& a);

}  // namespace semimatch
