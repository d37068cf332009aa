#include "semimatch/orientation.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace semimatch {

namespace {

int mod(int value, int m) { return ((value % m) + m) % m; }

int cyclic_descents(std::span<const int> seq) {
  int count = 0;
  std::size_t len = seq.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (seq[i] > seq[(i + 1) % len]) {
      ++count;
    }
  }
  return count;
}

std::vector<int> shifted_sorted(const std::vector<int>& set, int delta, int n) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int v : set) {
    out.push_back(mod(v + delta, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> negated_sorted(const std::vector<int>& set, int n) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int v : set) {
    out.push_back(mod(n - v, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> reflected_sorted(const std::vector<int>& set, int n) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int v : set) {
    out.push_back(n - 1 - v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_cyclic(std::span<const int> seq) {
  if (seq.empty()) {
    throw std::invalid_argument("is_cyclic: empty sequence");
  }
  return cyclic_descents(seq) <= 1;
}

bool is_anticyclic(std::span<const int> seq) {
  if (seq.empty()) {
    throw std::invalid_argument("is_anticyclic: empty sequence");
  }
  std::vector<int> reversed(seq.rbegin(), seq.rend());
  return cyclic_descents(reversed) <= 1;
}

OrientationClass classify(const Transformation& a) {
  bool op = is_cyclic(a.images());
  bool orv = is_anticyclic(a.images());
  if (op && orv) {
    return OrientationClass::kBoth;
  }
  if (op) {
    return OrientationClass::kPreservingOnly;
  }
  if (orv) {
    return OrientationClass::kReversingOnly;
  }
  return OrientationClass::kNeither;
}

bool is_orientation_preserving(const Transformation& a) {
  return is_cyclic(a.images());
}

bool is_orientation_reversing(const Transformation& a) {
  return is_anticyclic(a.images());
}

bool in_pn(const Transformation& a) {
  return is_cyclic(a.images()) || is_anticyclic(a.images());
}

void KRik::validate() const {
  int t = rank();
  std::ostringstream msg;
  if (n <= 0) {
    throw std::invalid_argument("coordinates: degree must be positive");
  }
  if (t < 2 || t > n) {
    msg << "coordinates: rank " << t << " outside [2, " << n << "]";
    throw std::invalid_argument(msg.str());
  }
  if (static_cast<int>(range.size()) != t) {
    msg << "coordinates: |K| = " << t << " but |R| = " << range.size();
    throw std::invalid_argument(msg.str());
  }
  for (const std::vector<int>* set : {&kernel_starts, &range}) {
    for (std::size_t j = 0; j < set->size(); ++j) {
      int v = (*set)[j];
      if (v < 0 || v >= n) {
        msg << "coordinates: entry " << v << " outside [0, " << n << ")";
        throw std::invalid_argument(msg.str());
      }
      if (j > 0 && (*set)[j - 1] >= v) {
        msg << "coordinates: entries must be strictly increasing";
        throw std::invalid_argument(msg.str());
      }
    }
  }
  if (shift < 0 || shift >= t) {
    msg << "coordinates: shift " << shift << " outside [0, " << t << ")";
    throw std::invalid_argument(msg.str());
  }
  if (parity != 1 && parity != -1) {
    throw std::invalid_argument("coordinates: parity must be +1 or -1");
  }
}

Transformation phi(const KRik& c) {
  c.validate();
  int t = c.rank();
  std::vector<int> images(static_cast<std::size_t>(c.n), -1);
  for (int j = 0; j < t; ++j) {
    int value = c.range[static_cast<std::size_t>(mod(c.shift + c.parity * j, t))];
    int x = c.kernel_starts[static_cast<std::size_t>(j)];
    int stop = c.kernel_starts[static_cast<std::size_t>((j + 1) % t)];
    do {
      images[static_cast<std::size_t>(x)] = value;
      x = (x + 1) % c.n;
    } while (x != stop);
  }
  return Transformation(c.n, std::move(images));
}

KRik phi_inv(const Transformation& a) {
  if (!in_pn(a)) {
    throw std::invalid_argument(
        "phi_inv: image list is neither cyclic nor anti-cyclic");
  }
  int n = a.degree();
  auto classes = kernel_partition(a);
  int t = static_cast<int>(classes.size());
  if (t < 2) {
    throw std::invalid_argument("phi_inv: constants carry no coordinates");
  }

  // Initial point of each class as a cyclic interval: the unique member whose
  // predecessor mod n lies outside the class.
  std::vector<int> starts;
  starts.reserve(classes.size());
  for (const auto& cls : classes) {
    std::vector<char> member(static_cast<std::size_t>(n), 0);
    for (int x : cls) {
      member[static_cast<std::size_t>(x)] = 1;
    }
    int start = -1;
    for (int x : cls) {
      if (!member[static_cast<std::size_t>(mod(x - 1, n))]) {
        if (start >= 0) {
          throw std::invalid_argument(
              "phi_inv: kernel class is not a cyclic interval");
        }
        start = x;
      }
    }
    if (start < 0) {
      throw std::invalid_argument("phi_inv: kernel class covers the cycle");
    }
    starts.push_back(start);
  }
  std::sort(starts.begin(), starts.end());

  std::vector<int> range = range_of(a);
  auto index_in = [](const std::vector<int>& set, int v) {
    return static_cast<int>(
        std::lower_bound(set.begin(), set.end(), v) - set.begin());
  };
  // a maps the class starting at K_j to R_(i + k j); the shift is read off
  // j = 0 and the parity by checking the remaining classes.
  int i = index_in(range, a[starts[0]]);
  for (int k : {1, -1}) {
    bool consistent = true;
    for (int j = 0; j < t; ++j) {
      int expected = range[static_cast<std::size_t>(mod(i + k * j, t))];
      if (a[starts[static_cast<std::size_t>(j)]] != expected) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      return KRik{n, starts, range, i, k};
    }
  }
  throw std::invalid_argument("phi_inv: inconsistent image pattern");
}

std::pair<std::vector<int>, std::vector<int>> rho(const Transformation& a) {
  KRik c = phi_inv(a);
  return {std::move(c.kernel_starts), std::move(c.range)};
}

Transformation gamma(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    images[static_cast<std::size_t>(x)] = n - 1 - x;
  }
  return Transformation(n, std::move(images));
}

KRik gamma_right(const KRik& c) {
  c.validate();
  int t = c.rank();
  return KRik{c.n, c.kernel_starts, reflected_sorted(c.range, c.n),
              mod(-(c.shift + 1), t), -c.parity};
}

KRik gamma_left(const KRik& c) {
  c.validate();
  int t = c.rank();
  bool zero_in_k = c.kernel_starts.front() == 0;
  int shift = zero_in_k ? mod(c.shift - c.parity, t)
                        : mod(c.shift - 2 * c.parity, t);
  return KRik{c.n, negated_sorted(c.kernel_starts, c.n), c.range, shift,
              -c.parity};
}

KRik gamma_conj(const KRik& c) {
  c.validate();
  int t = c.rank();
  bool zero_in_k = c.kernel_starts.front() == 0;
  int shift = zero_in_k ? mod(c.parity - (c.shift + 1), t)
                        : mod(2 * c.parity - (c.shift + 1), t);
  return KRik{c.n, negated_sorted(c.kernel_starts, c.n),
              reflected_sorted(c.range, c.n), shift, c.parity};
}

Transformation natural_match(const Transformation& a) {
  if (!in_pn(a)) {
    throw std::invalid_argument("natural_match: not a member of P_n");
  }
  if (rank(a) == 1) {
    return a;
  }
  KRik c = phi_inv(a);
  int t = c.rank();
  return phi(KRik{c.n, c.range, c.kernel_starts,
                  mod(-c.parity * c.shift, t), c.parity});
}

int dual_case(const KRik& c) {
  bool zero_in_k = c.kernel_starts.front() == 0;
  bool top_in_r = c.range.back() == c.n - 1;
  if (!zero_in_k && !top_in_r) {
    return 1;
  }
  if (!zero_in_k && top_in_r) {
    return 2;
  }
  if (zero_in_k && !top_in_r) {
    return 3;
  }
  return 4;
}

Transformation dual_match(const Transformation& a) {
  if (!in_pn(a)) {
    throw std::invalid_argument("dual_match: not a member of P_n");
  }
  if (rank(a) == 1) {
    return a;
  }
  KRik c = phi_inv(a);
  int t = c.rank();
  int k = c.parity;
  int i = c.shift;
  int shifted = 0;
  switch (dual_case(c)) {
    case 1:
      shifted = 1 + k * (1 - i);
      break;
    case 2:
      shifted = 1 - k * i;
      break;
    case 3:
      shifted = k * (1 - i);
      break;
    default:
      shifted = -k * i;
      break;
  }
  return phi(KRik{c.n, shifted_sorted(c.range, +1, c.n),
                  shifted_sorted(c.kernel_starts, -1, c.n), mod(shifted, t),
                  k});
}

Transformation half_dual_match(const Transformation& a) {
  if (!in_pn(a)) {
    throw std::invalid_argument("half_dual_match: not a member of P_n");
  }
  if (rank(a) == 1) {
    return a;
  }
  KRik c = phi_inv(a);
  int t = c.rank();
  std::vector<int> kernel = c.range;
  std::vector<int> range = shifted_sorted(c.kernel_starts, -1, c.n);
  // The H-class (R, K-1) is a group, so it holds exactly one inverse of a.
  std::optional<Transformation> found;
  for (int i = 0; i < t; ++i) {
    for (int k : {1, -1}) {
      if (t == 2 && k == -1) {
        continue;
      }
      Transformation candidate = phi(KRik{c.n, kernel, range, i, k});
      if (is_inverse_pair(a, candidate)) {
        if (found.has_value()) {
          throw std::logic_error(
              "half_dual_match: inverse not unique in its H-class");
        }
        found = std::move(candidate);
      }
    }
  }
  if (!found.has_value()) {
    throw std::logic_error("half_dual_match: no inverse found in H-class");
  }
  return *std::move(found);
}

Transformation mixed_match(const Transformation& a) {
  if (!in_pn(a)) {
    throw std::invalid_argument("mixed_match: not a member of P_n");
  }
  return is_orientation_preserving(a) ? natural_match(a) : dual_match(a);
}

OpFactorization op_factorize(const Transformation& a) {
  if (rank(a) == 1) {
    throw std::invalid_argument("op_factorize: constant input");
  }
  if (!is_orientation_preserving(a)) {
    throw std::invalid_argument("op_factorize: not orientation-preserving");
  }
  int n = a.degree();
  int found = -1;
  for (int r = 0; r < n; ++r) {
    bool nondecreasing = true;
    for (int y = 0; y + 1 < n; ++y) {
      if (a[mod(y - r, n)] > a[mod(y + 1 - r, n)]) {
        nondecreasing = false;
        break;
      }
    }
    if (nondecreasing) {
      if (found >= 0) {
        throw std::logic_error("op_factorize: rotation not unique");
      }
      found = r;
    }
  }
  if (found < 0) {
    throw std::logic_error("op_factorize: no order-preserving rotation");
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y) {
    images[static_cast<std::size_t>(y)] = a[mod(y - found, n)];
  }
  return OpFactorization{found, Transformation(n, std::move(images))};
}

std::vector<Transformation> pn_elements(int n) {
  std::vector<Transformation> out;
  for (int c = 0; c < n; ++c) {
    out.push_back(Transformation::constant(n, c));
  }
  for_each_krik(n, [&](const KRik& c) { out.push_back(phi(c)); });
  return out;
}

long long pn_rank_count(int n, int t) {
  long long binom = 1;
  for (int j = 1; j <= t; ++j) {
    binom = binom * (n - j + 1) / j;
  }
  long long classes = binom * binom * t;
  return t >= 3 ? 2 * classes : classes;
}

}  // namespace semimatch
