#include "semimatch/transformation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace semimatch {

namespace {

void check_degree_match(const Transformation& a, const Transformation& b,
                        const char* op) {
  if (a.degree() != b.degree()) {
    std::ostringstream msg;
    msg << op << ": degree mismatch (" << a.degree() << " vs " << b.degree()
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

Transformation::Transformation(int degree, std::vector<int> images) {
  if (degree <= 0) {
    throw std::invalid_argument("transformation degree must be positive");
  }
  if (static_cast<int>(images.size()) != degree) {
    std::ostringstream msg;
    msg << "expected " << degree << " images, got " << images.size();
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 0 || images[i] >= degree) {
      std::ostringstream msg;
      msg << "image entry " << images[i] << " at index " << i
          << " out of range [0, " << degree << ")";
      throw std::invalid_argument(msg.str());
    }
  }
  images_ = std::move(images);
}

Transformation Transformation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Transformation(n, std::move(images));
}

Transformation Transformation::constant(int n, int value) {
  return Transformation(n, std::vector<int>(static_cast<std::size_t>(n), value));
}

Transformation Transformation::cycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    images[static_cast<std::size_t>(x)] = (x + 1) % n;
  }
  return Transformation(n, std::move(images));
}

Transformation compose(const Transformation& a, const Transformation& b) {
  check_degree_match(a, b, "compose");
  int n = a.degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    images[static_cast<std::size_t>(x)] = b[a[x]];
  }
  return Transformation(n, std::move(images));
}

Transformation pow(const Transformation& a, int k) {
  if (k < 0) {
    throw std::invalid_argument("pow: negative exponent");
  }
  Transformation result = Transformation::identity(a.degree());
  Transformation base = a;
  while (k > 0) {
    if (k & 1) {
      result = compose(result, base);
    }
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

int rank(const Transformation& a) {
  return static_cast<int>(range_of(a).size());
}

std::vector<int> range_of(const Transformation& a) {
  std::vector<char> seen(static_cast<std::size_t>(a.degree()), 0);
  for (int v : a.images()) {
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> range;
  for (int v = 0; v < a.degree(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) {
      range.push_back(v);
    }
  }
  return range;
}

std::vector<std::vector<int>> kernel_partition(const Transformation& a) {
  int n = a.degree();
  std::vector<std::vector<int>> by_value(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    by_value[static_cast<std::size_t>(a[x])].push_back(x);
  }
  std::vector<std::vector<int>> classes;
  for (auto& cls : by_value) {
    if (!cls.empty()) {
      classes.push_back(std::move(cls));
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& p, const auto& q) { return p.front() < q.front(); });
  return classes;
}

std::vector<int> kernel_signature(const Transformation& a) {
  int n = a.degree();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> sig(static_cast<std::size_t>(n));
  int next = 0;
  for (int x = 0; x < n; ++x) {
    int v = a[x];
    if (label[static_cast<std::size_t>(v)] < 0) {
      label[static_cast<std::size_t>(v)] = next++;
    }
    sig[static_cast<std::size_t>(x)] = label[static_cast<std::size_t>(v)];
  }
  return sig;
}

std::vector<int> fixed_points(const Transformation& a) {
  std::vector<int> fixed;
  for (int x = 0; x < a.degree(); ++x) {
    if (a[x] == x) {
      fixed.push_back(x);
    }
  }
  return fixed;
}

bool is_idempotent(const Transformation& a) {
  for (int x = 0; x < a.degree(); ++x) {
    if (a[a[x]] != a[x]) {
      return false;
    }
  }
  return true;
}

bool is_group_element(const Transformation& a) {
  return range_of(a) == range_of(compose(a, a));
}

DigraphProfile digraph_profile(const Transformation& a) {
  int n = a.degree();
  DigraphProfile profile;
  profile.depth.assign(static_cast<std::size_t>(n), 0);
  profile.height.assign(static_cast<std::size_t>(n), 0);

  // Ranges of successive powers; the range of a^n is stable.
  std::vector<char> in_range(static_cast<std::size_t>(n), 1);
  Transformation power = Transformation::identity(n);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    power = compose(power, a);
    std::vector<char> next(static_cast<std::size_t>(n), 0);
    for (int v : power.images()) {
      next[static_cast<std::size_t>(v)] = 1;
    }
    for (int x = 0; x < n; ++x) {
      if (next[static_cast<std::size_t>(x)]) {
        depth[static_cast<std::size_t>(x)] = k;
      }
    }
    in_range = std::move(next);
  }
  for (int x = 0; x < n; ++x) {
    if (in_range[static_cast<std::size_t>(x)]) {
      profile.stable_range.push_back(x);
      profile.depth[static_cast<std::size_t>(x)] = DigraphProfile::kInfinite;
    } else {
      profile.depth[static_cast<std::size_t>(x)] =
          depth[static_cast<std::size_t>(x)];
    }
  }

  for (int x = 0; x < n; ++x) {
    if (profile.depth[static_cast<std::size_t>(x)] ==
        DigraphProfile::kInfinite) {
      profile.height[static_cast<std::size_t>(x)] = DigraphProfile::kInfinite;
      continue;
    }
    int dx = profile.depth[static_cast<std::size_t>(x)];
    int y = x;
    for (int k = 1;; ++k) {
      y = a[y];
      int dy = profile.depth[static_cast<std::size_t>(y)];
      if (dy == DigraphProfile::kInfinite || dy >= dx + k + 1) {
        profile.height[static_cast<std::size_t>(x)] = k;
        break;
      }
    }
  }

  // Cycle decomposition of the restriction to the stable range.
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  for (int start : profile.stable_range) {
    if (visited[static_cast<std::size_t>(start)]) {
      continue;
    }
    int len = 0;
    int y = start;
    do {
      visited[static_cast<std::size_t>(y)] = 1;
      y = a[y];
      ++len;
    } while (y != start);
    profile.cycle_lengths.push_back(len);
  }
  std::sort(profile.cycle_lengths.begin(), profile.cycle_lengths.end());
  return profile;
}

int grasp(const Transformation& a, const Transformation& b, int x) {
  check_degree_match(a, b, "grasp");
  int n = a.degree();
  int best = 0;
  int forward = x;
  for (int k = 1; k <= n; ++k) {
    forward = a[forward];
    int y = forward;
    for (int j = 0; j < k; ++j) {
      y = b[y];
    }
    if (y == x) {
      best = k;
    }
  }
  return best;
}

bool is_inverse_pair(const Transformation& a, const Transformation& b) {
  if (a.degree() != b.degree()) {
    return false;
  }
  for (int x = 0; x < a.degree(); ++x) {
    if (a[b[a[x]]] != a[x]) {
      return false;
    }
  }
  for (int x = 0; x < b.degree(); ++x) {
    if (b[a[b[x]]] != b[x]) {
      return false;
    }
  }
  return true;
}

std::vector<Transformation> inverses_of(const Transformation& a) {
  int n = a.degree();
  std::vector<int> range = range_of(a);
  int t = static_cast<int>(range.size());

  // Preimage sets per range point; a transversal picks one from each.
  std::vector<std::vector<int>> preimages(range.size());
  for (int x = 0; x < n; ++x) {
    auto it = std::lower_bound(range.begin(), range.end(), a[x]);
    preimages[static_cast<std::size_t>(it - range.begin())].push_back(x);
  }

  std::vector<char> in_range(static_cast<std::size_t>(n), 0);
  for (int r : range) {
    in_range[static_cast<std::size_t>(r)] = 1;
  }
  std::vector<int> others;
  for (int x = 0; x < n; ++x) {
    if (!in_range[static_cast<std::size_t>(x)]) {
      others.push_back(x);
    }
  }

  std::vector<Transformation> result;
  std::vector<std::size_t> choice(range.size(), 0);
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<int> transversal(range.size());
    for (std::size_t j = 0; j < range.size(); ++j) {
      transversal[j] = preimages[j][choice[j]];
      images[static_cast<std::size_t>(range[j])] = transversal[j];
    }
    // Points outside the range may go anywhere in the transversal image.
    std::vector<std::size_t> free(others.size(), 0);
    for (;;) {
      for (std::size_t j = 0; j < others.size(); ++j) {
        images[static_cast<std::size_t>(others[j])] =
            transversal[free[j]];
      }
      result.emplace_back(n, images);
      std::size_t pos = others.size();
      while (pos > 0 && free[pos - 1] + 1 == static_cast<std::size_t>(t)) {
        free[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) {
        break;
      }
      ++free[pos - 1];
    }
    std::size_t pos = range.size();
    while (pos > 0 && choice[pos - 1] + 1 == preimages[pos - 1].size()) {
      choice[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) {
      break;
    }
    ++choice[pos - 1];
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Transformation> all_transformations(int n) {
  std::vector<Transformation> out;
  for_each_transformation(n, [&](const Transformation& t) { out.push_back(t); });
  return out;
}

std::string to_string(const Transformation& a) {
  std::ostringstream out;
  out << '[';
  for (int x = 0; x < a.degree(); ++x) {
    if (x > 0) {
      out << ", ";
    }
    out << a[x];
  }
  out << ']';
  return out.str();
}

}  // namespace semimatch
