#include "semimatch/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "semimatch/strong_inverse.hpp"

namespace semimatch {

namespace {

std::string default_label(int i) { return "x" + std::to_string(i); }

std::vector<std::string> trimmed_split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) {
    std::size_t first = field.find_first_not_of(" \t\r");
    std::size_t last = field.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos
                      ? std::string{}
                      : field.substr(first, last - first + 1));
  }
  return out;
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(int order, std::vector<int> table,
                                 std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ <= 0) {
    throw std::invalid_argument("semigroup order must be positive");
  }
  if (table_.size() !=
      static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_)) {
    throw std::invalid_argument("cayley table is not order x order");
  }
  for (int entry : table_) {
    if (entry < 0 || entry >= order_) {
      throw std::invalid_argument("cayley table entry out of range: " +
                                  std::to_string(entry));
    }
  }
  if (labels_.empty()) {
    labels_.reserve(static_cast<std::size_t>(order_));
    for (int i = 0; i < order_; ++i) {
      labels_.push_back(default_label(i));
    }
  } else if (static_cast<int>(labels_.size()) != order_) {
    throw std::invalid_argument("label count does not match order");
  }
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      for (int k = 0; k < order_; ++k) {
        if (product(product(i, j), k) != product(i, product(j, k))) {
          std::ostringstream msg;
          msg << "not associative: (" << labels_[static_cast<std::size_t>(i)]
              << " " << labels_[static_cast<std::size_t>(j)] << ") "
              << labels_[static_cast<std::size_t>(k)] << " != "
              << labels_[static_cast<std::size_t>(i)] << " ("
              << labels_[static_cast<std::size_t>(j)] << " "
              << labels_[static_cast<std::size_t>(k)] << ")";
          throw std::invalid_argument(msg.str());
        }
      }
    }
  }
}

FiniteSemigroup from_cayley_table(int order, std::vector<int> table,
                                  std::vector<std::string> labels) {
  return FiniteSemigroup(order, std::move(table), std::move(labels));
}

FiniteSemigroup from_transformations(
    const std::vector<Transformation>& generators,
    std::vector<Transformation>* elements_out) {
  if (generators.empty()) {
    throw std::invalid_argument("from_transformations: no generators");
  }
  GeneratedSubsemigroup closed = closure(generators, /*with_table=*/true);
  std::size_t m = closed.elements.size();
  std::vector<int> table;
  table.reserve(m * m);
  for (const auto& row : closed.cayley) {
    table.insert(table.end(), row.begin(), row.end());
  }
  if (elements_out != nullptr) {
    *elements_out = closed.elements;
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& el : closed.elements) {
    labels.push_back(to_string(el));
  }
  return FiniteSemigroup(static_cast<int>(m), std::move(table),
                         std::move(labels));
}

FiniteSemigroup read_cayley_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("cayley csv: empty input");
  }
  std::vector<std::string> labels = trimmed_split(line);
  int order = static_cast<int>(labels.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < order; ++i) {
    if (!index.emplace(labels[static_cast<std::size_t>(i)], i).second) {
      throw std::invalid_argument("cayley csv: duplicate label '" +
                                  labels[static_cast<std::size_t>(i)] + "'");
    }
  }
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(order) *
                static_cast<std::size_t>(order));
  int row = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::vector<std::string> fields = trimmed_split(line);
    if (static_cast<int>(fields.size()) != order) {
      throw std::invalid_argument(
          "cayley csv: row " + std::to_string(row + 1) + " has " +
          std::to_string(fields.size()) + " entries, expected " +
          std::to_string(order));
    }
    for (const std::string& field : fields) {
      auto it = index.find(field);
      if (it == index.end()) {
        throw std::invalid_argument("cayley csv: unknown label '" + field +
                                    "' in row " + std::to_string(row + 1));
      }
      table.push_back(it->second);
    }
    ++row;
  }
  if (row != order) {
    throw std::invalid_argument("cayley csv: expected " +
                                std::to_string(order) + " rows, got " +
                                std::to_string(row));
  }
  return FiniteSemigroup(order, std::move(table), std::move(labels));
}

FiniteSemigroup read_cayley_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open cayley csv: " + path);
  }
  return read_cayley_csv(in);
}

void write_cayley_csv(const FiniteSemigroup& s, std::ostream& out) {
  for (int i = 0; i < s.order(); ++i) {
    out << (i > 0 ? "," : "") << s.labels()[static_cast<std::size_t>(i)];
  }
  out << '\n';
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      out << (j > 0 ? "," : "")
          << s.labels()[static_cast<std::size_t>(s.product(i, j))];
    }
    out << '\n';
  }
}

namespace {

/// Principal ideal of a as a bitset, including a itself.
std::vector<std::uint64_t> ideal_bits(const FiniteSemigroup& s, int a,
                                      bool left) {
  std::size_t words = (static_cast<std::size_t>(s.order()) + 63) / 64;
  std::vector<std::uint64_t> bits(words, 0);
  auto set = [&](int v) {
    bits[static_cast<std::size_t>(v) / 64] |=
        1ull << (static_cast<std::size_t>(v) % 64);
  };
  set(a);
  for (int x = 0; x < s.order(); ++x) {
    set(left ? s.product(x, a) : s.product(a, x));
  }
  return bits;
}

std::vector<int> classify_by_ideal(const FiniteSemigroup& s, bool left,
                                   int* count) {
  std::map<std::vector<std::uint64_t>, int> ids;
  std::vector<int> out(static_cast<std::size_t>(s.order()));
  for (int a = 0; a < s.order(); ++a) {
    auto bits = ideal_bits(s, a, left);
    auto [it, inserted] = ids.emplace(std::move(bits), static_cast<int>(ids.size()));
    out[static_cast<std::size_t>(a)] = it->second;
  }
  *count = static_cast<int>(ids.size());
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

GreenStructure green_structure(const FiniteSemigroup& s) {
  GreenStructure g;
  g.l_class = classify_by_ideal(s, /*left=*/true, &g.l_count);
  g.r_class = classify_by_ideal(s, /*left=*/false, &g.r_count);

  std::map<std::pair<int, int>, int> h_ids;
  g.h_class.resize(static_cast<std::size_t>(s.order()));
  for (int a = 0; a < s.order(); ++a) {
    auto key = std::pair{g.l_class[static_cast<std::size_t>(a)],
                         g.r_class[static_cast<std::size_t>(a)]};
    auto [it, inserted] = h_ids.emplace(key, static_cast<int>(h_ids.size()));
    g.h_class[static_cast<std::size_t>(a)] = it->second;
  }
  g.h_count = static_cast<int>(h_ids.size());

  // D is the join of L and R: connected components under both partitions.
  UnionFind uf(s.order());
  std::unordered_map<int, int> first_l, first_r;
  for (int a = 0; a < s.order(); ++a) {
    auto [lit, lnew] =
        first_l.emplace(g.l_class[static_cast<std::size_t>(a)], a);
    if (!lnew) {
      uf.unite(a, lit->second);
    }
    auto [rit, rnew] =
        first_r.emplace(g.r_class[static_cast<std::size_t>(a)], a);
    if (!rnew) {
      uf.unite(a, rit->second);
    }
  }
  std::map<int, int> d_ids;
  g.d_class.resize(static_cast<std::size_t>(s.order()));
  for (int a = 0; a < s.order(); ++a) {
    auto [it, inserted] =
        d_ids.emplace(uf.find(a), static_cast<int>(d_ids.size()));
    g.d_class[static_cast<std::size_t>(a)] = it->second;
  }
  g.d_count = static_cast<int>(d_ids.size());
  g.d_members.assign(static_cast<std::size_t>(g.d_count), {});
  for (int a = 0; a < s.order(); ++a) {
    g.d_members[static_cast<std::size_t>(g.d_class[static_cast<std::size_t>(a)])]
        .push_back(a);
  }
  return g;
}

std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a) {
    if (s.product(a, a) == a) {
      out.push_back(a);
    }
  }
  return out;
}

bool is_regular(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    bool found = false;
    for (int x = 0; x < s.order(); ++x) {
      if (s.product(s.product(a, x), a) == a) {
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool is_e_solid(const FiniteSemigroup& s) {
  GreenStructure g = green_structure(s);
  std::vector<int> es = idempotents(s);
  // Group H-classes present among the idempotents, keyed (R-class, L-class).
  std::map<std::pair<int, int>, bool> has_idempotent;
  for (int e : es) {
    has_idempotent[{g.r_class[static_cast<std::size_t>(e)],
                    g.l_class[static_cast<std::size_t>(e)]}] = true;
  }
  for (int f : es) {
    for (int e : es) {
      if (g.l_class[static_cast<std::size_t>(e)] !=
          g.l_class[static_cast<std::size_t>(f)]) {
        continue;
      }
      for (int h : es) {
        if (g.r_class[static_cast<std::size_t>(h)] !=
            g.r_class[static_cast<std::size_t>(f)]) {
          continue;
        }
        // e L f R h: need an idempotent completing the square at (R_e, L_h).
        if (!has_idempotent.count({g.r_class[static_cast<std::size_t>(e)],
                                   g.l_class[static_cast<std::size_t>(h)]})) {
          return false;
        }
      }
    }
  }
  return true;
}

EggboxBand principal_factor_band(const FiniteSemigroup& s,
                                 const GreenStructure& green, int d_class) {
  if (d_class < 0 || d_class >= green.d_count) {
    throw std::invalid_argument("principal_factor_band: no such D-class");
  }
  EggboxBand band;
  const auto& members = green.d_members[static_cast<std::size_t>(d_class)];
  for (int a : members) {
    band.r_ids.push_back(green.r_class[static_cast<std::size_t>(a)]);
    band.l_ids.push_back(green.l_class[static_cast<std::size_t>(a)]);
  }
  auto dedupe = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(band.r_ids);
  dedupe(band.l_ids);
  band.group_cell.assign(band.r_ids.size(),
                         std::vector<char>(band.l_ids.size(), 0));
  auto row_of = [&](int r) {
    return static_cast<std::size_t>(
        std::lower_bound(band.r_ids.begin(), band.r_ids.end(), r) -
        band.r_ids.begin());
  };
  auto col_of = [&](int l) {
    return static_cast<std::size_t>(
        std::lower_bound(band.l_ids.begin(), band.l_ids.end(), l) -
        band.l_ids.begin());
  };
  for (int e : idempotents(s)) {
    if (green.d_class[static_cast<std::size_t>(e)] == d_class) {
      band.group_cell[row_of(green.r_class[static_cast<std::size_t>(e)])]
                     [col_of(green.l_class[static_cast<std::size_t>(e)])] = 1;
    }
  }
  for (std::size_t r = 0; r < band.group_cell.size(); ++r) {
    if (std::none_of(band.group_cell[r].begin(), band.group_cell[r].end(),
                     [](char c) { return c != 0; })) {
      throw std::invalid_argument(
          "principal_factor_band: D-class is not regular (idempotent-free "
          "R-class)");
    }
  }
  for (std::size_t c = 0; c < band.l_ids.size(); ++c) {
    bool any = false;
    for (std::size_t r = 0; r < band.r_ids.size(); ++r) {
      any = any || band.group_cell[r][c] != 0;
    }
    if (!any) {
      throw std::invalid_argument(
          "principal_factor_band: D-class is not regular (idempotent-free "
          "L-class)");
    }
  }
  return band;
}

RectBlocksResult maximal_rect_blocks(const EggboxBand& band) {
  RectBlocksResult result;
  int rows = band.rows();
  int cols = band.cols();
  UnionFind uf(rows + cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (band.group_cell[static_cast<std::size_t>(r)]
                         [static_cast<std::size_t>(c)]) {
        uf.unite(r, rows + c);
      }
    }
  }
  std::map<int, RectBlock> blocks;
  for (int r = 0; r < rows; ++r) {
    blocks[uf.find(r)].rows.push_back(r);
  }
  for (int c = 0; c < cols; ++c) {
    blocks[uf.find(rows + c)].cols.push_back(c);
  }
  result.ok = true;
  for (auto& [root, block] : blocks) {
    for (int r : block.rows) {
      for (int c : block.cols) {
        if (!band.group_cell[static_cast<std::size_t>(r)]
                            [static_cast<std::size_t>(c)]) {
          result.ok = false;
          result.witness_rows = block.rows;
          result.witness_cols = block.cols;
          result.blocks.clear();
          return result;
        }
      }
    }
    result.blocks.push_back(std::move(block));
  }
  return result;
}

bool blocks_pairwise_similar(std::span<const RectBlock> blocks) {
  if (blocks.empty()) {
    throw std::invalid_argument("blocks_pairwise_similar: empty block list");
  }
  long long m0 = blocks.front().row_count();
  long long n0 = blocks.front().col_count();
  for (const RectBlock& b : blocks) {
    if (m0 * b.col_count() != n0 * b.row_count()) {
      return false;
    }
  }
  return true;
}

MatchingDecision decide_permutation_matching(const FiniteSemigroup& s) {
  MatchingDecision decision;
  decision.regular = is_regular(s);
  if (!decision.regular) {
    decision.reason = "semigroup is not regular";
    return decision;
  }
  decision.e_solid = is_e_solid(s);
  if (!decision.e_solid) {
    decision.reason = "semigroup is not E-solid";
    return decision;
  }
  decision.applicable = true;
  decision.matching_exists = true;

  GreenStructure green = green_structure(s);
  for (int d = 0; d < green.d_count; ++d) {
    EggboxBand band = principal_factor_band(s, green, d);
    RectBlocksResult blocks = maximal_rect_blocks(band);
    if (!blocks.ok) {
      // Prohibited for E-solid input; the band of an E-solid semigroup is
      // orthodox and always diagonalizes.
      throw std::logic_error(
          "decide_permutation_matching: non-rectangular idempotent component "
          "in an E-solid semigroup");
    }
    DClassBandSummary summary;
    summary.d_class = d;
    for (const RectBlock& b : blocks.blocks) {
      summary.block_shapes.emplace_back(b.row_count(), b.col_count());
    }
    summary.similar = blocks_pairwise_similar(blocks.blocks);
    decision.matching_exists = decision.matching_exists && summary.similar;
    decision.d_classes.push_back(std::move(summary));
  }
  return decision;
}

InverseGraph inverse_graph_of(const FiniteSemigroup& s) {
  std::vector<std::vector<int>> adjacency(
      static_cast<std::size_t>(s.order()));
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (s.product(s.product(a, b), a) == a &&
          s.product(s.product(b, a), b) == b) {
        adjacency[static_cast<std::size_t>(a)].push_back(b);
      }
    }
  }
  InverseGraph g;
  g.adjacency = std::move(adjacency);
  return g;
}

}  // namespace semimatch
