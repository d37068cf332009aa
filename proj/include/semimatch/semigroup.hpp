#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semimatch/inverse_graph.hpp"
#include "semimatch/transformation.hpp"

namespace semimatch {

/// Abstract finite semigroup given by a Cayley table; associativity is
/// checked on construction (O(order^3)) and violations are reported with a
/// witness triple.
class FiniteSemigroup {
 public:
  FiniteSemigroup(int order, std::vector<int> table,
                  std::vector<std::string> labels = {});

  int order() const { return order_; }
  int product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(j)];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return table_; }

 private:
  int order_ = 0;
  std::vector<int> table_;  // row-major
  std::vector<std::string> labels_;
};

FiniteSemigroup from_cayley_table(int order, std::vector<int> table,
                                  std::vector<std::string> labels = {});

/// Closure of the generators followed by tabulation. The closed element list
/// is returned through elements_out when given (sorted; indices match the
/// semigroup's).
FiniteSemigroup from_transformations(
    const std::vector<Transformation>& generators,
    std::vector<Transformation>* elements_out = nullptr);

/// CSV form: first line the element labels, then one row per element with the
/// labels of the products.
FiniteSemigroup read_cayley_csv(std::istream& in);
FiniteSemigroup read_cayley_csv_file(const std::string& path);
void write_cayley_csv(const FiniteSemigroup& s, std::ostream& out);

struct GreenStructure {
  std::vector<int> l_class, r_class, h_class, d_class;  // ids per element
  int l_count = 0, r_count = 0, h_count = 0, d_count = 0;

  std::vector<std::vector<int>> d_members;  // elements per D-class id
};

/// L via principal left ideals, R via right ideals, H as the meet, D as the
/// join (finite case).
GreenStructure green_structure(const FiniteSemigroup& s);

std::vector<int> idempotents(const FiniteSemigroup& s);
bool is_regular(const FiniteSemigroup& s);

/// The completion condition on idempotent triples: e L f R g implies some
/// idempotent h with e R h L g.
bool is_e_solid(const FiniteSemigroup& s);

/// The 0-rectangular band (D + 0)/H of a regular D-class as a boolean
/// R-class x L-class matrix marking group H-classes.
struct EggboxBand {
  std::vector<int> r_ids, l_ids;        // Green class ids, in matrix order
  std::vector<std::vector<char>> group_cell;  // [row][col]

  int rows() const { return static_cast<int>(r_ids.size()); }
  int cols() const { return static_cast<int>(l_ids.size()); }
};

/// Throws std::invalid_argument when the D-class is not regular (some row or
/// column carries no idempotent).
EggboxBand principal_factor_band(const FiniteSemigroup& s,
                                 const GreenStructure& green, int d_class);

struct RectBlock {
  std::vector<int> rows, cols;  // matrix indices into the band

  int row_count() const { return static_cast<int>(rows.size()); }
  int col_count() const { return static_cast<int>(cols.size()); }
};

struct RectBlocksResult {
  bool ok = false;
  std::vector<RectBlock> blocks;
  /// When !ok: a connected component whose group cells do not fill its
  /// row-set x column-set rectangle.
  std::vector<int> witness_rows, witness_cols;
};

/// Connected components of the row/column graph linked through group cells;
/// succeeds iff every component is a filled rectangle.
RectBlocksResult maximal_rect_blocks(const EggboxBand& band);

/// m1/n1 = m2/n2 for all pairs, compared by integer cross-multiplication.
bool blocks_pairwise_similar(std::span<const RectBlock> blocks);

struct DClassBandSummary {
  int d_class = 0;
  std::vector<std::pair<int, int>> block_shapes;  // (rows, cols)
  bool similar = false;
};

struct MatchingDecision {
  bool applicable = false;
  std::string reason;  // filled when inapplicable
  bool regular = false;
  bool e_solid = false;
  std::vector<DClassBandSummary> d_classes;
  /// Valid when applicable: permutation matching exists iff every D-class has
  /// pairwise similar blocks; a YES also carries an involution matching.
  bool matching_exists = false;
};

MatchingDecision decide_permutation_matching(const FiniteSemigroup& s);

/// Brute-force V(a) within the table, as an InverseGraph over the elements.
InverseGraph inverse_graph_of(const FiniteSemigroup& s);

}  // namespace semimatch
