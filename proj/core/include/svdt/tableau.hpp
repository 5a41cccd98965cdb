#pragma once

#include <vector>

#include "svdt/entry.hpp"
#include "svdt/partition.hpp"

namespace svdt {

// One set-valued cell: entry codes sorted ascending.  In multiset mode a code
// may repeat, but only the unprimed 1; everywhere else cells are plain sets.
using Cell = std::vector<int>;

// The universal tableau container: a filling of a shifted diagram by
// nonempty cells.  Single-valued tableaux are the all-singleton case.
// Values are immutable after construction; "mutation" returns a new tableau.
class SetShiftedTableau {
 public:
  // rows[i] holds the cells of row i+1 left to right (bottom row first).
  // allow_multiset permits repeats of the unprimed 1; the stored
  // multiset_mode() is derived from the content, so equal fillings compare
  // equal regardless of how they were built.
  SetShiftedTableau(StrictPartition shape, std::vector<std::vector<Cell>> rows,
                    bool allow_multiset = false);

  const StrictPartition& shape() const { return shape_; }
  bool multiset_mode() const { return multiset_; }

  const Cell& cell(Box b) const;
  SetShiftedTableau with_cell(Box b, Cell c) const;

  // Total number of entry occurrences.
  int degree() const;
  bool all_singletons() const;
  bool unprimed() const;
  // Largest entry value present (0 for the empty shape).
  int max_value() const;

  // Boxes in row-major order and in reverse row reading order (row 1 first,
  // each row right to left).
  std::vector<Box> boxes() const { return shifted_diagram(shape_); }
  std::vector<Box> boxes_revrow() const;

  // Occurrences of the code in the cell (0, 1, or a multiplicity).
  int count_in_cell(Box b, int code) const;
  bool cell_contains(Box b, int code) const { return count_in_cell(b, code) > 0; }

  // Component k counts how many times k or k' appears, k in [n].
  std::vector<int> weight(int n) const;

  // All distributions, in cell-by-cell entry-ascending order (row-major
  // cells, last cell varying fastest).  Multiset repeats collapse.
  std::vector<SetShiftedTableau> distributions() const;

  // JSON form {"shape":[...],"multiset":bool,"rows":[...]} with rows bottom
  // to top and primed entries rendered as "k'" strings.  parse(serialize(T))
  // is the identity; malformed input raises std::invalid_argument with
  // position information.
  std::string serialize() const;
  static SetShiftedTableau parse(const std::string& text);

  // Compact one-line rendering for diagnostics: "34 23 2 23 / 2 1 / 1".
  std::string display() const;

  friend bool operator==(const SetShiftedTableau&, const SetShiftedTableau&) = default;

 private:
  StrictPartition shape_;
  std::vector<std::vector<Cell>> rows_;
  bool multiset_ = false;
};

}  // namespace svdt
