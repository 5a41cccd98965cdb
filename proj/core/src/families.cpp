#include "svdt/families.hpp"

#include <algorithm>
#include <cctype>

namespace svdt {

bool family_single_valued(FamilyId fam) {
  return fam == FamilyId::DecTab || fam == FamilyId::ShTab || fam == FamilyId::ShTabPlus;
}

bool family_allows_primes(FamilyId fam) {
  switch (fam) {
    case FamilyId::ShTab:
    case FamilyId::ShTabPlus:
    case FamilyId::SetShTab:
    case FamilyId::SetShTabPlus:
      return true;
    default:
      return false;
  }
}

std::string family_name(FamilyId fam) {
  switch (fam) {
    case FamilyId::DecTab: return "dectab";
    case FamilyId::ShTab: return "shtab";
    case FamilyId::ShTabPlus: return "shtab+";
    case FamilyId::SetShTab: return "setshtab";
    case FamilyId::SetShTabPlus: return "setshtab+";
    case FamilyId::SetDecTab: return "setdectab";
    case FamilyId::SetDecTabStar: return "setdectab*";
  }
  return "?";
}

std::optional<FamilyId> family_from_name(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (name == "dectab") return FamilyId::DecTab;
  if (name == "shtab") return FamilyId::ShTab;
  if (name == "shtab+" || name == "shtabplus") return FamilyId::ShTabPlus;
  if (name == "setshtab") return FamilyId::SetShTab;
  if (name == "setshtab+" || name == "setshtabplus") return FamilyId::SetShTabPlus;
  if (name == "setdectab") return FamilyId::SetDecTab;
  if (name == "setdectab*" || name == "setdectabstar") return FamilyId::SetDecTabStar;
  return std::nullopt;
}

bool is_hook_word(std::span<const int> w) {
  if (w.empty()) throw contract_error("is_hook_word: empty word");
  // Maximal weakly decreasing prefix, then the rest must strictly increase.
  std::size_t m = 1;
  while (m < w.size() && w[m - 1] >= w[m]) ++m;
  for (std::size_t k = m + 1; k < w.size(); ++k)
    if (w[k - 1] >= w[k]) return false;
  return true;
}

int max_hook_subword_len(std::span<const int> w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  // dec[p]: longest weakly decreasing subsequence ending at p.
  // tail[p]: longest hook subword ending at p with p in the increasing tail.
  std::vector<int> dec(n, 1), tail(n, 0);
  int best = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      if (w[q] >= w[p]) dec[p] = std::max(dec[p], dec[q] + 1);
      if (w[q] < w[p]) {
        tail[p] = std::max(tail[p], dec[q] + 1);
        if (tail[q] > 0) tail[p] = std::max(tail[p], tail[q] + 1);
      }
    }
    best = std::max({best, dec[p], tail[p]});
  }
  return best;
}

namespace {

int single_value(const SetShiftedTableau& t, Box b) { return entry::value(t.cell(b)[0]); }

// Forbidden two-row configurations for single-valued unprimed fillings with
// hook-word rows (rows i and i+1, entries compared as plain integers).
bool has_forbidden_pattern(const SetShiftedTableau& t) {
  const auto& lam = t.shape();
  for (int i = 1; i + 1 <= lam.length(); ++i) {
    const int diag = single_value(t, {i, i});
    for (int k = 1; k <= lam.part(i + 1); ++k) {
      const int b = single_value(t, {i + 1, i + k});
      if (diag <= b) return true;                                      // (a), diagonal case
      if (b < diag && diag < single_value(t, {i, i + k})) return true; // (b), diagonal case
      for (int j = 1; j < k; ++j) {
        const int rj = single_value(t, {i, i + j});
        if (rj <= b && b <= single_value(t, {i + 1, i + j})) return true;  // (a)
        if (b < rj && rj < single_value(t, {i, i + k})) return true;       // (b)
      }
    }
  }
  return false;
}

bool rows_are_hook_words(const SetShiftedTableau& t) {
  const auto& lam = t.shape();
  for (int i = 1; i <= lam.length(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= lam.part(i); ++j) row.push_back(single_value(t, {i, i + j - 1}));
    if (!is_hook_word(row)) return false;
  }
  return true;
}

bool is_dectab_single(const SetShiftedTableau& t, DecTabCheckMode mode) {
  const auto& lam = t.shape();
  if (!rows_are_hook_words(t)) return false;
  if (mode == DecTabCheckMode::pattern) return !has_forbidden_pattern(t);
  for (int i = 1; i + 1 <= lam.length(); ++i) {
    std::vector<int> cat;
    for (int j = 1; j <= lam.part(i + 1); ++j) cat.push_back(single_value(t, {i + 1, i + j}));
    for (int j = 1; j <= lam.part(i); ++j) cat.push_back(single_value(t, {i, i + j - 1}));
    if (max_hook_subword_len(cat) != lam.part(i)) return false;
  }
  return true;
}

// Single-valued semistandard shifted test over the marked alphabet: rows and
// columns weakly increase; an equal adjacent pair is allowed in a row only
// when unprimed and in a column only when primed.
bool is_semistandard_single(const SetShiftedTableau& t, bool allow_diagonal_primes) {
  const auto& lam = t.shape();
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = i; j <= i + lam.part(i) - 1; ++j) {
      const int code = t.cell({i, j})[0];
      if (!allow_diagonal_primes && i == j && entry::is_primed(code)) return false;
      if (j + 1 <= i + lam.part(i) - 1) {
        const int right = t.cell({i, j + 1})[0];
        if (code > right) return false;
        if (code == right && entry::is_primed(code)) return false;
      }
      const bool above = i + 1 <= lam.length() && j >= i + 1 && j <= i + lam.part(i + 1);
      if (above) {
        const int up = t.cell({i + 1, j})[0];
        if (code > up) return false;
        if (code == up && !entry::is_primed(code)) return false;
      }
    }
  }
  return true;
}

bool has_multiset_cell(const SetShiftedTableau& t) {
  for (Box b : t.boxes()) {
    const Cell& c = t.cell(b);
    for (std::size_t k = 1; k < c.size(); ++k)
      if (c[k] == c[k - 1]) return true;
  }
  return false;
}

bool diagonal_prime_free(const SetShiftedTableau& t) {
  for (int i = 1; i <= t.shape().length(); ++i)
    for (int code : t.cell({i, i}))
      if (entry::is_primed(code)) return false;
  return true;
}

}  // namespace

bool is_decomposition_tableau(const SetShiftedTableau& t, DecTabCheckMode mode) {
  if (!t.all_singletons()) throw contract_error("is_decomposition_tableau: tableau must be single-valued");
  if (!t.unprimed()) throw contract_error("is_decomposition_tableau: primed entries are not allowed");
  return is_dectab_single(t, mode);
}

bool is_member(const SetShiftedTableau& t, FamilyId fam) {
  if (fam != FamilyId::SetDecTabStar && has_multiset_cell(t)) return false;
  if (!family_allows_primes(fam) && !t.unprimed()) return false;
  if (family_single_valued(fam) && !t.all_singletons()) return false;
  switch (fam) {
    case FamilyId::DecTab:
      return is_dectab_single(t, DecTabCheckMode::pattern);
    case FamilyId::ShTab:
      return is_semistandard_single(t, false);
    case FamilyId::ShTabPlus:
      return is_semistandard_single(t, true);
    case FamilyId::SetShTab:
      if (!diagonal_prime_free(t)) return false;
      [[fallthrough]];
    case FamilyId::SetShTabPlus:
      for (const auto& d : t.distributions())
        if (!is_semistandard_single(d, fam == FamilyId::SetShTabPlus)) return false;
      return true;
    case FamilyId::SetDecTab:
    case FamilyId::SetDecTabStar:
      for (const auto& d : t.distributions())
        if (!is_dectab_single(d, DecTabCheckMode::pattern)) return false;
      return true;
  }
  return false;
}

namespace {

// Bounded recursive enumeration.  Boxes are filled row-major (bottom row
// first, left to right); each placement is pruned by conditions that are
// necessary for any completion, and complete fillings pass through is_member
// as the ground truth.
struct Enumerator {
  FamilyId fam;
  StrictPartition shape;
  int n;
  int max_degree;
  const std::function<void(const SetShiftedTableau&)>* emit;

  std::vector<Box> boxes;
  std::vector<std::vector<Cell>> rows;
  std::vector<int> letters;  // allowed codes, ascending
  bool dec_family = false;
  bool plus_family = false;
  bool multiset = false;

  void run() {
    if (shape.length() > n) return;
    boxes = shifted_diagram(shape);
    rows.assign(static_cast<std::size_t>(shape.length()), {});
    for (int i = 1; i <= shape.length(); ++i)
      rows[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(shape.part(i)), {});
    dec_family = !family_allows_primes(fam);
    plus_family = fam == FamilyId::ShTabPlus || fam == FamilyId::SetShTabPlus;
    multiset = fam == FamilyId::SetDecTabStar;
    for (int v = 1; v <= n; ++v) {
      if (!dec_family) letters.push_back(entry::primed(v));
      letters.push_back(entry::unprimed(v));
    }
    fill(0, max_degree - shape.size());
  }

  Cell& cell_at(Box b) {
    return rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - b.row)];
  }

  void fill(std::size_t pos, int extra_budget) {
    if (pos == boxes.size()) {
      SetShiftedTableau t(shape, rows, multiset);
      if (is_member(t, fam)) (*emit)(t);
      return;
    }
    Box b = boxes[pos];
    Cell cell;
    next_entry(pos, b, cell, 0, extra_budget);
  }

  void next_entry(std::size_t pos, Box b, Cell& cell, std::size_t letter_from, int extra_budget) {
    for (std::size_t li = letter_from; li < letters.size(); ++li) {
      cell.push_back(letters[li]);
      cell_at(b) = cell;
      if (admissible(b)) {
        fill(pos + 1, extra_budget - static_cast<int>(cell.size()) + 1);
        if (extra_budget >= static_cast<int>(cell.size())) {
          // Grow the cell: sets move to the next letter; a multiset cell may
          // repeat the unprimed 1.
          std::size_t next = li + 1;
          if (multiset && letters[li] == entry::unprimed(1)) next = li;
          next_entry(pos, b, cell, next, extra_budget);
          cell_at(b) = cell;  // restore after deeper growth rewrote it
        }
      }
      cell.pop_back();
      cell_at(b) = cell;
    }
    cell_at(b).clear();
  }

  // Necessary conditions on the filled prefix (boxes up to and including b).
  bool admissible(Box b) {
    if (dec_family) return dectab_prefix_ok(b);
    return shifted_prefix_ok(b);
  }

  bool shifted_prefix_ok(Box b) {
    const Cell& cur = cell_at(b);
    if (!plus_family && b.row == b.col) {
      for (int code : cur)
        if (entry::is_primed(code)) return false;
    }
    if (b.col - 1 >= b.row) {
      const Cell& left = cell_at({b.row, b.col - 1});
      if (left.back() > cur.front()) return false;
      if (left.back() == cur.front() && entry::is_primed(cur.front())) return false;
    }
    if (b.row >= 2) {
      int below_row = b.row - 1;
      if (b.col <= below_row + shape.part(below_row) - 1 && b.col >= below_row) {
        const Cell& below = cell_at({below_row, b.col});
        if (below.back() > cur.front()) return false;
        if (below.back() == cur.front() && !entry::is_primed(cur.front())) return false;
      }
    }
    return true;
  }

  // Every distribution of rows b.row-1 and the filled prefix of row b.row
  // must have hook-word prefixes and avoid the forbidden configurations.
  bool dectab_prefix_ok(Box b) {
    const int i = b.row;
    std::vector<const Cell*> window;
    std::vector<Box> window_boxes;
    if (i >= 2)
      for (int j = i - 1; j <= i - 1 + shape.part(i - 1) - 1; ++j) {
        window_boxes.push_back({i - 1, j});
        window.push_back(&cell_at({i - 1, j}));
      }
    for (int j = i; j <= b.col; ++j) {
      window_boxes.push_back({i, j});
      window.push_back(&cell_at({i, j}));
    }
    std::vector<std::size_t> pick(window.size(), 0);
    std::vector<int> lower_row, upper_prefix;
    for (;;) {
      lower_row.clear();
      upper_prefix.clear();
      for (std::size_t k = 0; k < window.size(); ++k) {
        int v = entry::value((*window[k])[pick[k]]);
        (window_boxes[k].row == i ? upper_prefix : lower_row).push_back(v);
      }
      if (!is_hook_word(upper_prefix)) return false;
      if (i >= 2 && !window_pattern_free(lower_row, upper_prefix, i)) return false;
      std::size_t k = window.size();
      for (;;) {
        if (k == 0) return true;
        --k;
        if (++pick[k] < window[k]->size()) break;
        pick[k] = 0;
      }
    }
  }

  // lower = full row i-1 (values), upper = prefix of row i.  Boxes of row i-1
  // sit at columns i-1 .. i-2+len(lower); row i at columns i .. i-1+len(upper).
  bool window_pattern_free(const std::vector<int>& lower, const std::vector<int>& upper, int i) {
    // Translate to the forbidden configurations with rows (i-1, i): the lower
    // row plays row "i" of the pattern and the upper row plays "i+1".
    const int r = i - 1;
    auto lower_at = [&](int col) { return lower[static_cast<std::size_t>(col - r)]; };
    auto upper_at = [&](int col) { return upper[static_cast<std::size_t>(col - i)]; };
    const int upper_last = i - 1 + static_cast<int>(upper.size());
    const int diag = lower_at(r);
    for (int k = 1; k <= static_cast<int>(upper.size()); ++k) {
      const int bval = upper_at(r + k);
      if (diag <= bval) return false;
      if (bval < diag && r + k <= r + static_cast<int>(lower.size()) - 1 && diag < lower_at(r + k))
        return false;
      for (int j = 1; j < k; ++j) {
        if (r + j > upper_last) break;
        const int rj = lower_at(r + j);
        if (rj <= bval && bval <= upper_at(r + j)) return false;
        if (bval < rj && rj < lower_at(r + k)) return false;
      }
    }
    return true;
  }
};

}  // namespace

void for_each_member(FamilyId fam, const StrictPartition& shape, int n, int max_degree,
                     const std::function<void(const SetShiftedTableau&)>& fn) {
  if (family_single_valued(fam)) {
    max_degree = shape.size();
  } else if (max_degree < 0) {
    throw contract_error("for_each_member: set-valued families require max_degree");
  }
  if (max_degree < shape.size()) return;
  Enumerator e{fam, shape, n, max_degree, &fn, {}, {}, {}, false, false, false};
  e.run();
}

std::vector<SetShiftedTableau> enumerate_family(FamilyId fam, const StrictPartition& shape,
                                                int n, int max_degree) {
  std::vector<SetShiftedTableau> out;
  for_each_member(fam, shape, n, max_degree, [&](const SetShiftedTableau& t) { out.push_back(t); });
  std::sort(out.begin(), out.end(), [](const SetShiftedTableau& a, const SetShiftedTableau& b) {
    return a.serialize() < b.serialize();
  });
  return out;
}

}  // namespace svdt
