#include "svdt/sv_ops.hpp"

#include <algorithm>
#include <cassert>

#include "svdt/families.hpp"

namespace svdt {

WeightVector sv_weight(const SetShiftedTableau& t, int n) {
  if (!t.unprimed()) throw contract_error("sv_weight: primed entries are not allowed");
  return t.weight(n);
}

WeightVector sv_weight(const SetShiftedTableau& t) { return sv_weight(t, t.max_value()); }

namespace {

Cell cell_minus(Cell c, int code) {
  auto it = std::find(c.begin(), c.end(), code);
  if (it == c.end()) throw contract_error("cell_minus: code not present");
  c.erase(it);
  return c;
}

Cell cell_plus(Cell c, int code) {
  c.insert(std::upper_bound(c.begin(), c.end(), code), code);
  return c;
}

}  // namespace

std::optional<SvOpTrace> sv_op_trace(const SetShiftedTableau& t, int i, Dir dir) {
  if (i < 1) throw contract_error("sv_op: index must be positive");
  const ReadingWord rw = revrow(t);
  const auto unpaired = unpaired_positions(rw.letters, i);
  const int seek = dir == Dir::raise ? i + 1 : i;
  const int put = dir == Dir::raise ? i : i + 1;

  int pos = -1;
  if (dir == Dir::raise) {
    for (int p : unpaired)
      if (rw.letters[static_cast<std::size_t>(p)] == seek) { pos = p; break; }
  } else {
    for (auto it = unpaired.rbegin(); it != unpaired.rend(); ++it)
      if (rw.letters[static_cast<std::size_t>(*it)] == seek) { pos = *it; break; }
  }
  if (pos < 0) return std::nullopt;
  const Box critical = rw.boxes[static_cast<std::size_t>(pos)];

  // Case (a): change the letter in its own box.
  {
    Cell c = cell_plus(cell_minus(t.cell(critical), entry::unprimed(seek)), entry::unprimed(put));
    SetShiftedTableau cand = t.with_cell(critical, std::move(c));
    if (is_member(cand, FamilyId::SetDecTab))
      return SvOpTrace{std::move(cand), false, critical, std::nullopt};
  }

  // Case (b): the nearest box on the far side containing both i and i+1
  // donates the changed letter; the critical box gains the other one.
  const auto order = t.boxes_revrow();
  const auto crit_it = std::find(order.begin(), order.end(), critical);
  const int crit_idx = static_cast<int>(crit_it - order.begin());
  int donor_idx = -1;
  if (dir == Dir::raise) {
    for (int k = crit_idx - 1; k >= 0; --k)
      if (t.cell_contains(order[static_cast<std::size_t>(k)], entry::unprimed(i)) &&
          t.cell_contains(order[static_cast<std::size_t>(k)], entry::unprimed(i + 1))) {
        donor_idx = k;
        break;
      }
  } else {
    for (int k = crit_idx + 1; k < static_cast<int>(order.size()); ++k)
      if (t.cell_contains(order[static_cast<std::size_t>(k)], entry::unprimed(i)) &&
          t.cell_contains(order[static_cast<std::size_t>(k)], entry::unprimed(i + 1))) {
        donor_idx = k;
        break;
      }
  }
  if (donor_idx < 0)
    throw contract_error("sv_op: no donor box; input is not a set-valued decomposition tableau");
  const Box donor = order[static_cast<std::size_t>(donor_idx)];

  SetShiftedTableau out = t.with_cell(donor, cell_minus(t.cell(donor), entry::unprimed(seek)));
  out = out.with_cell(critical, cell_plus(out.cell(critical), entry::unprimed(put)));
  assert(is_member(out, FamilyId::SetDecTab));
  return SvOpTrace{std::move(out), true, critical, donor};
}

std::optional<SetShiftedTableau> sv_op(const SetShiftedTableau& t, int i, Dir dir) {
  auto trace = sv_op_trace(t, i, dir);
  if (!trace) return std::nullopt;
  return std::move(trace->result);
}

std::optional<SetShiftedTableau> sv_queer_star_op(const SetShiftedTableau& t, Dir dir) {
  const ReadingWord rw = revrow(t);
  const int seek = dir == Dir::raise ? 2 : 1;
  const int block = dir == Dir::raise ? 1 : 2;
  for (std::size_t p = 0; p < rw.letters.size(); ++p) {
    if (rw.letters[p] == block) return std::nullopt;
    if (rw.letters[p] == seek) {
      Box b = rw.boxes[p];
      Cell c = cell_plus(cell_minus(t.cell(b), entry::unprimed(seek)), entry::unprimed(block));
      SetShiftedTableau out = t.with_cell(b, std::move(c));
      assert(is_member(out, FamilyId::SetDecTabStar));
      return out;
    }
  }
  return std::nullopt;
}

std::optional<SetShiftedTableau> sv_queer_op(const SetShiftedTableau& t, Dir dir) {
  if (t.multiset_mode()) throw contract_error("sv_queer_op: input must be set-valued");
  // Both directions vanish when the first box containing 1 or 2 contains both.
  for (Box b : t.boxes_revrow()) {
    const bool one = t.cell_contains(b, entry::unprimed(1));
    const bool two = t.cell_contains(b, entry::unprimed(2));
    if (one && two) return std::nullopt;
    if (one || two) break;
  }
  return sv_queer_star_op(t, dir);
}

}  // namespace svdt
