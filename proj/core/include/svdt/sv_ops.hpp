#pragma once

#include <optional>

#include "svdt/tableau.hpp"
#include "svdt/word.hpp"

namespace svdt {

// Crystal operators on set-valued decomposition tableaux, acting through the
// i-pairing of the reverse row reading word.  All operators either return a
// member of the same family or nullopt; inputs are assumed to be members.
//
// e_i / f_i have a two-case action: change the critical letter in place when
// that stays a member, otherwise move a letter between the critical box and
// the nearest box containing both i and i+1.

WeightVector sv_weight(const SetShiftedTableau& t, int n);
WeightVector sv_weight(const SetShiftedTableau& t);  // n = largest entry value

std::optional<SetShiftedTableau> sv_op(const SetShiftedTableau& t, int i, Dir dir);

// Like sv_op but reporting which case fired and the boxes involved, for
// checking the structural facts about case (b).
struct SvOpTrace {
  SetShiftedTableau result;
  bool moved = false;             // case (b)
  Box critical;                   // box of the acting unpaired letter
  std::optional<Box> donor;       // box containing {i, i+1} in case (b)
};
std::optional<SvOpTrace> sv_op_trace(const SetShiftedTableau& t, int i, Dir dir);

// The multiset queer operators on SetDecTab*: change the first 2 (raise) or
// first 1 (lower) of revrow(T) unless a blocking 1 resp. 2 precedes it.
std::optional<SetShiftedTableau> sv_queer_star_op(const SetShiftedTableau& t, Dir dir);

// Restriction to ordinary set-valued decomposition tableaux: both directions
// act as nullopt when the first box (in reverse reading order) containing a
// 1 or 2 contains both; otherwise they agree with the * operators.
std::optional<SetShiftedTableau> sv_queer_op(const SetShiftedTableau& t, Dir dir);

}  // namespace svdt
