#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svdt/tableau.hpp"

namespace svdt {

// The seven tableau families.  Set-valued membership is always decided by
// distributions: T belongs to a set-valued family iff every distribution
// belongs to the single-valued one.
enum class FamilyId {
  DecTab,
  ShTab,
  ShTabPlus,
  SetShTab,
  SetShTabPlus,
  SetDecTab,
  SetDecTabStar,
};

bool family_single_valued(FamilyId fam);
bool family_allows_primes(FamilyId fam);
std::string family_name(FamilyId fam);
std::optional<FamilyId> family_from_name(std::string name);

// Hook words: a weakly decreasing head (never empty) followed by a strictly
// increasing tail (possibly empty).  Words are over positive integers;
// the empty word is rejected.
bool is_hook_word(std::span<const int> w);

// Length of the longest hook subword (subsequence) of w; 0 for the empty
// word.  Quadratic DP over (position, head/tail mode).
int max_hook_subword_len(std::span<const int> w);

// The two equivalent decomposition-tableau tests: the definitional maximal
// hook subword condition, and the forbidden-configuration test.  Both first
// require every row to be a hook word.  Input must be single-valued and
// unprimed; primed entries raise contract_error.
enum class DecTabCheckMode { definitional, pattern };
bool is_decomposition_tableau(const SetShiftedTableau& t, DecTabCheckMode mode);

bool is_member(const SetShiftedTableau& t, FamilyId fam);

// All members of the family with entry values at most n and degree at most
// max_degree, sorted by serialized form.  For single-valued families
// max_degree is ignored (the degree is |shape|); set-valued families require
// it.  l(shape) > n yields an empty list.
std::vector<SetShiftedTableau> enumerate_family(FamilyId fam, const StrictPartition& shape,
                                                int n, int max_degree = -1);

// Enumeration core: visits members in generation order (unspecified but
// deterministic); enumerate_family sorts its output canonically.
void for_each_member(FamilyId fam, const StrictPartition& shape, int n, int max_degree,
                     const std::function<void(const SetShiftedTableau&)>& fn);

}  // namespace svdt
