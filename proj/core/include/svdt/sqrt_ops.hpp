#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svdt/tableau.hpp"
#include "svdt/word.hpp"

namespace svdt {

// Square-root crystal operators on set-valued decomposition tableaux.
//
// The linked i-word records, box by box in reverse row reading order, ")"
// for a cell containing i only, "(" for i+1 only, and the glued triple ")-("
// for a cell containing both.  Matched parentheses (dashes ignored) merge
// with everything between them, and each triple is atomic; the resulting
// equivalence classes are contiguous and classify as null / left / right /
// combined forms by their unpaired ends.

struct LinkedWord {
  struct Token {
    char ch;    // ')', '-' or '('
    Box box;
    int group;  // tokens emitted by one box share a group id
  };
  std::vector<Token> tokens;
  int index = 0;  // the i of the linked i-word

  std::string text() const;
  // Builds a linked word from its text alone (boxes faked); every '-' glues
  // its neighbours into a triple.  Handy for tests on raw strings.
  static LinkedWord from_text(const std::string& s, int i = 1);
};

LinkedWord linked_word(const SetShiftedTableau& t, int i);

enum class FormKind { Null, Left, Right, Combined };

struct FormClass {
  int begin = 0;  // token range [begin, end)
  int end = 0;
  FormKind kind = FormKind::Null;
};

std::vector<FormClass> classify_forms(const LinkedWord& lw);

// e'_i / f'_i: with a combined form present, raise removes i+1 from the box
// of the triple ending it and lower removes i from the box of the triple
// beginning it; otherwise raise adds i at the first left form and lower adds
// i+1 at the last right form, or vanishes.
std::optional<SetShiftedTableau> sqrt_op(const SetShiftedTableau& t, int i, Dir dir);

// ebar'_1 / fbar'_1: act on the first box in reverse reading order
// containing 1 or 2 ({2}: raise adds 1; {1,2}: raise removes 2, lower
// removes 1; {1}: lower adds 2; the remaining cases vanish).
std::optional<SetShiftedTableau> sqrt_queer_op(const SetShiftedTableau& t, Dir dir);

// String lengths by repeated application.
int sqrt_string_length(const SetShiftedTableau& t, int i, Dir dir);
int sqrt_queer_string_length(const SetShiftedTableau& t, Dir dir);

// The involution reversing each double i-string: (f'_i)^(phi-eps) when
// phi >= eps, else (e'_i)^(eps-phi).
SetShiftedTableau sigma_prime(const SetShiftedTableau& t, int i);

// Composite queer operators ebar'_i / fbar'_i for 1 <= i <= n-1 (i = 1 is
// the plain queer operator), via conjugation by string reversals.
std::optional<SetShiftedTableau> sqrt_queer_i_op(const SetShiftedTableau& t, int i, int n, Dir dir);

// Border strips of a shifted shape, peeled from (1, lambda_1), and the
// tableau filling strip s with the value s.
std::vector<std::vector<Box>> border_strips(const StrictPartition& lambda);
SetShiftedTableau t_highest(const StrictPartition& lambda);

// True when every e'_i and every composite ebar'_i vanishes, i in [n-1].
bool is_sqrt_highest(const SetShiftedTableau& t, int n);

}  // namespace svdt
