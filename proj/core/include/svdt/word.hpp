#pragma once

#include <optional>
#include <span>
#include <vector>

#include "svdt/tableau.hpp"

namespace svdt {

using WeightVector = std::vector<int>;

// A word over [n], identified with a tensor of standard-crystal letters
// (anti-Kashiwara convention, first letter = leftmost tensor factor).
struct Word {
  std::vector<int> letters;
  int n = 0;

  Word(std::vector<int> letters_, int n_) : letters(std::move(letters_)), n(n_) {
    for (int x : letters)
      if (x < 1 || x > n) throw contract_error("Word: letter out of range");
  }

  friend bool operator==(const Word&, const Word&) = default;
};

WeightVector word_weight(const Word& w);

// Signature rule bookkeeping: positions (0-based, ascending) of letters equal
// to i or i+1 that do not belong to a matching ( ) pair, where i+1 opens and
// i closes.
std::vector<int> unpaired_positions(std::span<const int> letters, int i);

// e_i / f_i by the signature rule.  raise decrements the first unpaired i+1,
// lower increments the last unpaired i; nullopt when no such letter.
std::optional<Word> word_op(const Word& w, int i, Dir dir);

// ebar_1 / fbar_1 on words: raise turns the first 2 into 1 unless a 1
// precedes it; lower turns the first 1 into 2 unless a 2 precedes it.
std::optional<Word> word_queer_op(const Word& w, Dir dir);

// Reverse row reading word with source boxes: last box of row 1 first, each
// row right to left, rows bottom to top; within a box, entries descending.
struct ReadingWord {
  std::vector<int> letters;
  std::vector<Box> boxes;
};
ReadingWord revrow(const SetShiftedTableau& t);

// Crystal operators on single-valued decomposition tableaux through the
// revrow embedding: apply the word operator and write the changed letter
// back into its source box.
std::optional<SetShiftedTableau> dectab_op(const SetShiftedTableau& t, int i, bool bar, Dir dir);

}  // namespace svdt
