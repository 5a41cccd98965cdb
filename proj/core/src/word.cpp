#include "svdt/word.hpp"

#include <algorithm>

namespace svdt {

WeightVector word_weight(const Word& w) {
  WeightVector wt(static_cast<std::size_t>(w.n), 0);
  for (int x : w.letters) ++wt[static_cast<std::size_t>(x - 1)];
  return wt;
}

std::vector<int> unpaired_positions(std::span<const int> letters, int i) {
  std::vector<int> opens;      // positions of unmatched i+1
  std::vector<int> unpaired;   // positions of unmatched i
  for (int p = 0; p < static_cast<int>(letters.size()); ++p) {
    if (letters[static_cast<std::size_t>(p)] == i + 1) {
      opens.push_back(p);
    } else if (letters[static_cast<std::size_t>(p)] == i) {
      if (!opens.empty())
        opens.pop_back();
      else
        unpaired.push_back(p);
    }
  }
  unpaired.insert(unpaired.end(), opens.begin(), opens.end());
  std::sort(unpaired.begin(), unpaired.end());
  return unpaired;
}

std::optional<Word> word_op(const Word& w, int i, Dir dir) {
  if (i < 1 || i >= w.n) throw contract_error("word_op: index out of range");
  auto unpaired = unpaired_positions(w.letters, i);
  if (dir == Dir::raise) {
    for (int p : unpaired)
      if (w.letters[static_cast<std::size_t>(p)] == i + 1) {
        Word out = w;
        out.letters[static_cast<std::size_t>(p)] = i;
        return out;
      }
  } else {
    for (auto it = unpaired.rbegin(); it != unpaired.rend(); ++it)
      if (w.letters[static_cast<std::size_t>(*it)] == i) {
        Word out = w;
        out.letters[static_cast<std::size_t>(*it)] = i + 1;
        return out;
      }
  }
  return std::nullopt;
}

std::optional<Word> word_queer_op(const Word& w, Dir dir) {
  if (w.n < 2) throw contract_error("word_queer_op: requires n >= 2");
  const int seek = dir == Dir::raise ? 2 : 1;
  const int block = dir == Dir::raise ? 1 : 2;
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    if (w.letters[p] == block) return std::nullopt;
    if (w.letters[p] == seek) {
      Word out = w;
      out.letters[p] = block;
      return out;
    }
  }
  return std::nullopt;
}

ReadingWord revrow(const SetShiftedTableau& t) {
  if (!t.unprimed()) throw contract_error("revrow: primed entries are not allowed");
  ReadingWord rw;
  for (Box b : t.boxes_revrow()) {
    const Cell& c = t.cell(b);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      rw.letters.push_back(entry::value(*it));
      rw.boxes.push_back(b);
    }
  }
  return rw;
}

std::optional<SetShiftedTableau> dectab_op(const SetShiftedTableau& t, int i, bool bar, Dir dir) {
  if (!t.all_singletons()) throw contract_error("dectab_op: tableau must be single-valued");
  ReadingWord rw = revrow(t);
  const int n = std::max(t.max_value(), bar ? 2 : i + 1);
  Word w(rw.letters, n);
  std::optional<Word> out = bar ? word_queer_op(w, dir) : word_op(w, i, dir);
  if (!out) return std::nullopt;
  for (std::size_t p = 0; p < w.letters.size(); ++p)
    if (out->letters[p] != w.letters[p])
      return t.with_cell(rw.boxes[p], {entry::unprimed(out->letters[p])});
  return std::nullopt;  // unreachable: the word operators change one letter
}

}  // namespace svdt
