#include <functional>

#include "doctest.h"
#include "svdt/families.hpp"
#include "svdt/graph.hpp"
#include "test_support.hpp"

using namespace svdt;
using svdt::testing::tab;

namespace {

Word W(std::vector<int> letters, int n = 3) { return Word(std::move(letters), n); }

// Independent pairing oracle: cancel adjacent "( )" pairs in the reduced
// word until none remain.
std::vector<int> unpaired_oracle(const std::vector<int>& letters, int i) {
  std::vector<std::pair<int, int>> rest;  // (position, letter)
  for (int p = 0; p < static_cast<int>(letters.size()); ++p)
    if (letters[static_cast<std::size_t>(p)] == i || letters[static_cast<std::size_t>(p)] == i + 1)
      rest.push_back({p, letters[static_cast<std::size_t>(p)]});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < rest.size(); ++k)
      if (rest[k].second == i + 1 && rest[k + 1].second == i) {
        rest.erase(rest.begin() + static_cast<long>(k), rest.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
  }
  std::vector<int> out;
  for (auto& [p, l] : rest) out.push_back(p);
  return out;
}

// Left-nested tensor power of the standard crystal: ((w1 (x) w2) (x) w3)...
std::pair<std::string, OperatorFamily> nest_word(const std::vector<int>& letters, int n,
                                                 bool queer) {
  OperatorFamily fam = word_family(n, queer);
  std::string key = word_key(Word({letters[0]}, n));
  for (std::size_t k = 1; k < letters.size(); ++k) {
    OperatorFamily letter = word_family(n, queer);
    key = tensor_key(key, word_key(Word({letters[k]}, n)));
    fam = tensor_family(fam, letter);
  }
  return {key, fam};
}

// Flattens a nested tensor-of-words key back to its letters.
void flatten(const std::string& key, std::vector<int>& out) {
  if (key.size() >= 2 && key[0] == '[' && key[1] == '[') {
    auto [a, b] = tensor_split(key);
    flatten(a, out);
    flatten(b, out);
    return;
  }
  Word w = word_from_key(key, 99);
  out.insert(out.end(), w.letters.begin(), w.letters.end());
}

std::vector<std::vector<int>> all_words(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(m), 1);
  for (;;) {
    out.push_back(cur);
    int k = m - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == n) cur[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) return out;
    ++cur[static_cast<std::size_t>(k)];
  }
}

}  // namespace

TEST_CASE("signature rule") {
  CHECK(word_op(W({1, 1}), 1, Dir::lower) == W({1, 2}));
  CHECK_FALSE(word_op(W({2, 1}), 1, Dir::raise).has_value());
  CHECK_FALSE(word_op(W({1}), 1, Dir::raise).has_value());

  for (const auto& letters : all_words(3, 5))
    for (int i = 1; i <= 2; ++i) {
      CAPTURE(letters);
      CHECK(unpaired_positions(letters, i) == unpaired_oracle(letters, i));
    }
}

TEST_CASE("queer word operator") {
  CHECK(word_queer_op(W({2}), Dir::raise) == W({1}));
  CHECK_FALSE(word_queer_op(W({2, 1}), Dir::lower).has_value());
  CHECK(word_queer_op(W({1, 1, 2}), Dir::lower) == W({2, 1, 2}));
  CHECK(word_queer_op(W({2, 1, 2}), Dir::raise) == W({1, 1, 2}));
}

TEST_CASE("revrow") {
  CHECK(revrow(tab("2 2 3 / 2 1")).letters == std::vector<int>{3, 2, 2, 1, 2});
  CHECK(revrow(tab("4 123 234 / 1 3")).letters == std::vector<int>{4, 3, 2, 3, 2, 1, 4, 3, 1});
  CHECK(revrow(tab("5")).letters == std::vector<int>{5});
  CHECK(revrow(tab("2 2 3 / 2 1")).boxes.front() == Box{1, 3});
  CHECK_THROWS_AS(revrow(tab("1' 2")), contract_error);
}

TEST_CASE("dectab operators") {
  CHECK(dectab_op(tab("1 1"), 1, false, Dir::lower) == tab("2 1"));
  CHECK_FALSE(dectab_op(tab("1 1"), 1, false, Dir::raise).has_value());
  // The queer lowering changes the first 1 of revrow, which sits in the
  // rightmost box of the bottom row.
  CHECK(dectab_op(tab("1 1"), 1, true, Dir::lower) == tab("1 2"));
  CHECK(dectab_op(tab("1 2"), 1, true, Dir::raise) == tab("1 1"));

  // Closure and partial inverse across a small sweep.
  for (const auto& parts : std::vector<std::vector<int>>{{2}, {2, 1}, {3, 1}}) {
    for (const auto& t : enumerate_family(FamilyId::DecTab, StrictPartition(parts), 3)) {
      for (int i = 1; i <= 2; ++i)
        for (bool bar : {false, true}) {
          if (bar && i != 1) continue;
          for (Dir dir : {Dir::raise, Dir::lower}) {
            auto out = dectab_op(t, i, bar, dir);
            if (!out) continue;
            CHECK(is_member(*out, FamilyId::DecTab));
            auto back = dectab_op(*out, i, bar, opposite(dir));
            REQUIRE(back.has_value());
            CHECK(*back == t);
          }
        }
    }
  }
}

TEST_CASE("tensor operators") {
  OperatorFamily pair_fam = tensor_family(word_family(3, true), word_family(3, true));
  auto key = [&](int a, int b) { return tensor_key(word_key(W({a})), word_key(W({b}))); };

  CHECK(pair_fam.apply(key(1, 1), {1, false}, Dir::lower) == key(1, 2));
  CHECK(pair_fam.apply(key(3, 1), {1, true}, Dir::lower) == key(3, 2));
  CHECK_FALSE(pair_fam.apply(key(2, 1), {1, false}, Dir::raise).has_value());
}

TEST_CASE("words agree with letterwise tensors") {
  for (int m = 1; m <= 6; ++m)
    for (const auto& letters : all_words(3, m)) {
      auto [key, fam] = nest_word(letters, 3, true);
      Word w(letters, 3);
      CHECK(fam.weight(key) == word_weight(w));
      for (const Label& l : fam.labels)
        for (Dir dir : {Dir::raise, Dir::lower}) {
          auto via_word = l.bar ? word_queer_op(w, dir) : word_op(w, l.index, dir);
          auto via_tensor = fam.apply(key, l, dir);
          CHECK(via_word.has_value() == via_tensor.has_value());
          if (via_word && via_tensor) {
            std::vector<int> flat;
            flatten(*via_tensor, flat);
            CHECK(flat == via_word->letters);
          }
        }
    }
}

TEST_CASE("partial inverse and seminormality on word powers") {
  OperatorFamily fam = word_family(3, true);
  for (int m = 1; m <= 5; ++m)
    for (const auto& letters : all_words(3, m)) {
      const std::string key = word_key(Word(letters, 3));
      const WeightVector wt = fam.weight(key);
      for (const Label& l : fam.labels) {
        for (Dir dir : {Dir::raise, Dir::lower}) {
          auto out = fam.apply(key, l, dir);
          if (!out) continue;
          CHECK(fam.apply(*out, l, opposite(dir)) == key);
          // Weight law.
          WeightVector w2 = fam.weight(*out);
          const int up = l.bar ? 0 : l.index - 1, dn = l.bar ? 1 : l.index;
          const int sign = dir == Dir::raise ? 1 : -1;
          WeightVector expect = wt;
          expect[static_cast<std::size_t>(up)] += sign;
          expect[static_cast<std::size_t>(dn)] -= sign;
          CHECK(w2 == expect);
        }
        if (!l.bar) {
          const int eps = string_length(fam, key, l, Dir::raise);
          const int phi = string_length(fam, key, l, Dir::lower);
          CHECK(phi - eps == wt[static_cast<std::size_t>(l.index - 1)] -
                                 wt[static_cast<std::size_t>(l.index)]);
        }
      }
    }
}

TEST_CASE("tensor associativity") {
  for (bool queer : {false, true}) {
    OperatorFamily b = word_family(3, queer);
    OperatorFamily left = tensor_family(tensor_family(b, b), b);
    OperatorFamily right = tensor_family(b, tensor_family(b, b));
    for (const auto& w : all_words(3, 3)) {
      auto k = [&](int x) { return word_key(W({w[static_cast<std::size_t>(x)]})); };
      const std::string kl = tensor_key(tensor_key(k(0), k(1)), k(2));
      const std::string kr = tensor_key(k(0), tensor_key(k(1), k(2)));
      for (const Label& l : left.labels)
        for (Dir dir : {Dir::raise, Dir::lower}) {
          auto ol = left.apply(kl, l, dir);
          auto orr = right.apply(kr, l, dir);
          CHECK(ol.has_value() == orr.has_value());
          if (ol && orr) {
            std::vector<int> fl, fr;
            flatten(*ol, fl);
            flatten(*orr, fr);
            CHECK(fl == fr);
          }
        }
    }
  }
}

TEST_CASE("tensor factors must match") {
  CHECK_THROWS_AS(tensor_family(word_family(3, true), word_family(3, false)), svdt::contract_error);
  CHECK_THROWS_AS(tensor_family(word_family(3, true), word_family(4, true)), svdt::contract_error);
}

TEST_CASE("dectab operators stay inside the family across shapes") {
  // Strict closure of the graph build fails loudly on any escaping edge.
  for (const auto& parts : std::vector<std::vector<int>>{
           {1}, {2}, {3}, {4}, {5}, {6}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {3, 2}, {4, 2},
           {3, 2, 1}}) {
    for (int n = 2; n <= 4; ++n) {
      std::vector<std::string> keys;
      for (const auto& t : enumerate_family(FamilyId::DecTab, StrictPartition(parts), n))
        keys.push_back(t.serialize());
      if (keys.empty()) continue;
      CHECK_NOTHROW(CrystalGraph::build(keys, dectab_family(n, true)));
    }
  }
}
