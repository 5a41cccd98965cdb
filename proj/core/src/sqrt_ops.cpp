#include "svdt/sqrt_ops.hpp"

#include <algorithm>
#include <cassert>

#include "svdt/families.hpp"

namespace svdt {

std::string LinkedWord::text() const {
  std::string s;
  for (const Token& t : tokens) s += t.ch;
  return s;
}

LinkedWord LinkedWord::from_text(const std::string& s, int i) {
  LinkedWord lw;
  lw.index = i;
  int group = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c != '(' && c != ')' && c != '-') throw contract_error("LinkedWord: bad character");
    if (c == '-') {
      if (k == 0 || k + 1 == s.size() || s[k - 1] != ')' || s[k + 1] != '(')
        throw contract_error("LinkedWord: '-' must sit inside \")-(\"");
      lw.tokens.back().group = group;  // re-glue the preceding ')'
      lw.tokens.push_back({'-', Box{0, 0}, group});
      lw.tokens.push_back({'(', Box{0, 0}, group});
      ++k;  // consume the '('
      ++group;
      continue;
    }
    lw.tokens.push_back({c, Box{0, 0}, group++});
  }
  return lw;
}

LinkedWord linked_word(const SetShiftedTableau& t, int i) {
  if (i < 1) throw contract_error("linked_word: index must be positive");
  if (!t.unprimed()) throw contract_error("linked_word: primed entries are not allowed");
  LinkedWord lw;
  lw.index = i;
  int group = 0;
  for (Box b : t.boxes_revrow()) {
    const bool has_i = t.cell_contains(b, entry::unprimed(i));
    const bool has_i1 = t.cell_contains(b, entry::unprimed(i + 1));
    if (has_i && has_i1) {
      lw.tokens.push_back({')', b, group});
      lw.tokens.push_back({'-', b, group});
      lw.tokens.push_back({'(', b, group});
    } else if (has_i) {
      lw.tokens.push_back({')', b, group});
    } else if (has_i1) {
      lw.tokens.push_back({'(', b, group});
    } else {
      continue;
    }
    ++group;
  }
  return lw;
}

namespace {

struct Pairing {
  std::vector<int> match;  // per token: matched partner, or -1
};

Pairing pair_tokens(const LinkedWord& lw) {
  Pairing p;
  p.match.assign(lw.tokens.size(), -1);
  std::vector<int> stack;
  for (int k = 0; k < static_cast<int>(lw.tokens.size()); ++k) {
    char c = lw.tokens[static_cast<std::size_t>(k)].ch;
    if (c == '(') stack.push_back(k);
    if (c == ')' && !stack.empty()) {
      p.match[static_cast<std::size_t>(k)] = stack.back();
      p.match[static_cast<std::size_t>(stack.back())] = k;
      stack.pop_back();
    }
  }
  return p;
}

}  // namespace

std::vector<FormClass> classify_forms(const LinkedWord& lw) {
  const int m = static_cast<int>(lw.tokens.size());
  std::vector<FormClass> out;
  if (m == 0) return out;
  const Pairing pairing = pair_tokens(lw);

  // joined[k]: tokens k and k+1 belong to the same class.  Every merge rule
  // unions a contiguous range, so adjacency flags capture the partition.
  std::vector<char> joined(static_cast<std::size_t>(m), 0);
  for (int k = 0; k + 1 < m; ++k) {
    if (lw.tokens[static_cast<std::size_t>(k)].group ==
        lw.tokens[static_cast<std::size_t>(k + 1)].group)
      joined[static_cast<std::size_t>(k)] = 1;
  }
  for (int k = 0; k < m; ++k) {
    int mk = pairing.match[static_cast<std::size_t>(k)];
    if (mk > k)
      for (int j = k; j < mk; ++j) joined[static_cast<std::size_t>(j)] = 1;
  }

  int begin = 0;
  for (int k = 0; k < m; ++k) {
    if (k + 1 == m || !joined[static_cast<std::size_t>(k)]) {
      FormClass fc;
      fc.begin = begin;
      fc.end = k + 1;
      bool unpaired_r = false, unpaired_l = false;
      for (int j = begin; j <= k; ++j) {
        if (pairing.match[static_cast<std::size_t>(j)] >= 0) continue;
        char c = lw.tokens[static_cast<std::size_t>(j)].ch;
        if (c == ')') {
          assert(j == begin);
          unpaired_r = true;
        }
        if (c == '(') {
          assert(j == k);
          unpaired_l = true;
        }
      }
      fc.kind = unpaired_r ? (unpaired_l ? FormKind::Combined : FormKind::Right)
                           : (unpaired_l ? FormKind::Left : FormKind::Null);
      out.push_back(fc);
      begin = k + 1;
    }
  }
  return out;
}

std::optional<SetShiftedTableau> sqrt_op(const SetShiftedTableau& t, int i, Dir dir) {
  if (i < 1) throw contract_error("sqrt_op: index must be positive");
  const LinkedWord lw = linked_word(t, i);
  const auto forms = classify_forms(lw);

  auto remove_at = [&](Box b, int value) {
    Cell c = t.cell(b);
    c.erase(std::find(c.begin(), c.end(), entry::unprimed(value)));
    return t.with_cell(b, std::move(c));
  };
  auto add_at = [&](Box b, int value) {
    Cell c = t.cell(b);
    c.push_back(entry::unprimed(value));
    return t.with_cell(b, std::move(c));
  };

  const FormClass* combined = nullptr;
  for (const auto& f : forms)
    if (f.kind == FormKind::Combined) { combined = &f; break; }

  std::optional<SetShiftedTableau> out;
  if (dir == Dir::raise) {
    if (combined) {
      // The class ends with the unpaired "(" of a triple; drop that box's i+1.
      const auto& tok = lw.tokens[static_cast<std::size_t>(combined->end - 1)];
      assert(tok.ch == '(');
      out = remove_at(tok.box, i + 1);
    } else {
      for (const auto& f : forms)
        if (f.kind == FormKind::Left) {
          const auto& tok = lw.tokens[static_cast<std::size_t>(f.begin)];
          assert(tok.ch == '(');
          out = add_at(tok.box, i);
          break;
        }
    }
  } else {
    if (combined) {
      const auto& tok = lw.tokens[static_cast<std::size_t>(combined->begin)];
      assert(tok.ch == ')');
      out = remove_at(tok.box, i);
    } else {
      for (auto it = forms.rbegin(); it != forms.rend(); ++it)
        if (it->kind == FormKind::Right) {
          const auto& tok = lw.tokens[static_cast<std::size_t>(it->end - 1)];
          assert(tok.ch == ')');
          out = add_at(tok.box, i + 1);
          break;
        }
    }
  }
  assert(!out || is_member(*out, FamilyId::SetDecTab));
  return out;
}

std::optional<SetShiftedTableau> sqrt_queer_op(const SetShiftedTableau& t, Dir dir) {
  for (Box b : t.boxes_revrow()) {
    const bool one = t.cell_contains(b, entry::unprimed(1));
    const bool two = t.cell_contains(b, entry::unprimed(2));
    if (!one && !two) continue;
    Cell c = t.cell(b);
    if (dir == Dir::raise) {
      if (one && !two) return std::nullopt;
      if (one && two)
        c.erase(std::find(c.begin(), c.end(), entry::unprimed(2)));
      else
        c.insert(c.begin(), entry::unprimed(1));
    } else {
      if (two && !one) return std::nullopt;
      if (one && two)
        c.erase(std::find(c.begin(), c.end(), entry::unprimed(1)));
      else
        c.push_back(entry::unprimed(2));
    }
    SetShiftedTableau out = t.with_cell(b, std::move(c));
    assert(is_member(out, FamilyId::SetDecTab));
    return out;
  }
  return std::nullopt;
}

namespace {
constexpr int kStringCap = 4096;
}

int sqrt_string_length(const SetShiftedTableau& t, int i, Dir dir) {
  SetShiftedTableau cur = t;
  for (int k = 0; k < kStringCap; ++k) {
    auto next = sqrt_op(cur, i, dir);
    if (!next) return k;
    cur = std::move(*next);
  }
  throw contract_error("sqrt_string_length: string exceeds cap");
}

int sqrt_queer_string_length(const SetShiftedTableau& t, Dir dir) {
  SetShiftedTableau cur = t;
  for (int k = 0; k < kStringCap; ++k) {
    auto next = sqrt_queer_op(cur, dir);
    if (!next) return k;
    cur = std::move(*next);
  }
  throw contract_error("sqrt_queer_string_length: string exceeds cap");
}

SetShiftedTableau sigma_prime(const SetShiftedTableau& t, int i) {
  const int eps = sqrt_string_length(t, i, Dir::raise);
  const int phi = sqrt_string_length(t, i, Dir::lower);
  SetShiftedTableau cur = t;
  const Dir dir = phi >= eps ? Dir::lower : Dir::raise;
  for (int k = 0; k < std::abs(phi - eps); ++k) cur = *sqrt_op(cur, i, dir);
  return cur;
}

std::optional<SetShiftedTableau> sqrt_queer_i_op(const SetShiftedTableau& t, int i, int n,
                                                 Dir dir) {
  if (i < 1 || i >= n) throw contract_error("sqrt_queer_i_op: index out of range");
  if (i == 1) return sqrt_queer_op(t, dir);
  SetShiftedTableau cur = t;
  for (int k = i - 1; k >= 1; --k) {
    cur = sigma_prime(cur, k);
    cur = sigma_prime(cur, k + 1);
  }
  auto mid = sqrt_queer_op(cur, dir);
  if (!mid) return std::nullopt;
  cur = std::move(*mid);
  for (int k = 1; k <= i - 1; ++k) {
    cur = sigma_prime(cur, k + 1);
    cur = sigma_prime(cur, k);
  }
  return cur;
}

std::vector<std::vector<Box>> border_strips(const StrictPartition& lambda) {
  std::vector<std::vector<Box>> strips;
  std::vector<int> parts = lambda.parts();
  while (!parts.empty()) {
    StrictPartition mu(parts);
    std::vector<Box> diagram = shifted_diagram(mu);
    auto in_diagram = [&](Box b) {
      return std::find(diagram.begin(), diagram.end(), b) != diagram.end();
    };
    std::vector<Box> strip;
    Box cur{1, mu.part(1)};
    for (;;) {
      strip.push_back(cur);
      if (cur.row == cur.col) break;
      if (in_diagram({cur.row + 1, cur.col}))
        cur = {cur.row + 1, cur.col};
      else
        cur = {cur.row, cur.col - 1};
    }
    // What remains is the shifted diagram of a shorter strict partition.
    std::vector<int> next;
    for (int i = 1; i <= mu.length(); ++i) {
      int count = 0;
      for (int j = 1; j <= mu.part(i); ++j)
        if (std::find(strip.begin(), strip.end(), Box{i, i + j - 1}) == strip.end()) ++count;
      if (count > 0) next.push_back(count);
    }
    strips.push_back(std::move(strip));
    parts = std::move(next);
  }
  return strips;
}

SetShiftedTableau t_highest(const StrictPartition& lambda) {
  const auto strips = border_strips(lambda);
  std::vector<std::vector<Cell>> rows;
  for (int i = 1; i <= lambda.length(); ++i)
    rows.emplace_back(static_cast<std::size_t>(lambda.part(i)));
  for (std::size_t s = 0; s < strips.size(); ++s)
    for (Box b : strips[s])
      rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - b.row)] = {
          entry::unprimed(static_cast<int>(s) + 1)};
  return SetShiftedTableau(lambda, std::move(rows));
}

bool is_sqrt_highest(const SetShiftedTableau& t, int n) {
  for (int i = 1; i < n; ++i) {
    if (sqrt_op(t, i, Dir::raise)) return false;
    if (sqrt_queer_i_op(t, i, n, Dir::raise)) return false;
  }
  return true;
}

}  // namespace svdt
