#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "svdt/word.hpp"

namespace svdt {

enum class CrystalMode { gl, q, sqrt_gl, sqrt_q };

std::string mode_name(CrystalMode m);
bool mode_is_sqrt(CrystalMode m);
bool mode_has_queer(CrystalMode m);

// Edge label: index i in [n-1], or the queer label (bar = true, index 1).
struct Label {
  int index = 1;
  bool bar = false;
  friend auto operator<=>(const Label&, const Label&) = default;
};

std::string label_name(Label l, CrystalMode mode);

// A crystal operator family over serialized elements.  Keys are canonical
// serializations (tableau JSON, word JSON, nested arrays for tensors), so
// one graph/verification engine serves every element type.
struct OperatorFamily {
  CrystalMode mode = CrystalMode::gl;
  int n = 0;
  std::vector<Label> labels;
  std::function<std::optional<std::string>(const std::string&, Label, Dir)> apply;
  std::function<WeightVector(const std::string&)> weight;
  std::function<int(const std::string&)> degree;
};

// Words of B_n^{(x)m}; keys are JSON arrays of letters.
OperatorFamily word_family(int n, bool queer);
std::string word_key(const Word& w);
Word word_from_key(const std::string& key, int n);

// Single-valued decomposition tableaux through the revrow embedding.
OperatorFamily dectab_family(int n, bool queer);

// Set-valued decomposition tableaux with the two-case operators and the
// restricted queer operators.
OperatorFamily sv_family(int n, bool queer);

// Square-root operators; queer edges use ebar'_1 / fbar'_1.
OperatorFamily sqrt_family(int n, bool queer);

// Squares of a square-root family: a classical gl- or q-family.
OperatorFamily squared_family(const OperatorFamily& f);

// Tensor product of two families over the same n and mode.  Keys are JSON
// pairs [key_left, key_right]; index operators route by string-length
// comparison, the queer operator by vanishing of the left factor's first two
// weight entries.
OperatorFamily tensor_family(const OperatorFamily& a, const OperatorFamily& b);
std::string tensor_key(const std::string& left, const std::string& right);
std::pair<std::string, std::string> tensor_split(const std::string& key);

// String length by repeated application; throws past the cap.
int string_length(const OperatorFamily& fam, const std::string& key, Label l, Dir dir,
                  int cap = 4096);

// String reversal sigma_i: (lower)^(phi-eps) or (raise)^(eps-phi).
std::string sigma_reverse(const OperatorFamily& fam, const std::string& key, int i);

// Composite queer operators for 1 <= i <= n-1 obtained by conjugating the
// queer operator with string reversals; i = 1 is the queer operator itself.
std::optional<std::string> composite_queer(const OperatorFamily& fam, const std::string& key,
                                           int i, Dir dir);

// Highest-weight predicates: all raising operators vanish; the queer variant
// also requires every composite queer raising operator to vanish.
bool is_highest(const OperatorFamily& fam, const std::string& key);
bool is_queer_highest(const OperatorFamily& fam, const std::string& key);

}  // namespace svdt
