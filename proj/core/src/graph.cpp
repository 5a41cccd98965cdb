#include "svdt/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "svdt/sqrt_ops.hpp"
#include "svdt/sv_ops.hpp"

namespace svdt {

std::string mode_name(CrystalMode m) {
  switch (m) {
    case CrystalMode::gl: return "gl";
    case CrystalMode::q: return "q";
    case CrystalMode::sqrt_gl: return "sqrt_gl";
    case CrystalMode::sqrt_q: return "sqrt_q";
  }
  return "?";
}

bool mode_is_sqrt(CrystalMode m) { return m == CrystalMode::sqrt_gl || m == CrystalMode::sqrt_q; }
bool mode_has_queer(CrystalMode m) { return m == CrystalMode::q || m == CrystalMode::sqrt_q; }

std::string label_name(Label l, CrystalMode mode) {
  std::string s = l.bar ? "~" + std::to_string(l.index) : std::to_string(l.index);
  if (mode_is_sqrt(mode)) s += '\'';
  return s;
}

namespace {

std::vector<Label> make_labels(int n, bool queer) {
  std::vector<Label> labels;
  for (int i = 1; i < n; ++i) labels.push_back({i, false});
  if (queer) labels.push_back({1, true});
  return labels;
}

}  // namespace

std::string word_key(const Word& w) {
  nlohmann::json j = w.letters;
  return j.dump();
}

Word word_from_key(const std::string& key, int n) {
  nlohmann::json j = nlohmann::json::parse(key);
  return Word(j.get<std::vector<int>>(), n);
}

OperatorFamily word_family(int n, bool queer) {
  OperatorFamily fam;
  fam.mode = queer ? CrystalMode::q : CrystalMode::gl;
  fam.n = n;
  fam.labels = make_labels(n, queer);
  fam.apply = [n](const std::string& key, Label l, Dir dir) -> std::optional<std::string> {
    Word w = word_from_key(key, n);
    auto out = l.bar ? word_queer_op(w, dir) : word_op(w, l.index, dir);
    if (!out) return std::nullopt;
    return word_key(*out);
  };
  fam.weight = [n](const std::string& key) { return word_weight(word_from_key(key, n)); };
  fam.degree = [n](const std::string& key) {
    return static_cast<int>(word_from_key(key, n).letters.size());
  };
  return fam;
}

namespace {

OperatorFamily tableau_family(CrystalMode mode, int n, bool queer,
                              std::function<std::optional<SetShiftedTableau>(
                                  const SetShiftedTableau&, Label, Dir)> op) {
  OperatorFamily fam;
  fam.mode = mode;
  fam.n = n;
  fam.labels = make_labels(n, queer);
  fam.apply = [op = std::move(op)](const std::string& key, Label l,
                                   Dir dir) -> std::optional<std::string> {
    auto out = op(SetShiftedTableau::parse(key), l, dir);
    if (!out) return std::nullopt;
    return out->serialize();
  };
  fam.weight = [n](const std::string& key) { return SetShiftedTableau::parse(key).weight(n); };
  fam.degree = [](const std::string& key) { return SetShiftedTableau::parse(key).degree(); };
  return fam;
}

}  // namespace

OperatorFamily dectab_family(int n, bool queer) {
  return tableau_family(queer ? CrystalMode::q : CrystalMode::gl, n, queer,
                        [](const SetShiftedTableau& t, Label l, Dir dir) {
                          return dectab_op(t, l.index, l.bar, dir);
                        });
}

OperatorFamily sv_family(int n, bool queer) {
  return tableau_family(queer ? CrystalMode::q : CrystalMode::gl, n, queer,
                        [](const SetShiftedTableau& t, Label l, Dir dir) {
                          return l.bar ? sv_queer_op(t, dir) : sv_op(t, l.index, dir);
                        });
}

OperatorFamily sqrt_family(int n, bool queer) {
  return tableau_family(queer ? CrystalMode::sqrt_q : CrystalMode::sqrt_gl, n, queer,
                        [](const SetShiftedTableau& t, Label l, Dir dir) {
                          return l.bar ? sqrt_queer_op(t, dir) : sqrt_op(t, l.index, dir);
                        });
}

OperatorFamily squared_family(const OperatorFamily& f) {
  if (!mode_is_sqrt(f.mode)) throw contract_error("squared_family: expects a square-root family");
  OperatorFamily fam = f;
  fam.mode = f.mode == CrystalMode::sqrt_q ? CrystalMode::q : CrystalMode::gl;
  fam.apply = [inner = f.apply](const std::string& key, Label l,
                                Dir dir) -> std::optional<std::string> {
    auto mid = inner(key, l, dir);
    if (!mid) return std::nullopt;
    return inner(*mid, l, dir);
  };
  return fam;
}

std::string tensor_key(const std::string& left, const std::string& right) {
  nlohmann::json j = nlohmann::json::array();
  j.push_back(nlohmann::json::parse(left));
  j.push_back(nlohmann::json::parse(right));
  return j.dump();
}

std::pair<std::string, std::string> tensor_split(const std::string& key) {
  nlohmann::json j = nlohmann::json::parse(key);
  if (!j.is_array() || j.size() != 2) throw contract_error("tensor_split: not a tensor key");
  return {j[0].dump(), j[1].dump()};
}

OperatorFamily tensor_family(const OperatorFamily& a, const OperatorFamily& b) {
  if (a.n != b.n || a.mode != b.mode)
    throw contract_error("tensor_family: factors must share n and mode");
  OperatorFamily fam;
  fam.mode = a.mode;
  fam.n = a.n;
  fam.labels = a.labels;
  fam.apply = [a, b](const std::string& key, Label l, Dir dir) -> std::optional<std::string> {
    auto [ka, kb] = tensor_split(key);
    bool act_right;
    if (l.bar) {
      WeightVector wa = a.weight(ka);
      act_right = wa.size() >= 2 && wa[0] == 0 && wa[1] == 0;
    } else {
      const int eps_a = string_length(a, ka, l, Dir::raise);
      const int phi_b = string_length(b, kb, l, Dir::lower);
      act_right = dir == Dir::raise ? eps_a <= phi_b : eps_a < phi_b;
    }
    if (act_right) {
      auto out = b.apply(kb, l, dir);
      if (!out) return std::nullopt;
      return tensor_key(ka, *out);
    }
    auto out = a.apply(ka, l, dir);
    if (!out) return std::nullopt;
    return tensor_key(*out, kb);
  };
  fam.weight = [a, b](const std::string& key) {
    auto [ka, kb] = tensor_split(key);
    WeightVector wa = a.weight(ka), wb = b.weight(kb);
    for (std::size_t k = 0; k < wa.size(); ++k) wa[k] += wb[k];
    return wa;
  };
  fam.degree = [a, b](const std::string& key) {
    auto [ka, kb] = tensor_split(key);
    return a.degree(ka) + b.degree(kb);
  };
  return fam;
}

int string_length(const OperatorFamily& fam, const std::string& key, Label l, Dir dir, int cap) {
  std::string cur = key;
  for (int k = 0; k < cap; ++k) {
    auto next = fam.apply(cur, l, dir);
    if (!next) return k;
    cur = std::move(*next);
  }
  throw contract_error("string_length: string exceeds cap (label " + label_name(l, fam.mode) + ")");
}

std::string sigma_reverse(const OperatorFamily& fam, const std::string& key, int i) {
  const Label l{i, false};
  const int eps = string_length(fam, key, l, Dir::raise);
  const int phi = string_length(fam, key, l, Dir::lower);
  const Dir dir = phi >= eps ? Dir::lower : Dir::raise;
  std::string cur = key;
  for (int k = 0; k < std::abs(phi - eps); ++k) cur = *fam.apply(cur, l, dir);
  return cur;
}

std::optional<std::string> composite_queer(const OperatorFamily& fam, const std::string& key,
                                           int i, Dir dir) {
  if (i < 1 || i >= fam.n) throw contract_error("composite_queer: index out of range");
  const Label bar{1, true};
  if (i == 1) return fam.apply(key, bar, dir);
  std::string cur = key;
  for (int k = i - 1; k >= 1; --k) {
    cur = sigma_reverse(fam, cur, k);
    cur = sigma_reverse(fam, cur, k + 1);
  }
  auto mid = fam.apply(cur, bar, dir);
  if (!mid) return std::nullopt;
  cur = std::move(*mid);
  for (int k = 1; k <= i - 1; ++k) {
    cur = sigma_reverse(fam, cur, k + 1);
    cur = sigma_reverse(fam, cur, k);
  }
  return cur;
}

bool is_highest(const OperatorFamily& fam, const std::string& key) {
  for (const Label& l : fam.labels)
    if (!l.bar && fam.apply(key, l, Dir::raise)) return false;
  return true;
}

bool is_queer_highest(const OperatorFamily& fam, const std::string& key) {
  if (!mode_has_queer(fam.mode)) throw contract_error("is_queer_highest: family has no queer operator");
  for (int i = 1; i < fam.n; ++i) {
    if (fam.apply(key, {i, false}, Dir::raise)) return false;
    if (composite_queer(fam, key, i, Dir::raise)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// CrystalGraph

CrystalGraph CrystalGraph::build(std::vector<std::string> seeds, OperatorFamily fam,
                                 BuildOptions opts) {
  CrystalGraph g;
  g.family_ = std::move(fam);
  g.options_ = opts;

  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  std::map<std::string, int> seen;
  std::deque<std::string> queue;
  for (const auto& s : seeds) {
    seen.emplace(s, 0);
    queue.push_back(s);
  }

  if (opts.policy != ClosurePolicy::strict) {
    while (!queue.empty()) {
      std::string key = std::move(queue.front());
      queue.pop_front();
      for (const Label& l : g.family_.labels)
        for (Dir dir : {Dir::raise, Dir::lower}) {
          auto out = g.apply(key, l, dir);
          if (!out || seen.count(*out)) continue;
          if (opts.max_degree >= 0 && g.family_.degree(*out) > opts.max_degree) {
            ++g.clipped_;
            continue;
          }
          if (opts.max_vertices >= 0 &&
              static_cast<long>(seen.size()) >= opts.max_vertices)
            throw contract_error("CrystalGraph: saturation exceeded max_vertices");
          seen.emplace(*out, 0);
          queue.push_back(*out);
        }
    }
  }

  g.vertices_.reserve(seen.size());
  for (auto& [key, idx] : seen) {
    idx = static_cast<int>(g.vertices_.size());
    g.vertices_.push_back(key);
  }
  g.weights_.reserve(g.vertices_.size());
  for (const auto& key : g.vertices_) g.weights_.push_back(g.family_.weight(key));

  const int L = static_cast<int>(g.family_.labels.size());
  g.lower_.assign(static_cast<std::size_t>(L),
                  std::vector<int>(g.vertices_.size(), -1));
  g.raise_.assign(static_cast<std::size_t>(L),
                  std::vector<int>(g.vertices_.size(), -1));
  for (int v = 0; v < static_cast<int>(g.vertices_.size()); ++v) {
    for (int li = 0; li < L; ++li) {
      auto out = g.apply(g.vertices_[static_cast<std::size_t>(v)],
                         g.family_.labels[static_cast<std::size_t>(li)], Dir::lower);
      if (!out) continue;
      auto it = seen.find(*out);
      if (it == seen.end()) {
        if (opts.policy == ClosurePolicy::strict)
          throw contract_error("CrystalGraph: input not closed, escaping edge from " +
                               g.vertices_[static_cast<std::size_t>(v)] + " via " +
                               label_name(g.family_.labels[static_cast<std::size_t>(li)],
                                          g.family_.mode));
        ++g.clipped_;
        continue;
      }
      g.lower_[static_cast<std::size_t>(li)][static_cast<std::size_t>(v)] = it->second;
      g.raise_[static_cast<std::size_t>(li)][static_cast<std::size_t>(it->second)] = v;
    }
    if (opts.policy == ClosurePolicy::strict) {
      // A raise escaping the set also breaks closure.
      for (int li = 0; li < L; ++li) {
        auto out = g.apply(g.vertices_[static_cast<std::size_t>(v)],
                           g.family_.labels[static_cast<std::size_t>(li)], Dir::raise);
        if (out && !seen.count(*out))
          throw contract_error("CrystalGraph: input not closed, escaping edge from " +
                               g.vertices_[static_cast<std::size_t>(v)] + " via raise " +
                               label_name(g.family_.labels[static_cast<std::size_t>(li)],
                                          g.family_.mode));
      }
    }
  }
  return g;
}

std::optional<std::string> CrystalGraph::apply(const std::string& key, Label l, Dir dir) const {
  auto& cache = cache_[{l, dir}];
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto out = family_.apply(key, l, dir);
  cache.emplace(key, out);
  return out;
}

int CrystalGraph::index_of(const std::string& key) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), key);
  if (it == vertices_.end() || *it != key) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int CrystalGraph::lower_target(int v, int label_idx) const {
  return lower_[static_cast<std::size_t>(label_idx)][static_cast<std::size_t>(v)];
}

int CrystalGraph::raise_target(int v, int label_idx) const {
  return raise_[static_cast<std::size_t>(label_idx)][static_cast<std::size_t>(v)];
}

std::vector<std::vector<int>> CrystalGraph::components() const {
  const int V = vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(V));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (std::size_t li = 0; li < lower_.size(); ++li)
    for (int v = 0; v < V; ++v)
      if (lower_[li][static_cast<std::size_t>(v)] >= 0) unite(v, lower_[li][static_cast<std::size_t>(v)]);
  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < V; ++v) comps[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(comps.size());
  for (auto& [root, members] : comps) out.push_back(std::move(members));
  return out;
}

std::vector<int> CrystalGraph::highest_weights(HighestKind kind) const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    const std::string& key = vertices_[static_cast<std::size_t>(v)];
    bool hw = false;
    switch (kind) {
      case HighestKind::gl:
        hw = is_highest(family_, key);
        break;
      case HighestKind::q:
      case HighestKind::sqrt_q:
        hw = is_queer_highest(family_, key);
        break;
    }
    if (hw) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom verification

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::gl: return "gl";
    case Axiom::gl_seminormal: return "gl_seminormal";
    case Axiom::q: return "q";
    case Axiom::q_seminormal: return "q_seminormal";
    case Axiom::sqrt_gl: return "sqrt_gl";
    case Axiom::sqrt_q: return "sqrt_q";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
  if (name == "gl") return Axiom::gl;
  if (name == "gl_seminormal") return Axiom::gl_seminormal;
  if (name == "q") return Axiom::q;
  if (name == "q_seminormal") return Axiom::q_seminormal;
  if (name == "sqrt_gl") return Axiom::sqrt_gl;
  if (name == "sqrt_q") return Axiom::sqrt_q;
  return std::nullopt;
}

namespace {

struct Verifier {
  const CrystalGraph& g;
  const OperatorFamily& fam;
  std::vector<Violation>& out;
  std::size_t max_violations;

  bool full() const { return out.size() >= max_violations; }

  void report(const std::string& axiom, std::vector<std::string> witnesses, std::string detail) {
    if (!full()) out.push_back({axiom, std::move(witnesses), std::move(detail)});
  }

  int str_len(const std::string& key, Label l, Dir dir) {
    std::string cur = key;
    for (int k = 0; k < 4096; ++k) {
      auto next = g.apply(cur, l, dir);
      if (!next) return k;
      cur = std::move(*next);
    }
    return -1;  // not finite within cap
  }

  WeightVector wt(const std::string& key) { return fam.weight(key); }

  // Raise must add the stated increment to the weight.
  bool weight_step_ok(const std::string& b, const std::string& c, int add_at, int sub_at) {
    WeightVector wb = wt(b), wc = wt(c);
    for (std::size_t k = 0; k < wb.size(); ++k) {
      int d = wc[k] - wb[k];
      int want = 0;
      if (static_cast<int>(k) == add_at) want += 1;
      if (static_cast<int>(k) == sub_at) want -= 1;
      if (d != want) return false;
    }
    return true;
  }

  void inverse_pair(const std::string& axiom, const std::string& key, Label l) {
    for (Dir dir : {Dir::raise, Dir::lower}) {
      auto c = g.apply(key, l, dir);
      if (!c) continue;
      auto back = g.apply(*c, l, opposite(dir));
      if (!back || *back != key)
        report(axiom + ".inverse", {key, *c},
               "applying " + label_name(l, fam.mode) + " then its inverse does not return");
    }
  }

  void check_gl(bool seminormal) {
    for (const std::string& key : g.vertices()) {
      if (full()) return;
      for (const Label& l : fam.labels) {
        if (l.bar) continue;
        inverse_pair("gl", key, l);
        auto c = g.apply(key, l, Dir::raise);
        if (c && !weight_step_ok(key, *c, l.index - 1, l.index))
          report("gl.weight", {key, *c}, "raise " + label_name(l, fam.mode) + " has wrong weight step");
        const int eps = str_len(key, l, Dir::raise);
        const int phi = str_len(key, l, Dir::lower);
        if (eps < 0 || phi < 0) {
          report("gl.finite", {key}, "string length exceeds cap at " + label_name(l, fam.mode));
          continue;
        }
        if (seminormal) {
          WeightVector w = wt(key);
          if (phi - eps != w[static_cast<std::size_t>(l.index - 1)] -
                              w[static_cast<std::size_t>(l.index)])
            report("gl_seminormal.string", {key},
                   "phi - eps != wt_i - wt_{i+1} at i = " + std::to_string(l.index));
        }
      }
    }
  }

  void commute_preserve(const std::string& axiom, Label bar) {
    if (fam.n < 5) return;  // the range 3 <= i <= n-1 is empty otherwise
    for (const std::string& key : g.vertices()) {
      if (full()) return;
      for (int i = 3; i < fam.n; ++i) {
        const Label li{i, false};
        for (Dir dq : {Dir::raise, Dir::lower})
          for (Dir di : {Dir::raise, Dir::lower}) {
            auto a = g.apply(key, bar, dq);
            std::optional<std::string> ab = a ? g.apply(*a, li, di) : std::nullopt;
            auto b = g.apply(key, li, di);
            std::optional<std::string> ba = b ? g.apply(*b, bar, dq) : std::nullopt;
            if (ab != ba)
              report(axiom + ".commute", {key},
                     "queer and index-" + std::to_string(i) + " operators do not commute");
          }
        auto a = g.apply(key, bar, Dir::raise);
        if (!a) a = g.apply(key, bar, Dir::lower);
        if (a) {
          if (str_len(key, li, Dir::raise) != str_len(*a, li, Dir::raise) ||
              str_len(key, li, Dir::lower) != str_len(*a, li, Dir::lower))
            report(axiom + ".preserve", {key, *a},
                   "queer operator changes eps_i or phi_i at i = " + std::to_string(i));
        }
      }
    }
  }

  void check_q() {
    if (!mode_has_queer(fam.mode)) {
      report("q", {}, "family has no queer operator");
      return;
    }
    const Label bar{1, true};
    for (const std::string& key : g.vertices()) {
      if (full()) return;
      inverse_pair("q", key, bar);
      auto c = g.apply(key, bar, Dir::raise);
      if (c && !weight_step_ok(key, *c, 0, 1))
        report("q.weight", {key, *c}, "queer raise has wrong weight step");
    }
    commute_preserve("q", bar);
  }

  void check_q_seminormal() {
    const Label bar{1, true};
    for (const std::string& key : g.vertices()) {
      if (full()) return;
      WeightVector w = wt(key);
      for (int x : w)
        if (x < 0) report("q_seminormal.weight", {key}, "weight has a negative entry");
      const int eps = str_len(key, bar, Dir::raise);
      const int phi = str_len(key, bar, Dir::lower);
      if (eps < 0 || phi < 0) {
        report("q_seminormal.finite", {key}, "queer string length exceeds cap");
        continue;
      }
      const int sum = eps + phi;
      const bool wt12_zero = w.size() >= 2 && w[0] == 0 && w[1] == 0;
      if (sum > 1)
        report("q_seminormal.string", {key}, "phi_bar + eps_bar = " + std::to_string(sum) + " > 1");
      else if ((sum == 0) != wt12_zero)
        report("q_seminormal.dichotomy", {key},
               "phi_bar + eps_bar = " + std::to_string(sum) + " with wt_1 = " +
                   std::to_string(w[0]) + ", wt_2 = " + std::to_string(w.size() > 1 ? w[1] : 0));
    }
  }

  void check_sqrt_gl() {
    for (const std::string& key : g.vertices()) {
      if (full()) return;
      for (const Label& l : fam.labels) {
        if (l.bar) continue;
        inverse_pair("sqrt_gl", key, l);
        const int eps = str_len(key, l, Dir::raise);
        const int phi = str_len(key, l, Dir::lower);
        if (eps < 0 || phi < 0) {
          report("sqrt_gl.finite", {key}, "string length exceeds cap");
          continue;
        }
        if ((eps + phi) % 2 != 0)
          report("sqrt_gl.parity", {key},
                 "eps' + phi' odd at i = " + std::to_string(l.index));
        WeightVector w = wt(key);
        if ((phi - eps) / 2 != w[static_cast<std::size_t>(l.index - 1)] -
                                   w[static_cast<std::size_t>(l.index)])
          report("sqrt_gl.halfdiff", {key},
                 "(phi' - eps')/2 != wt_i - wt_{i+1} at i = " + std::to_string(l.index));
        auto c = g.apply(key, l, Dir::raise);
        if (c) {
          const bool even = eps % 2 == 0;
          if (!weight_step_ok(key, *c, even ? l.index - 1 : -1, even ? -1 : l.index))
            report("sqrt_gl.weight", {key, *c},
                   "raise " + label_name(l, fam.mode) + " has wrong weight step");
        }
      }
    }
  }

  void check_sqrt_q() {
    if (fam.mode != CrystalMode::sqrt_q) {
      report("sqrt_q", {}, "family is not a sqrt_q family");
      return;
    }
    const Label bar{1, true};
    for (const std::string& key : g.vertices()) {
      if (full()) return;
      inverse_pair("sqrt_q", key, bar);
      const int eps = str_len(key, bar, Dir::raise);
      const int phi = str_len(key, bar, Dir::lower);
      if (eps < 0 || phi < 0) {
        report("sqrt_q.finite", {key}, "queer string length exceeds cap");
        continue;
      }
      WeightVector w = wt(key);
      const bool wt12_zero = w.size() >= 2 && w[0] == 0 && w[1] == 0;
      if (eps + phi != (wt12_zero ? 0 : 2))
        report("sqrt_q.dichotomy", {key},
               "eps'_bar + phi'_bar = " + std::to_string(eps + phi) +
                   (wt12_zero ? " with wt_1 = wt_2 = 0" : " with wt_1, wt_2 not both 0"));
      auto c = g.apply(key, bar, Dir::raise);
      if (c) {
        const bool plus = eps == 2;
        if (!weight_step_ok(key, *c, plus ? 0 : -1, plus ? -1 : 1))
          report("sqrt_q.weight", {key, *c}, "queer raise has wrong weight step");
      }
    }
    commute_preserve("sqrt_q", bar);
  }
};

}  // namespace

std::vector<Violation> CrystalGraph::verify_axioms(const std::vector<Axiom>& axioms,
                                                   std::size_t max_violations) const {
  std::vector<Violation> out;
  Verifier v{*this, family_, out, max_violations};
  for (Axiom a : axioms) {
    switch (a) {
      case Axiom::gl: v.check_gl(false); break;
      case Axiom::gl_seminormal: v.check_gl(true); break;
      case Axiom::q: v.check_q(); break;
      case Axiom::q_seminormal: v.check_q_seminormal(); break;
      case Axiom::sqrt_gl: v.check_sqrt_gl(); break;
      case Axiom::sqrt_q: v.check_sqrt_q(); break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normality by deterministic propagation

namespace {

// Canonical gl-highest word of weight mu: blocks of equal letters in
// descending order; every i+1 is matched by a preceding... pairing leaves no
// unpaired i+1, so all raises vanish.
Word gl_highest_word(const WeightVector& mu, int n) {
  std::vector<int> letters;
  for (int k = static_cast<int>(mu.size()); k >= 1; --k)
    for (int c = 0; c < mu[static_cast<std::size_t>(k - 1)]; ++c) letters.push_back(k);
  return Word(letters, n);
}

bool weakly_decreasing_nonneg(const WeightVector& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < 0) return false;
    if (k + 1 < w.size() && w[k] < w[k + 1]) return false;
  }
  return true;
}

}  // namespace

bool is_normal_component(const CrystalGraph& g, const std::vector<int>& comp,
                         CrystalGraph::HighestKind kind) {
  if (kind == CrystalGraph::HighestKind::sqrt_q)
    throw contract_error("is_normal_component: only gl and q kinds are supported");
  if (g.clipped_edges() > 0)
    throw contract_error("is_normal_component: graph has clipped edges; build it closed");
  const bool queer = kind == CrystalGraph::HighestKind::q;
  const OperatorFamily& fam = g.family();

  // Unique highest-weight vertex whose weight is a partition.
  std::vector<int> highs;
  for (int v : comp) {
    const std::string& key = g.vertices()[static_cast<std::size_t>(v)];
    if (queer ? is_queer_highest(fam, key) : is_highest(fam, key)) highs.push_back(v);
  }
  if (highs.size() != 1) return false;
  const int h = highs[0];
  WeightVector mu = g.weight(h);
  if (!weakly_decreasing_nonneg(mu)) return false;
  std::vector<int> mu_parts;
  for (int x : mu)
    if (x > 0) mu_parts.push_back(x);
  if (queer) {
    for (std::size_t k = 1; k < mu_parts.size(); ++k)
      if (mu_parts[k - 1] <= mu_parts[k]) return false;  // q-highest weights are strict
  }

  // Reference seed in B_n^{(x)m}.
  std::string seed;
  if (queer) {
    SetShiftedTableau th = t_highest(StrictPartition(mu_parts));
    seed = word_key(Word(revrow(th).letters, fam.n));
  } else {
    seed = word_key(gl_highest_word(mu, fam.n));
  }
  OperatorFamily wf = word_family(fam.n, queer);
  if (queer ? !is_queer_highest(wf, seed) : !is_highest(wf, seed))
    throw contract_error("is_normal_component: reference seed is not highest weight");
  CrystalGraph ref = CrystalGraph::build({seed}, wf,
                                         {ClosurePolicy::saturate, -1, 2000000});
  if (ref.vertex_count() != static_cast<int>(comp.size())) return false;

  // Labels to propagate, paired with their index in the reference family.
  std::vector<std::pair<int, int>> prop_labels;
  for (std::size_t li = 0; li < fam.labels.size(); ++li) {
    const Label l = fam.labels[li];
    if (!queer && l.bar) continue;
    auto it = std::find(wf.labels.begin(), wf.labels.end(), l);
    if (it == wf.labels.end()) return false;
    prop_labels.push_back({static_cast<int>(li), static_cast<int>(it - wf.labels.begin())});
  }

  // Deterministic propagation of the pairing (h, seed) along both directions.
  const int href = ref.index_of(seed);
  std::map<int, int> paired;         // comp vertex -> ref vertex
  std::vector<char> ref_used(static_cast<std::size_t>(ref.vertex_count()), 0);
  std::deque<std::pair<int, int>> queue{{h, href}};
  paired[h] = href;
  ref_used[static_cast<std::size_t>(href)] = 1;
  while (!queue.empty()) {
    auto [v, r] = queue.front();
    queue.pop_front();
    if (g.weight(v) != ref.weight(r)) return false;
    for (auto [li, ri] : prop_labels) {
      for (bool lower : {true, false}) {
        const int vc = lower ? g.lower_target(v, li) : g.raise_target(v, li);
        const int rc = lower ? ref.lower_target(r, ri) : ref.raise_target(r, ri);
        if ((vc < 0) != (rc < 0)) return false;
        if (vc < 0) continue;
        auto it = paired.find(vc);
        if (it != paired.end()) {
          if (it->second != rc) return false;
          continue;
        }
        if (ref_used[static_cast<std::size_t>(rc)]) return false;
        paired[vc] = rc;
        ref_used[static_cast<std::size_t>(rc)] = 1;
        queue.push_back({vc, rc});
      }
    }
  }
  return paired.size() == comp.size();
}

// ---------------------------------------------------------------------------
// Export

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string edge_color(Label l) {
  if (l.bar) return "blue";
  switch (l.index) {
    case 1: return "blue";
    case 2: return "red";
    case 3: return "green";
    default: return "black";
  }
}

}  // namespace

std::string CrystalGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
  for (int v = 0; v < vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << dot_escape(vertices_[static_cast<std::size_t>(v)])
       << "\"];\n";
  for (std::size_t li = 0; li < family_.labels.size(); ++li) {
    const Label l = family_.labels[li];
    for (int v = 0; v < vertex_count(); ++v) {
      const int t = lower_[li][static_cast<std::size_t>(v)];
      if (t < 0) continue;
      os << "  v" << v << " -> v" << t << " [label=\"" << label_name(l, family_.mode)
         << "\", color=" << edge_color(l) << (l.bar ? ", style=dashed" : "") << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string CrystalGraph::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = mode_name(family_.mode);
  j["n"] = family_.n;
  j["clipped_edges"] = clipped_;
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (int v = 0; v < vertex_count(); ++v) {
    nlohmann::ordered_json jv;
    jv["key"] = nlohmann::ordered_json::parse(vertices_[static_cast<std::size_t>(v)]);
    jv["weight"] = weights_[static_cast<std::size_t>(v)];
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (std::size_t li = 0; li < family_.labels.size(); ++li)
    for (int v = 0; v < vertex_count(); ++v) {
      const int t = lower_[li][static_cast<std::size_t>(v)];
      if (t < 0) continue;
      nlohmann::ordered_json je;
      je["src"] = v;
      je["label"] = label_name(family_.labels[li], family_.mode);
      je["dst"] = t;
      edges.push_back(std::move(je));
    }
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace svdt
