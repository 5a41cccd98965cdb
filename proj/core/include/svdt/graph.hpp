#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svdt/op_family.hpp"

namespace svdt {

// How build() treats operator images that leave the seed set: reject the
// input (strict), chase them to closure (saturate), or drop the edges
// (saturation with a degree cap does this implicitly).
enum class ClosurePolicy { strict, saturate };

struct BuildOptions {
  ClosurePolicy policy = ClosurePolicy::strict;
  int max_degree = -1;    // with saturate: elements above this are not added
  long max_vertices = -1; // hard cap; exceeding it is an error
};

// A named axiom check; see verify_axioms.
enum class Axiom { gl, gl_seminormal, q, q_seminormal, sqrt_gl, sqrt_q };
std::string axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);

// A reproducible failure: re-running the named check on the witness keys
// fails again.
struct Violation {
  std::string axiom;
  std::vector<std::string> witnesses;
  std::string detail;
};

// A finite crystal graph over canonically sorted serialized elements, with
// one lowering successor per (vertex, label) and the family kept on hand so
// checks can re-apply operators (memoized).
class CrystalGraph {
 public:
  static CrystalGraph build(std::vector<std::string> seeds, OperatorFamily fam,
                            BuildOptions opts = {});

  const OperatorFamily& family() const { return family_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const WeightVector& weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }
  int index_of(const std::string& key) const;  // -1 when absent
  int lower_target(int v, int label_idx) const;  // -1 when none (or clipped)
  int raise_target(int v, int label_idx) const;
  long clipped_edges() const { return clipped_; }

  // Memoized operator application straight on keys (targets need not be
  // graph vertices).
  std::optional<std::string> apply(const std::string& key, Label l, Dir dir) const;

  // Weak components, each a sorted vertex-index list, ordered by least vertex.
  std::vector<std::vector<int>> components() const;

  enum class HighestKind { gl, q, sqrt_q };
  std::vector<int> highest_weights(HighestKind kind) const;

  // Runs the requested axiom checks on every vertex, applying operators
  // directly (the vertex set need not be closed).  Empty result = all hold.
  std::vector<Violation> verify_axioms(const std::vector<Axiom>& axioms,
                                       std::size_t max_violations = 100) const;

  std::string to_dot() const;
  std::string to_json() const;

 private:
  OperatorFamily family_;
  BuildOptions options_;
  std::vector<std::string> vertices_;  // sorted
  std::vector<WeightVector> weights_;
  std::vector<std::vector<int>> lower_;  // [label][vertex] -> target or -1
  std::vector<std::vector<int>> raise_;
  long clipped_ = 0;
  mutable std::map<std::pair<Label, Dir>, std::map<std::string, std::optional<std::string>>>
      cache_;
};

// Deterministic-propagation normality test for a weak component of a closed
// gl- or q-graph: the component must have a unique highest-weight vertex
// whose weight is a partition (strict for q), and lowering/raising
// propagation from it must match the component of B_n^{(x)m} generated from
// a highest-weight word of that weight, vertex for vertex.
bool is_normal_component(const CrystalGraph& g, const std::vector<int>& comp,
                         CrystalGraph::HighestKind kind);

}  // namespace svdt
