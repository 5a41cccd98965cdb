#include "svdt/symfunc.hpp"

#include <algorithm>
#include <cassert>

namespace svdt {

std::string basis_kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::P: return "P";
    case BasisKind::Q: return "Q";
    case BasisKind::G: return "G";
    case BasisKind::GP: return "GP";
    case BasisKind::GQ: return "GQ";
    case BasisKind::Sigma: return "Sigma";
  }
  return "?";
}

std::optional<BasisKind> basis_kind_from_name(const std::string& name) {
  if (name == "P" || name == "p") return BasisKind::P;
  if (name == "Q" || name == "q") return BasisKind::Q;
  if (name == "G" || name == "g") return BasisKind::G;
  if (name == "GP" || name == "gp") return BasisKind::GP;
  if (name == "GQ" || name == "gq") return BasisKind::GQ;
  if (name == "Sigma" || name == "sigma") return BasisKind::Sigma;
  return std::nullopt;
}

TruncPoly character(const std::vector<WeightVector>& weights, int n, int max_degree) {
  TruncPoly out(n, max_degree);
  for (const auto& w : weights) {
    if (static_cast<int>(w.size()) != n) throw contract_error("character: weight length != n");
    out.add_term(w, 1);
  }
  return out;
}

namespace {

// Semistandard set-valued tableaux of unshifted partition shape: weakly
// increasing rows, strictly increasing columns, every cell a nonempty subset
// of [n].  Adjacent min/max conditions are equivalent to requiring all
// distributions semistandard, so the generating polynomial accumulates
// directly.
struct UnshiftedEnumerator {
  std::vector<int> nu;  // weakly decreasing positive parts
  int n;
  int max_degree;
  TruncPoly* acc;
  std::vector<std::vector<std::vector<int>>> cells;

  void run() {
    cells.clear();
    for (int len : nu) cells.emplace_back(static_cast<std::size_t>(len));
    int total = std::accumulate(nu.begin(), nu.end(), 0);
    if (total > max_degree) return;
    fill(0, 0, max_degree - total);
  }

  void fill(std::size_t r, std::size_t c, int extra) {
    if (r == cells.size()) {
      Expo wt(static_cast<std::size_t>(n), 0);
      for (const auto& row : cells)
        for (const auto& cell : row)
          for (int v : cell) ++wt[static_cast<std::size_t>(v - 1)];
      acc->add_term(wt, 1);
      return;
    }
    if (c == cells[r].size()) {
      fill(r + 1, 0, extra);
      return;
    }
    const int lo_row = c > 0 ? cells[r][c - 1].back() : 1;              // weakly right
    const int lo_col = r > 0 && c < cells[r - 1].size() ? cells[r - 1][c].back() + 1 : 1;
    const int lo = std::max(lo_row, lo_col);
    std::vector<int>& cell = cells[r][c];
    grow(r, c, lo, extra);
    cell.clear();
  }

  void grow(std::size_t r, std::size_t c, int from, int extra) {
    std::vector<int>& cell = cells[r][c];
    for (int v = from; v <= n; ++v) {
      cell.push_back(v);
      fill(r, c + 1, extra - static_cast<int>(cell.size()) + 1);
      if (extra >= static_cast<int>(cell.size())) grow(r, c, v + 1, extra);
      cell.pop_back();
    }
  }
};

TruncPoly g_poly(const std::vector<int>& nu, int n, int max_degree) {
  TruncPoly out(n, max_degree);
  UnshiftedEnumerator e{nu, n, max_degree, &out, {}};
  e.run();
  return out;
}

TruncPoly family_poly(FamilyId fam, const StrictPartition& shape, int n, int max_degree) {
  TruncPoly out(n, max_degree);
  const int bound = family_single_valued(fam) ? shape.size() : max_degree;
  for_each_member(fam, shape, n, bound,
                  [&](const SetShiftedTableau& t) { out.add_term(t.weight(n), 1); });
  return out;
}

}  // namespace

TruncPoly basis_poly(BasisKind kind, const StrictPartition& shape, int n, int max_degree) {
  if (max_degree < shape.size())
    throw contract_error("basis_poly: max_degree must be at least |shape|");
  switch (kind) {
    case BasisKind::P: return family_poly(FamilyId::ShTab, shape, n, max_degree);
    case BasisKind::Q: return family_poly(FamilyId::ShTabPlus, shape, n, max_degree);
    case BasisKind::GP: return family_poly(FamilyId::SetShTab, shape, n, max_degree);
    case BasisKind::GQ: return family_poly(FamilyId::SetShTabPlus, shape, n, max_degree);
    case BasisKind::Sigma: return family_poly(FamilyId::SetDecTab, shape, n, max_degree);
    case BasisKind::G:
      if (shape.length() > n) return TruncPoly(n, max_degree);
      return g_poly(shape.parts(), n, max_degree);
  }
  throw contract_error("basis_poly: unknown kind");
}

TruncPoly grothendieck_poly(const std::vector<int>& nu, int n, int max_degree) {
  for (std::size_t k = 0; k < nu.size(); ++k)
    if (nu[k] <= 0 || (k + 1 < nu.size() && nu[k] < nu[k + 1]))
      throw contract_error("grothendieck_poly: not a partition");
  if (static_cast<int>(nu.size()) > n) return TruncPoly(n, max_degree);
  return g_poly(nu, n, max_degree);
}

TruncPoly monomial_sym(const std::vector<int>& mu, int n, int max_degree) {
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] <= 0 || (k + 1 < mu.size() && mu[k] < mu[k + 1]))
      throw contract_error("monomial_sym: not a partition");
  }
  TruncPoly out(n, max_degree);
  if (static_cast<int>(mu.size()) > n) return out;
  Expo e(static_cast<std::size_t>(n), 0);
  std::copy(mu.begin(), mu.end(), e.begin());
  std::sort(e.begin(), e.end());
  do {
    out.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

QCancellation q_cancellation_check(const TruncPoly& f) {
  if (f.vars() < 2) throw contract_error("q_cancellation_check: needs at least two variables");
  if (!f.is_symmetric()) throw contract_error("q_cancellation_check: input must be symmetric");
  const int n = f.vars();
  const int D = f.max_degree();
  // Output variables: position 0 is t, positions 1..n-3 are x3..xn.
  TruncPoly out(n - 1, D);
  for (const auto& [e, c] : f.terms()) {
    const int a = e[0];
    const int b = e[1];
    Expo rest(static_cast<std::size_t>(n - 1), 0);
    for (int k = 2; k < n; ++k) rest[static_cast<std::size_t>(k - 1)] = e[static_cast<std::size_t>(k)];
    const int rest_deg = expo_degree(rest) - rest[0];
    if (b == 0) {
      rest[0] = a;
      out.add_term(rest, c);
      continue;
    }
    // x2^b -> (-t/(1+t))^b = sum_k (-1)^(b+k) C(b+k-1, k) t^(b+k).
    Int binom = 1;  // C(b-1, 0)
    for (int k = 0; a + b + k + rest_deg <= D; ++k) {
      rest[0] = a + b + k;
      const Int sign = (b + k) % 2 == 0 ? 1 : -1;
      out.add_term(rest, sign * binom * c);
      binom = binom * (b + k) / (k + 1);
    }
  }
  QCancellation res;
  res.pass = true;
  for (const auto& [e, c] : out.terms()) {
    if (e[0] == 0) continue;
    res.pass = false;
    res.witness = e;
    std::string txt = "t^" + std::to_string(e[0]);
    for (int k = 1; k < n - 1; ++k)
      if (e[static_cast<std::size_t>(k)] > 0)
        txt += " x" + std::to_string(k + 2) + "^" + std::to_string(e[static_cast<std::size_t>(k)]);
    res.witness_text = txt;
    break;
  }
  return res;
}

namespace {

// Nonzero prefix of a sorted-descending exponent; throws when the exponent is
// not sorted (the leading monomial of a symmetric polynomial always is).
std::vector<int> leading_partition(const Expo& e) {
  std::vector<int> parts;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k + 1 < e.size() && e[k] < e[k + 1])
      throw contract_error("expansion: leading exponent is not a partition (input not symmetric?)");
    if (e[k] > 0) parts.push_back(e[k]);
  }
  return parts;
}

bool strictly_decreasing(const std::vector<int>& parts) {
  for (std::size_t k = 1; k < parts.size(); ++k)
    if (parts[k - 1] <= parts[k]) return false;
  return true;
}

}  // namespace

GPExpansion gp_expand(const TruncPoly& f) {
  const int n = f.vars();
  const int D = f.max_degree();
  if (n < D) throw contract_error("gp_expand: requires n >= max_degree");
  if (!f.is_symmetric()) throw contract_error("gp_expand: input must be symmetric");
  GPExpansion out;
  out.residual = TruncPoly(n, D);
  std::map<std::vector<int>, TruncPoly> gp_cache;
  TruncPoly rem = f;
  for (int d = std::max(0, f.min_degree()); d <= D; ++d) {
    for (;;) {
      TruncPoly h = rem.homogeneous_part(d);
      if (h.is_zero()) break;
      const auto& [lead, c] = *h.terms().begin();
      std::vector<int> parts = leading_partition(lead);
      if (strictly_decreasing(parts)) {
        StrictPartition nu(parts);
        auto it = gp_cache.find(parts);
        if (it == gp_cache.end())
          it = gp_cache.emplace(parts, basis_poly(BasisKind::GP, nu, n, D)).first;
        rem -= it->second.scaled(c);
        out.coeffs[nu] += Rat(c);
        if (out.coeffs[nu] == 0) out.coeffs.erase(nu);
      } else {
        TruncPoly m = monomial_sym(parts, n, D).scaled(c);
        out.residual += m;
        rem -= m;
      }
    }
  }
  return out;
}

IkedaResult check_ikeda(const StrictPartition& shape, int n, int max_degree) {
  const TruncPoly sigma = basis_poly(BasisKind::Sigma, shape, n, max_degree);
  const TruncPoly gp = basis_poly(BasisKind::GP, shape, n, max_degree);
  IkedaResult res;
  if (sigma == gp) {
    res.pass = true;
    return res;
  }
  TruncPoly diff = sigma - gp;
  const auto& [e, c] = *diff.terms().begin();
  res.first_diff = e;
  res.sigma_coeff = sigma.coeff(e);
  res.gp_coeff = gp.coeff(e);
  return res;
}

ProductExpansion product_expand(ProductBasis kind, const StrictPartition& lhs,
                                const StrictPartition& rhs, int n, int max_degree) {
  const int D = max_degree;
  if (n < D) throw contract_error("product_expand: requires n >= max_degree");
  const BasisKind bk = kind == ProductBasis::G ? BasisKind::G : BasisKind::GP;
  const TruncPoly prod = basis_poly(bk, lhs, n, std::max(D, lhs.size())) *
                         basis_poly(bk, rhs, n, std::max(D, rhs.size()));
  ProductExpansion out;
  out.residual = TruncPoly(n, D);
  if (kind == ProductBasis::GP) {
    GPExpansion gx = gp_expand(prod);
    for (const auto& [nu, c] : gx.coeffs) out.coeffs[nu.parts()] = c;
    out.residual = gx.residual;
    return out;
  }
  // Peel over the G basis: G_nu opens with the Schur polynomial s_nu, whose
  // lex-leading monomial is x^nu, so every partition can be peeled and no
  // residual arises.
  std::map<std::vector<int>, TruncPoly> g_cache;
  TruncPoly rem = prod;
  for (int d = std::max(0, rem.min_degree()); d <= D; ++d) {
    for (;;) {
      TruncPoly h = rem.homogeneous_part(d);
      if (h.is_zero()) break;
      const auto& [lead, c] = *h.terms().begin();
      std::vector<int> parts = leading_partition(lead);
      auto it = g_cache.find(parts);
      if (it == g_cache.end()) it = g_cache.emplace(parts, g_poly(parts, n, D)).first;
      rem -= it->second.scaled(c);
      out.coeffs[parts] += Rat(c);
      if (out.coeffs[parts] == 0) out.coeffs.erase(parts);
    }
  }
  return out;
}

}  // namespace svdt
