#pragma once

#include <optional>

#include "svdt/families.hpp"
#include "svdt/polynomial.hpp"
#include "svdt/word.hpp"

namespace svdt {

// Tableau generating functions, all with the K-theory bookkeeping parameter
// fixed at 1: the classical bases P and Q are exact (homogeneous of degree
// |shape|), the set-valued ones are truncations at total degree D.
enum class BasisKind { P, Q, G, GP, GQ, Sigma };
std::string basis_kind_name(BasisKind k);
std::optional<BasisKind> basis_kind_from_name(const std::string& name);

// Weight generating polynomial of any finite weighted set.
TruncPoly character(const std::vector<WeightVector>& weights, int n, int max_degree);

TruncPoly basis_poly(BasisKind kind, const StrictPartition& shape, int n, int max_degree);

// Monomial symmetric polynomial of a partition (weakly decreasing positive
// parts), in n variables.
TruncPoly monomial_sym(const std::vector<int>& mu, int n, int max_degree);

// Symmetric Grothendieck polynomial of an arbitrary partition, via the
// unshifted semistandard set-valued enumerator (basis_poly(G, ...) is the
// strict-shape front end).
TruncPoly grothendieck_poly(const std::vector<int>& nu, int n, int max_degree);

// The substitution x1 -> t, x2 -> -t/(1+t), expanded through total degree D
// in (t, x3, ..., xn): the input passes when no term with positive t-degree
// survives.  Requires a symmetric input.
struct QCancellation {
  bool pass = false;
  Expo witness;         // exponent in (t, x3, ..., xn) when failing
  std::string witness_text;
};
QCancellation q_cancellation_check(const TruncPoly& f);

// Expansion of a symmetric polynomial over the GP basis by peeling graded
// leading monomials (GP_nu opens with the Schur P-polynomial of nu, which is
// monomial-unitriangular): degree-d leading terms on strict partitions are
// peeled with GP_nu, anything on non-strict partitions moves to the
// residual.  Requires n >= D so no strict partition of size <= D is lost.
struct GPExpansion {
  std::map<StrictPartition, Rat> coeffs;
  TruncPoly residual;
  GPExpansion() : residual(0, 0) {}
};
GPExpansion gp_expand(const TruncPoly& f);

// Coefficientwise comparison of the set-valued decomposition tableau
// generating function with GP, through degree D.
struct IkedaResult {
  bool pass = false;
  std::optional<Expo> first_diff;
  Int sigma_coeff;
  Int gp_coeff;
};
IkedaResult check_ikeda(const StrictPartition& shape, int n, int max_degree);

// Product expansion in the G or GP basis; G expands over all partitions
// (never leaving a residual), GP over strict partitions via gp_expand.
enum class ProductBasis { G, GP };
struct ProductExpansion {
  std::map<std::vector<int>, Rat> coeffs;
  TruncPoly residual;
  ProductExpansion() : residual(0, 0) {}
};
ProductExpansion product_expand(ProductBasis kind, const StrictPartition& lhs,
                                const StrictPartition& rhs, int n, int max_degree);

}  // namespace svdt
