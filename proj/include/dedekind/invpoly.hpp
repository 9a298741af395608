#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dedekind/cyc_residue.hpp"
#include "dedekind/numeric.hpp"

namespace dedekind {

/// Sparse integer polynomial: exponent -> nonzero coefficient.
using SparseTerms = std::map<Int, Int>;

/// Renders terms as "1 + 2x^3 + x^6" in the given variable.
std::string format_sparse(const SparseTerms& terms, const std::string& var = "x");

/// The inversion polynomial f_b(x) = sum over units a of x^{inv(a, b)}.
class InvPoly {
 public:
  /// Wraps an existing term table; no invariant is checked (see structural_check).
  InvPoly(Int b, SparseTerms terms);

  Int b() const { return b_; }
  Int degree() const { return degree_; }
  Int phi() const { return phi_; }
  const SparseTerms& terms() const { return terms_; }
  Int coeff(Int exponent) const;

  /// Coefficients 0..degree as a dense vector.
  std::vector<Int> dense() const;

  friend bool operator==(const InvPoly&, const InvPoly&) = default;

 private:
  Int b_;
  Int phi_;
  Int degree_;
  SparseTerms terms_;
};

/// Requires b >= 2.
InvPoly build_invpoly(Int b);

/// Exact f_b(zeta_m) in Z[zeta_m].
CycResidue eval_at_root(const InvPoly& p, Int m);

/// True iff Phi_m divides p. Exact; a floating-point evaluation only
/// short-circuits values that are provably nonzero.
bool vanishes_at_root(const InvPoly& p, Int m);

/// Largest t <= cap with Phi_m^t | f_b, via successive derivatives at zeta_m.
int root_multiplicity(const InvPoly& p, Int m, int cap = 4);

struct RootEntry {
  Int m;
  int multiplicity;
  bool cap_reached;

  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

struct RootReport {
  Int b = 0;
  Int m_max = 0;
  int multiplicity_cap = 0;
  std::vector<RootEntry> found;        ///< ascending m
  std::vector<RootEntry> explained;    ///< m in {2k, 6k : k | b}
  std::vector<RootEntry> unexplained;  ///< everything else
  /// Degree left after removing every found Phi_m^multiplicity.
  Int residual_degree = 0;
};

/// True iff m = 2k or m = 6k for some divisor k of b.
bool is_explained_order(Int b, Int m);

/// Tests every order m in [2, m_max].
RootReport cyclotomic_root_scan(const InvPoly& p, Int m_max, int multiplicity_cap = 4);

/// f_b(-1) by case: phi(b) for odd squares and b = 2 (mod 4), otherwise 0.
Int expected_value_at_minus_one(Int b);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Degree, end coefficients, palindrome, coefficient sum, mod-3 support,
/// f_b(1) and the f_b(-1) case table with its even-exponent corollary.
std::vector<CheckResult> structural_check(const InvPoly& p);

struct Deflated {
  SparseTerms terms;  ///< g with f_b(x) = g(x^3)
};

struct DeflateRefusal {
  Int witness;  ///< an exponent not divisible by 3
};

std::variant<Deflated, DeflateRefusal> triple_deflate(const InvPoly& p);

}  // namespace dedekind
