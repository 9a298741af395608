#pragma once

#include <vector>

#include "dedekind/numeric.hpp"

namespace dedekind::arith {

/// The m-th cyclotomic polynomial; coeffs()[i] is the coefficient of x^i.
class CycPoly {
 public:
  CycPoly(Int order, std::vector<BigInt> coeffs);

  Int order() const { return order_; }
  Int degree() const { return static_cast<Int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Machine-word copy of the coefficients; empty when one does not fit.
  const std::vector<Int>& narrow_coeffs() const { return narrow_; }

 private:
  Int order_;
  std::vector<BigInt> coeffs_;
  std::vector<Int> narrow_;
};

/// Builds Phi_m as the truncated power series prod_{d|m} (1 - x^d)^{mu(m/d)}.
CycPoly cyclotomic_poly(Int m);

/// Process-wide memoized Phi_m. Concurrent readers are safe; the returned
/// reference stays valid for the lifetime of the process.
const CycPoly& cyclotomic_cached(Int m);

}  // namespace dedekind::arith
