#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "dedekind/numeric.hpp"

namespace dedekind {

/// An element of Z[zeta_m], stored as its canonical representative modulo
/// Phi_m: an integer vector of length phi(m), index = power of zeta_m.
class CycResidue {
 public:
  static CycResidue zero(Int m);
  static CycResidue constant(Int m, const BigInt& c);
  /// zeta_m^e for any integer e.
  static CycResidue root_power(Int m, Int e);
  /// sum_i classes[i] * zeta_m^i; classes may have any length.
  static CycResidue from_classes(Int m, std::vector<BigInt> classes);
  /// Same as from_classes for machine-word inputs; avoids bignum work when the
  /// reduction fits in 64 bits.
  static CycResidue from_classes(Int m, std::vector<Int> classes);

  Int order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The value as an integer when the residue is constant.
  std::optional<BigInt> as_constant() const;
  /// Numeric image under zeta_m -> exp(2 pi i / m).
  std::complex<double> embed() const;

  CycResidue& operator+=(const CycResidue& rhs);
  CycResidue& operator-=(const CycResidue& rhs);
  CycResidue& operator*=(const CycResidue& rhs);
  CycResidue& operator*=(const BigInt& k);

  friend CycResidue operator+(CycResidue lhs, const CycResidue& rhs) { return lhs += rhs; }
  friend CycResidue operator-(CycResidue lhs, const CycResidue& rhs) { return lhs -= rhs; }
  friend CycResidue operator*(CycResidue lhs, const CycResidue& rhs) { return lhs *= rhs; }
  friend CycResidue operator*(CycResidue lhs, const BigInt& k) { return lhs *= k; }
  friend bool operator==(const CycResidue&, const CycResidue&) = default;

 private:
  CycResidue(Int m, std::vector<BigInt> coeffs) : order_(m), coeffs_(std::move(coeffs)) {}
  void check_same_order(const CycResidue& rhs) const;

  Int order_;
  std::vector<BigInt> coeffs_;
};

}  // namespace dedekind
