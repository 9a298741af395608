#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "dedekind/cyc_residue.hpp"
#include "dedekind/invpoly.hpp"
#include "dedekind/numeric.hpp"

namespace dedekind::kloosterman {

/// K(a, b, m) = sum over units x mod m of exp(2 pi i (a x + b x^{-1}) / m).
struct KloostermanParams {
  Int a;
  Int b;
  Int m;

  /// Same sum with a and b reduced into [0, m).
  KloostermanParams canonical() const;
};

/// Raised when an exact computation would exceed its configured size.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr Int kDefaultPhiCeiling = 4096;

/// Neumaier-compensated sum. K is real; the imaginary part is kept so
/// callers can inspect the cancellation.
std::complex<double> kloosterman_float(const KloostermanParams& p);

/// The same sum in Z[zeta_m]. Throws CapabilityError if phi(m) > phi_ceiling.
CycResidue kloosterman_exact(const KloostermanParams& p, Int phi_ceiling = kDefaultPhiCeiling);

enum class Prop25Case {
  not_applicable,
  c_divisible_by_4,  ///< f_b(e^{2 pi i/2k}) = (1/2) e^{2 pi i/4k} K(b/4k, b/4k, 2b)
  c_2_mod_4_k_even,  ///< f_b(e^{2 pi i/2k}) = (i/4) e^{2 pi i/4k} K(b/2k, (b/2k)(1-b), 4b)
};

std::string to_string(Prop25Case c);

struct Prop25Report {
  Int b = 0;
  Int k = 0;
  Int c = 0;
  Prop25Case identity = Prop25Case::not_applicable;
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool exact_checked = false;
  bool exact_passed = false;
  /// Same comparison with the prefactor i replaced by exp(-pi i c / 4), which
  /// differs from i by a sign when c = 2 (mod 8). Equal to the literal
  /// identity in the c = 0 (mod 4) case.
  std::complex<double> corrected_rhs;
  double corrected_error = 0.0;
  bool corrected_passed = false;
  bool exact_corrected_passed = false;
};

Prop25Case prop25_case(Int b, Int k);

/// Checks the Kloosterman identity for f_b at exp(2 pi i / 2k). The numeric
/// comparison uses tolerance 1e-7 * max(1, phi(b)); with exact = true the
/// identity is also verified in Z[zeta_{8b}] (phi(8b) <= phi_ceiling).
Prop25Report verify_prop25(const InvPoly& f, Int k, bool exact = false,
                           Int phi_ceiling = kDefaultPhiCeiling);

/// f_b(exp(2 pi i / n)) from the sparse polynomial, exponents reduced mod n.
std::complex<double> eval_at_unit_root(const InvPoly& f, Int n);

}  // namespace dedekind::kloosterman
