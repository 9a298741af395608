#include "dedekind/invpoly.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dedekind/arith.hpp"
#include "dedekind/inversion.hpp"

namespace dedekind {

std::string format_sparse(const SparseTerms& terms, const std::string& var) {
  if (terms.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) {
      out << (c < 0 ? " - " : " + ");
    } else if (c < 0) {
      out << "-";
    }
    first = false;
    const Int mag = c < 0 ? -c : c;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) {
      out << mag;
    }
    out << var;
    if (e != 1) {
      out << '^' << e;
    }
  }
  return out.str();
}

InvPoly::InvPoly(Int b, SparseTerms terms)
    : b_(b),
      phi_(arith::euler_phi(b)),
      degree_(terms.empty() ? 0 : terms.rbegin()->first),
      terms_(std::move(terms)) {}

Int InvPoly::coeff(Int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<Int> InvPoly::dense() const {
  std::vector<Int> out(static_cast<std::size_t>(degree_ + 1), 0);
  for (const auto& [e, c] : terms_) {
    out[static_cast<std::size_t>(e)] = c;
  }
  return out;
}

InvPoly build_invpoly(Int b) {
  if (b < 2) {
    throw std::invalid_argument("build_invpoly: b must be at least 2");
  }
  SparseTerms terms;
  for (const auto& u : inversion::unit_inversions(b)) {
    ++terms[u.inv];
  }
  return InvPoly(b, std::move(terms));
}

namespace {

// Accepts any range of (exponent, coefficient) pairs with Int or BigInt
// coefficients.
template <class Terms>
CycResidue residue_of(const Terms& terms, Int m) {
  using Coef = std::decay_t<decltype(terms.begin()->second)>;
  if constexpr (std::is_same_v<Coef, Int>) {
    std::vector<Int> classes(static_cast<std::size_t>(m), 0);
    bool overflow = false;
    for (const auto& [e, c] : terms) {
      auto& slot = classes[static_cast<std::size_t>(arith::mod(e, m))];
      overflow |= __builtin_add_overflow(slot, c, &slot);
    }
    if (!overflow) {
      return CycResidue::from_classes(m, std::move(classes));
    }
  }
  std::vector<BigInt> classes(static_cast<std::size_t>(m));
  for (const auto& [e, c] : terms) {
    classes[static_cast<std::size_t>(arith::mod(e, m))] += c;
  }
  return CycResidue::from_classes(m, std::move(classes));
}

// Floating-point rounding in this sum is below 1e-12 of the coefficient mass
// for any realistic term count, so a magnitude above 1e-9 of the mass proves
// the exact value is nonzero. Anything smaller is settled exactly.
template <class Terms>
bool vanishes(const Terms& terms, Int m) {
  std::complex<double> sum = 0.0;
  double mass = 0.0;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  for (const auto& [e, c] : terms) {
    const double weight = static_cast<double>(c);
    sum += weight * std::polar(1.0, step * static_cast<double>(arith::mod(e, m)));
    mass += std::abs(weight);
  }
  if (std::abs(sum) > 1e-9 * mass) {
    return false;
  }
  return residue_of(terms, m).is_zero();
}

std::vector<std::pair<Int, BigInt>> derivative(const std::vector<std::pair<Int, BigInt>>& terms) {
  std::vector<std::pair<Int, BigInt>> out;
  out.reserve(terms.size());
  for (const auto& [e, c] : terms) {
    if (e > 0) {
      out.emplace_back(e - 1, c * e);
    }
  }
  return out;
}

}  // namespace

CycResidue eval_at_root(const InvPoly& p, Int m) {
  if (m < 1) {
    throw std::invalid_argument("eval_at_root: order must be positive");
  }
  return residue_of(p.terms(), m);
}

bool vanishes_at_root(const InvPoly& p, Int m) {
  if (m < 1) {
    throw std::invalid_argument("vanishes_at_root: order must be positive");
  }
  return vanishes(p.terms(), m);
}

int root_multiplicity(const InvPoly& p, Int m, int cap) {
  if (m < 1) {
    throw std::invalid_argument("root_multiplicity: order must be positive");
  }
  if (cap < 1 || !vanishes(p.terms(), m)) {
    return 0;
  }
  std::vector<std::pair<Int, BigInt>> current;
  for (const auto& [e, c] : p.terms()) {
    current.emplace_back(e, BigInt(c));
  }
  int t = 1;
  while (t < cap) {
    current = derivative(current);
    if (!vanishes(current, m)) {
      break;
    }
    ++t;
  }
  return t;
}

bool is_explained_order(Int b, Int m) {
  if (m % 2 != 0) {
    return false;
  }
  const Int half = m / 2;
  if (b % half == 0) {
    return true;
  }
  return half % 3 == 0 && b % (half / 3) == 0;
}

RootReport cyclotomic_root_scan(const InvPoly& p, Int m_max, int multiplicity_cap) {
  if (m_max < 2) {
    throw std::invalid_argument("cyclotomic_root_scan: m_max must be at least 2");
  }
  RootReport report;
  report.b = p.b();
  report.m_max = m_max;
  report.multiplicity_cap = multiplicity_cap;
  report.residual_degree = p.degree();
  for (Int m = 2; m <= m_max; ++m) {
    if (!vanishes(p.terms(), m)) {
      continue;
    }
    const int mult = root_multiplicity(p, m, multiplicity_cap);
    const RootEntry entry{m, mult, mult >= multiplicity_cap};
    report.found.push_back(entry);
    (is_explained_order(p.b(), m) ? report.explained : report.unexplained).push_back(entry);
    report.residual_degree -= mult * arith::euler_phi(m);
  }
  return report;
}

Int expected_value_at_minus_one(Int b) {
  const bool odd_square = b % 2 == 1 && arith::is_square(b);
  return (odd_square || b % 4 == 2) ? arith::euler_phi(b) : 0;
}

std::vector<CheckResult> structural_check(const InvPoly& p) {
  std::vector<CheckResult> out;
  const Int b = p.b();
  const auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };

  const Int want_degree = (b - 1) * (b - 2) / 2;
  add("degree", p.degree() == want_degree,
      std::to_string(p.degree()) + " vs " + std::to_string(want_degree));

  add("end-coefficients", p.coeff(0) == 1 && p.coeff(p.degree()) == 1,
      std::to_string(p.coeff(0)) + ", " + std::to_string(p.coeff(p.degree())));

  bool palindrome = true;
  for (const auto& [e, c] : p.terms()) {
    if (p.coeff(p.degree() - e) != c) {
      palindrome = false;
      break;
    }
  }
  add("palindrome", palindrome, palindrome ? "" : "coefficients not symmetric");

  Int sum = 0;
  for (const auto& [e, c] : p.terms()) {
    sum += c;
  }
  add("coefficient-sum", sum == p.phi(),
      std::to_string(sum) + " vs phi = " + std::to_string(p.phi()));

  if (b % 3 != 0) {
    Int witness = -1;
    for (const auto& [e, c] : p.terms()) {
      if (e % 3 != 0) {
        witness = e;
        break;
      }
    }
    add("exponents-divisible-by-3", witness < 0,
        witness < 0 ? "" : "exponent " + std::to_string(witness));
  } else {
    add("exponents-divisible-by-3", true, "not applicable (3 | b)");
  }

  const auto at_one = eval_at_root(p, 1).as_constant();
  add("value-at-1", at_one && *at_one == p.phi(), at_one ? to_string(*at_one) : "?");

  const auto at_minus_one = eval_at_root(p, 2).as_constant();
  const Int want = expected_value_at_minus_one(b);
  add("value-at-minus-1", at_minus_one && *at_minus_one == want,
      (at_minus_one ? to_string(*at_minus_one) : "?") + " vs " + std::to_string(want));

  if (want != 0) {
    Int witness = -1;
    for (const auto& [e, c] : p.terms()) {
      if (e % 2 != 0) {
        witness = e;
        break;
      }
    }
    add("even-exponents", witness < 0, witness < 0 ? "" : "exponent " + std::to_string(witness));
  } else {
    add("even-exponents", true, "not applicable");
  }
  return out;
}

std::variant<Deflated, DeflateRefusal> triple_deflate(const InvPoly& p) {
  Deflated g;
  for (const auto& [e, c] : p.terms()) {
    if (e % 3 != 0) {
      return DeflateRefusal{e};
    }
    g.terms.emplace(e / 3, c);
  }
  return g;
}

}  // namespace dedekind
