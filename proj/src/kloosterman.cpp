#include "dedekind/kloosterman.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "dedekind/arith.hpp"

namespace dedekind::kloosterman {

namespace {

class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

std::complex<double> unit_root(Int r, Int n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(arith::mod(r, n)) /
                             static_cast<double>(n));
}

Int mul_mod(Int x, Int y, Int m) {
  return static_cast<Int>(static_cast<__int128>(arith::mod(x, m)) * arith::mod(y, m) % m);
}

// Exponent classes (a x + b x^{-1}) mod m over the units x mod m.
template <class Visit>
void for_each_exponent(const KloostermanParams& p, Visit&& visit) {
  const auto q = p.canonical();
  for (Int x = 1; x < q.m; ++x) {
    if (std::gcd(x, q.m) != 1) {
      continue;
    }
    const Int x_inv = arith::mod_inverse(x, q.m);
    visit((mul_mod(q.a, x, q.m) + mul_mod(q.b, x_inv, q.m)) % q.m);
  }
}

}  // namespace

KloostermanParams KloostermanParams::canonical() const {
  if (m < 2) {
    throw std::invalid_argument("Kloosterman sum: modulus must be at least 2");
  }
  return {arith::mod(a, m), arith::mod(b, m), m};
}

std::complex<double> kloosterman_float(const KloostermanParams& p) {
  NeumaierSum re;
  NeumaierSum im;
  for_each_exponent(p, [&](Int r) {
    const auto z = unit_root(r, p.m);
    re.add(z.real());
    im.add(z.imag());
  });
  return {re.value(), im.value()};
}

CycResidue kloosterman_exact(const KloostermanParams& p, Int phi_ceiling) {
  p.canonical();
  if (arith::euler_phi(p.m) > phi_ceiling) {
    throw CapabilityError("kloosterman_exact: phi(" + std::to_string(p.m) +
                          ") exceeds ceiling " + std::to_string(phi_ceiling));
  }
  std::vector<Int> classes(static_cast<std::size_t>(p.m), 0);
  for_each_exponent(p, [&](Int r) { ++classes[static_cast<std::size_t>(r)]; });
  return CycResidue::from_classes(p.m, std::move(classes));
}

std::string to_string(Prop25Case c) {
  switch (c) {
    case Prop25Case::c_divisible_by_4:
      return "c=0 mod 4";
    case Prop25Case::c_2_mod_4_k_even:
      return "c=2 mod 4, k even";
    case Prop25Case::not_applicable:
      break;
  }
  return "not applicable";
}

Prop25Case prop25_case(Int b, Int k) {
  if (k < 1 || b % k != 0) {
    throw std::invalid_argument("prop25_case: k must divide b");
  }
  const Int c = b / k;
  if (c % 4 == 0) {
    return Prop25Case::c_divisible_by_4;
  }
  if (c % 4 == 2 && k % 2 == 0) {
    return Prop25Case::c_2_mod_4_k_even;
  }
  return Prop25Case::not_applicable;
}

std::complex<double> eval_at_unit_root(const InvPoly& f, Int n) {
  NeumaierSum re;
  NeumaierSum im;
  for (const auto& [e, c] : f.terms()) {
    const auto z = unit_root(e, n) * static_cast<double>(c);
    re.add(z.real());
    im.add(z.imag());
  }
  return {re.value(), im.value()};
}

Prop25Report verify_prop25(const InvPoly& f, Int k, bool exact, Int phi_ceiling) {
  Prop25Report rep;
  rep.b = f.b();
  rep.k = k;
  rep.identity = prop25_case(rep.b, k);
  rep.c = rep.b / k;
  if (rep.identity == Prop25Case::not_applicable) {
    return rep;
  }
  const Int b = rep.b;
  const std::complex<double> i_unit{0.0, 1.0};

  rep.lhs = eval_at_unit_root(f, 2 * k);
  if (rep.identity == Prop25Case::c_divisible_by_4) {
    const Int alpha = b / (4 * k);
    rep.rhs = 0.5 * unit_root(1, 4 * k) * kloosterman_float({alpha, alpha, 2 * b});
    rep.corrected_rhs = rep.rhs;
  } else {
    const Int beta = b / (2 * k);
    const auto sum = kloosterman_float({beta, mul_mod(beta, 1 - b, 4 * b), 4 * b});
    rep.rhs = 0.25 * i_unit * unit_root(1, 4 * k) * sum;
    rep.corrected_rhs = 0.25 * unit_root(-rep.c, 8) * unit_root(1, 4 * k) * sum;
  }
  rep.abs_error = std::abs(rep.lhs - rep.rhs);
  rep.corrected_error = std::abs(rep.lhs - rep.corrected_rhs);
  rep.tolerance = 1e-7 * static_cast<double>(std::max<Int>(1, f.phi()));
  rep.passed = rep.abs_error <= rep.tolerance;
  rep.corrected_passed = rep.corrected_error <= rep.tolerance;

  if (exact) {
    // Everything lives in Z[zeta_N], N = 8b: zeta_2k = zeta_N^{4b/k},
    // zeta_4k = zeta_N^{2b/k}, zeta_2b = zeta_N^4, zeta_4b = zeta_N^2, i = zeta_N^{2b},
    // exp(-pi i c / 4) = zeta_N^{-bc}.
    const Int n = 8 * b;
    if (arith::euler_phi(n) > phi_ceiling) {
      throw CapabilityError("verify_prop25: phi(8b) exceeds ceiling " +
                            std::to_string(phi_ceiling));
    }
    // scale * f_b(zeta_2k) - zeta_N^shift * sum_x zeta_N^{step * r(x)}
    const auto residual_is_zero = [&](Int scale, Int shift, Int step, const KloostermanParams& kp) {
      std::vector<Int> classes(static_cast<std::size_t>(n), 0);
      const auto slot = [&](Int e) -> Int& { return classes[static_cast<std::size_t>(arith::mod(e, n))]; };
      for (const auto& [e, c] : f.terms()) {
        slot((e % (2 * k)) * (4 * b / k)) += scale * c;
      }
      for_each_exponent(kp, [&](Int r) { slot(shift + step * r) -= 1; });
      return CycResidue::from_classes(n, std::move(classes)).is_zero();
    };
    if (rep.identity == Prop25Case::c_divisible_by_4) {
      const Int alpha = b / (4 * k);
      rep.exact_passed = residual_is_zero(2, 2 * b / k, 4, {alpha, alpha, 2 * b});
      rep.exact_corrected_passed = rep.exact_passed;
    } else {
      const Int beta = b / (2 * k);
      const KloostermanParams kp{beta, mul_mod(beta, 1 - b, 4 * b), 4 * b};
      rep.exact_passed = residual_is_zero(4, 2 * b + 2 * b / k, 2, kp);
      rep.exact_corrected_passed = residual_is_zero(4, 2 * b / k - b * rep.c, 2, kp);
    }
    rep.exact_checked = true;
    rep.passed = rep.passed && rep.exact_passed;
    rep.corrected_passed = rep.corrected_passed && rep.exact_corrected_passed;
  }
  return rep;
}

}  // namespace dedekind::kloosterman
