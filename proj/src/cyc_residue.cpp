#include "dedekind/cyc_residue.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dedekind/arith.hpp"
#include "dedekind/cyclotomic.hpp"

namespace dedekind {

namespace {

struct Checked {
  static bool sub_mul(Int& acc, Int q, Int c) {
    Int prod = 0;
    return !__builtin_mul_overflow(q, c, &prod) && !__builtin_sub_overflow(acc, prod, &acc);
  }
  static bool sub(Int& acc, Int q) { return !__builtin_sub_overflow(acc, q, &acc); }
  static bool add(Int& acc, Int q) { return !__builtin_add_overflow(acc, q, &acc); }
};

struct Wide {
  static bool sub_mul(BigInt& acc, const BigInt& q, const BigInt& c) {
    acc -= q * c;
    return true;
  }
  static bool sub(BigInt& acc, const BigInt& q) {
    acc -= q;
    return true;
  }
  static bool add(BigInt& acc, const BigInt& q) {
    acc += q;
    return true;
  }
};

// Reduces v modulo Phi_m in place and truncates it to phi(m) entries. Returns
// false if an intermediate value overflowed (only possible for Int).
//
// The reduction first folds modulo x^m - 1, then divides by the sparse
// multiple (x^m - 1) / (x^h - 1) = 1 + x^h + ... + x^{(p-1)h}, h = m/p, which
// Phi_m divides, and finishes with long division by Phi_m itself.
template <class T, class Ops>
bool reduce_in_place(std::vector<T>& v, Int m, const std::vector<T>& phi) {
  const auto mm = static_cast<std::size_t>(m);
  for (std::size_t i = mm; i < v.size(); ++i) {
    if (v[i] != 0 && !Ops::add(v[i % mm], v[i])) {
      return false;
    }
  }
  v.resize(mm, T(0));

  const auto n = static_cast<std::size_t>(phi.size() - 1);
  std::size_t top = mm;  // v has degree < top
  if (m > 1) {
    const auto p = static_cast<std::size_t>(arith::smallest_prime_factor(m));
    const std::size_t h = mm / p;
    const std::size_t span = (p - 1) * h;
    for (std::size_t i = mm; i-- > span;) {
      if (v[i] == 0) {
        continue;
      }
      const T q = v[i];
      for (std::size_t j = 0; j < p; ++j) {
        if (!Ops::sub(v[i - span + j * h], q)) {
          return false;
        }
      }
    }
    top = span;
  }
  for (std::size_t i = top; i-- > n;) {
    if (v[i] == 0) {
      continue;
    }
    const T q = v[i];
    for (std::size_t j = 0; j <= n; ++j) {
      if (phi[j] != 0 && !Ops::sub_mul(v[i - n + j], q, phi[j])) {
        return false;
      }
    }
  }
  v.resize(n);
  return true;
}

std::vector<BigInt> reduce_wide(std::vector<BigInt> v, Int m) {
  const auto& phi = arith::cyclotomic_cached(m).coeffs();
  reduce_in_place<BigInt, Wide>(v, m, phi);
  return v;
}

std::vector<BigInt> widen(const std::vector<Int>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

CycResidue CycResidue::zero(Int m) {
  if (m < 1) {
    throw std::invalid_argument("CycResidue: order must be positive");
  }
  return CycResidue(m, std::vector<BigInt>(static_cast<std::size_t>(arith::euler_phi(m))));
}

CycResidue CycResidue::constant(Int m, const BigInt& c) {
  auto r = zero(m);
  r.coeffs_[0] = c;
  return r;
}

CycResidue CycResidue::root_power(Int m, Int e) {
  std::vector<Int> classes(static_cast<std::size_t>(m), 0);
  classes[static_cast<std::size_t>(arith::mod(e, m))] = 1;
  return from_classes(m, std::move(classes));
}

CycResidue CycResidue::from_classes(Int m, std::vector<BigInt> classes) {
  if (m < 1) {
    throw std::invalid_argument("CycResidue: order must be positive");
  }
  return CycResidue(m, reduce_wide(std::move(classes), m));
}

CycResidue CycResidue::from_classes(Int m, std::vector<Int> classes) {
  if (m < 1) {
    throw std::invalid_argument("CycResidue: order must be positive");
  }
  const auto& cyc = arith::cyclotomic_cached(m);
  if (!cyc.narrow_coeffs().empty()) {
    std::vector<Int> work = classes;
    if (reduce_in_place<Int, Checked>(work, m, cyc.narrow_coeffs())) {
      return CycResidue(m, widen(work));
    }
  }
  return CycResidue(m, reduce_wide(widen(classes), m));
}

bool CycResidue::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

std::optional<BigInt> CycResidue::as_constant() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      return std::nullopt;
    }
  }
  return coeffs_.empty() ? BigInt(0) : coeffs_[0];
}

std::complex<double> CycResidue::embed() const {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                           static_cast<double>(order_);
      sum += coeffs_[i].convert_to<double>() * std::polar(1.0, angle);
    }
  }
  return sum;
}

void CycResidue::check_same_order(const CycResidue& rhs) const {
  if (order_ != rhs.order_) {
    throw std::invalid_argument("CycResidue: mixing orders " + std::to_string(order_) + " and " +
                                std::to_string(rhs.order_));
  }
}

CycResidue& CycResidue::operator+=(const CycResidue& rhs) {
  check_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

CycResidue& CycResidue::operator-=(const CycResidue& rhs) {
  check_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

CycResidue& CycResidue::operator*=(const CycResidue& rhs) {
  check_same_order(rhs);
  std::vector<BigInt> product(coeffs_.size() + rhs.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      product[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce_wide(std::move(product), order_);
  return *this;
}

CycResidue& CycResidue::operator*=(const BigInt& k) {
  for (auto& c : coeffs_) {
    c *= k;
  }
  return *this;
}

}  // namespace dedekind
