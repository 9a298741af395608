#include "dedekind/cyclotomic.hpp"

#include <limits>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "dedekind/arith.hpp"

namespace dedekind::arith {

CycPoly::CycPoly(Int order, std::vector<BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  const BigInt lo = std::numeric_limits<Int>::min();
  const BigInt hi = std::numeric_limits<Int>::max();
  narrow_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c < lo || c > hi) {
      narrow_.clear();
      break;
    }
    narrow_.push_back(c.convert_to<Int>());
  }
}

CycPoly cyclotomic_poly(Int m) {
  if (m < 1) {
    throw std::invalid_argument("cyclotomic_poly: order must be positive");
  }
  if (m == 1) {
    return CycPoly(1, {BigInt(-1), BigInt(1)});
  }
  const auto n = static_cast<std::size_t>(euler_phi(m));
  std::vector<BigInt> s(n + 1);
  s[0] = 1;
  for (const Int d64 : divisors(m)) {
    const auto d = static_cast<std::size_t>(d64);
    if (d > n) {
      continue;  // (1 - x^d)^{+-1} is 1 modulo x^{n+1}
    }
    switch (mobius(m / d64)) {
      case 1:  // multiply by 1 - x^d
        for (std::size_t i = n; i >= d; --i) {
          s[i] -= s[i - d];
        }
        break;
      case -1:  // multiply by 1 / (1 - x^d) = 1 + x^d + x^2d + ...
        for (std::size_t i = d; i <= n; ++i) {
          s[i] += s[i - d];
        }
        break;
      default:
        break;
    }
  }
  return CycPoly(m, std::move(s));
}

const CycPoly& cyclotomic_cached(Int m) {
  static std::shared_mutex mutex;
  static std::unordered_map<Int, std::unique_ptr<const CycPoly>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) {
      return *it->second;
    }
  }
  auto built = std::make_unique<const CycPoly>(cyclotomic_poly(m));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(m, std::move(built));
  return *it->second;
}

}  // namespace dedekind::arith
