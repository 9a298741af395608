#include "dedekind/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dedekind::arith {

namespace {

void require_positive(Int n, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + ": argument must be positive, got " +
                                std::to_string(n));
  }
}

}  // namespace

std::vector<PrimePower> factorize(Int n) {
  require_positive(n, "factorize");
  std::vector<PrimePower> out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) {
      continue;
    }
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) {
    out.push_back({n, 1});
  }
  return out;
}

Int euler_phi(Int n) {
  require_positive(n, "euler_phi");
  Int result = n;
  for (const auto& [p, e] : factorize(n)) {
    result = result / p * (p - 1);
  }
  return result;
}

int jacobi_symbol(Int a, Int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("jacobi_symbol: modulus must be odd and positive, got " +
                                std::to_string(n));
  }
  a = mod(a, n);
  int sign = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const Int r = n % 8;
      if (r == 3 || r == 5) {
        sign = -sign;
      }
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) {
      sign = -sign;
    }
    a %= n;
  }
  return n == 1 ? sign : 0;
}

std::vector<Int> divisors(Int n) {
  require_positive(n, "divisors");
  std::vector<Int> low;
  std::vector<Int> high;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) {
        high.push_back(n / d);
      }
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

int mobius(Int n) {
  require_positive(n, "mobius");
  int result = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) {
      return 0;
    }
    result = -result;
  }
  return result;
}

Int mod_inverse(Int a, Int m) {
  if (m < 2) {
    throw std::invalid_argument("mod_inverse: modulus must be at least 2");
  }
  Int old_r = mod(a, m);
  Int r = m;
  Int old_s = 1;
  Int s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw std::invalid_argument("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                                std::to_string(m));
  }
  return mod(old_s, m);
}

bool is_square(Int n) {
  if (n < 0) {
    return false;
  }
  auto r = static_cast<Int>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r * r == n;
}

Int smallest_prime_factor(Int n) {
  if (n < 2) {
    throw std::invalid_argument("smallest_prime_factor: argument must be at least 2");
  }
  return factorize(n).front().prime;
}

}  // namespace dedekind::arith
