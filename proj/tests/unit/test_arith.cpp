#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "dedekind/arith.hpp"

using namespace dedekind;
using namespace dedekind::arith;

namespace {

Int brute_phi(Int n) {
  Int count = 0;
  for (Int x = 1; x <= n; ++x) {
    count += std::gcd(x, n) == 1;
  }
  return count;
}

int brute_mobius(Int n) {
  int sign = 1;
  for (Int p = 2; p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    n /= p;
    if (n % p == 0) {
      return 0;
    }
    sign = -sign;
  }
  return sign;
}

// Legendre symbol by Euler's criterion with naive modular powering.
int legendre(Int a, Int p) {
  a = mod(a, p);
  if (a == 0) {
    return 0;
  }
  Int r = 1;
  for (Int i = 0; i < (p - 1) / 2; ++i) {
    r = r * a % p;
  }
  return r == 1 ? 1 : -1;
}

int jacobi_oracle(Int a, Int n) {
  int out = 1;
  Int m = n;
  for (Int p = 3; p <= m; p += 2) {
    while (m % p == 0) {
      out *= legendre(a, p);
      m /= p;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("euler_phi examples and brute force") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(9) == 6);
  for (Int n = 1; n <= 500; ++n) {
    CHECK(euler_phi(n) == brute_phi(n));
  }
}

TEST_CASE("jacobi_symbol") {
  CHECK(jacobi_symbol(1, 3) == 1);
  CHECK(jacobi_symbol(2, 15) == 1);
  CHECK(jacobi_symbol(3, 9) == 0);
  CHECK_THROWS_AS(jacobi_symbol(1, 4), std::invalid_argument);
  for (Int n = 1; n <= 151; n += 2) {
    for (Int a = -20; a <= 2 * n; ++a) {
      CHECK(jacobi_symbol(a, n) == jacobi_oracle(a, n));
    }
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<Int>{1});
  CHECK(divisors(12) == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(7) == std::vector<Int>{1, 7});
  for (Int n = 1; n <= 400; ++n) {
    std::vector<Int> want;
    for (Int d = 1; d <= n; ++d) {
      if (n % d == 0) {
        want.push_back(d);
      }
    }
    CHECK(divisors(n) == want);
  }
}

TEST_CASE("mobius against squarefree definition") {
  for (Int n = 1; n <= 500; ++n) {
    CHECK(mobius(n) == brute_mobius(n));
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(1, 5) == 1);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_THROWS_AS(mod_inverse(2, 4), std::invalid_argument);
  for (Int m = 2; m <= 120; ++m) {
    for (Int a = -m; a < 2 * m; ++a) {
      if (std::gcd(a, m) != 1) {
        continue;
      }
      const Int x = mod_inverse(a, m);
      CHECK(x >= 0);
      CHECK(x < m);
      CHECK(mod(a * x, m) == 1 % m);
    }
  }
}

TEST_CASE("factorize multiplies back") {
  for (Int n = 1; n <= 2000; ++n) {
    Int prod = 1;
    for (const auto& pp : factorize(n)) {
      for (int i = 0; i < pp.exponent; ++i) {
        prod *= pp.prime;
      }
    }
    CHECK(prod == n);
  }
}
