#pragma once

#include <vector>

#include "dedekind/numeric.hpp"

// Elementary number theory on machine integers. Inputs are expected to stay
// at desk scale (n up to a few million); factorization is trial division.
namespace dedekind::arith {

struct PrimePower {
  Int prime;
  int exponent;
};

std::vector<PrimePower> factorize(Int n);

Int euler_phi(Int n);

/// Jacobi symbol (a/n) for odd n >= 1. Throws std::invalid_argument otherwise.
int jacobi_symbol(Int a, Int n);

/// Ascending list of positive divisors.
std::vector<Int> divisors(Int n);

int mobius(Int n);

/// Inverse of a modulo m in [1, m-1]. Requires m >= 2 and gcd(a, m) = 1.
Int mod_inverse(Int a, Int m);

/// Least nonnegative residue of a modulo m (m >= 1).
inline Int mod(Int a, Int m) {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

bool is_square(Int n);

Int smallest_prime_factor(Int n);

}  // namespace dedekind::arith
