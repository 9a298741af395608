#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dedekind/numeric.hpp"

// Dedekind sums s(a,b) and inversion numbers inv(a,b) of the permutation
// x -> a*x mod b on {1, ..., b}. Negative or oversized a is reduced mod b
// first, so inv(-1, b) and inv(b - 1, b) are the same call.
namespace dedekind::inversion {

/// ((x)): 0 at integers, otherwise x - floor(x) - 1/2.
Fraction sawtooth(const Fraction& x);

/// s(a, b) = sum_{i=1}^{b-1} (i/b) ((a i / b)). Requires gcd(a, b) = 1, b >= 1.
Fraction dedekind_sum(Int a, Int b);

enum class CountMethod {
  oracle,  ///< literal O(b^2) pair count
  fast,    ///< merge-sort count, O(b log b)
};

Int inv_count(Int a, Int b, CountMethod method = CountMethod::fast);

/// Euclidean remainders b, a, b mod a, ..., 1 (requires gcd(a, b) = 1).
struct RemainderSequence {
  std::vector<Int> terms;
};

RemainderSequence remainder_sequence(Int a, Int b);

/// inv(a, b) from the alternating remainder-sequence closed form, evaluated in
/// exact rationals. Requires 1 <= a <= b - 1 and gcd(a, b) = 1. Throws
/// std::logic_error if the value is not a nonnegative integer.
Int inv_closed_form(Int a, Int b);

/// inv = -3 b s + (b-1)(b-2)/4. Throws std::invalid_argument when the result
/// is not an integer (s was not a Dedekind sum with denominator b).
Int inv_from_sum(const Fraction& s, Int b);
Fraction sum_from_inv(Int v, Int b);

/// a inv(a mod b, b) + b inv(b mod a, a) - (a-1)(b-1)(a+b-1)/4; always zero.
Int reciprocity_residual(Int a, Int b);

/// A unit a in [1, b) paired with inv(a, b), ascending in a.
struct UnitInversion {
  Int a;
  Int inv;
};

std::vector<UnitInversion> unit_inversions(Int b, CountMethod method = CountMethod::fast);

struct Extremes {
  Int min;
  Int max;
};

/// Min and max of inv(a, b) over units 2 <= a <= b - 2, by exhaustive scan.
/// Requires b >= 5; empty when no unit lies in that range (b = 6).
std::optional<Extremes> second_extremes(Int b);

enum class NthMode { distinct, multiset };

/// Sorted inversion values of all units of b under the given mode.
std::vector<Int> sorted_inversion_values(Int b, NthMode mode);

/// n-th smallest inversion value, 1 <= n <= 6.
Int nth_smallest(Int b, int n, NthMode mode = NthMode::distinct);

/// inv value -> ascending units sharing it.
std::map<Int, std::vector<Int>> equal_value_classes(Int b);

struct IntegralityResult {
  bool lhs_integral;  ///< s(a1, b) - s(a2, b) is an integer
  bool divides;       ///< b | (a1 - a2)(a1 a2 - 1)
};

IntegralityResult integrality_criterion(Int a1, Int a2, Int b);

/// For a1, a2 in [1, b - 1], both units, with r = b mod a1 = b mod a2,
/// a1 = a2 (mod r) and inv(a1, b) = inv(a2, b): returns whether a1 == a2.
/// Returns nullopt when the hypotheses do not hold.
std::optional<bool> final_prop_check(Int b, Int a1, Int a2);

}  // namespace dedekind::inversion
