#include "dedekind/inversion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dedekind/arith.hpp"

namespace dedekind::inversion {

namespace {

void require_unit(Int a, Int b, const char* what) {
  if (b < 1) {
    throw std::invalid_argument(std::string(what) + ": b must be positive, got " +
                                std::to_string(b));
  }
  if (std::gcd(arith::mod(a, b), b) != 1) {
    throw std::invalid_argument(std::string(what) + ": gcd(" + std::to_string(a) + ", " +
                                std::to_string(b) + ") != 1");
  }
}

// sigma_a(i) = a i mod b, with residue 0 written as b.
std::vector<Int> permutation(Int a, Int b) {
  std::vector<Int> perm(static_cast<std::size_t>(b));
  Int value = 0;
  for (Int i = 0; i < b; ++i) {
    value += a;
    if (value >= b) {
      value -= b;
    }
    perm[static_cast<std::size_t>(i)] = value == 0 ? b : value;
  }
  return perm;
}

Int count_pairs_oracle(const std::vector<Int>& perm) {
  Int count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) {
        ++count;
      }
    }
  }
  return count;
}

Int merge_count(std::vector<Int>& v, std::vector<Int>& scratch, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) {
    return 0;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  Int count = merge_count(v, scratch, lo, mid) + merge_count(v, scratch, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += static_cast<Int>(mid - i);
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) {
    scratch[k++] = v[i++];
  }
  while (j < hi) {
    scratch[k++] = v[j++];
  }
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

Fraction frac(Int num, Int den) { return make_fraction(BigInt(num), BigInt(den)); }

}  // namespace

Fraction sawtooth(const Fraction& x) {
  if (is_integral(x)) {
    return Fraction(0);
  }
  // floor for a non-integer rational with positive denominator
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  BigInt fl = num / den;
  if (num < 0) {
    fl -= 1;
  }
  return x - Fraction(fl) - make_fraction(1, 2);
}

Fraction dedekind_sum(Int a, Int b) {
  require_unit(a, b, "dedekind_sum");
  a = arith::mod(a, b);
  // (i/b)((a i / b)) = i (2 (a i mod b) - b) / (2 b^2); b never divides a i here.
  BigInt total = 0;
  Int residue = 0;
  for (Int i = 1; i < b; ++i) {
    residue += a;
    if (residue >= b) {
      residue -= b;
    }
    total += BigInt(i) * (2 * residue - b);
  }
  return make_fraction(total, BigInt(2) * b * b);
}

Int inv_count(Int a, Int b, CountMethod method) {
  require_unit(a, b, "inv_count");
  auto perm = permutation(arith::mod(a, b), b);
  if (method == CountMethod::oracle) {
    return count_pairs_oracle(perm);
  }
  std::vector<Int> scratch(perm.size());
  return merge_count(perm, scratch, 0, perm.size());
}

RemainderSequence remainder_sequence(Int a, Int b) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1) {
    throw std::invalid_argument("remainder_sequence: need coprime positive a, b");
  }
  RemainderSequence seq;
  seq.terms = {b, a};
  while (seq.terms.back() != 1) {
    const auto n = seq.terms.size();
    seq.terms.push_back(seq.terms[n - 2] % seq.terms[n - 1]);
  }
  return seq;
}

Int inv_closed_form(Int a, Int b) {
  if (b < 2 || a < 1 || a > b - 1) {
    throw std::invalid_argument("inv_closed_form: need 1 <= a <= b - 1");
  }
  require_unit(a, b, "inv_closed_form");
  const auto seq = remainder_sequence(a, b);
  // terms[j + 1] holds r_j; the last index is n + 1.
  const auto r = [&](Int j) { return seq.terms[static_cast<std::size_t>(j + 1)]; };
  const Int n = static_cast<Int>(seq.terms.size()) - 3;

  Fraction alternating = 0;
  for (Int j = 1; j <= n; ++j) {
    const Int rj = r(j);
    const Int rp = r(j - 1);
    const Fraction term = frac((rj - 1) * (rp - 1) * (rj + rp - 1), rj * rp);
    alternating += (j % 2 == 0) ? term : Fraction(-term);
  }
  const Fraction bb = Fraction(BigInt(b));
  const Fraction value = frac(a - 1, 4 * a) * bb * bb +
                         (frac((a - 1) * (a - 2), 4 * a) + alternating / 4) * bb -
                         frac((a - 1) * (a - 1), 4 * a);
  if (!is_integral(value) || value < 0) {
    throw std::logic_error("inv_closed_form: non-integral value " + to_string(value) +
                           " for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  return numerator(value).convert_to<Int>();
}

Int inv_from_sum(const Fraction& s, Int b) {
  if (b < 1) {
    throw std::invalid_argument("inv_from_sum: b must be positive");
  }
  const Fraction v = Fraction(-3 * b) * s + frac((b - 1) * (b - 2), 4);
  if (!is_integral(v)) {
    throw std::invalid_argument("inv_from_sum: " + to_string(s) +
                                " is not a Dedekind sum for b = " + std::to_string(b));
  }
  return numerator(v).convert_to<Int>();
}

Fraction sum_from_inv(Int v, Int b) {
  if (b < 1) {
    throw std::invalid_argument("sum_from_inv: b must be positive");
  }
  return (frac((b - 1) * (b - 2), 4) - Fraction(v)) / Fraction(3 * b);
}

Int reciprocity_residual(Int a, Int b) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1) {
    throw std::invalid_argument("reciprocity_residual: need coprime positive a, b");
  }
  const Int lhs = a * inv_count(a % b, b) + b * inv_count(b % a, a);
  const Int rhs4 = (a - 1) * (b - 1) * (a + b - 1);
  if (rhs4 % 4 != 0) {
    throw std::logic_error("reciprocity_residual: (a-1)(b-1)(a+b-1) not divisible by 4");
  }
  return lhs - rhs4 / 4;
}

std::vector<UnitInversion> unit_inversions(Int b, CountMethod method) {
  if (b < 1) {
    throw std::invalid_argument("unit_inversions: b must be positive");
  }
  std::vector<UnitInversion> out;
  for (Int a = 1; a <= std::max<Int>(1, b - 1); ++a) {
    if (std::gcd(a, b) == 1) {
      out.push_back({a, inv_count(a, b, method)});
    }
  }
  return out;
}

std::optional<Extremes> second_extremes(Int b) {
  if (b < 5) {
    throw std::invalid_argument("second_extremes: b must be at least 5");
  }
  std::optional<Extremes> ext;
  for (const auto& [a, v] : unit_inversions(b)) {
    if (a < 2 || a > b - 2) {
      continue;
    }
    if (!ext) {
      ext = Extremes{v, v};
    } else {
      ext->min = std::min(ext->min, v);
      ext->max = std::max(ext->max, v);
    }
  }
  return ext;
}

std::vector<Int> sorted_inversion_values(Int b, NthMode mode) {
  std::vector<Int> values;
  for (const auto& u : unit_inversions(b)) {
    values.push_back(u.inv);
  }
  std::sort(values.begin(), values.end());
  if (mode == NthMode::distinct) {
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }
  return values;
}

Int nth_smallest(Int b, int n, NthMode mode) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("nth_smallest: n must be in 1..6, got " + std::to_string(n));
  }
  const auto values = sorted_inversion_values(b, mode);
  if (static_cast<std::size_t>(n) > values.size()) {
    throw std::invalid_argument("nth_smallest: b = " + std::to_string(b) + " has only " +
                                std::to_string(values.size()) + " values");
  }
  return values[static_cast<std::size_t>(n - 1)];
}

std::map<Int, std::vector<Int>> equal_value_classes(Int b) {
  if (b < 2) {
    throw std::invalid_argument("equal_value_classes: b must be at least 2");
  }
  std::map<Int, std::vector<Int>> classes;
  for (const auto& [a, v] : unit_inversions(b)) {
    classes[v].push_back(a);
  }
  return classes;
}

IntegralityResult integrality_criterion(Int a1, Int a2, Int b) {
  require_unit(a1, b, "integrality_criterion");
  require_unit(a2, b, "integrality_criterion");
  const Fraction diff = dedekind_sum(a1, b) - dedekind_sum(a2, b);
  const Int x = arith::mod(a1 - a2, b);
  const Int y = arith::mod(arith::mod(a1, b) * arith::mod(a2, b) - 1, b);
  const auto product = static_cast<__int128>(x) * y;
  return {is_integral(diff), product % b == 0};
}

std::optional<bool> final_prop_check(Int b, Int a1, Int a2) {
  if (b < 2 || a1 < 1 || a2 < 1 || a1 > b - 1 || a2 > b - 1) {
    return std::nullopt;
  }
  if (std::gcd(a1, b) != 1 || std::gcd(a2, b) != 1) {
    return std::nullopt;
  }
  const Int r = b % a1;
  if (r != b % a2) {
    return std::nullopt;
  }
  // Congruence modulo 0 is equality.
  if (r == 0 ? a1 != a2 : (a1 - a2) % r != 0) {
    return std::nullopt;
  }
  if (inv_count(a1, b) != inv_count(a2, b)) {
    return std::nullopt;
  }
  return a1 == a2;
}

}  // namespace dedekind::inversion
