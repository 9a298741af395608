#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "dedekind/arith.hpp"
#include "dedekind/cyc_residue.hpp"
#include "dedekind/cyclotomic.hpp"

using namespace dedekind;

namespace {

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<BigInt> big(std::initializer_list<Int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("small cyclotomic polynomials") {
  CHECK(arith::cyclotomic_poly(1).coeffs() == big({-1, 1}));
  CHECK(arith::cyclotomic_poly(2).coeffs() == big({1, 1}));
  CHECK(arith::cyclotomic_poly(6).coeffs() == big({1, -1, 1}));
  CHECK(arith::cyclotomic_poly(8).coeffs() == big({1, 0, 0, 0, 1}));
  // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
  const auto p105 = arith::cyclotomic_poly(105).coeffs();
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
}

TEST_CASE("product of Phi_d over d | n is x^n - 1") {
  for (Int n = 1; n <= 200; ++n) {
    std::vector<BigInt> prod{1};
    for (const Int d : arith::divisors(n)) {
      prod = multiply(prod, arith::cyclotomic_cached(d).coeffs());
    }
    std::vector<BigInt> want(static_cast<std::size_t>(n + 1), 0);
    want[0] = -1;
    want.back() = 1;
    CHECK_MESSAGE(prod == want, "n = " << n);
    CHECK(arith::cyclotomic_cached(n).degree() == arith::euler_phi(n));
  }
}

TEST_CASE("CycResidue arithmetic") {
  for (Int m = 1; m <= 60; ++m) {
    CHECK(CycResidue::root_power(m, m) == CycResidue::constant(m, 1));
    CHECK(CycResidue::root_power(m, -1) * CycResidue::root_power(m, 1) == CycResidue::constant(m, 1));
    CHECK(static_cast<Int>(CycResidue::zero(m).coeffs().size()) == arith::euler_phi(m));
    if (m >= 2) {
      // Sum of all m-th roots of unity vanishes.
      std::vector<Int> ones(static_cast<std::size_t>(m), 1);
      CHECK(CycResidue::from_classes(m, ones).is_zero());
    }
    for (Int e = 0; e < 2 * m; ++e) {
      const auto z = CycResidue::root_power(m, e).embed();
      const auto want = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(m));
      CHECK(std::abs(z - want) < 1e-9);
    }
  }
  // Ramanujan sum c_5(1) = -1.
  CHECK(CycResidue::from_classes(5, std::vector<Int>{0, 1, 1, 1, 1}).as_constant() == BigInt(-1));
  CHECK_THROWS(CycResidue::zero(4) + CycResidue::zero(5));
}

TEST_CASE("wide and narrow reductions agree") {
  const BigInt huge = BigInt(1) << 70;
  for (Int m : {7, 12, 30, 105}) {
    std::vector<BigInt> wide(static_cast<std::size_t>(3 * m), 0);
    std::vector<Int> narrow(wide.size(), 0);
    for (std::size_t i = 0; i < wide.size(); ++i) {
      narrow[i] = static_cast<Int>(i * i % 17) - 8;
      wide[i] = narrow[i];
    }
    CHECK(CycResidue::from_classes(m, wide) == CycResidue::from_classes(m, narrow));
    wide[3] += huge;
    auto shifted = CycResidue::from_classes(m, narrow) + CycResidue::root_power(m, 3) * huge;
    CHECK(CycResidue::from_classes(m, wide) == shifted);
  }
}
