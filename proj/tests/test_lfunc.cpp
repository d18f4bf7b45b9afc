#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kleinzeta/lfunc.hpp"

using namespace kleinzeta;

namespace {

LocalFactor reference_l3() {
  LocalFactor l;
  l.p = 3;
  l.coeffs = poly_mul({1, 3, 27}, {1, -3, -18, 135, 81, 3645, -13122, -59049, 531441});
  return l;
}

// power sums of inverse roots straight from the factor by the recursion
// t_k = -k c_k - sum_{i<k} c_i t_{k-i}; independent of the library's Newton code
std::vector<BigInt> oracle_power_sums(const IntPoly& c, int m) {
  std::vector<BigInt> t(static_cast<std::size_t>(m) + 1, 0);
  for (int k = 1; k <= m; ++k) {
    BigInt ck = k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : BigInt(0);
    BigInt s = -BigInt(k) * ck;
    for (int i = 1; i < k; ++i)
      if (i < static_cast<int>(c.size())) s -= c[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(k - i)];
    t[static_cast<std::size_t>(k)] = s;
  }
  return t;
}

}  // namespace

TEST_CASE("poly_mul and trim") {
  IntPoly a = {1, 1}, b = {1, -1};
  CHECK(poly_mul(a, b) == IntPoly{1, 0, -1});
  IntPoly c = {2, 0, 0};
  poly_trim(c);
  CHECK(c == IntPoly{2});
}

TEST_CASE("reference factor at p = 3 expands to 1 + 7533 x^5 + 3^15 x^10") {
  LocalFactor l = reference_l3();
  IntPoly want(11, 0);
  want[0] = 1;
  want[5] = 7533;
  want[10] = 14348907;
  CHECK(l.coeffs == want);
  CHECK(satisfies_functional_equation(l));
  CHECK_NOTHROW(validate_local_factor(l));
}

TEST_CASE("counts -> power sums -> factor round trip") {
  LocalFactor l = reference_l3();
  auto counts = local_factor_counts(l, 5);
  REQUIRE(counts.size() == 5);
  CHECK(counts[0] == 40);
  CHECK(counts[4] == BigInt("14445865"));
  PowerSums s = counts_to_power_sums(counts, 3);
  auto t = oracle_power_sums(l.coeffs, 5);
  for (int k = 1; k <= 5; ++k) CHECK(s.t[static_cast<std::size_t>(k - 1)] == t[static_cast<std::size_t>(k)]);
  CHECK(power_sums_to_local_factor(s) == l);
}

TEST_CASE("factor from a synthetic set of Weil numbers") {
  // product of (1 + a x + p^3 x^2) with |a| < 2 p^(3/2)
  const long p = 5;
  IntPoly f = {1};
  for (long a : {3L, -7L, 11L, 0L, -2L}) f = poly_mul(f, {1, a, p * p * p});
  LocalFactor l;
  l.p = p;
  l.coeffs = f;
  CHECK(satisfies_functional_equation(l));
  auto counts = local_factor_counts(l, 5);
  PowerSums s = counts_to_power_sums(counts, p);
  CHECK(power_sums_to_local_factor(s) == l);
  CHECK(power_sums_within_weil_bound(s));
  CHECK(weil_bound_check(l));
  auto t = oracle_power_sums(f, 5);
  auto back = local_factor_power_sums(l, 5);
  for (int k = 1; k <= 5; ++k) CHECK(back.t[static_cast<std::size_t>(k - 1)] == t[static_cast<std::size_t>(k)]);
}

TEST_CASE("inverse roots have absolute value p^(3/2)") {
  LocalFactor l = reference_l3();
  auto roots = inverse_roots(l);
  CHECK(roots.size() == 10);
  for (auto r : roots) CHECK(std::abs(std::abs(r) / std::pow(3.0, 1.5) - 1.0) < 1e-9);
  CHECK(weil_bound_check(l, 1e-6));
}

TEST_CASE("weil bound rejects an impure factor") {
  LocalFactor l;
  l.p = 3;
  IntPoly f = {1, 30, 27};  // roots off the circle |x| = 3^(-3/2)
  for (int i = 0; i < 4; ++i) f = poly_mul(f, {1, 0, 27});
  l.coeffs = f;
  CHECK_FALSE(weil_bound_check(l, 1e-6));
}

TEST_CASE("non-integral power sums are rejected") {
  PowerSums s;
  s.p = 3;
  s.t = {1, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(power_sums_to_local_factor(s), std::domain_error);
}

TEST_CASE("bad prime 11 is rejected") { CHECK_THROWS(counts_to_power_sums({1, 2, 3}, 11)); }

TEST_CASE("json round trip keeps big coefficients exact") {
  LocalFactor l;
  l.p = 23;
  l.coeffs = {1, 1035, 489325};
  l.coeffs.resize(11, 0);
  l.coeffs[10] = ipow(BigInt(23), 15);
  auto j = to_json(l);
  CHECK(j["coeffs"][10].is_string());
  CHECK(j["coeffs"][1].is_number_integer());
  CHECK(local_factor_from_json(j) == l);
}
