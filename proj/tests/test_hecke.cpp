#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kleinzeta/hecke.hpp"
#include "kleinzeta/lfunc.hpp"

using namespace kleinzeta;

namespace {

// #E(F_p) for y^2 + y = x^3 - x^2 - 7x + 10 by brute force
long oracle_curve_points(long p) {
  long n = 1;
  auto m = [p](long v) { return ((v % p) + p) % p; };
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) n += m(y * y + y) == m(x * x % p * x - x * x - 7 * x + 10);
  return n;
}

// Legendre symbol (-11 / p) by Euler's criterion, p odd
int oracle_legendre_m11(long p) {
  long r = 1, b = ((-11 % p) + p) % p, e = (p - 1) / 2;
  if (b == 0) return 0;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

LocalFactor reference_l3() {
  LocalFactor l;
  l.p = 3;
  l.coeffs = poly_mul({1, 3, 27}, {1, -3, -18, 135, 81, 3645, -13122, -59049, 531441});
  return l;
}

}  // namespace

TEST_CASE("split type follows (-11/p)") {
  CHECK(split_type(11) == SplitType::Ramified);
  CHECK(split_type(2) == SplitType::Inert);  // -11 = 5 mod 8
  for (long p : primes_up_to(400)) {
    if (p == 2 || p == 11) continue;
    CAPTURE(p);
    CHECK((split_type(p) == SplitType::Split) == (oracle_legendre_m11(p) == 1));
  }
}

TEST_CASE("norm form solutions") {
  for (long p : primes_up_to(600)) {
    if (split_type(p) != SplitType::Split) continue;
    auto [a, b] = solve_norm_form(p);
    CAPTURE(p);
    CHECK(a * a + 11 * b * b == 4 * p);
    CHECK(QuadInt(a, b).norm() == p);
  }
  CHECK_THROWS(solve_norm_form(7));  // inert
}

TEST_CASE("QuadInt requires matching parity") {
  CHECK_NOTHROW(QuadInt(1, 1));
  CHECK_THROWS(QuadInt(1, 2));
}

TEST_CASE("Tonelli-Shanks") {
  for (long p : {13L, 17L, 97L, 1009L}) {
    for (long a = 1; a < std::min(p, 200L); ++a) {
      long r = -1;
      try {
        r = sqrt_mod_prime(a, p);
      } catch (const std::exception&) {
        continue;
      }
      CHECK(r * r % p == a % p);
    }
  }
}

TEST_CASE("a_p(f) = p + 1 - #E(F_p) at good primes up to 300") {
  for (long p : primes_up_to(300)) {
    if (p == 11) continue;
    CAPTURE(p);
    CHECK(ap_f(p) == p + 1 - oracle_curve_points(p));
  }
}

TEST_CASE("a_p(g) is the cube of the Hecke character trace") {
  for (long p : primes_up_to(500)) {
    if (p == 11) continue;
    long a = ap_f(p);
    CHECK(ap_g(p) == a * a * a - 3 * p * a);
  }
  CHECK(ap_f(3) == -1);
  CHECK(ap_f(5) == -3);
  CHECK(ap_f(23) == -9);
}

TEST_CASE("character of order 5 mod 11") {
  CHECK(chi(2, 1) == CyclotomicNumber::zeta(5, 1));
  CHECK(chi(1, 1) == CyclotomicNumber(1L));
  CHECK(chi(11, 1) == CyclotomicNumber(0L));
  for (long m = 1; m < 11; ++m)
    for (long n = 1; n < 11; ++n) CHECK(chi(m * n, 2) == chi(m, 2) * chi(n, 2));
  for (long n = 1; n < 11; ++n) {
    CyclotomicNumber c = chi(n, 1);
    CHECK(c * c * c * c * c == CyclotomicNumber(1L));
  }
  CHECK(dlog2_mod11(8) == 3);
  CHECK_THROWS(dlog2_mod11(22));
}

TEST_CASE("trace prediction vanishes unless p = 1 mod 11") {
  for (long p : primes_up_to(200)) {
    if (p == 11) continue;
    CAPTURE(p);
    if (p % 11 != 1) CHECK(trace_prediction(p) == 0);
    else CHECK(trace_prediction(p) == 5 * p * ap_f(p));
  }
  CHECK(trace_prediction(23) == -1035);
}

TEST_CASE("product route reproduces the reference factor at p = 3") { CHECK(h3_local_factor_product(3) == reference_l3()); }

TEST_CASE("product route factors satisfy the functional equation and purity") {
  for (long p : {2L, 3L, 5L, 7L, 13L, 23L, 67L, 89L}) {
    CAPTURE(p);
    LocalFactor l = h3_local_factor_product(p);
    CHECK(l.coeffs.size() == 11);
    CHECK(satisfies_functional_equation(l));
    CHECK(weil_bound_check(l));
  }
  CHECK_THROWS(h3_local_factor_product(11));
}

TEST_CASE("spinor factor has degree 4") {
  auto s = spinor_local_factor(23, 1);
  CHECK(s.size() == 5);
  CHECK(s[0] == CyclotomicNumber(1L));
}

TEST_CASE("hecke table csv") {
  auto rows = hecke_table(30, 2);
  CHECK(rows.size() == primes_up_to(30).size());
  std::string csv = hecke_table_csv(rows);
  CHECK(csv.rfind("p,split_type,a,b,ap_f,ap_g,chi_dlog\n", 0) == 0);
  CHECK(csv.find("\n3,split,1,1,-1,8,8\n") != std::string::npos);
  CHECK(csv.find("\n11,ramified,") != std::string::npos);
}
