#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "kleinzeta/cyclotomic.hpp"
#include "kleinzeta/numeric.hpp"

using namespace kleinzeta;

namespace {

// trial division oracle
bool slow_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("is_prime agrees with trial division below 20000") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == slow_prime(n));
}

TEST_CASE("is_prime on large inputs") {
  CHECK(is_prime(1000000007ull));
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ull));      // strong pseudoprime to bases 2,3,5,7
  CHECK_FALSE(is_prime(1000000007ull * 998244353ull));
}

TEST_CASE("primes_up_to and prime_factors") {
  auto ps = primes_up_to(30);
  CHECK(ps == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_factors(1).empty());
}

TEST_CASE("modular helpers") {
  CHECK(powmod(3, 200, 1000003) == powmod(9, 100, 1000003));
  CHECK(mulmod(0xffffffffffffull, 0xffffffffffull, 1000000007ull) ==
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(0xffffffffffffull) * 0xffffffffffull) % 1000000007ull));
  CHECK(mod_floor(-7, 5) == 3);
  CHECK(mod_floor(7, 5) == 2);
}

TEST_CASE("valuation") {
  CHECK(valuation(BigInt(96), 2) == 5);
  CHECK(valuation(Rational(BigInt(9), BigInt(22)), 11) == -1);
  CHECK(valuation(Rational(BigInt(9), BigInt(22)), 3) == 2);
  CHECK_THROWS(valuation(BigInt(0), 3));
  CHECK(ipow(3, 15) == BigInt(14348907));
}

TEST_CASE("cyclotomic: sum of primitive roots and basic identities") {
  // sum of all 5th roots of unity is 0
  CyclotomicNumber s(0L);
  for (int k = 0; k < 5; ++k) s += CyclotomicNumber::zeta(5, k);
  CHECK(s.is_zero());
  CHECK(CyclotomicNumber::zeta(5, 5) == CyclotomicNumber(1L));
  CHECK(CyclotomicNumber::zeta(5, 2) * CyclotomicNumber::zeta(5, 3) == CyclotomicNumber(1L));
  // Gauss sum for 5: (z + z^4 - z^2 - z^3)^2 = 5
  auto z = [](int k) { return CyclotomicNumber::zeta(5, k); };
  CyclotomicNumber g = z(1) + z(4) - z(2) - z(3);
  CHECK(g * g == CyclotomicNumber(5L));
}

TEST_CASE("cyclotomic: inverse and norm") {
  auto a = CyclotomicNumber(2L) + CyclotomicNumber::zeta(11, 3) * CyclotomicNumber(Rational(BigInt(1), BigInt(3)));
  CHECK(a * a.inverse() == CyclotomicNumber(1L));
  // norm of 1 - zeta_p is p
  CHECK((CyclotomicNumber(1L) - CyclotomicNumber::zeta(7)).norm() == Rational(7));
  CHECK_THROWS(CyclotomicNumber(0L).inverse());
}

TEST_CASE("cyclotomic: prime-power conductors embed") {
  // zeta_9^3 = zeta_3
  CHECK(CyclotomicNumber::zeta(9, 3) == CyclotomicNumber::zeta(3, 1));
  CyclotomicNumber s(0L);
  for (int k = 0; k < 25; ++k) s += CyclotomicNumber::zeta(25, k);
  CHECK(s.is_zero());
  CHECK(euler_phi_prime_power(27) == 18);
  CHECK(prime_power_base(121) == 11);
  CHECK_THROWS(prime_power_base(12));
}

TEST_CASE("cyclotomic: complex embedding matches exp(2 pi i k/n)") {
  for (long n : {5L, 11L, 9L}) {
    for (long k = 0; k < n; ++k) {
      std::complex<double> want = std::polar(1.0, 2 * M_PI * static_cast<double>(k) / static_cast<double>(n));
      CHECK(std::abs(CyclotomicNumber::zeta(n, k).to_complex() - want) < 1e-12);
    }
  }
}

TEST_CASE("cyclotomic: galois action") {
  auto z = CyclotomicNumber::zeta(5, 1);
  CHECK(z.galois(2) == CyclotomicNumber::zeta(5, 2));
  auto a = z + CyclotomicNumber(3L);
  CHECK((a * a).galois(3) == a.galois(3) * a.galois(3));
}
