#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "kleinzeta/numeric.hpp"

namespace kleinzeta {

// Element of Q(zeta_n), n a prime power (n = 1 means Q).  Coordinates over
// 1, zeta, ..., zeta^{phi(n)-1}, reduced by Phi_n(zeta) = 0.  Values with
// different conductors of the same prime mix by embedding into the larger.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : n_(1), coords_(1) {}
  CyclotomicNumber(long v) : n_(1), coords_{Rational(v)} {}  // NOLINT
  CyclotomicNumber(const Rational& r) : n_(1), coords_{r} {}  // NOLINT

  // zeta_n^k
  static CyclotomicNumber zeta(long n, long k = 1);
  // Sum of c[a] zeta_n^a over all a in [0, n)
  static CyclotomicNumber from_exponents(long n, const std::vector<Rational>& c);

  long conductor() const { return n_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws unless is_rational()

  CyclotomicNumber embed(long n) const;
  CyclotomicNumber galois(long a) const;  // zeta -> zeta^a
  Rational norm() const;
  CyclotomicNumber inverse() const;
  std::complex<double> to_complex() const;
  std::string str() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  CyclotomicNumber operator-() const;
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

 private:
  CyclotomicNumber(long n, std::vector<Rational> coords) : n_(n), coords_(std::move(coords)) {}
  static long common_conductor(long a, long b);
  std::vector<Rational> exponent_vector(long n) const;

  long n_;
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z);

// Euler phi and prime base for prime powers; throws on anything else
long prime_power_base(long n);
long euler_phi_prime_power(long n);

}  // namespace kleinzeta

namespace Eigen {
template <>
struct NumTraits<kleinzeta::CyclotomicNumber> : GenericNumTraits<kleinzeta::CyclotomicNumber> {
  typedef kleinzeta::CyclotomicNumber Real;
  typedef kleinzeta::CyclotomicNumber NonInteger;
  typedef kleinzeta::CyclotomicNumber Nested;
  typedef kleinzeta::CyclotomicNumber Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 40,
    MulCost = 200
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
