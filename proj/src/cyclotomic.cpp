#include "kleinzeta/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kleinzeta {

long prime_power_base(long n) {
  if (n < 2) throw std::invalid_argument("conductor must be >= 2");
  long l = 2;
  while (n % l) ++l;
  long m = n;
  while (m % l == 0) m /= l;
  if (m != 1) throw std::invalid_argument("conductor is not a prime power: " + std::to_string(n));
  return l;
}

long euler_phi_prime_power(long n) {
  if (n == 1) return 1;
  long l = prime_power_base(n);
  return n / l * (l - 1);
}

namespace {

// c has length n; fold the top block of every residue class mod n/l into the others
std::vector<Rational> reduce_exponents(long n, std::vector<Rational> c) {
  if (n == 1) return {c[0]};
  long l = prime_power_base(n);
  long m = n / l;
  for (long b = 0; b < m; ++b) {
    Rational t = c[b + (l - 1) * m];
    if (t == 0) continue;
    for (long j = 0; j < l; ++j) c[b + j * m] -= t;
  }
  c.resize(n / l * (l - 1));
  return c;
}

}  // namespace

CyclotomicNumber CyclotomicNumber::zeta(long n, long k) {
  std::vector<Rational> c(n);
  c[mod_floor(k, n)] = 1;
  return from_exponents(n, c);
}

CyclotomicNumber CyclotomicNumber::from_exponents(long n, const std::vector<Rational>& c) {
  if (static_cast<long>(c.size()) != n) throw std::invalid_argument("exponent vector length");
  if (n == 1) return CyclotomicNumber(c[0]);
  return CyclotomicNumber(n, reduce_exponents(n, c));
}

long CyclotomicNumber::common_conductor(long a, long b) {
  if (a == 1) return b;
  if (b == 1) return a;
  if (prime_power_base(a) != prime_power_base(b))
    throw std::invalid_argument("mixed cyclotomic conductors " + std::to_string(a) + " and " + std::to_string(b));
  return std::max(a, b);
}

std::vector<Rational> CyclotomicNumber::exponent_vector(long n) const {
  std::vector<Rational> c(n);
  long step = n / n_;
  for (std::size_t k = 0; k < coords_.size(); ++k) c[k * step] = coords_[k];
  return c;
}

CyclotomicNumber CyclotomicNumber::embed(long n) const {
  if (n == n_) return *this;
  if (n % n_ != 0 || common_conductor(n, n_) != n) throw std::invalid_argument("cannot embed");
  return from_exponents(n, exponent_vector(n));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t k = 1; k < coords_.size(); ++k)
    if (coords_[k] != 0) return false;
  return true;
}

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("not rational: " + str());
  return coords_[0];
}

CyclotomicNumber CyclotomicNumber::galois(long a) const {
  if (n_ == 1) return *this;
  if (std::gcd(a, n_) != 1) throw std::invalid_argument("galois exponent not a unit");
  std::vector<Rational> c(n_);
  for (std::size_t k = 0; k < coords_.size(); ++k) c[mod_floor(static_cast<long>(k) * a, n_)] += coords_[k];
  return from_exponents(n_, c);
}

Rational CyclotomicNumber::norm() const {
  CyclotomicNumber prod = *this;
  for (long a = 2; a < n_; ++a)
    if (std::gcd(a, n_) == 1) prod *= galois(a);
  return prod.to_rational();
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta)");
  CyclotomicNumber others(1L);
  for (long a = 2; a < n_; ++a)
    if (std::gcd(a, n_) == 1) others *= galois(a);
  Rational nrm = (others * *this).to_rational();
  for (auto& c : others.coords_) c /= nrm;
  return others;
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    double ang = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_);
    z += coords_[k].convert_to<double>() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

std::string CyclotomicNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    Rational c = coords_[k];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (k == 0) {
      os << c;
    } else {
      if (c == -1 && first)
        os << "-";
      else if (c != 1)
        os << c << "*";
      os << "z" << n_;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  long n = common_conductor(n_, o.n_);
  if (n != n_) *this = embed(n);
  const CyclotomicNumber& b = o.n_ == n ? o : o.embed(n);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += b.coords_[k];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (o.n_ == 1) {
    for (auto& c : coords_) c *= o.coords_[0];
    return *this;
  }
  if (n_ == 1) {
    Rational s = coords_[0];
    *this = o;
    for (auto& c : coords_) c *= s;
    return *this;
  }
  long n = common_conductor(n_, o.n_);
  CyclotomicNumber a = embed(n), b = o.embed(n);
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) {
      if (b.coords_[j] == 0) continue;
      c[(i + j) % n] += a.coords_[i] * b.coords_[j];
    }
  }
  *this = from_exponents(n, c);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
  if (o.n_ == 1) {
    if (o.coords_[0] == 0) throw std::domain_error("division by zero");
    for (auto& c : coords_) c /= o.coords_[0];
    return *this;
  }
  return *this *= o.inverse();
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  long n = CyclotomicNumber::common_conductor(a.n_, b.n_);
  return a.embed(n).coords_ == b.embed(n).coords_;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) { return os << z.str(); }

}  // namespace kleinzeta
