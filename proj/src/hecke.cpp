#include "kleinzeta/hecke.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "kleinzeta/counting.hpp"
#include "parallel.hpp"

namespace kleinzeta {

std::string to_string(SplitType s) {
  switch (s) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: return "ramified";
  }
  return "?";
}

QuadInt::QuadInt(long a_, long b_) : a(a_), b(b_) {
  if ((a - b) % 2 != 0) throw std::invalid_argument("QuadInt: a and b must have the same parity");
}

BigInt QuadInt::norm() const { return (BigInt(a) * a + BigInt(11) * b * b) / 4; }

namespace {

void require_prime(long p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

bool is_qr_mod11(long r) {
  r = mod_floor(r, 11);
  return r == 1 || r == 3 || r == 4 || r == 5 || r == 9;
}

}  // namespace

SplitType split_type(long p) {
  require_prime(p);
  if (p == 11) return SplitType::Ramified;
  if (p == 2) return SplitType::Inert;  // -11 = 5 mod 8
  return is_qr_mod11(p) ? SplitType::Split : SplitType::Inert;
}

long sqrt_mod_prime(long a, long p) {
  const std::uint64_t P = static_cast<std::uint64_t>(p);
  std::uint64_t n = static_cast<std::uint64_t>(mod_floor(a, p));
  if (n == 0) return 0;
  if (powmod(n, (P - 1) / 2, P) != 1) throw std::domain_error("sqrt_mod_prime: not a square");
  std::uint64_t q = P - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (P - 1) / 2, P) != P - 1) ++z;
  std::uint64_t m = s, c = powmod(z, q, P), t = powmod(n, q, P), r = powmod(n, (q + 1) / 2, P);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, P);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, P);
    m = i;
    c = mulmod(b, b, P);
    t = mulmod(t, c, P);
    r = mulmod(r, b, P);
  }
  return static_cast<long>(r);
}

std::pair<long, long> solve_norm_form(long p) {
  if (split_type(p) != SplitType::Split) throw std::invalid_argument("solve_norm_form: p is not split");
  long r = sqrt_mod_prime(-11, p);
  if (r % 2 == 0) r = p - r;  // r = -11 = 1 mod 2
  long a = 2 * p, b = r;
  const long bound = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(p))));
  while (b > bound) {
    long t = a % b;
    a = b;
    b = t;
  }
  long rest = 4 * p - b * b;
  if (rest > 0 && rest % 11 == 0) {
    long c = rest / 11;
    long s = std::lround(std::sqrt(static_cast<double>(c)));
    while (s * s > c) --s;
    while ((s + 1) * (s + 1) <= c) ++s;
    if (s * s == c && s > 0) return {b, s};
  }
  throw std::logic_error("solve_norm_form: no solution for split p = " + std::to_string(p));
}

long ap_f(long p) {
  if (split_type(p) != SplitType::Split) return 0;
  long a = solve_norm_form(p).first;
  // image of (a + b sqrt -11)/2 in O_K/(sqrt -11) = F_11 is a * 2^{-1} = 6a
  return is_qr_mod11(6 * a) ? a : -a;
}

long ap_g(long p) {
  long a = ap_f(p);
  return a * a * a - 3 * p * a;
}

int dlog2_mod11(long n) {
  long r = mod_floor(n, 11);
  if (r == 0) throw std::domain_error("dlog2_mod11: 11 divides n");
  long x = 1;
  for (int k = 0; k < 10; ++k) {
    if (x == r) return k;
    x = x * 2 % 11;
  }
  throw std::logic_error("2 is not a primitive root mod 11?");
}

CyclotomicNumber chi(long n, int i) {
  if (i < 0 || i > 4) throw std::invalid_argument("chi: twist index must be in [0, 4]");
  if (mod_floor(n, 11) == 0) return CyclotomicNumber(0L);
  return CyclotomicNumber::zeta(5, static_cast<long>(i) * dlog2_mod11(n) % 5);
}

long trace_prediction(long p) {
  require_prime(p);
  if (p == 11) throw std::invalid_argument("trace_prediction: 11 is the bad prime");
  CyclotomicNumber s(0L);
  for (int i = 0; i < 5; ++i) s += chi(p, i);
  return (CyclotomicNumber(p * ap_f(p)) * s).to_rational().convert_to<long>();
}

namespace {

using CPoly = std::vector<CyclotomicNumber>;

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
  CPoly c(a.size() + b.size() - 1, CyclotomicNumber(0L));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// 1 - a chi^i(p) T + chi^{2i}(p) p^w T^2
CPoly twisted_quadratic(long p, int i, long a, int w) {
  CyclotomicNumber c1 = chi(p, i), c2 = chi(p, (2 * i) % 5);
  return {CyclotomicNumber(1L), -(CyclotomicNumber(a) * c1), c2 * CyclotomicNumber(Rational(ipow(p, w)))};
}

}  // namespace

LocalFactor h3_local_factor_product(long p) {
  require_prime(p);
  if (p == 11) throw std::invalid_argument("h3_local_factor_product: 11 is the bad prime");
  const long a = ap_f(p);
  CPoly prod{CyclotomicNumber(1L)};
  // L(s-1, f x chi^i): the x-coefficient picks up p, the x^2 one p^3
  for (int i = 0; i < 5; ++i) prod = cpoly_mul(prod, twisted_quadratic(p, i, a * p, 3));
  LocalFactor l;
  l.p = p;
  for (const auto& c : prod) {
    if (!c.is_rational()) throw std::domain_error("h3_local_factor_product: coefficient outside Q: " + c.str());
    Rational r = c.to_rational();
    if (mp::denominator(r) != 1) throw std::domain_error("h3_local_factor_product: non-integral coefficient");
    l.coeffs.push_back(BigInt(mp::numerator(r)));
  }
  return l;
}

std::vector<CyclotomicNumber> spinor_local_factor(long p, int i) {
  require_prime(p);
  if (p == 11) throw std::invalid_argument("spinor_local_factor: 11 is the bad prime");
  return cpoly_mul(twisted_quadratic(p, i, ap_f(p), 1), twisted_quadratic(p, i, ap_g(p), 3));
}

HeckeRecord hecke_record(long p) {
  HeckeRecord r;
  r.p = p;
  r.split = split_type(p);
  if (r.split == SplitType::Split) std::tie(r.a, r.b) = solve_norm_form(p);
  r.ap_f = ap_f(p);
  r.ap_g = ap_g(p);
  r.chi_p = chi(p, 1);
  r.chi_dlog = p == 11 ? -1 : dlog2_mod11(p);
  return r;
}

std::vector<HeckeRecord> hecke_table(long max_p, unsigned threads) {
  auto primes = primes_up_to(max_p);
  const std::size_t chunk = 64;
  const std::size_t ntasks = (primes.size() + chunk - 1) / chunk;
  auto parts = detail::run_tasks<std::vector<HeckeRecord>>(ntasks, threads, [&](std::size_t t) {
    std::vector<HeckeRecord> out;
    for (std::size_t i = t * chunk; i < std::min(primes.size(), (t + 1) * chunk); ++i) out.push_back(hecke_record(primes[i]));
    return out;
  });
  std::vector<HeckeRecord> rows;
  for (auto& part : parts) rows.insert(rows.end(), part.begin(), part.end());
  return rows;
}

std::string hecke_table_csv(const std::vector<HeckeRecord>& rows) {
  std::ostringstream os;
  os << "p,split_type,a,b,ap_f,ap_g,chi_dlog\n";
  for (const auto& r : rows)
    os << r.p << ',' << to_string(r.split) << ',' << r.a << ',' << r.b << ',' << r.ap_f << ',' << r.ap_g << ','
       << r.chi_dlog << '\n';
  return os.str();
}

}  // namespace kleinzeta
