#include "kleinzeta/lfunc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace kleinzeta {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

void poly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool satisfies_functional_equation(const LocalFactor& l) {
  if (l.coeffs.size() != LocalFactor::kDegree + 1) return false;
  for (int j = 0; j <= 4; ++j)
    if (l.coeffs[10 - j] != ipow(l.p, 3 * (5 - j)) * l.coeffs[j]) return false;
  return true;
}

void validate_local_factor(const LocalFactor& l) {
  if (l.coeffs.size() != LocalFactor::kDegree + 1) throw std::invalid_argument("local factor must have degree 10");
  if (l.coeffs[0] != 1) throw std::invalid_argument("local factor must have constant term 1");
  if (!satisfies_functional_equation(l)) throw std::invalid_argument("local factor violates c_{10-j} = p^{3(5-j)} c_j");
}

PowerSums counts_to_power_sums(const std::vector<BigInt>& counts, long p) {
  if (p == 11) throw std::invalid_argument("counts_to_power_sums: 11 is the bad prime");
  if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("counts_to_power_sums: p not prime");
  PowerSums s;
  s.p = p;
  for (std::size_t k = 1; k <= counts.size(); ++k) {
    BigInt pk = ipow(p, static_cast<unsigned>(k));
    s.t.push_back(1 + pk + pk * pk + pk * pk * pk - counts[k - 1]);
  }
  return s;
}

LocalFactor power_sums_to_local_factor(const PowerSums& s) {
  if (s.t.size() < 5) throw std::invalid_argument("power_sums_to_local_factor: need t_1..t_5");
  std::vector<BigInt> e(6);
  e[0] = 1;
  for (int k = 1; k <= 5; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) {
      BigInt term = e[k - i] * s.t[i - 1];
      acc += (i % 2) ? term : BigInt(-term);
    }
    if (acc % k != 0)
      throw std::domain_error("Newton step " + std::to_string(k) + " is not integral; counts are inconsistent");
    e[k] = acc / k;
  }
  LocalFactor l;
  l.p = s.p;
  l.coeffs.assign(11, BigInt(0));
  for (int k = 0; k <= 5; ++k) l.coeffs[k] = (k % 2) ? BigInt(-e[k]) : e[k];
  for (int j = 0; j <= 4; ++j) l.coeffs[10 - j] = ipow(s.p, 3 * (5 - j)) * l.coeffs[j];
  return l;
}

PowerSums local_factor_power_sums(const LocalFactor& l, int m) {
  const int d = static_cast<int>(l.coeffs.size()) - 1;
  std::vector<BigInt> e(d + 1);
  for (int k = 0; k <= d; ++k) e[k] = (k % 2) ? BigInt(-l.coeffs[k]) : l.coeffs[k];
  PowerSums s;
  s.p = l.p;
  for (int k = 1; k <= m; ++k) {
    // t_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i t_{k-i} + (-1)^{k-1} k e_k
    BigInt acc = 0;
    for (int i = 1; i < k && i <= d; ++i) {
      BigInt term = e[i] * s.t[k - i - 1];
      acc += (i % 2) ? term : BigInt(-term);
    }
    if (k <= d) acc += (k % 2) ? BigInt(k * e[k]) : BigInt(-k * e[k]);
    s.t.push_back(acc);
  }
  return s;
}

std::vector<BigInt> local_factor_counts(const LocalFactor& l, int m) {
  PowerSums s = local_factor_power_sums(l, m);
  std::vector<BigInt> n;
  for (int k = 1; k <= m; ++k) {
    BigInt pk = ipow(l.p, static_cast<unsigned>(k));
    n.push_back(1 + pk + pk * pk + pk * pk * pk - s.t[k - 1]);
  }
  return n;
}

bool power_sums_within_weil_bound(const PowerSums& s) {
  for (std::size_t k = 1; k <= s.t.size(); ++k)
    if (s.t[k - 1] * s.t[k - 1] > 100 * ipow(s.p, static_cast<unsigned>(3 * k))) return false;
  return true;
}

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
  qtrim(a);
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

QPoly qdiv(QPoly a, const QPoly& b) {
  qtrim(a);
  if (a.size() < b.size()) return {};
  QPoly quo(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    quo[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    qtrim(a);
  }
  return quo;
}

QPoly squarefree_part(const QPoly& f) {
  QPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<long>(i));
  qtrim(df);
  if (df.empty()) return f;
  QPoly a = f, b = df;
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return qdiv(f, a);
}

}  // namespace

std::vector<std::complex<double>> inverse_roots(const LocalFactor& l) {
  QPoly f;
  for (const auto& c : l.coeffs) f.emplace_back(c);
  qtrim(f);
  QPoly g = squarefree_part(f);
  const int d = static_cast<int>(g.size()) - 1;
  if (d <= 0) return {};
  // x = y / p^{3/2}: reciprocal roots of modulus p^{3/2} become |y| = 1
  const long double s = std::pow(static_cast<long double>(l.p), -1.5L);
  std::vector<std::complex<long double>> a(d + 1);
  long double sk = 1;
  for (int k = 0; k <= d; ++k) {
    a[k] = static_cast<long double>(g[k].convert_to<double>()) * sk;
    sk *= s;
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = static_cast<double>(-(a[i] / a[d]).real());
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("weil_bound_check: eigenvalue iteration did not converge");
  auto eval = [&](std::complex<long double> y, std::complex<long double>& dv) {
    std::complex<long double> v = 0;
    dv = 0;
    for (int k = d; k >= 0; --k) {
      dv = dv * y + v;
      v = v * y + a[k];
    }
    return v;
  };
  std::vector<std::complex<double>> out;
  const double ps = std::pow(static_cast<double>(l.p), 1.5);
  for (int i = 0; i < d; ++i) {
    std::complex<long double> y(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
    for (int it = 0; it < 8; ++it) {
      std::complex<long double> dv;
      auto v = eval(y, dv);
      if (std::abs(dv) == 0) break;
      auto step = v / dv;
      y -= step;
      if (std::abs(step) < 1e-18L) break;
    }
    // lambda = 1/x = p^{3/2} / y
    std::complex<double> yd(static_cast<double>(y.real()), static_cast<double>(y.imag()));
    out.push_back(ps / yd);
  }
  return out;
}

bool weil_bound_check(const LocalFactor& l, double rel_tol) {
  const double target = std::pow(static_cast<double>(l.p), 1.5);
  for (const auto& lam : inverse_roots(l))
    if (std::abs(std::abs(lam) / target - 1.0) > rel_tol) return false;
  return true;
}

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer or decimal string");
}

nlohmann::json to_json(const LocalFactor& l) {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& v : l.coeffs) c.push_back(bigint_to_json(v));
  return {{"p", l.p}, {"coeffs", c}};
}

LocalFactor local_factor_from_json(const nlohmann::json& j) {
  LocalFactor l;
  l.p = j.at("p").get<long>();
  for (const auto& c : j.at("coeffs")) l.coeffs.push_back(bigint_from_json(c));
  return l;
}

}  // namespace kleinzeta
