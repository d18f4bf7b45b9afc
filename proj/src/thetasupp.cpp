#include "kleinzeta/thetasupp.hpp"

#include <chrono>
#include <climits>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"

namespace kleinzeta {

namespace {

using i128 = __int128;

// p-free part of a nonzero rational: x = p^val * num / den
struct PUnit {
  bool zero = true;
  int val = 0;
  std::int64_t num = 0, den = 1;
};

PUnit punit(const Rational& x, long p) {
  PUnit u;
  if (x == 0) return u;
  BigInt n = mp::numerator(x), d = mp::denominator(x);
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  if (mp::abs(n) > BigInt(INT64_MAX / 4) || d > BigInt(INT64_MAX / 4))
    throw std::overflow_error("thetasupp: entry unit part exceeds 64 bits");
  u.zero = false;
  u.val = v;
  u.num = static_cast<std::int64_t>(n);
  u.den = static_cast<std::int64_t>(d);
  return u;
}

int vp128(i128 a, long p) {
  int k = 0;
  while (a % p == 0) {
    a /= p;
    ++k;
  }
  return k;
}

// valuation of P + z Q, INT_MAX for zero; z = z.num * p^z.val (z.den = 1)
int affine_val(const PUnit& P, const PUnit& Q, const PUnit& z, long p) {
  bool qz = Q.zero || z.zero;
  if (qz) return P.zero ? INT_MAX : P.val;
  int tv = Q.val + z.val;
  if (P.zero) return tv;
  if (P.val != tv) return std::min(P.val, tv);
  i128 N = static_cast<i128>(P.num) * Q.den + static_cast<i128>(Q.num) * z.num * P.den;
  if (N == 0) return INT_MAX;
  return P.val + vp128(N, p);
}

bool entry_ok(int v, int vmin, bool exact) {
  if (v == INT_MAX) return !exact;
  return exact ? v == vmin : v >= vmin;
}

// rho image as P + x Q, entries for both blocks
struct AffineImage {
  std::array<PUnit, 8> P, Q;
};

bool affine_in_support(const AffineImage& A, const PUnit& z, const SupportSpec& s, long p) {
  for (int k = 0; k < 8; ++k) {
    const LatticeSpec& L = k < 4 ? s.first : s.second;
    int e = k % 4;
    if (!entry_ok(affine_val(A.P[k], A.Q[k], z, p), L.vmin[e], L.unit_exact[e])) return false;
  }
  return true;
}

PUnit x_punit(std::int64_t u, int v) {
  PUnit z;
  z.zero = (u == 0);
  z.num = u;
  z.val = v;
  return z;
}

// z + y with y = a p^b, both p-adically exact with den 1
PUnit add_punit(const PUnit& z, const PUnit& y, long p) {
  if (z.zero) return y;
  if (y.zero) return z;
  int lo = std::min(z.val, y.val);
  i128 N = 0;
  i128 a = z.num, b = y.num;
  for (int i = lo; i < z.val; ++i) a *= p;
  for (int i = lo; i < y.val; ++i) b *= p;
  N = a + b;
  PUnit r;
  if (N == 0) return r;
  int k = 0;
  while (N % p == 0) {
    N /= p;
    ++k;
  }
  if (N > INT64_MAX / 4 || N < -(INT64_MAX / 4))
    throw std::overflow_error("thetasupp: translate exceeds 64 bits");
  r.zero = false;
  r.num = static_cast<std::int64_t>(N);
  r.val = lo + k;
  return r;
}

struct Base {
  int m, n, r;
  long sk, tk;  // s = sk/p, t = tk/p
};

}  // namespace

int PadicMat2::entry_valuation(int i, int j) const {
  if (m(i, j) == 0) return INT_MAX;
  return valuation(m(i, j), p);
}

Mat2q mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Mat2q r;
  r << a, b, c, d;
  return r;
}

Rational pow_rat(long p, int e) {
  BigInt q = ipow(BigInt(p), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), q) : Rational(q);
}

Mat2q unipotent(const Rational& x) { return mat2(1, x, 0, 1); }
Mat2q diag_pm(long p, int m) { return mat2(pow_rat(p, m), 0, 0, 1); }
Mat2q atkin_lehner(long p) { return mat2(0, -1, Rational(p * p), 0); }
Mat2q e1_matrix(long p) { return mat2(0, Rational(1, p), 0, 0); }
Mat2q alpha_matrix(long p) { return mat2(Rational(1, p), 0, 0, Rational(-1, p)); }

Mat2q rho_act(const Mat2q& h1, const Mat2q& h2, const Mat2q& x) {
  Rational det = h1(0, 0) * h1(1, 1) - h1(0, 1) * h1(1, 0);
  if (det == 0) throw std::domain_error("rho_act: singular h1");
  Mat2q inv = mat2(h1(1, 1) / det, -h1(0, 1) / det, -h1(1, 0) / det, h1(0, 0) / det);
  Mat2q r = inv * x;
  return r * h2;
}

MatPair rho_act(const Mat2q& h1, const Mat2q& h2, const MatPair& x) {
  return {rho_act(h1, h2, x.first), rho_act(h1, h2, x.second)};
}

LatticeSpec LatticeSpec::shifted(int k) const {
  LatticeSpec r = *this;
  for (int& v : r.vmin) v += k;
  return r;
}

SupportSpec phi_lev(long) {
  SupportSpec s;
  s.first.vmin = {0, -1, 1, 0};
  s.second.vmin = {-1, -1, 1, -1};
  s.second.unit_exact = {true, false, false, true};
  return s;
}

SupportSpec phi_para(long) {
  SupportSpec s;
  s.first.vmin = {1, -1, 3, 1};
  s.second.vmin = {-1, -1, -1, -1};
  return s;
}

bool in_lattice(const Mat2q& x, const LatticeSpec& L, long p) {
  for (int k = 0; k < 4; ++k) {
    const Rational& e = x(k / 2, k % 2);
    int v = e == 0 ? INT_MAX : valuation(e, p);
    if (!entry_ok(v, L.vmin[k], L.unit_exact[k])) return false;
  }
  return true;
}

bool in_support(const MatPair& x, const SupportSpec& s, long p) {
  return in_lattice(x.first, s.first, p) && in_lattice(x.second, s.second, p);
}

std::string to_string(CosetType t) {
  switch (t) {
    case CosetType::I: return "I";
    case CosetType::II: return "II";
    case CosetType::III: return "III";
    case CosetType::IV: return "IV";
  }
  return "?";
}

CosetType parse_coset_type(const std::string& s) {
  if (s == "I") return CosetType::I;
  if (s == "II") return CosetType::II;
  if (s == "III") return CosetType::III;
  if (s == "IV") return CosetType::IV;
  throw std::invalid_argument("unknown coset type: " + s);
}

void CosetParams::validate(long p) const {
  bool ok = false;
  switch (type) {
    case CosetType::I: ok = (m + 2 * r == n); break;
    case CosetType::II: ok = (2 * r + m + 2 == n); break;
    case CosetType::III: ok = (m == n + 2 - 2 * r); break;
    case CosetType::IV: ok = (2 * r + m == n); break;
  }
  if (!ok) throw std::invalid_argument("coset params: (m,n,r) relation fails for type " + to_string(type));
  auto frac_ok = [p](const Rational& a) {
    if (a < 0 || a >= 1) return false;
    Rational pa = a * p;
    return mp::denominator(pa) == 1;
  };
  if (!frac_ok(s) || !frac_ok(t)) throw std::invalid_argument("coset params: s, t must lie in {0, 1/p, ..., (p-1)/p}");
  bool uses_s = type == CosetType::II || type == CosetType::IV;
  bool uses_t = type == CosetType::III || type == CosetType::IV;
  if ((!uses_s && s != 0) || (!uses_t && t != 0))
    throw std::invalid_argument("coset params: s or t set for a type without that factor");
}

MatPair coset_rep(const CosetParams& c, long p) {
  c.validate(p);
  Mat2q h1 = pow_rat(p, c.r) * unipotent(c.x) * diag_pm(p, c.m);
  Mat2q h2 = diag_pm(p, c.n);
  if (c.type == CosetType::II || c.type == CosetType::IV) h1 = h1 * atkin_lehner(p) * unipotent(c.s);
  if (c.type == CosetType::III || c.type == CosetType::IV) h2 = h2 * atkin_lehner(p) * unipotent(c.t);
  return {h1, h2};
}

MatPair coset_image(const CosetParams& c, long p) {
  auto [h1, h2] = coset_rep(c, p);
  return rho_act(h1, h2, MatPair{e1_matrix(p), alpha_matrix(p)});
}

std::string to_string(SupportClass c) {
  return c == SupportClass::Canceled ? "canceled" : "nonzero-possible";
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<Rational> translation_set(long p) {
  std::vector<Rational> out;
  for (long k = 1; k < p; ++k) out.emplace_back(k, p);
  out.emplace_back(1);
  out.emplace_back(p + 1, p);
  out.emplace_back(p);
  return out;
}

namespace {

std::vector<Base> enumerate_bases(CosetType type, long p, const ScanBox& box) {
  std::vector<Base> out;
  int R = box.radius;
  auto in = [R](int a) { return a >= -R && a <= R; };
  bool ws = box.whittaker_support;
  for (int a = -R; a <= R; ++a) {
    for (int b = -R; b <= R; ++b) {
      int m = 0, n = 0, r = 0;
      switch (type) {
        case CosetType::I: m = a, r = b, n = m + 2 * r; break;
        case CosetType::II: m = a, r = b, n = 2 * r + m + 2; break;
        case CosetType::III: n = a, r = b, m = n + 2 - 2 * r; break;
        case CosetType::IV: m = a, r = b, n = 2 * r + m; break;
      }
      if (!in(m) || !in(n) || !in(r)) continue;
      if (ws) {
        // h1 without the Atkin-Lehner factor: m = 0; h2 = diag(p^n,1): n = 0
        if ((type == CosetType::I || type == CosetType::III) && m != 0) continue;
        if ((type == CosetType::I || type == CosetType::II) && n != 0) continue;
      }
      long smax = (type == CosetType::II || type == CosetType::IV) ? p : 1;
      long tmax = (type == CosetType::III || type == CosetType::IV) ? p : 1;
      for (long sk = 0; sk < smax; ++sk)
        for (long tk = 0; tk < tmax; ++tk) out.push_back({m, n, r, sk, tk});
    }
  }
  return out;
}

AffineImage affine_image(CosetType type, const Base& b, long p) {
  CosetParams c;
  c.type = type;
  c.m = b.m;
  c.n = b.n;
  c.r = b.r;
  c.s = Rational(b.sk, p);
  c.t = Rational(b.tk, p);
  c.x = 0;
  MatPair P = coset_image(c, p);
  c.x = 1;
  MatPair P1 = coset_image(c, p);
  AffineImage A;
  for (int k = 0; k < 4; ++k) {
    int i = k / 2, j = k % 2;
    A.P[k] = punit(P.first(i, j), p);
    A.Q[k] = punit(P1.first(i, j) - P.first(i, j), p);
    A.P[4 + k] = punit(P.second(i, j), p);
    A.Q[4 + k] = punit(P1.second(i, j) - P.second(i, j), p);
  }
  return A;
}

struct BaseResult {
  std::uint64_t scanned = 0, support = 0;
  std::vector<TupleGroup> groups;
};

bool claims_need_box(const ScanBox& box) { return box.radius >= 1 && box.x_val_radius >= 1 && box.residue_exponent >= 1; }

}  // namespace

ScanResult scan_type(CosetType type, long p, const ScanBox& box) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("scan_type: p must be an odd prime");
  if (box.radius < 0 || box.x_val_radius < 0 || box.residue_exponent < 1 || box.residue_exponent > 6)
    throw std::invalid_argument("scan_type: bad box");
  auto t0 = std::chrono::steady_clock::now();
  ScanResult res;
  res.type = type;
  res.p = p;
  res.box = box;

  std::int64_t pe = 1;
  for (int i = 0; i < box.residue_exponent; ++i) pe *= p;
  std::vector<PUnit> xs;
  xs.push_back(PUnit{});  // x = 0
  for (int v = -box.x_val_radius; v <= box.x_val_radius; ++v)
    for (std::int64_t u = 1; u < pe; ++u)
      if (u % p != 0) xs.push_back(x_punit(u, v));
  std::vector<PUnit> shifts;
  for (const Rational& y : translation_set(p)) {
    PUnit q = punit(y, p);  // den is 1 for every translate
    shifts.push_back(q);
  }

  SupportSpec lev = phi_lev(p);
  std::vector<Base> bases = enumerate_bases(type, p, box);
  unsigned threads = box.threads ? box.threads : std::max(1u, std::thread::hardware_concurrency());

  auto per_base = detail::run_tasks<BaseResult>(bases.size(), threads, [&](std::size_t bi) {
    const Base& b = bases[bi];
    AffineImage A = affine_image(type, b, p);
    BaseResult br;
    std::array<TupleGroup, 2> g;
    for (int c = 0; c < 2; ++c) {
      g[c].m = b.m;
      g[c].n = b.n;
      g[c].r = b.r;
      g[c].s = Rational(b.sk, p);
      g[c].t = Rational(b.tk, p);
      g[c].cls = c ? SupportClass::Canceled : SupportClass::NonzeroPossible;
    }
    for (const PUnit& z : xs) {
      ++br.scanned;
      if (!affine_in_support(A, z, lev, p)) continue;
      ++br.support;
      bool stable = true;
      for (const PUnit& y : shifts) {
        if (!affine_in_support(A, add_punit(z, y, p), lev, p)) {
          stable = false;
          break;
        }
      }
      TupleGroup& t = g[stable ? 1 : 0];
      ++t.x_count;
      if (z.zero) {
        t.has_zero_x = true;
      } else {
        if (!t.min_x_val || z.val < *t.min_x_val) t.min_x_val = z.val;
        if (!t.max_x_val || z.val > *t.max_x_val) t.max_x_val = z.val;
      }
    }
    for (auto& t : g)
      if (t.x_count) br.groups.push_back(t);
    return br;
  });

  for (auto& br : per_base) {
    res.tuples_scanned += br.scanned;
    res.support_count += br.support;
    for (auto& g : br.groups) res.groups.push_back(std::move(g));
  }

  // claims
  bool boxed = claims_need_box(box);
  auto make = [&](std::string name, bool ok, std::string detail) {
    Claim c;
    c.name = std::move(name);
    c.status = !boxed ? ClaimStatus::Inconclusive : (ok ? ClaimStatus::Pass : ClaimStatus::Fail);
    if (!boxed) detail = "box too small to certify (need radius >= 1, x valuation radius >= 1); " + detail;
    c.detail = std::move(detail);
    res.claims.push_back(std::move(c));
  };
  auto is_zp = [](const TupleGroup& g) { return !g.min_x_val || *g.min_x_val >= 0; };
  std::uint64_t nz_tuples = 0;
  for (auto& g : res.groups)
    if (g.cls == SupportClass::NonzeroPossible) nz_tuples += g.x_count;

  switch (type) {
    case CosetType::I: {
      // every x in the box with v(x) >= 0, plus x = 0
      std::uint64_t units = 0;
      for (std::int64_t u = 1; u < pe; ++u)
        if (u % p) ++units;
      std::uint64_t expect = 1 + units * static_cast<std::uint64_t>(box.x_val_radius + 1);
      bool ok = true;
      std::uint64_t found = 0;
      for (auto& g : res.groups) {
        if (g.cls != SupportClass::NonzeroPossible) continue;
        if (g.m != 0 || g.n != 0 || g.r != 0 || !is_zp(g)) ok = false;
        else found += g.x_count;
      }
      ok = ok && found == expect;
      make("type I nonzero-possible set is {m=n=r=0, x in Z_p}", ok,
           "found " + std::to_string(found) + " of " + std::to_string(expect) + " box tuples with m=n=r=0, x in Z_p; " +
               std::to_string(nz_tuples) + " nonzero-possible in total");
      break;
    }
    case CosetType::II: {
      bool ok = nz_tuples == 0;
      std::string d = res.support_count == 0 ? "support empty in box"
                                             : std::to_string(res.support_count - nz_tuples) + " of " +
                                                   std::to_string(res.support_count) + " support tuples translation-stable";
      make("type II support tuples are stable under x -> x + p^-1 Z_p", ok, d);
      break;
    }
    case CosetType::III:
      make("type III support is empty", res.support_count == 0,
           std::to_string(res.support_count) + " support tuples");
      break;
    case CosetType::IV: {
      bool ok = true;
      for (auto& g : res.groups) {
        if (g.cls != SupportClass::NonzeroPossible) continue;
        Rational st = g.s + g.t;
        bool integral = mp::denominator(st) == 1;
        if (g.m != 0 || g.n != 0 || g.r != 0 || !is_zp(g) || !integral) ok = false;
      }
      make("type IV nonzero-possible tuples have m=n=r=0, x in Z_p, s+t in Z", ok,
           std::to_string(nz_tuples) + " nonzero-possible tuples");
      make("type IV has nonzero-possible tuples", nz_tuples > 0, std::to_string(nz_tuples) + " found");
      break;
    }
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

CyclotomicNumber additive_character(long p, int v, long a) {
  if (v < 0) throw std::invalid_argument("additive_character: v < 0");
  if (v == 0) return CyclotomicNumber(1);
  long q = static_cast<long>(ipow(BigInt(p), static_cast<unsigned>(v)));
  return CyclotomicNumber::zeta(q, mod_floor(-a, q));
}

CyclotomicNumber char_sum(long p, int v) {
  if (v < 0) throw std::invalid_argument("char_sum: v < 0");
  if (v == 0) return CyclotomicNumber(1);
  long q = static_cast<long>(ipow(BigInt(p), static_cast<unsigned>(v)));
  std::vector<Rational> c(static_cast<std::size_t>(q));
  for (long a = 0; a < q; ++a) c[static_cast<std::size_t>(mod_floor(-a, q))] += 1;
  return CyclotomicNumber::from_exponents(q, c);
}

std::vector<MatPair> gamma0_samples(long p, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-40, 40);
  long p2 = p * p;
  std::vector<MatPair> out;
  while (static_cast<int>(out.size()) < count) {
    long a = d(rng), b = d(rng), c = d(rng), dd = d(rng);
    Rational det = Rational(a * dd - p2 * b * c);
    if (det == 0 || valuation(det, p) != 0) continue;
    long a2 = d(rng);
    if (a2 == 0 || a2 % p == 0) continue;
    long b2 = d(rng), c2 = d(rng);
    Rational d2 = (det + Rational(p2 * b2 * c2)) / Rational(a2);
    out.push_back({mat2(a, b, Rational(p2 * c), dd), mat2(a2, b2, Rational(p2 * c2), d2)});
  }
  return out;
}

std::vector<MatPair> stabilizer_samples(long p) {
  std::vector<MatPair> out;
  for (long x : {0L, 1L, -1L, 2L, p, p + 1, 7 * p * p - 3})
    out.push_back({unipotent(Rational(x)), unipotent(Rational(-x))});
  return out;
}

std::vector<MatPair> probe_pairs(long p) {
  Rational ip(1, p), P(p), P2(p * p);
  Mat2q e1 = e1_matrix(p), al = alpha_matrix(p);
  std::vector<MatPair> out = {
      {e1, al},
      {P * e1, al},
      {e1, al + mat2(0, 0, P, 0)},
      {e1, al + mat2(0, ip, 0, 0)},
      {e1, P * al},
      {e1, al + mat2(0, 0, 1, 0)},
      {mat2(ip, 0, 0, 0), al},
      {mat2(0, 0, 1, 0), al},
      {mat2(1, ip, P, 1), mat2(ip, 2 * ip, P2, -ip)},
      {mat2(0, ip * ip, 0, 0), al},
      {mat2(0, 0, 0, 0), mat2(ip, 0, 0, ip)},
      {e1, mat2(ip, 0, 0, ip * ip)},
  };
  // boundary-valued random probes
  std::mt19937_64 rng(20260 + static_cast<std::uint64_t>(p));
  std::uniform_int_distribution<long> unit(1, p - 1), shift(-1, 1);
  SupportSpec lev = phi_lev(p);
  for (int i = 0; i < 40; ++i) {
    MatPair x;
    for (int blk = 0; blk < 2; ++blk) {
      const LatticeSpec& L = blk ? lev.second : lev.first;
      Mat2q& mref = blk ? x.second : x.first;
      for (int k = 0; k < 4; ++k) {
        long s = shift(rng);
        mref(k / 2, k % 2) = s == 1 && k == 2 ? Rational(0) : Rational(unit(rng) + (i % 3) * p) * pow_rat(p, L.vmin[k] + s);
      }
    }
    out.push_back(x);
  }
  return out;
}

bool stabilizer_invariance_check(long p, const std::vector<MatPair>& samples) {
  SupportSpec lev = phi_lev(p);
  std::vector<MatPair> probes = probe_pairs(p);
  for (const auto& g : samples) {
    for (const auto& x : probes) {
      if (in_support(rho_act(g.first, g.second, x), lev, p) != in_support(x, lev, p)) return false;
    }
  }
  return true;
}

std::complex<double> p_form(const Eigen::Matrix2d& x, PSign sign) {
  using C = std::complex<double>;
  const C i(0, 1);
  Mat2c A;
  if (sign == PSign::Plus)
    A << -i, C(-1), C(-1), i;
  else
    A << i, C(1), C(-1), i;
  return (x.cast<C>() * A).trace();
}

double archimedean_equivariance(double t1, double t2, const Eigen::Matrix2d& x, PSign sign) {
  auto rot = [](double t) {
    Eigen::Matrix2d u;
    u << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
    return u;
  };
  Eigen::Matrix2d y = rot(t1).transpose() * x * rot(t2);
  double ph = sign == PSign::Plus ? t2 + t1 : t2 - t1;
  std::complex<double> phase = std::polar(1.0, -ph);
  return std::abs(p_form(y, sign) - phase * p_form(x, sign));
}

}  // namespace kleinzeta
