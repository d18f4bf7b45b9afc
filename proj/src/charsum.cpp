// Character-sum route for #X(F_q), q odd.
//
// In the fiber count only  sum chi(x4^4 - 4 x1 (x1^2 x2 + x2^2 x3 + x3^2 x4))
// over x1 != 0 is hard.  Summing over x2 first (quadratic in x2 when x3 != 0,
// linear otherwise) leaves q * sum chi(-x1 x3) over the zero locus of the
// x2-discriminant, and the substitution u = x3/x1, y = x4/x1 turns that into
//
//   q (q-1) sum_{u != 0} chi(-u) R(u),   R(u) = #{y : 1 + u y^4 - 4 u^3 y = 0}.
//
// R(u) = deg gcd(y^q - y, f_u), computed in log (Zech) arithmetic; R and chi(-u)
// are constant on Frobenius orbits u -> u^p, so only orbit leaders are done.

#include <array>
#include <memory>

#include "kleinzeta/counting.hpp"
#include "parallel.hpp"

namespace kleinzeta {

namespace {

constexpr std::uint32_t NO = FieldTables::kNoLog;

struct LogArith {
  std::uint32_t n, half;
  const std::uint32_t* zech;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == NO || b == NO) return NO;
    std::uint32_t s = a + b;  // n < 2^25, no overflow
    return s >= n ? s - n : s;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (a == NO) return b;
    if (b == NO) return a;
    std::uint32_t d = b >= a ? b - a : b + n - a;
    std::uint32_t z = zech[d];
    if (z == NO) return NO;
    std::uint32_t s = a + z;
    return s >= n ? s - n : s;
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (a == NO) return NO;
    std::uint32_t s = a + half;
    return s >= n ? s - n : s;
  }
  std::uint32_t inv(std::uint32_t a) const { return a == 0 ? 0 : n - a; }
  std::uint32_t frob(std::uint32_t a, std::uint64_t p) const {
    return a == NO ? NO : static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * p % n);
  }
};

using Cubic = std::array<std::uint32_t, 4>;  // residues mod the monic quartic

struct Quartic {
  const LogArith& la;
  std::uint32_t r1, r0;  // y^4 = r1 y + r0

  Cubic mulmod(const Cubic& a, const Cubic& b) const {
    std::array<std::uint32_t, 7> c;
    c.fill(NO);
    for (int i = 0; i < 4; ++i) {
      if (a[i] == NO) continue;
      for (int j = 0; j < 4; ++j) c[i + j] = la.add(c[i + j], la.mul(a[i], b[j]));
    }
    for (int d = 6; d >= 4; --d) {
      if (c[d] == NO) continue;
      c[d - 3] = la.add(c[d - 3], la.mul(c[d], r1));
      c[d - 4] = la.add(c[d - 4], la.mul(c[d], r0));
    }
    return {c[0], c[1], c[2], c[3]};
  }
  Cubic mul_y(const Cubic& a) const {
    Cubic r{NO, a[0], a[1], a[2]};
    if (a[3] != NO) {
      r[1] = la.add(r[1], la.mul(a[3], r1));
      r[0] = la.add(r[0], la.mul(a[3], r0));
    }
    return r;
  }
};

int degree(const std::array<std::uint32_t, 5>& a) {
  for (int d = 4; d >= 0; --d)
    if (a[d] != NO) return d;
  return -1;
}

// degree of gcd(a, b) over F_q, coefficients as logs
int gcd_degree(std::array<std::uint32_t, 5> a, std::array<std::uint32_t, 5> b, const LogArith& la) {
  for (;;) {
    int db = degree(b);
    if (db < 0) return degree(a);
    int da;
    const std::uint32_t lb_inv = la.inv(b[db]);
    while ((da = degree(a)) >= db) {
      std::uint32_t fac = la.neg(la.mul(a[da], lb_inv));
      int shift = da - db;
      for (int i = 0; i <= db; ++i) a[i + shift] = la.add(a[i + shift], la.mul(fac, b[i]));
      a[da] = NO;  // exact cancellation of the leading term
    }
    std::swap(a, b);
  }
}

}  // namespace

BigInt count_klein_charsum(const Field& f, const CountOptions& opt) {
  const std::uint64_t p = f->p(), q = f->q();
  const unsigned k = f->k();
  if (p == 2) throw std::domain_error("count_klein_charsum: characteristic 2");
  if (q > FieldTables::kMaxQ) throw BudgetExceeded("count_klein_charsum: field too large for log tables");
  std::unique_ptr<FieldTables> own;
  const FieldTables* tab = f->tables();
  if (!tab) {
    own = std::make_unique<FieldTables>(*f);
    tab = own.get();
  }
  const std::uint32_t n = static_cast<std::uint32_t>(q - 1);
  const LogArith la{n, n / 2, tab->zech_table().data()};
  const std::uint32_t log4 = tab->log(4 % p);
  const unsigned threads = resolve_threads(opt.threads);
  const std::uint64_t chunk = opt.chunk ? opt.chunk : std::max<std::uint64_t>(1, n / (16ull * threads));
  const std::size_t ntasks = (n + chunk - 1) / chunk;

  auto roots = [&](std::uint32_t l) -> int {
    // monic f = y^4 - 4u^2 y + u^{-1}
    const std::uint32_t u2 = la.mul(l, l);
    const Quartic fq{la, la.mul(log4, u2), la.neg(la.inv(l))};
    // y^p by square and multiply
    Cubic yp{0, NO, NO, NO};
    int top = 63;
    while (!((p >> top) & 1)) --top;
    for (int b = top; b >= 0; --b) {
      yp = fq.mulmod(yp, yp);
      if ((p >> b) & 1) yp = fq.mul_y(yp);
    }
    // y^{p^j} -> y^{p^{j+1}}: Frobenius on coefficients, then y -> y^p
    Cubic h = yp;
    if (k > 1) {
      const Cubic m2 = fq.mulmod(yp, yp), m3 = fq.mulmod(m2, yp);
      const Cubic* cols[4] = {nullptr, &yp, &m2, &m3};
      for (unsigned it = 1; it < k; ++it) {
        Cubic nh{la.frob(h[0], p), NO, NO, NO};
        for (int i = 1; i < 4; ++i) {
          std::uint32_t c = la.frob(h[i], p);
          if (c == NO) continue;
          for (int j = 0; j < 4; ++j) nh[j] = la.add(nh[j], la.mul(c, (*cols[i])[j]));
        }
        h = nh;
      }
    }
    std::array<std::uint32_t, 5> a{h[0], la.add(h[1], la.neg(0)), h[2], h[3], NO};
    std::array<std::uint32_t, 5> fm{la.neg(fq.r0), la.neg(fq.r1), NO, NO, 0};
    if (degree(a) < 0) return 4;
    return gcd_degree(fm, a, la);
  };

  auto task = [&](std::size_t t) -> std::int64_t {
    std::int64_t acc = 0;
    const std::uint64_t lo = t * chunk, hi = std::min<std::uint64_t>(n, lo + chunk);
    for (std::uint64_t l = lo; l < hi; ++l) {
      std::uint64_t cur = l * p % n, size = 1;
      bool leader = true;
      while (cur != l) {
        if (cur < l) {
          leader = false;
          break;
        }
        cur = cur * p % n;
        ++size;
      }
      if (!leader) continue;
      int r = roots(static_cast<std::uint32_t>(l));
      if (!r) continue;
      int chi = ((l + n / 2) & 1) ? -1 : 1;  // chi(-u)
      acc += static_cast<std::int64_t>(size) * chi * r;
    }
    return acc;
  };
  auto parts = detail::run_tasks<std::int64_t>(ntasks, threads, task);
  std::int64_t sigma = 0;
  for (auto v : parts) sigma += v;

  BigInt Q = q;
  BigInt affine = (Q - 1) * Q * Q * Q + Q * (Q - 1) * BigInt(sigma) + (Q - 1) * Q * Q + Q * (2 * Q - 1);
  BigInt num = affine - 1;
  if (num % (q - 1) != 0) throw std::logic_error("count_klein_charsum: affine count not 1 mod q-1");
  return num / (q - 1);
}

}  // namespace kleinzeta
