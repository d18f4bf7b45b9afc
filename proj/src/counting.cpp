#include "kleinzeta/counting.hpp"

#include <chrono>
#include <thread>

#include "parallel.hpp"
#include "smallarith.hpp"

namespace kleinzeta {

using detail::PrimeArith;
using detail::TableArith;

void HomogeneousForm::add_term(const Exponents& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("add_term: wrong number of exponents");
  int d = 0;
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("add_term: negative exponent");
    d += x;
  }
  if (d != degree_) throw std::invalid_argument("add_term: term degree does not match form degree");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt HomogeneousForm::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& o) const {
  if (o.nvars_ != nvars_ || o.degree_ != degree_) throw std::invalid_argument("form sum: shape mismatch");
  HomogeneousForm r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("form product: variable count mismatch");
  HomogeneousForm r(nvars_, degree_ + o.degree_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

bool HomogeneousForm::operator==(const HomogeneousForm& o) const {
  return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
}

HomogeneousForm HomogeneousForm::substitute_monomials(const std::vector<Exponents>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitute: need one image per variable");
  int m = static_cast<int>(images.at(0).size());
  int img_deg = -1;
  for (const auto& im : images) {
    int d = 0;
    for (int x : im) d += x;
    if (static_cast<int>(im.size()) != m || (img_deg >= 0 && d != img_deg))
      throw std::invalid_argument("substitute: images must be monomials of one common degree");
    img_deg = d;
  }
  HomogeneousForm r(m, degree_ * img_deg);
  for (const auto& [e, c] : terms_) {
    Exponents out(m, 0);
    for (int i = 0; i < nvars_; ++i)
      for (int j = 0; j < m; ++j) out[j] += e[i] * images[i][j];
    r.add_term(out, c);
  }
  return r;
}

FieldElement HomogeneousForm::evaluate(const std::vector<FieldElement>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("evaluate: wrong number of values");
  const Field& f = x.at(0).field();
  FieldElement sum(f);
  for (const auto& [e, c] : terms_) {
    BigInt cm = c % BigInt(f->p());
    FieldElement t = FieldElement::from_int(f, cm.convert_to<long>());
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t = t * x[i].pow(static_cast<std::uint64_t>(e[i]));
    sum = sum + t;
  }
  return sum;
}

HomogeneousForm klein_cubic() {
  HomogeneousForm s(5, 3);
  for (int i = 0; i < 5; ++i) {
    Exponents e(5, 0);
    e[i] = 2;
    e[(i + 1) % 5] = 1;
    s.add_term(e, 1);
  }
  return s;
}

HomogeneousForm linear_form(int nvars, int var) {
  HomogeneousForm s(nvars, 1);
  Exponents e(nvars, 0);
  e.at(var) = 1;
  s.add_term(e, 1);
  return s;
}

BigInt WeierstrassCurve::discriminant() const {
  BigInt A1 = a1, A2 = a2, A3 = a3, A4 = a4, A6 = a6;
  BigInt b2 = A1 * A1 + 4 * A2;
  BigInt b4 = 2 * A4 + A1 * A3;
  BigInt b6 = A3 * A3 + 4 * A6;
  BigInt b8 = A1 * A1 * A6 + 4 * A2 * A6 - A1 * A3 * A4 + A2 * A3 * A3 - A4 * A4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

WeierstrassCurve klein_cm_curve() { return WeierstrassCurve{0, -1, 1, -7, 10}; }

std::string to_string(CountAlgorithm a) {
  switch (a) {
    case CountAlgorithm::Auto: return "auto";
    case CountAlgorithm::QuadFiber: return "quad-fiber";
    case CountAlgorithm::CharSum: return "char-sum";
    case CountAlgorithm::Direct: return "direct";
    case CountAlgorithm::Naive: return "naive";
  }
  return "?";
}

CountAlgorithm parse_count_algorithm(const std::string& s) {
  for (auto a : {CountAlgorithm::Auto, CountAlgorithm::QuadFiber, CountAlgorithm::CharSum, CountAlgorithm::Direct,
                 CountAlgorithm::Naive})
    if (to_string(a) == s) return a;
  throw std::invalid_argument("unknown count algorithm: " + s);
}

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

BigInt projective_space_count(std::uint64_t q, int dim) {
  BigInt s = 0, t = 1;
  for (int i = 0; i <= dim; ++i) {
    s += t;
    t *= q;
  }
  return s;
}

namespace {

// q^n, saturating at 2^64-1
std::uint64_t sat_pow(std::uint64_t q, int n) {
  unsigned __int128 r = 1;
  for (int i = 0; i < n; ++i) {
    r *= q;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

void require_budget(std::uint64_t work, const CountOptions& opt, const char* what) {
  if (work > opt.budget)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(work) + " exceeds budget " +
                         std::to_string(opt.budget));
}

BigInt projective_from_affine(const BigInt& affine, std::uint64_t q) {
  BigInt num = affine - 1;
  if (num % (q - 1) != 0) throw std::logic_error("affine count not congruent to 1 mod q-1");
  return num / (q - 1);
}

struct CompiledTerm {
  std::uint64_t coef;
  std::vector<int> exps;
};

template <typename Arith>
std::vector<CompiledTerm> compile(const HomogeneousForm& s, const Arith& ar, std::uint64_t p) {
  std::vector<CompiledTerm> out;
  for (const auto& [e, c] : s.terms()) {
    BigInt cm = c % BigInt(p);
    long v = cm.convert_to<long>();
    std::uint64_t ci = ar.from_int(v);
    if (ci == 0) continue;
    out.push_back({ci, e});
  }
  return out;
}

template <typename Arith>
std::uint64_t eval_terms(const std::vector<CompiledTerm>& terms, const Arith& ar, const std::uint64_t* x) {
  std::uint64_t sum = 0;
  for (const auto& t : terms) {
    std::uint64_t v = t.coef;
    for (std::size_t i = 0; i < t.exps.size() && v; ++i)
      for (int k = 0; k < t.exps[i]; ++k) v = ar.mul(v, x[i]);
    sum = ar.add(sum, v);
  }
  return sum;
}

// iterate all vectors in [0,q)^n; fn(x) per point
template <typename Fn>
void for_each_point(int n, std::uint64_t q, std::uint64_t* x, Fn fn) {
  for (int i = 0; i < n; ++i) x[i] = 0;
  for (;;) {
    fn();
    int i = n - 1;
    while (i >= 0 && ++x[i] == q) x[i--] = 0;
    if (i < 0) return;
  }
}

template <typename Arith>
BigInt naive_impl(const HomogeneousForm& s, const Arith& ar, std::uint64_t p) {
  const int n = s.nvars();
  const std::uint64_t q = ar.q();
  auto terms = compile(s, ar, p);
  std::uint64_t total = 0;
  std::vector<std::uint64_t> x(n);
  // representatives: first nonzero coordinate equal to 1
  for (int j = 0; j < n; ++j) {
    std::fill(x.begin(), x.end(), 0);
    x[j] = 1;
    int free = n - 1 - j;
    if (free == 0) {
      if (eval_terms(terms, ar, x.data()) == 0) ++total;
      continue;
    }
    for_each_point(free, q, x.data() + j + 1, [&] {
      if (eval_terms(terms, ar, x.data()) == 0) ++total;
    });
  }
  return BigInt(total);
}

template <typename Arith>
BigInt x0_fiber_impl(const HomogeneousForm& s, const Arith& ar, const FieldTables& tab, std::uint64_t p) {
  const int n = s.nvars();
  const std::uint64_t q = ar.q();
  HomogeneousForm a(n, s.degree()), b(n, s.degree()), c(n, s.degree());
  for (const auto& [e, coef] : s.terms()) {
    if (e[0] == 2) a.add_term(e, coef);
    else if (e[0] == 1) b.add_term(e, coef);
    else if (e[0] == 0) c.add_term(e, coef);
    else throw std::invalid_argument("count_by_x0_fibers: form has degree > 2 in x0");
  }
  auto ta = compile(a, ar, p), tb = compile(b, ar, p), tc = compile(c, ar, p);
  const std::uint64_t four = ar.from_int(4);
  std::vector<std::uint64_t> x(n);
  BigInt affine = 0;
  std::uint64_t acc = 0;
  x[0] = 1;  // x0 only enters through its exponent, evaluate the coefficient forms at x0 = 1
  for_each_point(n - 1, q, x.data() + 1, [&] {
    std::uint64_t va = eval_terms(ta, ar, x.data());
    std::uint64_t vb = eval_terms(tb, ar, x.data());
    std::uint64_t vc = eval_terms(tc, ar, x.data());
    if (va) {
      std::uint64_t disc = ar.sub(ar.mul(vb, vb), ar.mul(four, ar.mul(va, vc)));
      acc += static_cast<std::uint64_t>(1 + tab.chi(disc));
    } else if (vb) {
      acc += 1;
    } else if (vc == 0) {
      acc += q;
    }
  });
  affine = acc;
  return projective_from_affine(affine, q);
}

template <typename Arith>
BigInt direct_impl(const Arith& ar, unsigned threads) {
  const std::uint64_t q = ar.q();
  // S = x1 x0^2 + x4^2 x0 + (x1^2 x2 + x2^2 x3 + x3^2 x4)
  auto per_x1 = [&](std::size_t t) -> std::uint64_t {
    std::uint64_t x1 = t, acc = 0;
    for (std::uint64_t x2 = 0; x2 < q; ++x2)
      for (std::uint64_t x3 = 0; x3 < q; ++x3)
        for (std::uint64_t x4 = 0; x4 < q; ++x4) {
          std::uint64_t b = ar.mul(x4, x4);
          std::uint64_t c = ar.add(ar.add(ar.mul(ar.mul(x1, x1), x2), ar.mul(ar.mul(x2, x2), x3)), ar.mul(ar.mul(x3, x3), x4));
          for (std::uint64_t x0 = 0; x0 < q; ++x0) {
            std::uint64_t v = ar.add(ar.mul(x0, ar.add(ar.mul(x1, x0), b)), c);
            if (v == 0) ++acc;
          }
        }
    return acc;
  };
  auto parts = detail::run_tasks<std::uint64_t>(q, threads, per_x1);
  BigInt affine = 0;
  for (auto v : parts) affine += v;
  return projective_from_affine(affine, q);
}

std::uint64_t task_chunk(std::uint64_t items, unsigned threads, std::uint64_t requested) {
  if (requested) return requested;
  std::uint64_t c = items / (8ull * threads);
  return c ? c : 1;
}

// sum of chi(x4^4 + K1 x4 + K0) over x1 != 0, x2, x3, x4, prime field
std::int64_t fast_prime_kernel(const FieldDescriptor& f, unsigned threads, std::uint64_t chunk_req) {
  const std::uint64_t p = f.p();
  const auto& chi = f.tables()->chi_table();
  std::vector<std::uint32_t> pow4(p);
  for (std::uint64_t x = 0; x < p; ++x) pow4[x] = static_cast<std::uint32_t>(x * x % p * x % p * x % p);
  const std::uint64_t items = p - 1;
  const std::uint64_t chunk = task_chunk(items, threads, chunk_req);
  const std::size_t ntasks = (items + chunk - 1) / chunk;
  auto task = [&](std::size_t t) -> std::int64_t {
    std::int64_t acc = 0;
    const std::uint64_t lo = 1 + t * chunk, hi = std::min<std::uint64_t>(p, lo + chunk);
    for (std::uint64_t x1 = lo; x1 < hi; ++x1) {
      const std::uint64_t m4x1 = (p - 4 % p) * x1 % p;  // -4 x1
      const std::uint64_t x1sq = x1 * x1 % p;
      for (std::uint64_t x2 = 0; x2 < p; ++x2) {
        const std::uint64_t x2sq = x2 * x2 % p;
        const std::uint64_t base = x1sq * x2 % p;
        for (std::uint64_t x3 = 0; x3 < p; ++x3) {
          const std::uint64_t K0 = m4x1 * ((base + x2sq * x3) % p) % p;
          const std::uint64_t K1 = m4x1 * (x3 * x3 % p) % p;
          std::uint64_t m = 0;
          std::int64_t s = 0;
          for (std::uint64_t x4 = 0; x4 < p; ++x4) {
            std::uint64_t d = pow4[x4] + m;
            if (d >= p) d -= p;
            d += K0;
            if (d >= p) d -= p;
            s += chi[d];
            m += K1;
            if (m >= p) m -= p;
          }
          acc += s;
        }
      }
    }
    return acc;
  };
  auto parts = detail::run_tasks<std::int64_t>(ntasks, threads, task);
  std::int64_t total = 0;
  for (auto v : parts) total += v;
  return total;
}

// same sum over a small extension field: table addition, x4 walked by powers of g
std::int64_t fast_table_kernel(const FieldDescriptor& f, unsigned threads, std::uint64_t chunk_req) {
  const TableArith ar(f);
  const FieldTables& tab = *f.tables();
  const std::uint64_t q = f.q(), n = q - 1;
  const auto& chi = tab.chi_table();
  std::vector<std::uint16_t> expd(2 * n), exp4(n);
  for (std::uint64_t j = 0; j < 2 * n; ++j) expd[j] = static_cast<std::uint16_t>(tab.exp(j));
  for (std::uint64_t j = 0; j < n; ++j) exp4[j] = static_cast<std::uint16_t>(tab.exp(4 * j));
  const std::uint16_t* add = ar.add_.data();
  const std::uint64_t minus4 = ar.from_int(-4);
  const std::uint64_t chunk = task_chunk(n, threads, chunk_req);
  const std::size_t ntasks = (n + chunk - 1) / chunk;
  auto task = [&](std::size_t t) -> std::int64_t {
    std::int64_t acc = 0;
    const std::uint64_t lo = 1 + t * chunk, hi = std::min<std::uint64_t>(q, lo + chunk);
    for (std::uint64_t x1 = lo; x1 < hi; ++x1) {
      const std::uint64_t m4x1 = ar.mul(minus4, x1);
      const std::uint64_t x1sq = ar.mul(x1, x1);
      for (std::uint64_t x2 = 0; x2 < q; ++x2) {
        const std::uint64_t x2sq = ar.mul(x2, x2);
        const std::uint64_t base = ar.mul(x1sq, x2);
        for (std::uint64_t x3 = 0; x3 < q; ++x3) {
          const std::uint64_t K0 = ar.mul(m4x1, ar.add(base, ar.mul(x2sq, x3)));
          const std::uint64_t K1 = ar.mul(m4x1, ar.mul(x3, x3));
          std::int64_t s = chi[K0];  // x4 = 0
          if (K1 == 0) {
            for (std::uint64_t j = 0; j < n; ++j) s += chi[add[exp4[j] * q + K0]];
          } else {
            const std::uint16_t* e1 = expd.data() + tab.log(K1);
            for (std::uint64_t j = 0; j < n; ++j) {
              std::uint64_t d = add[exp4[j] * q + e1[j]];
              s += chi[add[d * q + K0]];
            }
          }
          acc += s;
        }
      }
    }
    return acc;
  };
  auto parts = detail::run_tasks<std::int64_t>(ntasks, threads, task);
  std::int64_t total = 0;
  for (auto v : parts) total += v;
  return total;
}

}  // namespace

BigInt count_klein_fast(const Field& f, const CountOptions& opt) {
  if (f->p() == 2) throw std::domain_error("count_klein_fast: characteristic 2, use the direct counter");
  const std::uint64_t q = f->q();
  require_budget(sat_pow(q, 4), opt, "count_klein_fast");
  if (!f->tables()) throw BudgetExceeded("count_klein_fast: field has no character table");
  const unsigned threads = resolve_threads(opt.threads);
  std::int64_t chisum;
  if (f->k() == 1) {
    chisum = fast_prime_kernel(*f, threads, opt.chunk);
  } else {
    if (q > TableArith::kMaxQ) throw BudgetExceeded("count_klein_fast: extension field too large for addition tables");
    chisum = fast_table_kernel(*f, threads, opt.chunk);
  }
  // x1 != 0: q^3 (q-1) fibers contribute 1 + chi(disc)
  // x1 = 0, x4 != 0: linear in x0, one root each
  // x1 = x4 = 0: q roots iff x2^2 x3 = 0, which has 2q-1 solutions
  BigInt Q = q;
  BigInt affine = (Q - 1) * Q * Q * Q + BigInt(chisum) + (Q - 1) * Q * Q + Q * (2 * Q - 1);
  return projective_from_affine(affine, q);
}

BigInt count_klein_direct(const Field& f, const CountOptions& opt) {
  require_budget(sat_pow(f->q(), 5), opt, "count_klein_direct");
  const unsigned threads = resolve_threads(opt.threads);
  if (f->k() == 1) return direct_impl(PrimeArith(*f), threads);
  if (f->q() > TableArith::kMaxQ) throw BudgetExceeded("count_klein_direct: field too large for tables");
  return direct_impl(TableArith(*f), threads);
}

BigInt count_hypersurface_naive(const HomogeneousForm& s, const Field& f, const CountOptions& opt) {
  require_budget(sat_pow(f->q(), s.nvars()), opt, "count_hypersurface_naive");
  if (f->k() == 1) return naive_impl(s, PrimeArith(*f), f->p());
  if (f->q() > TableArith::kMaxQ) throw BudgetExceeded("count_hypersurface_naive: field too large for tables");
  return naive_impl(s, TableArith(*f), f->p());
}

BigInt count_by_x0_fibers(const HomogeneousForm& s, const Field& f, const CountOptions& opt) {
  if (f->p() == 2) throw std::domain_error("count_by_x0_fibers: characteristic 2");
  require_budget(sat_pow(f->q(), s.nvars() - 1), opt, "count_by_x0_fibers");
  if (!f->tables()) throw BudgetExceeded("count_by_x0_fibers: field has no character table");
  if (f->k() == 1) return x0_fiber_impl(s, PrimeArith(*f), *f->tables(), f->p());
  if (f->q() > TableArith::kMaxQ) throw BudgetExceeded("count_by_x0_fibers: field too large for tables");
  return x0_fiber_impl(s, TableArith(*f), *f->tables(), f->p());
}

CountAlgorithm resolve_count_algorithm(const Field& f, CountAlgorithm requested, const CountOptions& opt) {
  if (requested != CountAlgorithm::Auto) return requested;
  if (f->p() == 2) return CountAlgorithm::Direct;
  bool fiber_ok = sat_pow(f->q(), 4) <= opt.budget && f->tables() && (f->k() == 1 || f->q() <= TableArith::kMaxQ);
  return fiber_ok ? CountAlgorithm::QuadFiber : CountAlgorithm::CharSum;
}

CountRecord count_klein(const Field& f, CountAlgorithm algorithm, const CountOptions& opt) {
  CountRecord rec;
  rec.p = f->p();
  rec.k = f->k();
  rec.algorithm = resolve_count_algorithm(f, algorithm, opt);
  auto t0 = std::chrono::steady_clock::now();
  switch (rec.algorithm) {
    case CountAlgorithm::QuadFiber: rec.count = count_klein_fast(f, opt); break;
    case CountAlgorithm::CharSum: rec.count = count_klein_charsum(f, opt); break;
    case CountAlgorithm::Direct: rec.count = count_klein_direct(f, opt); break;
    case CountAlgorithm::Naive: rec.count = count_hypersurface_naive(klein_cubic(), f, opt); break;
    case CountAlgorithm::Auto: throw std::logic_error("unresolved algorithm");
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

namespace {

template <typename Arith>
std::uint64_t weierstrass_impl(const WeierstrassCurve& e, const Arith& ar, const FieldTables* tab, std::uint64_t p) {
  const std::uint64_t q = ar.q();
  auto c = [&](long v) { return ar.from_int(v); };
  std::uint64_t count = 1;  // point at infinity
  if (p != 2) {
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    long b2 = e.a1 * e.a1 + 4 * e.a2, b4 = 2 * e.a4 + e.a1 * e.a3, b6 = e.a3 * e.a3 + 4 * e.a6;
    const std::uint64_t c4 = c(4), cb2 = c(b2), c2b4 = c(2 * b4), cb6 = c(b6);
    for (std::uint64_t x = 0; x < q; ++x) {
      std::uint64_t r = ar.add(ar.mul(ar.add(ar.mul(ar.add(ar.mul(c4, x), cb2), x), c2b4), x), cb6);
      count += static_cast<std::uint64_t>(1 + tab->chi(r));
    }
    return count;
  }
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint64_t rhs = ar.add(ar.mul(ar.add(ar.mul(ar.add(x, c(e.a2)), x), c(e.a4)), x), c(e.a6));
    for (std::uint64_t y = 0; y < q; ++y) {
      std::uint64_t lhs = ar.mul(y, ar.add(ar.add(y, ar.mul(c(e.a1), x)), c(e.a3)));
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

}  // namespace

std::uint64_t count_weierstrass(const WeierstrassCurve& e, const Field& f) {
  if (e.discriminant() % BigInt(f->p()) == 0)
    throw std::invalid_argument("count_weierstrass: bad reduction at p = " + std::to_string(f->p()));
  if (!f->tables()) throw BudgetExceeded("count_weierstrass: field has no character table");
  if (f->k() == 1) return weierstrass_impl(e, PrimeArith(*f), f->tables(), f->p());
  if (f->q() > TableArith::kMaxQ) throw BudgetExceeded("count_weierstrass: field too large for tables");
  return weierstrass_impl(e, TableArith(*f), f->tables(), f->p());
}

std::uint64_t quadratic_root_count(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  const Field& f = a.field();
  if (f->p() == 2) throw std::domain_error("quadratic_root_count: characteristic 2");
  if (!a.is_zero()) {
    FieldElement disc = b * b - FieldElement::from_int(f, 4) * a * c;
    return static_cast<std::uint64_t>(1 + quadratic_character(disc));
  }
  if (!b.is_zero()) return 1;
  return c.is_zero() ? f->q() : 0;
}

std::vector<Exponents> fermat_cover_map() {
  // x_i = y_i^4 y_{i+1}^2 y_{i+2}^3 y_{i+3}^8
  std::vector<Exponents> im(5, Exponents(5, 0));
  const int w[4] = {4, 2, 3, 8};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) im[i][(i + j) % 5] += w[j];
  return im;
}

bool verify_fermat_cover() {
  HomogeneousForm pulled = klein_cubic().substitute_monomials(fermat_cover_map());
  HomogeneousForm fermat(5, 11), prod(5, 40);
  for (int i = 0; i < 5; ++i) {
    Exponents e(5, 0);
    e[i] = 11;
    fermat.add_term(e, 1);
  }
  prod.add_term(Exponents(5, 8), 1);
  return pulled == prod * fermat;
}

}  // namespace kleinzeta
