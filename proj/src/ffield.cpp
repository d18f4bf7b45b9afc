#include "kleinzeta/ffield.hpp"

#include <stdexcept>
#include <string>

#include "kleinzeta/numeric.hpp"

namespace kleinzeta {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  std::size_t n = f.size() - 1;
  trim(a);
  while (a.size() > n) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i < n; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * f[i] % p) % p;
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(base, f, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return poly_mod(r, f, p);
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    std::uint64_t inv = powmod(b.back(), p - 2, p);
    for (auto& c : b) c = c * inv % p;
    a = poly_mod(a, b, p);
    std::swap(a, b);
  }
  return a;
}

// x^(p^j) mod f
Poly frobenius_power(const Poly& f, std::uint64_t p, unsigned j) {
  Poly h = poly_mod(Poly{0, 1}, f, p);
  for (unsigned i = 0; i < j; ++i) h = poly_powmod(h, p, f, p);
  return h;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  if (f.size() < 2 || f.back() != 1) throw std::invalid_argument("is_irreducible: need monic of degree >= 1");
  unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  Poly x = poly_mod(Poly{0, 1}, f, p);
  if (frobenius_power(f, p, n) != x) return false;
  for (std::uint64_t l : prime_factors(n)) {
    Poly h = poly_sub(frobenius_power(f, p, n / static_cast<unsigned>(l)), x, p);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldDescriptor::FieldDescriptor(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (q_ <= kTableLimit) tables_ = std::make_shared<const FieldTables>(*this);
}

std::vector<std::uint64_t> FieldDescriptor::mul(const std::vector<std::uint64_t>& a,
                                                const std::vector<std::uint64_t>& b) const {
  Poly r = poly_mod(poly_mul(a, b, p_), modulus_, p_);
  r.resize(k_, 0);
  return r;
}

std::vector<std::uint64_t> FieldDescriptor::from_index(std::uint64_t idx) const {
  if (idx >= q_) throw std::out_of_range("field index");
  std::vector<std::uint64_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = idx % p_;
    idx /= p_;
  }
  return c;
}

std::uint64_t FieldDescriptor::to_index(const std::vector<std::uint64_t>& c) const {
  std::uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + c[i];
  return idx;
}

Field build_field(std::uint64_t p, unsigned k) {
  if (p >= (1ull << 31) || !is_prime(p)) throw std::invalid_argument("build_field: p must be a prime below 2^31");
  if (k < 1) throw std::invalid_argument("build_field: k must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > (1ull << 40) / p) throw std::invalid_argument("build_field: p^k exceeds 2^40");
    q *= p;
  }
  if (q >= (1ull << 40)) throw std::invalid_argument("build_field: p^k exceeds 2^40");
  for (std::uint64_t tail = 0; tail < q; ++tail) {
    Poly f(k + 1);
    std::uint64_t t = tail;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return Field(new FieldDescriptor(p, k, std::move(f)));
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldElement::FieldElement(Field f) : f_(std::move(f)), c_(f_->k(), 0) {}

FieldElement::FieldElement(Field f, std::vector<std::uint64_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  if (c_.size() != f_->k()) throw std::invalid_argument("FieldElement: wrong coefficient count");
  for (auto c : c_)
    if (c >= f_->p()) throw std::invalid_argument("FieldElement: residue out of range");
}

FieldElement FieldElement::from_int(Field f, long v) {
  std::vector<std::uint64_t> c(f->k(), 0);
  c[0] = static_cast<std::uint64_t>(mod_floor(v, static_cast<std::int64_t>(f->p())));
  return FieldElement(std::move(f), std::move(c));
}

FieldElement FieldElement::from_index(Field f, std::uint64_t idx) {
  auto c = f->from_index(idx);
  return FieldElement(std::move(f), std::move(c));
}

bool FieldElement::is_zero() const {
  for (auto c : c_)
    if (c) return false;
  return true;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (f_ != o.f_ && !f_->same_as(*o.f_)) throw std::invalid_argument("mixed-field operands");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + o.c_[i]) % f_->p();
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.c_) c = c ? f_->p() - c : 0;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return FieldElement(f_, f_->mul(c_, o.c_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement r = from_int(f_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw std::domain_error("inversion of zero");
  return pow(f_->q() - 2);
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return c_ == o.c_;
}

int quadratic_character(const FieldElement& a) {
  const auto& f = *a.field();
  if (f.p() == 2) throw std::domain_error("quadratic_character: characteristic 2");
  if (const FieldTables* t = f.tables()) return t->chi(a.index());
  if (a.is_zero()) return 0;
  return a.pow((f.q() - 1) / 2) == FieldElement::from_int(a.field(), 1) ? 1 : -1;
}

FieldTables::FieldTables(const FieldDescriptor& f) : q_(f.q()) {
  if (q_ > kMaxQ) throw std::invalid_argument("FieldTables: field too large for tables");
  const std::uint64_t p = f.p();
  const std::uint64_t n = q_ - 1;
  auto factors = prime_factors(n);
  auto one = f.from_index(1);
  auto power = [&](const Poly& g, std::uint64_t e) {
    Poly r = poly_powmod(g, e, f.modulus(), p);
    r.resize(f.k(), 0);
    return r;
  };
  gen_ = 0;
  for (std::uint64_t cand = 1; cand < q_ && !gen_; ++cand) {
    auto g = f.from_index(cand);
    bool ok = true;
    for (auto l : factors) {
      if (power(g, n / l) == one) {
        ok = false;
        break;
      }
    }
    if (ok) gen_ = cand;
  }
  if (n == 1) gen_ = 1;  // F_2

  exp_.resize(n);
  log_.assign(q_, kNoLog);
  if (f.k() == 1) {
    std::uint64_t cur = 1;
    for (std::uint64_t e = 0; e < n; ++e) {
      exp_[e] = static_cast<std::uint32_t>(cur);
      log_[cur] = static_cast<std::uint32_t>(e);
      cur = cur * gen_ % p;
    }
  } else {
    auto g = f.from_index(gen_);
    auto cur = one;
    for (std::uint64_t e = 0; e < n; ++e) {
      auto idx = f.to_index(cur);
      exp_[e] = static_cast<std::uint32_t>(idx);
      log_[idx] = static_cast<std::uint32_t>(e);
      cur = f.mul(cur, g);
    }
  }
  for (std::uint64_t i = 1; i < q_; ++i)
    if (log_[i] == kNoLog) throw std::logic_error("FieldTables: generator is not primitive");

  zech_.resize(n);
  for (std::uint64_t e = 0; e < n; ++e) {
    std::uint64_t x = exp_[e];
    std::uint64_t d0 = x % p;
    std::uint64_t y = x - d0 + (d0 + 1) % p;
    zech_[e] = log_[y];
  }
  chi_.assign(q_, 0);
  if (p != 2)
    for (std::uint64_t i = 1; i < q_; ++i) chi_[i] = (log_[i] & 1) ? -1 : 1;
}

}  // namespace kleinzeta
