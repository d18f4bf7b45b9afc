#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kleinzeta/ffield.hpp"

namespace kleinzeta::detail {

// Elements are field indices.  Prime fields use plain modular arithmetic,
// small extension fields full addition/multiplication tables.
struct PrimeArith {
  std::uint64_t p;
  explicit PrimeArith(const FieldDescriptor& f) : p(f.p()) {
    if (f.k() != 1) throw std::invalid_argument("PrimeArith needs a prime field");
  }
  std::uint64_t q() const { return p; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t from_int(long v) const { return static_cast<std::uint64_t>(((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)); }
};

struct TableArith {
  static constexpr std::uint64_t kMaxQ = 1024;
  std::uint64_t p, q_;
  std::vector<std::uint16_t> add_, mul_, neg_;

  explicit TableArith(const FieldDescriptor& f) : p(f.p()), q_(f.q()) {
    if (q_ > kMaxQ) throw std::invalid_argument("TableArith: field too large");
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    std::vector<std::vector<std::uint64_t>> el(q_);
    for (std::uint64_t i = 0; i < q_; ++i) el[i] = f.from_index(i);
    for (std::uint64_t i = 0; i < q_; ++i) {
      std::vector<std::uint64_t> n(f.k());
      for (unsigned d = 0; d < f.k(); ++d) n[d] = el[i][d] ? p - el[i][d] : 0;
      neg_[i] = static_cast<std::uint16_t>(f.to_index(n));
      for (std::uint64_t j = 0; j < q_; ++j) {
        std::vector<std::uint64_t> s(f.k());
        for (unsigned d = 0; d < f.k(); ++d) s[d] = (el[i][d] + el[j][d]) % p;
        add_[i * q_ + j] = static_cast<std::uint16_t>(f.to_index(s));
        if (j >= i) {
          auto m = static_cast<std::uint16_t>(f.to_index(f.mul(el[i], el[j])));
          mul_[i * q_ + j] = m;
          mul_[j * q_ + i] = m;
        }
      }
    }
  }
  std::uint64_t q() const { return q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return add_[a * q_ + b]; }
  std::uint64_t neg(std::uint64_t a) const { return neg_[a]; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_[a * q_ + b]; }
  std::uint64_t from_int(long v) const {
    long r = ((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
    return static_cast<std::uint64_t>(r);  // prime subfield sits at indices 0..p-1
  }
};

}  // namespace kleinzeta::detail
