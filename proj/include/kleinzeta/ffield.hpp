#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace kleinzeta {

class FieldTables;

// F_q, q = p^k, as F_p[x]/(modulus).  Elements are indexed by
// sum c_i p^i over the little-endian coefficients.
class FieldDescriptor {
 public:
  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }  // k+1 entries, monic
  // log/exp/character tables; built eagerly when q <= 2^20, null otherwise
  const FieldTables* tables() const { return tables_.get(); }

  std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const;
  std::vector<std::uint64_t> from_index(std::uint64_t idx) const;
  std::uint64_t to_index(const std::vector<std::uint64_t>& c) const;

  bool same_as(const FieldDescriptor& o) const { return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_; }

  static constexpr std::uint64_t kTableLimit = 1u << 20;

 private:
  friend std::shared_ptr<const FieldDescriptor> build_field(std::uint64_t p, unsigned k);
  FieldDescriptor(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::shared_ptr<const FieldTables> tables_;
};

using Field = std::shared_ptr<const FieldDescriptor>;

// Modulus is the first irreducible x^k + c_{k-1}x^{k-1} + ... + c_0 when the
// tail is read as the base-p integer sum c_i p^i, counting up from 0.
Field build_field(std::uint64_t p, unsigned k);

// Rabin test; f monic little-endian of degree >= 1
bool is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p);

class FieldElement {
 public:
  explicit FieldElement(Field f);
  FieldElement(Field f, std::vector<std::uint64_t> coeffs);
  static FieldElement from_int(Field f, long v);
  static FieldElement from_index(Field f, std::uint64_t idx);

  const Field& field() const { return f_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t index() const { return f_->to_index(c_); }
  bool is_zero() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void check_same(const FieldElement& o) const;
  Field f_;
  std::vector<std::uint64_t> c_;
};

// -1, 0, +1; throws std::domain_error in characteristic 2
int quadratic_character(const FieldElement& a);

// Discrete log tables over a fixed primitive element g.  Zero is kNoLog.
class FieldTables {
 public:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;
  static constexpr std::uint64_t kMaxQ = 1ull << 25;

  explicit FieldTables(const FieldDescriptor& f);

  std::uint64_t q() const { return q_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(q_ - 1); }
  std::uint64_t generator() const { return gen_; }
  std::uint32_t exp(std::uint64_t n) const { return exp_[n % (q_ - 1)]; }
  std::uint32_t log(std::uint64_t idx) const { return log_[idx]; }
  // log(1 + g^n), kNoLog when 1 + g^n = 0
  std::uint32_t zech(std::uint32_t n) const { return zech_[n]; }
  int chi(std::uint64_t idx) const { return chi_[idx]; }

  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }
  const std::vector<std::uint32_t>& zech_table() const { return zech_; }
  const std::vector<std::int8_t>& chi_table() const { return chi_; }

 private:
  std::uint64_t q_;
  std::uint64_t gen_;
  std::vector<std::uint32_t> exp_, log_, zech_;
  std::vector<std::int8_t> chi_;
};

}  // namespace kleinzeta
