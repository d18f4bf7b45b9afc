#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kleinzeta/cyclotomic.hpp"
#include "kleinzeta/lfunc.hpp"

namespace kleinzeta {

// K = Q(sqrt -11)
enum class SplitType { Split, Inert, Ramified };
std::string to_string(SplitType s);

// (a + b sqrt(-11)) / 2
struct QuadInt {
  long a = 0, b = 0;
  QuadInt(long a_, long b_);
  BigInt norm() const;  // (a^2 + 11 b^2) / 4
  long trace() const { return a; }
};

SplitType split_type(long p);

// r with r^2 = a mod p, p an odd prime and a a nonzero square (Tonelli-Shanks)
long sqrt_mod_prime(long a, long p);

// a^2 + 11 b^2 = 4p with a, b > 0, split p.  Cornacchia on the 4p form.
std::pair<long, long> solve_norm_form(long p);

long ap_f(long p);
long ap_g(long p);

int dlog2_mod11(long n);            // 2^k = n mod 11, k in [0, 10); throws if 11 | n
CyclotomicNumber chi(long n, int i);  // order 5, conductor 11, chi(2) = zeta_5

long trace_prediction(long p);

LocalFactor h3_local_factor_product(long p);
// product of the two degree-2 factors in T, coefficients in Q(zeta_5)
std::vector<CyclotomicNumber> spinor_local_factor(long p, int i);

struct HeckeRecord {
  long p = 0;
  SplitType split = SplitType::Inert;
  long a = 0, b = 0;  // norm-form solution, zero unless split
  long ap_f = 0;
  long ap_g = 0;
  CyclotomicNumber chi_p;
  int chi_dlog = -1;  // dlog_2(p mod 11), -1 at p = 11
};

HeckeRecord hecke_record(long p);
std::vector<HeckeRecord> hecke_table(long max_p, unsigned threads = 1);
std::string hecke_table_csv(const std::vector<HeckeRecord>& rows);

}  // namespace kleinzeta
