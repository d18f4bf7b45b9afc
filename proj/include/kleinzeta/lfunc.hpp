#pragma once

#include <complex>
#include <vector>

#include "json.hpp"
#include "kleinzeta/numeric.hpp"

namespace kleinzeta {

using IntPoly = std::vector<BigInt>;  // little-endian

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
void poly_trim(IntPoly& a);

// det(1 - Frob_p x | H^3): degree 10, weight 3
struct LocalFactor {
  static constexpr int kWeight = 3;
  static constexpr int kDegree = 10;
  long p = 0;
  IntPoly coeffs;

  bool operator==(const LocalFactor& o) const { return p == o.p && coeffs == o.coeffs; }
};

struct PowerSums {
  long p = 0;
  std::vector<BigInt> t;  // t[0] is t_1
};

bool satisfies_functional_equation(const LocalFactor& l);
// throws std::invalid_argument unless c0 = 1, degree 10 and the symmetry hold
void validate_local_factor(const LocalFactor& l);

// t_k = 1 + p^k + p^2k + p^3k - N_k, counts[0] = N_1
PowerSums counts_to_power_sums(const std::vector<BigInt>& counts, long p);
// Newton's identities on t_1..t_5, the rest from the functional equation
LocalFactor power_sums_to_local_factor(const PowerSums& s);
// inverse direction: t_1..t_m of the reciprocal roots of l
PowerSums local_factor_power_sums(const LocalFactor& l, int m);
std::vector<BigInt> local_factor_counts(const LocalFactor& l, int m);

// |t_k| <= 10 p^{3k/2}, compared as t_k^2 <= 100 p^{3k}
bool power_sums_within_weil_bound(const PowerSums& s);

// reciprocal roots lambda of the squarefree part, |lambda| should be p^{3/2}
std::vector<std::complex<double>> inverse_roots(const LocalFactor& l);
bool weil_bound_check(const LocalFactor& l, double rel_tol = 1e-6);

// integers beyond int64 go out as decimal strings
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LocalFactor& l);
LocalFactor local_factor_from_json(const nlohmann::json& j);

}  // namespace kleinzeta
