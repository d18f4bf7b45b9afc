#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kleinzeta/ffield.hpp"
#include "kleinzeta/numeric.hpp"

namespace kleinzeta {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Exponents = std::vector<int>;

class HomogeneousForm {
 public:
  HomogeneousForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }

  // adds c to the coefficient of x^e; zero results are dropped
  void add_term(const Exponents& e, const BigInt& c);
  BigInt coefficient(const Exponents& e) const;

  HomogeneousForm operator+(const HomogeneousForm& o) const;
  HomogeneousForm operator*(const HomogeneousForm& o) const;
  bool operator==(const HomogeneousForm& o) const;

  // x_i -> monomial images[i] (exponent vectors in a new variable set)
  HomogeneousForm substitute_monomials(const std::vector<Exponents>& images) const;

  FieldElement evaluate(const std::vector<FieldElement>& x) const;

 private:
  int nvars_, degree_;
  std::map<Exponents, BigInt> terms_;
};

HomogeneousForm klein_cubic();
HomogeneousForm linear_form(int nvars, int var);

struct WeierstrassCurve {
  long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  BigInt discriminant() const;
};

// y^2 + y = x^3 - x^2 - 7x + 10, conductor 121, CM by Q(sqrt -11)
WeierstrassCurve klein_cm_curve();

enum class CountAlgorithm { Auto, QuadFiber, CharSum, Direct, Naive };
std::string to_string(CountAlgorithm a);
CountAlgorithm parse_count_algorithm(const std::string& s);

struct CountOptions {
  unsigned threads = 0;                          // 0: hardware concurrency
  std::uint64_t budget = 10'000'000'000ull;      // max fibers / evaluations
  std::uint64_t chunk = 0;                       // x1 values per task, 0: automatic
};

struct CountRecord {
  std::uint64_t p = 0;
  unsigned k = 0;
  BigInt count;
  CountAlgorithm algorithm = CountAlgorithm::Auto;
  double elapsed_ms = 0;
};

// O(q^4) fibers over x1..x4, roots in x0 via the quadratic character
BigInt count_klein_fast(const Field& f, const CountOptions& opt = {});
// O(q log q): reduces the character sum over fibers to root counts of a
// one-parameter family of quartics
BigInt count_klein_charsum(const Field& f, const CountOptions& opt = {});
// any characteristic: enumerate x0 in every fiber
BigInt count_klein_direct(const Field& f, const CountOptions& opt = {});
BigInt count_hypersurface_naive(const HomogeneousForm& s, const Field& f, const CountOptions& opt = {});
// generic form of degree <= 2 in x0, odd characteristic, O(q^{n-1}) fibers
BigInt count_by_x0_fibers(const HomogeneousForm& s, const Field& f, const CountOptions& opt = {});

CountAlgorithm resolve_count_algorithm(const Field& f, CountAlgorithm requested, const CountOptions& opt);
CountRecord count_klein(const Field& f, CountAlgorithm algorithm = CountAlgorithm::Auto, const CountOptions& opt = {});

std::uint64_t count_weierstrass(const WeierstrassCurve& e, const Field& f);

// 0, 1, 2 or q
std::uint64_t quadratic_root_count(const FieldElement& a, const FieldElement& b, const FieldElement& c);

// images of x_i under the covering map y -> x, as exponent vectors in y0..y4
std::vector<Exponents> fermat_cover_map();
bool verify_fermat_cover();

BigInt projective_space_count(std::uint64_t q, int dim);

unsigned resolve_threads(unsigned requested);

}  // namespace kleinzeta
