#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kleinzeta/cyclotomic.hpp"
#include "kleinzeta/numeric.hpp"

namespace kleinzeta {

using Exponent = std::array<int, 5>;

// homogeneous form in x0..x4 over Q(zeta_5)
class CycPoly {
 public:
  explicit CycPoly(int degree = 0) : degree_(degree) {}
  static CycPoly monomial(const Exponent& e, const CyclotomicNumber& c = CyclotomicNumber(1L));
  static CycPoly variable(int i);

  int degree() const { return degree_; }
  const std::map<Exponent, CyclotomicNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CyclotomicNumber coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const CyclotomicNumber& c);

  CycPoly operator+(const CycPoly& o) const;
  CycPoly operator-(const CycPoly& o) const;
  CycPoly operator*(const CycPoly& o) const;
  CycPoly operator*(const CyclotomicNumber& c) const;
  CycPoly operator-() const;
  bool operator==(const CycPoly& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }
  bool operator!=(const CycPoly& o) const { return !(*this == o); }

  CycPoly derivative(int i) const;
  CycPoly cyclic_shift() const;  // x_i -> x_{i+1}
  std::string str() const;

 private:
  int degree_;
  std::map<Exponent, CyclotomicNumber> terms_;
};

CycPoly klein_cubic_cyc();
std::array<CycPoly, 5> jacobian_generators();

std::vector<Exponent> monomials_of_degree(int d);  // grevlex, largest first
bool grevlex_greater(const Exponent& a, const Exponent& b);

struct GradedPiece {
  int dim = 0;
  std::vector<Exponent> basis;  // standard monomials, grevlex descending
};

using Lift = std::array<CycPoly, 5>;

// Echelon data of J_d inside R_d for d <= 6 (J_d = R_d from degree 6 on);
// higher degrees go through x_k * (degree d-1) recursively.
class JacobianRing {
 public:
  static constexpr int kEchelonDegree = 6;
  JacobianRing();
  ~JacobianRing();
  JacobianRing(const JacobianRing&) = delete;
  JacobianRing& operator=(const JacobianRing&) = delete;

  GradedPiece graded_piece(int d) const;
  // A = harmonic + sum B_i dS/dx_i with harmonic in the standard span
  CycPoly split(const CycPoly& a, Lift& lift) const;
  std::optional<Lift> lift_to_ideal(const CycPoly& a) const;

 private:
  struct Impl;
  Impl* impl_;
};

const JacobianRing& jacobian_ring();

GradedPiece graded_dim(int d);
std::optional<Lift> lift_to_jacobian_ideal(const CycPoly& a);
CycPoly apply_lift(const Lift& b);  // sum B_i dS/dx_i

// A Omega / S^m with deg A = 3m - 5
class RationalDifferential {
 public:
  RationalDifferential(CycPoly a, int m);
  const CycPoly& numerator() const { return a_; }
  int pole_order() const { return m_; }
  RationalDifferential raised(int m) const;  // multiply through by S^(m - pole_order)

 private:
  CycPoly a_;
  int m_;
};

struct CohomologyBasis {
  std::vector<RationalDifferential> classes;  // Fil^2 block first
  int fil2_size = 0;
  std::vector<std::string> labels;
  int dim() const { return static_cast<int>(classes.size()); }
};

CohomologyBasis h3_basis();

// One pole-order step with a caller-supplied lift b: A - sum B_i dS/dx_i must
// lie in the standard span (be zero above pole order 3).  Returns
// (1/(m-1)) sum dB_i/dx_i at pole order m - 1.
RationalDifferential griffiths_step(const RationalDifferential& w, const Lift& b);

VectorX<CyclotomicNumber> griffiths_reduce(const RationalDifferential& w);
// first step taken with b, the rest with the ring's own lifts
VectorX<CyclotomicNumber> griffiths_reduce_with_lift(const RationalDifferential& w, const Lift& b);
RationalDifferential class_from_coordinates(const VectorX<CyclotomicNumber>& v);

MatrixX<CyclotomicNumber> alpha_pullback(const CohomologyBasis& basis);

struct EigenspaceInfo {
  int exponent = 0;  // eigenvalue zeta_5^exponent
  int dimension = 0;
  int fil2_dimension = 0;
};

std::vector<EigenspaceInfo> eigenspace_split(const MatrixX<CyclotomicNumber>& m, int fil2_size);

// coordinates of sum_i zeta^{j(i+1)} x_i Omega / S^2
VectorX<CyclotomicNumber> fil2_eigenvector(int j);
// exponent e with m v = zeta_5^e v, if v is an eigenvector
std::optional<int> eigenvalue_exponent(const MatrixX<CyclotomicNumber>& m, const VectorX<CyclotomicNumber>& v);

// (R/J)_1 x (R/J)_4 -> (R/J)_5, entries in the socle coordinate
MatrixX<Rational> gorenstein_pairing();

// random numerator of degree 3m-5: `terms` monomials, coefficients a + b zeta_5
RationalDifferential random_differential(int m, int terms, std::uint64_t seed);
// b + c (dS/dx_j e_i - dS/dx_i e_j); apply_lift is unchanged
Lift koszul_perturb(const Lift& b, int i, int j, const CycPoly& c);
// lift from the splitting of the numerator (pole order >= 3)
Lift canonical_lift(const RationalDifferential& w);

}  // namespace kleinzeta
