#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kleinzeta/gdcohom.hpp"
#include "kleinzeta/linalg.hpp"

using namespace kleinzeta;

namespace {

using CN = CyclotomicNumber;

// smooth cubic in 5 variables: Hilbert series of R/J is ((1-t^2)/(1-t))^5 = (1+t)^5
int binom5(int d) {
  static const int b[] = {1, 5, 10, 10, 5, 1};
  return d >= 0 && d <= 5 ? b[d] : 0;
}

Exponent ex(int a, int b, int c, int d, int e) { return Exponent{a, b, c, d, e}; }

}  // namespace

TEST_CASE("partials of the cubic") {
  auto g = jacobian_generators();
  CycPoly s = klein_cubic_cyc();
  // Euler: sum x_i dS/dx_i = 3 S
  CycPoly e(3);
  for (int i = 0; i < 5; ++i) e = e + CycPoly::variable(i) * g[i];
  CHECK(e == s * CN(3L));
  CHECK(g[0].coefficient(ex(1, 1, 0, 0, 0)) == CN(2L));
  CHECK(g[0].coefficient(ex(0, 0, 0, 0, 2)) == CN(1L));
}

TEST_CASE("graded dimensions match (1+t)^5") {
  for (int d = 0; d <= 9; ++d) {
    CAPTURE(d);
    CHECK(graded_dim(d).dim == binom5(d));
  }
}

TEST_CASE("monomial enumeration") {
  auto m3 = monomials_of_degree(3);
  CHECK(m3.size() == 35);
  for (std::size_t i = 1; i < m3.size(); ++i) CHECK(grevlex_greater(m3[i - 1], m3[i]));
}

TEST_CASE("standard monomials in degree 4 and the socle") {
  auto b4 = graded_dim(4).basis;
  std::vector<Exponent> want = {ex(0, 1, 1, 1, 1), ex(0, 0, 1, 1, 2), ex(0, 1, 0, 0, 3), ex(0, 0, 1, 0, 3),
                                ex(0, 0, 0, 1, 3)};
  CHECK(b4 == want);
  CHECK(graded_dim(5).basis == std::vector<Exponent>{ex(0, 0, 1, 1, 3)});
}

TEST_CASE("lift_to_jacobian_ideal reconstructs the input") {
  CycPoly a = klein_cubic_cyc() * CycPoly::variable(2) * CycPoly::variable(4);
  auto lift = lift_to_jacobian_ideal(a);
  REQUIRE(lift.has_value());
  CHECK(apply_lift(*lift) == a);
  // a standard monomial is not in J
  CHECK_FALSE(lift_to_jacobian_ideal(CycPoly::monomial(ex(0, 0, 1, 1, 3))).has_value());
  // above the socle everything is in J
  CycPoly big = CycPoly::monomial(ex(6, 0, 0, 0, 0));
  auto l6 = lift_to_jacobian_ideal(big);
  REQUIRE(l6.has_value());
  CHECK(apply_lift(*l6) == big);
}

TEST_CASE("rational differential degree check") {
  CHECK_THROWS(RationalDifferential(CycPoly(2), 2));
  CHECK_NOTHROW(RationalDifferential(CycPoly(1), 2));
  CHECK_THROWS(RationalDifferential(CycPoly(1), 1));
}

TEST_CASE("basis reduces to unit vectors, also after raising the pole") {
  CohomologyBasis b = h3_basis();
  REQUIRE(b.dim() == 10);
  CHECK(b.fil2_size == 5);
  for (int j = 0; j < 10; ++j) {
    VectorX<CN> e = VectorX<CN>::Constant(10, CN(0L));
    e[j] = CN(1L);
    CHECK(griffiths_reduce(b.classes[static_cast<std::size_t>(j)]) == e);
    int m0 = b.classes[static_cast<std::size_t>(j)].pole_order();
    for (int m = m0 + 1; m <= 5; ++m) CHECK(griffiths_reduce(b.classes[static_cast<std::size_t>(j)].raised(m)) == e);
  }
}

TEST_CASE("exact forms reduce to zero") {
  // d(B . dS / S^(m-1)) relation: A = sum B_i dS_i at pole m equals div(B)/(m-1) at pole m-1
  Lift b;
  for (auto& p : b) p = CycPoly(2);
  b[1] = CycPoly::monomial(ex(1, 0, 0, 1, 0));
  b[3] = CycPoly::monomial(ex(0, 2, 0, 0, 0), CN::zeta(5, 2));
  RationalDifferential w(apply_lift(b), 3);
  VectorX<CN> lhs = griffiths_reduce(w);
  VectorX<CN> rhs = griffiths_reduce(griffiths_step(w, b));
  CHECK(lhs == rhs);
}

TEST_CASE("example numerator (2 x0^3 x1 + x0^2 x4^2) / S^3 reduces to e0") {
  CycPoly a = CycPoly::monomial(ex(3, 1, 0, 0, 0), CN(2L)) + CycPoly::monomial(ex(2, 0, 0, 0, 2));
  VectorX<CN> v = griffiths_reduce(RationalDifferential(a, 3));
  VectorX<CN> e0 = VectorX<CN>::Constant(10, CN(0L));
  e0[0] = CN(1L);
  CHECK(v == e0);
}

TEST_CASE("reduction is idempotent and lift independent on random inputs") {
  for (int s = 0; s < 20; ++s) {
    int m = 3 + s % 2;
    RationalDifferential w = random_differential(m, 5, 77 + static_cast<std::uint64_t>(s));
    VectorX<CN> v = griffiths_reduce(w);
    CHECK(griffiths_reduce(class_from_coordinates(v)) == v);
    Lift b = canonical_lift(w);
    Exponent e{};
    e[static_cast<std::size_t>(s % 5)] = 3 * m - 9;
    Lift b2 = koszul_perturb(b, s % 5, (s + 2) % 5, CycPoly::monomial(e, CN::zeta(5, s)));
    CHECK(apply_lift(b2) == apply_lift(b));
    CHECK(griffiths_reduce_with_lift(w, b2) == v);
  }
}

TEST_CASE("alpha pullback: order 5, eigenspaces of dimension 2 meeting Fil^2 once") {
  CohomologyBasis b = h3_basis();
  MatrixX<CN> m = alpha_pullback(b);
  MatrixX<CN> id = MatrixX<CN>::Identity(10, 10);
  MatrixX<CN> p = m;
  for (int k = 1; k < 5; ++k) {
    CHECK(p != id);
    p = p * m;
  }
  CHECK(p == id);
  auto split = eigenspace_split(m, b.fil2_size);
  REQUIRE(split.size() == 5);
  for (const auto& e : split) {
    CHECK(e.dimension == 2);
    CHECK(e.fil2_dimension == 1);
  }
  // v_j = sum zeta^{j(i+1)} x_i Omega/S^2 has eigenvalue zeta^{-j}
  for (int j = 0; j < 5; ++j) CHECK(eigenvalue_exponent(m, fil2_eigenvector(j)) == (5 - j) % 5);
}

TEST_CASE("Gorenstein pairing is perfect") {
  MatrixX<Rational> g = gorenstein_pairing();
  CHECK(g.rows() == 5);
  CHECK(g.cols() == 5);
  CHECK(rank(g) == 5);
}

TEST_CASE("eigenspace_split rejects a matrix of the wrong order") {
  MatrixX<CN> m = MatrixX<CN>::Identity(3, 3);
  m(0, 0) = CN(2L);
  CHECK_THROWS(eigenspace_split(m, 1));
}
