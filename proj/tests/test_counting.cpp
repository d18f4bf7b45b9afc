#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kleinzeta/counting.hpp"
#include "kleinzeta/ffield.hpp"

using namespace kleinzeta;

namespace {

// affine zeros of the cubic over Z/p, then (N_aff - 1)/(p - 1) projective points
std::uint64_t oracle_klein_count(std::uint64_t p) {
  std::uint64_t n = 0;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d)
          for (std::uint64_t e = 0; e < p; ++e) {
            std::uint64_t s = (a * a % p * b + b * b % p * c + c * c % p * d + d * d % p * e + e * e % p * a) % p;
            n += (s == 0);
          }
  return (n - 1) / (p - 1);
}

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Z/p, plus the point at infinity
std::uint64_t oracle_curve_count(const WeierstrassCurve& e, long p) {
  std::uint64_t n = 1;
  auto m = [p](long v) { return ((v % p) + p) % p; };
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) {
      long lhs = m(y * y + e.a1 * x * y + e.a3 * y);
      long rhs = m(x * x % p * x + e.a2 * x * x + e.a4 * x + e.a6);
      n += (lhs == rhs);
    }
  return n;
}

BigInt expect_count_from_factor(std::uint64_t p, unsigned k) {
  // local factor at 3 is 1 + 7533 x^5 + 3^15 x^10: t_k vanishes unless 5 | k
  REQUIRE(p == 3);
  BigInt q = ipow(BigInt(3), k);
  BigInt base = 1 + q + q * q + q * q * q;
  if (k % 5 != 0) return base;
  // inverse roots: the 10 roots of 1 + 7533 y + 3^15 y^2 with y = x^5
  // power sum t_5 = -5 * 7533 (only the x^5 coefficient contributes)
  REQUIRE(k == 5);
  return base + 5 * 7533;
}

}  // namespace

TEST_CASE("klein cubic has five terms and degree 3") {
  HomogeneousForm s = klein_cubic();
  CHECK(s.degree() == 3);
  CHECK(s.terms().size() == 5);
  CHECK(s.coefficient({2, 1, 0, 0, 0}) == 1);
  CHECK(s.coefficient({1, 0, 0, 0, 2}) == 1);
}

TEST_CASE("fast counter matches the brute-force oracle over prime fields") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    CAPTURE(p);
    BigInt want = BigInt(oracle_klein_count(p));
    Field f = build_field(p, 1);
    if (p != 2) CHECK(count_klein_fast(f) == want);
    CHECK(count_klein_direct(f) == want);
    CHECK(count_hypersurface_naive(klein_cubic(), f) == want);
    if (p != 2) CHECK(count_klein_charsum(f) == want);
  }
}

TEST_CASE("extension fields: all counters agree") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {3, 3}}) {
    CAPTURE(p);
    CAPTURE(k);
    Field f = build_field(p, k);
    BigInt naive = count_hypersurface_naive(klein_cubic(), f);
    CHECK(count_klein_direct(f) == naive);
    if (p != 2) {
      CHECK(count_by_x0_fibers(klein_cubic(), f) == naive);
      CHECK(count_klein_fast(f) == naive);
      CHECK(count_klein_charsum(f) == naive);
    }
  }
}

TEST_CASE("counts over F_3^k agree with the p = 3 local factor") {
  for (unsigned k = 1; k <= 4; ++k) CHECK(count_klein(build_field(3, k)).count == expect_count_from_factor(3, k));
}

TEST_CASE("known counts") {
  CHECK(count_klein(build_field(3, 1)).count == 40);
  CHECK(count_klein(build_field(2, 2)).count == 85);
  CHECK(count_klein(build_field(2, 3)).count == 585);
  CHECK(count_klein(build_field(5, 2)).count == 16276);
  CHECK(count_klein(build_field(23, 1)).count == 13755);
}

TEST_CASE("thread count does not change the result") {
  Field f = build_field(29, 1);
  CountOptions one, many;
  one.threads = 1;
  many.threads = 4;
  many.chunk = 3;
  CHECK(count_klein_fast(f, one) == count_klein_fast(f, many));
  CHECK(count_klein_charsum(build_field(7, 3), one) == count_klein_charsum(build_field(7, 3), many));
}

TEST_CASE("budget is enforced") {
  CountOptions tight;
  tight.budget = 1000;
  CHECK_THROWS_AS(count_hypersurface_naive(klein_cubic(), build_field(7, 1), tight), BudgetExceeded);
  CHECK_THROWS_AS(count_klein_fast(build_field(7, 1), tight), BudgetExceeded);
}

TEST_CASE("algorithm dispatch") {
  CountOptions o;
  CHECK(resolve_count_algorithm(build_field(2, 3), CountAlgorithm::Auto, o) == CountAlgorithm::Direct);
  CHECK(resolve_count_algorithm(build_field(3, 5), CountAlgorithm::Auto, o) == CountAlgorithm::QuadFiber);
  CHECK(resolve_count_algorithm(build_field(23, 3), CountAlgorithm::Auto, o) == CountAlgorithm::CharSum);
  CHECK(parse_count_algorithm("quad-fiber") == CountAlgorithm::QuadFiber);
  CHECK(to_string(CountAlgorithm::CharSum) == "char-sum");
  CHECK_THROWS(parse_count_algorithm("fastest"));
}

TEST_CASE("projective space counts") {
  CHECK(projective_space_count(3, 3) == 40);
  CHECK(projective_space_count(2, 4) == 31);
}

TEST_CASE("weierstrass count matches the oracle") {
  WeierstrassCurve e = klein_cm_curve();
  CHECK(e.discriminant() == -1331);
  for (long p : {2L, 3L, 5L, 7L, 13L, 23L, 31L, 97L}) {
    CAPTURE(p);
    CHECK(count_weierstrass(e, build_field(static_cast<std::uint64_t>(p), 1)) == oracle_curve_count(e, p));
  }
}

TEST_CASE("quadratic_root_count") {
  Field f = build_field(7, 1);
  auto c = [&](long v) { return FieldElement::from_int(f, v); };
  CHECK(quadratic_root_count(c(1), c(0), c(-1)) == 2);  // x^2 - 1
  CHECK(quadratic_root_count(c(1), c(0), c(1)) == 0);   // x^2 + 1, -1 non-square mod 7
  CHECK(quadratic_root_count(c(1), c(2), c(1)) == 1);   // (x+1)^2
  CHECK(quadratic_root_count(c(0), c(3), c(1)) == 1);   // linear
}

TEST_CASE("fermat cover pulls S back to (prod y)^8 * sum y^11") {
  CHECK(verify_fermat_cover());
  auto im = fermat_cover_map();
  REQUIRE(im.size() == 5);
  for (const auto& e : im) {
    int deg = 0;
    for (int v : e) deg += v;
    CHECK(deg == 17);
  }
  HomogeneousForm pulled = klein_cubic().substitute_monomials(im);
  CHECK(pulled.degree() == 51);
  CHECK(pulled.coefficient({8, 8, 8, 19, 8}) == 1);
}
