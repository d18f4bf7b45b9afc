// Acceptance suite.  `test_acceptance N` runs criterion N, no argument runs
// all eight.  One line per criterion: "criterion N: PASS|FAIL  <detail>".
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "kleinzeta/counting.hpp"
#include "kleinzeta/ffield.hpp"
#include "kleinzeta/gdcohom.hpp"
#include "kleinzeta/hecke.hpp"
#include "kleinzeta/lfunc.hpp"
#include "kleinzeta/linalg.hpp"
#include "kleinzeta/thetasupp.hpp"

using namespace kleinzeta;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (!ok) detail << "; ";
    else detail.str("");
    ok = false;
    detail << what;
  }
};

std::string str(const BigInt& v) { return to_string(v); }

// ---- oracles

// (1+3x+27x^2)(1-3x-18x^2+135x^3+81x^4+3645x^5-13122x^6-59049x^7+531441x^8)
IntPoly reference_l3_poly() {
  return poly_mul({1, 3, 27}, {1, -3, -18, 135, 81, 3645, -13122, -59049, 531441});
}

long brute_curve_points(long p) {
  // y^2 + y = x^3 - x^2 - 7x + 10
  long n = 1;
  auto m = [p](long v) { return ((v % p) + p) % p; };
  for (long x = 0; x < p; ++x) {
    long rhs = m(x * x % p * x - x * x - 7 * x + 10);
    for (long y = 0; y < p; ++y) n += m(y * y + y) == rhs;
  }
  return n;
}

bool brute_split(long p) {
  // p splits in Q(sqrt(-11)) iff 4p = a^2 + 11 b^2 has a solution with b != 0
  for (long b = 1; 11 * b * b <= 4 * p; ++b) {
    long r = 4 * p - 11 * b * b;
    long a = static_cast<long>(std::llround(std::sqrt(static_cast<double>(r))));
    for (long c = std::max(0L, a - 1); c <= a + 1; ++c)
      if (c * c == r) return true;
  }
  return false;
}

BigInt p3_sum(long p) { return projective_space_count(static_cast<std::uint64_t>(p), 3); }

LocalFactor counting_route(long p, Outcome& o) {
  std::vector<BigInt> counts;
  for (unsigned k = 1; k <= 5; ++k) counts.push_back(count_klein(build_field(static_cast<std::uint64_t>(p), k)).count);
  try {
    return power_sums_to_local_factor(counts_to_power_sums(counts, p));
  } catch (const std::exception& e) {
    o.fail("p=" + std::to_string(p) + ": " + e.what());
    return LocalFactor{};
  }
}

// ---- criteria

Outcome criterion1() {
  Outcome o;
  const IntPoly want = reference_l3_poly();
  std::vector<BigInt> counts;
  for (unsigned k = 1; k <= 5; ++k)
    counts.push_back(count_klein(build_field(3, k), CountAlgorithm::QuadFiber).count);
  LocalFactor counted = power_sums_to_local_factor(counts_to_power_sums(counts, 3));
  if (counted.coeffs != want) o.fail("counting route differs from the reference polynomial");
  LocalFactor product = h3_local_factor_product(3);
  if (product.coeffs != want) o.fail("product route differs from the reference polynomial");
  if (o.ok) o.detail << "N_1..N_5 = " << str(counts[0]) << ", " << str(counts[1]) << ", " << str(counts[2]) << ", "
                     << str(counts[3]) << ", " << str(counts[4]) << "; both routes equal the reference polynomial";
  return o;
}

Outcome criterion2() {
  Outcome o;
  int checked = 0;
  for (long p : primes_up_to(100)) {
    if (p == 11) continue;
    Field f = build_field(static_cast<std::uint64_t>(p), 1);
    // the quadratic-fiber kernel needs odd characteristic; p = 2 uses the direct counter
    BigInt n = p == 2 ? count_klein_direct(f) : count_klein_fast(f);
    BigInt base = p3_sum(p);
    if (n != base - trace_prediction(p)) o.fail("p=" + std::to_string(p) + ": count " + str(n));
    if (p % 11 != 1 && n != base) o.fail("p=" + std::to_string(p) + ": expected 1+p+p^2+p^3");
    if (p == 23 || p == 67 || p == 89) {
      long ap = p + 1 - brute_curve_points(p);
      if (n - base != BigInt(-5 * p * ap) || ap == 0) o.fail("p=" + std::to_string(p) + ": difference is not -5p a_p(f)");
    }
    ++checked;
  }
  if (o.ok) o.detail << checked << " good primes <= 100 match; p = 23, 67, 89 differ by -5p a_p(f)";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::ostringstream list;
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}}) {
    Field f = build_field(p, k);
    BigInt fast = p == 2 ? count_klein_direct(f) : count_klein_fast(f);
    BigInt naive = count_hypersurface_naive(klein_cubic(), f);
    if (fast != naive) o.fail("q=" + std::to_string(f->q()) + ": " + str(fast) + " vs " + str(naive));
    list << f->q() << ":" << str(naive) << " ";
  }
  if (o.ok) o.detail << "fast == naive for q = " << list.str();
  return o;
}

Outcome criterion4() {
  Outcome o;
  int n = 0, curve = 0;
  for (long p : primes_up_to(1000)) {
    long a = ap_f(p);
    bool split = p != 11 && brute_split(p);
    if ((a == 0) != !split) o.fail("p=" + std::to_string(p) + ": zero pattern");
    if (a * a > 4 * p) o.fail("p=" + std::to_string(p) + ": Hasse bound");
    if (p <= 500 && p != 11) {
      if (a != p + 1 - brute_curve_points(p)) o.fail("p=" + std::to_string(p) + ": a_p != p+1-#E");
      ++curve;
    }
    ++n;
  }
  if (o.ok) o.detail << n << " primes <= 1000 checked; curve counts agree at " << curve << " good primes <= 500";
  return o;
}

Outcome criterion5() {
  Outcome o;
  if (!verify_fermat_cover()) o.fail("pullback is not (prod y_i)^8 * sum y_i^11");
  else o.detail << "S(x(y)) = (y0 y1 y2 y3 y4)^8 (y0^11 + ... + y4^11)";
  return o;
}

Outcome criterion6() {
  using CN = CyclotomicNumber;
  Outcome o;
  CohomologyBasis b = h3_basis();
  if (b.dim() != 10) o.fail("dim H^3 = " + std::to_string(b.dim()));
  if (b.fil2_size != 5) o.fail("Fil^2 rank = " + std::to_string(b.fil2_size));
  MatrixX<CN> m = alpha_pullback(b);
  MatrixX<CN> id = MatrixX<CN>::Identity(10, 10), pw = m;
  int order = 0;
  for (int k = 1; k <= 10 && !order; ++k) {
    if (pw == id) order = k;
    pw = pw * m;
  }
  if (order != 5) o.fail("alpha* order " + std::to_string(order));
  try {
    for (const auto& e : eigenspace_split(m, b.fil2_size)) {
      if (e.dimension != 2) o.fail("eigenvalue zeta^" + std::to_string(e.exponent) + " multiplicity " + std::to_string(e.dimension));
      if (e.fil2_dimension != 1) o.fail("eigenspace zeta^" + std::to_string(e.exponent) + " meets Fil^2 in " + std::to_string(e.fil2_dimension));
    }
  } catch (const std::exception& e) {
    o.fail(e.what());
  }
  if (rank(gorenstein_pairing()) != 5) o.fail("Gorenstein pairing degenerate");
  std::mt19937_64 rng(2024);
  int bad_idem = 0, bad_lift = 0;
  for (int s = 0; s < 100; ++s) {
    int mp = 3 + static_cast<int>(rng() % 2);
    RationalDifferential w = random_differential(mp, 4 + static_cast<int>(rng() % 6), rng());
    VectorX<CN> v = griffiths_reduce(w);
    if (griffiths_reduce(class_from_coordinates(v)) != v) ++bad_idem;
    Exponent e{};
    e[static_cast<std::size_t>(rng() % 5)] = 3 * mp - 9;
    int i = static_cast<int>(rng() % 5), j = (i + 1 + static_cast<int>(rng() % 4)) % 5;
    Lift l2 = koszul_perturb(canonical_lift(w), i, j, CycPoly::monomial(e, CN::zeta(5, static_cast<long>(rng() % 5))));
    if (griffiths_reduce_with_lift(w, l2) != v) ++bad_lift;
  }
  if (bad_idem) o.fail(std::to_string(bad_idem) + " non-idempotent reductions");
  if (bad_lift) o.fail(std::to_string(bad_lift) + " lift-dependent reductions");
  if (o.ok) o.detail << "dim 10, Fil^2 5, alpha* order 5, eigenvalues zeta^0..4 twice each, Fil^2 meets each once, "
                        "pairing rank 5, 100 random reductions idempotent and lift independent";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int claims = 0;
  for (long p : {11L, 3L}) {
    for (CosetType ty : {CosetType::I, CosetType::II, CosetType::III, CosetType::IV}) {
      ScanResult r = scan_type(ty, p);
      for (const auto& c : r.claims) {
        ++claims;
        if (c.status != ClaimStatus::Pass)
          o.fail("p=" + std::to_string(p) + " " + c.name + ": " + to_string(c.status) + " (" + c.detail + ")");
      }
    }
    for (int v = 1; v <= 4; ++v)
      if (!char_sum(p, v).is_zero()) o.fail("char_sum(" + std::to_string(p) + "," + std::to_string(v) + ") != 0");
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI), ent(-2.0, 2.0);
  double worst[2] = {0, 0};
  for (int i = 0; i < 1000; ++i) {
    Eigen::Matrix2d x;
    x << ent(rng), ent(rng), ent(rng), ent(rng);
    double t1 = ang(rng), t2 = ang(rng);
    worst[0] = std::max(worst[0], archimedean_equivariance(t1, t2, x, PSign::Plus));
    worst[1] = std::max(worst[1], archimedean_equivariance(t1, t2, x, PSign::Minus));
  }
  char buf[128];
  for (int s = 0; s < 2; ++s) {
    if (worst[s] >= 1e-12) {
      std::snprintf(buf, sizeof buf, "P_%c equivariance residual %.3e >= 1e-12", s ? '-' : '+', worst[s]);
      o.fail(buf);
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > 60) o.fail("runtime " + std::to_string(secs) + " s > 60 s");
  if (o.ok) {
    std::snprintf(buf, sizeof buf, "%d scan claims certified at p = 11, 3; char sums vanish; P_+/P_- residuals %.1e/%.1e",
                  claims, worst[0], worst[1]);
    o.detail << buf;
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (long p : {2L, 3L, 5L, 7L, 13L, 23L}) {
    LocalFactor l = counting_route(p, o);
    if (l.coeffs.empty()) continue;
    if (!weil_bound_check(l, 1e-6)) o.fail("p=" + std::to_string(p) + ": inverse roots off |alpha| = p^(3/2)");
  }
  if (o.ok) o.detail << "counting-route factors at p = 2, 3, 5, 7, 13, 23 pass weil_bound_check (rel tol 1e-6)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> all = {criterion1, criterion2, criterion3, criterion4,
                                                     criterion5, criterion6, criterion7, criterion8};
  std::vector<int> which;
  if (argc > 1) {
    int n = std::atoi(argv[1]);
    if (n < 1 || n > 8) {
      std::cerr << "criterion must be 1..8\n";
      return 2;
    }
    which.push_back(n);
  } else {
    for (int i = 1; i <= 8; ++i) which.push_back(i);
  }
  int failed = 0;
  for (int n : which) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s  %s  [%.1f s]\n", n, o.ok ? "PASS" : "FAIL", o.detail.str().c_str(), secs);
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
