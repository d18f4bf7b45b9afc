#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kleinzeta/cyclotomic.hpp"
#include "kleinzeta/numeric.hpp"

namespace kleinzeta {

using Mat2q = Eigen::Matrix<Rational, 2, 2>;
using MatPair = std::pair<Mat2q, Mat2q>;

// 2x2 rational matrix read p-adically
struct PadicMat2 {
  Mat2q m;
  long p;
  // INT_MAX for a zero entry
  int entry_valuation(int i, int j) const;
};

Mat2q mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
Mat2q unipotent(const Rational& x);        // [[1,x],[0,1]]
Mat2q diag_pm(long p, int m);              // diag(p^m, 1)
Mat2q atkin_lehner(long p);                // [[0,-1],[p^2,0]]
Mat2q e1_matrix(long p);                   // [[0,1/p],[0,0]]
Mat2q alpha_matrix(long p);                // diag(1/p,-1/p)
Rational pow_rat(long p, int e);

// h1^{-1} x h2; throws std::domain_error on singular h1
Mat2q rho_act(const Mat2q& h1, const Mat2q& h2, const Mat2q& x);
MatPair rho_act(const Mat2q& h1, const Mat2q& h2, const MatPair& x);

// Per entry, row-major: valuation >= vmin, or exactly vmin with unit
// cofactor when unit_exact.  Zero fails a unit-exact entry, passes otherwise.
struct LatticeSpec {
  std::array<int, 4> vmin{};
  std::array<bool, 4> unit_exact{};
  LatticeSpec shifted(int k) const;  // every bound moved by k
};

struct SupportSpec {
  LatticeSpec first, second;
};

SupportSpec phi_lev(long p);
SupportSpec phi_para(long p);

bool in_lattice(const Mat2q& x, const LatticeSpec& L, long p);
bool in_support(const MatPair& x, const SupportSpec& s, long p);

enum class CosetType { I, II, III, IV };
std::string to_string(CosetType t);
CosetType parse_coset_type(const std::string& s);  // "I".."IV"; throws

struct CosetParams {
  CosetType type = CosetType::I;
  int m = 0, n = 0, r = 0;
  Rational s = 0, t = 0;  // in {0, 1/p, ..., (p-1)/p}
  Rational x = 0;
  // throws std::invalid_argument when the type's relation or s,t range fails
  void validate(long p) const;
};

MatPair coset_rep(const CosetParams& c, long p);
// rho(coset_rep(c)) applied to (e1, alpha)
MatPair coset_image(const CosetParams& c, long p);

struct ScanBox {
  int radius = 4;            // |m|, |n|, |r| <= radius
  int x_val_radius = 4;      // x = u p^v with |v| <= x_val_radius, or x = 0
  int residue_exponent = 3;  // u over units mod p^residue_exponent
  // Whittaker support of the new vector: a component p^r n(x) diag(p^m,1)
  // with no Atkin-Lehner factor needs m = 0
  bool whittaker_support = true;
  unsigned threads = 0;
};

enum class SupportClass { NonzeroPossible, Canceled };
std::string to_string(SupportClass c);

// All x in the box sharing (m,n,r,s,t) and the class
struct TupleGroup {
  int m = 0, n = 0, r = 0;
  Rational s = 0, t = 0;
  SupportClass cls = SupportClass::NonzeroPossible;
  std::uint64_t x_count = 0;
  bool has_zero_x = false;
  std::optional<int> min_x_val, max_x_val;  // over nonzero x
};

enum class ClaimStatus { Pass, Fail, Inconclusive };
std::string to_string(ClaimStatus s);

struct Claim {
  std::string name;
  ClaimStatus status = ClaimStatus::Inconclusive;
  std::string detail;
};

struct ScanResult {
  CosetType type = CosetType::I;
  long p = 0;
  ScanBox box;
  std::uint64_t tuples_scanned = 0;
  std::uint64_t support_count = 0;
  std::vector<TupleGroup> groups;
  std::vector<Claim> claims;
  double elapsed_ms = 0;
};

// x-translations tried for the cancellation test: k/p (0<k<p), 1, 1+1/p, p
std::vector<Rational> translation_set(long p);

ScanResult scan_type(CosetType type, long p, const ScanBox& box = {});

// Sum over y in p^{-v}Z/Z of psi(y) = zeta_{p^v}^{-p^v y}
CyclotomicNumber additive_character(long p, int v, long a);  // psi(a / p^v)
CyclotomicNumber char_sum(long p, int v);

// Pairs in Gamma0(p^2) x Gamma0(p^2) with equal unit determinant
std::vector<MatPair> gamma0_samples(long p, int count, std::uint64_t seed);
std::vector<MatPair> stabilizer_samples(long p);  // (n(x), n(-x)), x in Z
std::vector<MatPair> probe_pairs(long p);
bool stabilizer_invariance_check(long p, const std::vector<MatPair>& samples);

enum class PSign { Plus, Minus };
using Mat2c = Eigen::Matrix<std::complex<double>, 2, 2>;
std::complex<double> p_form(const Eigen::Matrix2d& x, PSign sign);
double archimedean_equivariance(double t1, double t2, const Eigen::Matrix2d& x, PSign sign);

}  // namespace kleinzeta
