#include "kleinzeta/gdcohom.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kleinzeta/linalg.hpp"

namespace kleinzeta {

namespace {

int exponent_degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3] + e[4]; }

const CyclotomicNumber& cyc_zero() {
  static const CyclotomicNumber z(0L);
  return z;
}

}  // namespace

CycPoly CycPoly::monomial(const Exponent& e, const CyclotomicNumber& c) {
  CycPoly p(exponent_degree(e));
  p.add_term(e, c);
  return p;
}

CycPoly CycPoly::variable(int i) {
  Exponent e{};
  e.at(i) = 1;
  return monomial(e);
}

CyclotomicNumber CycPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? cyc_zero() : it->second;
}

void CycPoly::add_term(const Exponent& e, const CyclotomicNumber& c) {
  for (int x : e)
    if (x < 0) throw std::invalid_argument("CycPoly: negative exponent");
  if (exponent_degree(e) != degree_) throw std::invalid_argument("CycPoly: inhomogeneous term");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CycPoly CycPoly::operator+(const CycPoly& o) const {
  if (is_zero() && o.degree_ != degree_) return o;
  if (o.is_zero() && o.degree_ != degree_) return *this;
  if (o.degree_ != degree_) throw std::invalid_argument("CycPoly: adding forms of different degree");
  CycPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

CycPoly CycPoly::operator-(const CycPoly& o) const { return *this + (-o); }

CycPoly CycPoly::operator-() const {
  CycPoly r(degree_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

CycPoly CycPoly::operator*(const CycPoly& o) const {
  CycPoly r(degree_ + o.degree_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e;
      for (int i = 0; i < 5; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

CycPoly CycPoly::operator*(const CyclotomicNumber& c) const {
  CycPoly r(degree_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

CycPoly CycPoly::derivative(int i) const {
  CycPoly r(std::max(degree_ - 1, 0));
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    r.add_term(f, c * CyclotomicNumber(static_cast<long>(e[i])));
  }
  return r;
}

CycPoly CycPoly::cyclic_shift() const {
  CycPoly r(degree_);
  for (const auto& [e, c] : terms_) {
    Exponent f;
    for (int i = 0; i < 5; ++i) f[(i + 1) % 5] = e[i];
    r.terms_.emplace(f, c);
  }
  return r;
}

std::string CycPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < 5; ++i)
      if (e[i]) os << "*x" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

CycPoly klein_cubic_cyc() {
  CycPoly s(3);
  for (int i = 0; i < 5; ++i) {
    Exponent e{};
    e[i] = 2;
    e[(i + 1) % 5] = 1;
    s.add_term(e, 1L);
  }
  return s;
}

std::array<CycPoly, 5> jacobian_generators() {
  const CycPoly s = klein_cubic_cyc();
  std::array<CycPoly, 5> g;
  for (int i = 0; i < 5; ++i) g[i] = s.derivative(i);
  return g;
}

bool grevlex_greater(const Exponent& a, const Exponent& b) {
  int da = exponent_degree(a), db = exponent_degree(b);
  if (da != db) return da > db;
  for (int i = 4; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<Exponent> monomials_of_degree(int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent e{};
  for (e[0] = 0; e[0] <= d; ++e[0])
    for (e[1] = 0; e[0] + e[1] <= d; ++e[1])
      for (e[2] = 0; e[0] + e[1] + e[2] <= d; ++e[2])
        for (e[3] = 0; e[0] + e[1] + e[2] + e[3] <= d; ++e[3]) {
          e[4] = d - e[0] - e[1] - e[2] - e[3];
          out.push_back(e);
        }
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using SparseQ = std::vector<std::pair<int, Rational>>;

struct EchelonRow {
  SparseQ v;      // leading entry is 1 at the pivot column
  SparseQ combo;  // v = sum combo[g] * generator g
};

// J_d inside R_d.  Generator g = 5 * (index of mu in R_{d-2}) + i is mu * dS/dx_i.
struct DegreePiece {
  int d = 0;
  std::vector<Exponent> monos, gen_monos;
  std::map<Exponent, int> index;
  std::vector<int> pivot_row;
  std::vector<EchelonRow> rows;
  std::vector<Exponent> standard;
};

SparseQ generator_row(const DegreePiece& piece, const Exponent& mu, int i) {
  // mu * (2 x_i x_{i+1} + x_{i-1}^2)
  Exponent a = mu, b = mu;
  ++a[i];
  ++a[(i + 1) % 5];
  b[(i + 4) % 5] += 2;
  std::map<int, Rational> m;
  m[piece.index.at(a)] += 2;
  m[piece.index.at(b)] += 1;
  SparseQ out;
  for (auto& [c, v] : m)
    if (v != 0) out.emplace_back(c, v);
  return out;
}

template <typename T>
void axpy(std::map<int, T>& acc, const T& f, const SparseQ& row) {
  for (const auto& [c, v] : row) {
    auto it = acc.find(c);
    T add = f * T(v);
    if (it == acc.end()) {
      acc.emplace(c, add);
    } else {
      it->second += add;
      if (it->second == T(0L)) acc.erase(it);
    }
  }
}

DegreePiece build_piece(int d, bool track) {
  DegreePiece piece;
  piece.d = d;
  piece.monos = monomials_of_degree(d);
  for (std::size_t i = 0; i < piece.monos.size(); ++i) piece.index[piece.monos[i]] = static_cast<int>(i);
  piece.pivot_row.assign(piece.monos.size(), -1);
  piece.gen_monos = monomials_of_degree(d - 2);
  const int ngen = static_cast<int>(piece.gen_monos.size()) * 5;
  for (int g = 0; g < ngen; ++g) {
    std::map<int, Rational> vec, combo;
    for (auto& [c, v] : generator_row(piece, piece.gen_monos[g / 5], g % 5)) vec[c] = v;
    if (track) combo[g] = 1;
    // reduce against existing pivots, leading column first
    auto it = vec.begin();
    while (it != vec.end()) {
      int col = it->first;
      int r = piece.pivot_row[col];
      if (r < 0) {
        ++it;
        continue;
      }
      Rational f = -it->second;
      axpy(vec, f, piece.rows[r].v);
      if (track) axpy(combo, f, piece.rows[r].combo);
      it = vec.upper_bound(col);
    }
    if (vec.empty()) continue;
    Rational inv = 1 / vec.begin()->second;
    EchelonRow row;
    for (auto& [c, v] : vec) row.v.emplace_back(c, v * inv);
    for (auto& [c, v] : combo) row.combo.emplace_back(c, v * inv);
    piece.pivot_row[vec.begin()->first] = static_cast<int>(piece.rows.size());
    piece.rows.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < piece.monos.size(); ++c)
    if (piece.pivot_row[c] < 0) piece.standard.push_back(piece.monos[c]);
  return piece;
}

}  // namespace

struct JacobianRing::Impl {
  std::vector<DegreePiece> pieces;  // degrees 0..kEchelonDegree
};

JacobianRing::JacobianRing() : impl_(new Impl) {
  for (int d = 0; d <= kEchelonDegree; ++d) impl_->pieces.push_back(build_piece(d, true));
}

JacobianRing::~JacobianRing() { delete impl_; }

GradedPiece JacobianRing::graded_piece(int d) const {
  GradedPiece g;
  if (d < 0) return g;
  if (d <= kEchelonDegree) {
    g.basis = impl_->pieces[d].standard;
  } else {
    g.basis = build_piece(d, false).standard;
  }
  g.dim = static_cast<int>(g.basis.size());
  return g;
}

CycPoly JacobianRing::split(const CycPoly& a, Lift& lift) const {
  const int d = a.degree();
  for (auto& b : lift) b = CycPoly(std::max(d - 2, 0));
  if (a.is_zero()) return CycPoly(d);
  if (d <= kEchelonDegree) {
    const DegreePiece& piece = impl_->pieces[d];
    std::map<int, CyclotomicNumber> vec, coef;
    for (const auto& [e, c] : a.terms()) vec[piece.index.at(e)] = c;
    auto it = vec.begin();
    while (it != vec.end()) {
      int col = it->first;
      int r = piece.pivot_row[col];
      if (r < 0) {
        ++it;
        continue;
      }
      CyclotomicNumber f = it->second;
      axpy(vec, -f, piece.rows[r].v);
      axpy(coef, f, piece.rows[r].combo);  // a - vec = sum coef[g] * generator g
      it = vec.upper_bound(col);
    }
    for (const auto& [g, c] : coef) lift[g % 5].add_term(piece.gen_monos[g / 5], c);
    CycPoly harm(d);
    for (const auto& [col, c] : vec) harm.add_term(piece.monos[col], c);
    return harm;
  }
  // J_d = R_d here: write each monomial as x_k * (lower monomial) and lift that
  for (const auto& [e, c] : a.terms()) {
    int k = 0;
    while (e[k] == 0) ++k;
    Exponent f = e;
    --f[k];
    Lift sub;
    CycPoly h = split(CycPoly::monomial(f, c), sub);
    if (!h.is_zero()) throw std::logic_error("JacobianRing::split: nonzero harmonic part above the socle");
    const CycPoly xk = CycPoly::variable(k);
    for (int i = 0; i < 5; ++i) lift[i] = lift[i] + xk * sub[i];
  }
  return CycPoly(d);
}

std::optional<Lift> JacobianRing::lift_to_ideal(const CycPoly& a) const {
  Lift b;
  CycPoly h = split(a, b);
  if (!h.is_zero()) return std::nullopt;
  return b;
}

const JacobianRing& jacobian_ring() {
  static const JacobianRing ring;
  return ring;
}

GradedPiece graded_dim(int d) { return jacobian_ring().graded_piece(d); }

std::optional<Lift> lift_to_jacobian_ideal(const CycPoly& a) { return jacobian_ring().lift_to_ideal(a); }

CycPoly apply_lift(const Lift& b) {
  const auto gens = jacobian_generators();
  CycPoly s(b[0].degree() + 2);
  for (int i = 0; i < 5; ++i) s = s + b[i] * gens[i];
  return s;
}

// ---------------------------------------------------------------------------

RationalDifferential::RationalDifferential(CycPoly a, int m) : a_(std::move(a)), m_(m) {
  if (m < 2) throw std::invalid_argument("RationalDifferential: pole order must be >= 2");
  if (a_.degree() != 3 * m - 5)
    throw std::invalid_argument("RationalDifferential: degree " + std::to_string(a_.degree()) + " at pole order " +
                                std::to_string(m) + ", expected " + std::to_string(3 * m - 5));
}

RationalDifferential RationalDifferential::raised(int m) const {
  if (m < m_) throw std::invalid_argument("raised: cannot lower the pole order");
  CycPoly a = a_;
  const CycPoly s = klein_cubic_cyc();
  for (int i = m_; i < m; ++i) a = a * s;
  return RationalDifferential(a, m);
}

CohomologyBasis h3_basis() {
  CohomologyBasis b;
  for (int i = 0; i < 5; ++i) {
    b.classes.emplace_back(CycPoly::variable(i), 2);
    b.labels.push_back("x" + std::to_string(i) + " Omega/S^2");
  }
  b.fil2_size = 5;
  for (const auto& e : graded_dim(4).basis) {
    b.classes.emplace_back(CycPoly::monomial(e), 3);
    std::string lab;
    for (int i = 0; i < 5; ++i)
      if (e[i]) lab += (lab.empty() ? "" : "*") + std::string("x") + std::to_string(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    b.labels.push_back(lab + " Omega/S^3");
  }
  if (b.dim() != 10 || b.dim() - b.fil2_size != 5)
    throw std::logic_error("h3_basis: expected 5 + 5 classes, got " + std::to_string(b.dim()));
  return b;
}

namespace {

CycPoly divergence(const Lift& b, int m) {
  CycPoly s(b[0].degree() - 1);
  for (int i = 0; i < 5; ++i) s = s + b[i].derivative(i);
  return s * CyclotomicNumber(Rational(1, m - 1));
}

// coordinates of a harmonic numerator at pole order 2 or 3
void add_harmonic(VectorX<CyclotomicNumber>& v, const CycPoly& h, int m) {
  if (h.is_zero()) return;
  if (m == 2) {
    for (int i = 0; i < 5; ++i) {
      Exponent e{};
      e[i] = 1;
      v[i] += h.coefficient(e);
    }
    return;
  }
  if (m != 3) throw std::logic_error("harmonic part above pole order 3");
  const auto& std4 = graded_dim(4).basis;
  for (std::size_t j = 0; j < std4.size(); ++j) v[5 + static_cast<Eigen::Index>(j)] += h.coefficient(std4[j]);
}

VectorX<CyclotomicNumber> zero_coords() {
  VectorX<CyclotomicNumber> v(10);
  v.setConstant(CyclotomicNumber(0L));
  return v;
}

}  // namespace

RationalDifferential griffiths_step(const RationalDifferential& w, const Lift& b) {
  const int m = w.pole_order();
  if (m < 3) throw std::invalid_argument("griffiths_step: nothing to lower at pole order 2");
  CycPoly rest = w.numerator() - apply_lift(b);
  if (!rest.is_zero()) {
    Lift tmp;
    if (m > 3 || jacobian_ring().split(rest, tmp) != rest)
      throw std::invalid_argument("griffiths_step: lift does not account for the ideal part");
  }
  return RationalDifferential(divergence(b, m), m - 1);
}

VectorX<CyclotomicNumber> griffiths_reduce(const RationalDifferential& w) {
  VectorX<CyclotomicNumber> v = zero_coords();
  CycPoly a = w.numerator();
  for (int m = w.pole_order(); m >= 2; --m) {
    if (m == 2) {
      add_harmonic(v, a, 2);
      break;
    }
    Lift b;
    CycPoly h = jacobian_ring().split(a, b);
    add_harmonic(v, h, m);
    a = divergence(b, m);
  }
  return v;
}

VectorX<CyclotomicNumber> griffiths_reduce_with_lift(const RationalDifferential& w, const Lift& b) {
  VectorX<CyclotomicNumber> v = zero_coords();
  if (w.pole_order() == 2) return griffiths_reduce(w);
  add_harmonic(v, w.numerator() - apply_lift(b), w.pole_order());
  VectorX<CyclotomicNumber> rest = griffiths_reduce(griffiths_step(w, b));
  for (Eigen::Index i = 0; i < 10; ++i) v[i] += rest[i];
  return v;
}

RationalDifferential class_from_coordinates(const VectorX<CyclotomicNumber>& v) {
  if (v.size() != 10) throw std::invalid_argument("class_from_coordinates: need 10 coordinates");
  CycPoly lin(1), quart(4);
  for (int i = 0; i < 5; ++i) lin = lin + CycPoly::variable(i) * v[i];
  const auto& std4 = graded_dim(4).basis;
  for (std::size_t j = 0; j < std4.size(); ++j) quart.add_term(std4[j], v[5 + static_cast<Eigen::Index>(j)]);
  return RationalDifferential(lin * klein_cubic_cyc() + quart, 3);
}

MatrixX<CyclotomicNumber> alpha_pullback(const CohomologyBasis& basis) {
  const Eigen::Index n = basis.dim();
  MatrixX<CyclotomicNumber> m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& w = basis.classes[j];
    m.col(j) = griffiths_reduce(RationalDifferential(w.numerator().cyclic_shift(), w.pole_order()));
  }
  return m;
}

std::vector<EigenspaceInfo> eigenspace_split(const MatrixX<CyclotomicNumber>& m, int fil2_size) {
  const Eigen::Index n = m.rows();
  MatrixX<CyclotomicNumber> id = MatrixX<CyclotomicNumber>::Identity(n, n);
  MatrixX<CyclotomicNumber> p = id;
  for (int i = 0; i < 5; ++i) p = p * m;
  if (p != id) throw std::invalid_argument("eigenspace_split: matrix does not have order dividing 5");
  std::vector<EigenspaceInfo> out;
  int total = 0;
  for (int e = 0; e < 5; ++e) {
    MatrixX<CyclotomicNumber> shifted = m - id * CyclotomicNumber::zeta(5, e);
    MatrixX<CyclotomicNumber> k = kernel(shifted);
    EigenspaceInfo info;
    info.exponent = e;
    info.dimension = static_cast<int>(k.cols());
    // dim(W meet Fil2) = dim W + dim Fil2 - dim(W + Fil2)
    MatrixX<CyclotomicNumber> both(n, k.cols() + fil2_size);
    both.leftCols(k.cols()) = k;
    both.rightCols(fil2_size) = id.leftCols(fil2_size);
    info.fil2_dimension = info.dimension + fil2_size - static_cast<int>(rank(both));
    total += info.dimension;
    out.push_back(info);
  }
  if (total != n) throw std::logic_error("eigenspace_split: eigenspace dimensions sum to " + std::to_string(total));
  return out;
}

VectorX<CyclotomicNumber> fil2_eigenvector(int j) {
  VectorX<CyclotomicNumber> v = zero_coords();
  for (int i = 0; i < 5; ++i) v[i] = CyclotomicNumber::zeta(5, static_cast<long>(j) * (i + 1));
  return v;
}

std::optional<int> eigenvalue_exponent(const MatrixX<CyclotomicNumber>& m, const VectorX<CyclotomicNumber>& v) {
  VectorX<CyclotomicNumber> w = m * v;
  Eigen::Index i0 = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      i0 = i;
      break;
    }
  if (i0 < 0) return std::nullopt;
  CyclotomicNumber lam = w[i0] / v[i0];
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (w[i] != lam * v[i]) return std::nullopt;
  for (int e = 0; e < 5; ++e)
    if (lam == CyclotomicNumber::zeta(5, e)) return e;
  return std::nullopt;
}

MatrixX<Rational> gorenstein_pairing() {
  const auto std4 = graded_dim(4).basis;
  const auto socle = graded_dim(5).basis;
  if (socle.size() != 1) throw std::logic_error("gorenstein_pairing: socle is not one-dimensional");
  MatrixX<Rational> g(5, static_cast<Eigen::Index>(std4.size()));
  for (int i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < std4.size(); ++j) {
      Lift b;
      CycPoly h = jacobian_ring().split(CycPoly::variable(i) * CycPoly::monomial(std4[j]), b);
      g(i, static_cast<Eigen::Index>(j)) = h.coefficient(socle[0]).to_rational();
    }
  return g;
}

RationalDifferential random_differential(int m, int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto mons = monomials_of_degree(3 * m - 5);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<long> ex(0, 4);
  CycPoly a(3 * m - 5);
  for (int k = 0; k < terms; ++k) {
    CyclotomicNumber c = CyclotomicNumber(coef(rng)) + CyclotomicNumber(coef(rng)) * CyclotomicNumber::zeta(5, ex(rng));
    a.add_term(mons[pick(rng)], c);
  }
  return RationalDifferential(a, m);
}

Lift koszul_perturb(const Lift& b, int i, int j, const CycPoly& c) {
  const auto ds = jacobian_generators();
  Lift out = b;
  out[i] = out[i] + c * ds[j];
  out[j] = out[j] - c * ds[i];
  return out;
}

Lift canonical_lift(const RationalDifferential& w) {
  if (w.pole_order() < 3) throw std::invalid_argument("canonical_lift: pole order below 3");
  Lift b;
  jacobian_ring().split(w.numerator(), b);
  return b;
}

}  // namespace kleinzeta
