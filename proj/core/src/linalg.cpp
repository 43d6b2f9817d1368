#include "crnt/linalg.hpp"

#include <algorithm>
#include <utility>

namespace crnt {

namespace {

struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;
  bool odd_swaps = false;
  Integer row_scale = 1;  // product of the per-row denominators cleared up front
};

// Fraction-free elimination (Bareiss).  Every intermediate entry is a minor of
// the integer-scaled input, so the divisions below are exact.
Echelon bareiss(const RationalMatrix& m) {
  Echelon e;
  const std::size_t R = m.rows(), C = m.cols();
  e.rows.assign(R, std::vector<Integer>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) e.rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    e.row_scale *= l;
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && e.rows[p][c] == 0) ++p;
    if (p == R) continue;
    if (p != r) {
      std::swap(e.rows[p], e.rows[r]);
      e.odd_swaps = !e.odd_swaps;
    }
    const Integer& piv = e.rows[r][c];
    for (std::size_t i = r + 1; i < R; ++i) {
      Integer lead = e.rows[i][c];
      for (std::size_t j = c + 1; j < C; ++j) {
        Integer t = piv * e.rows[i][j] - lead * e.rows[r][j];
        mpz_divexact(e.rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      e.rows[i][c] = 0;
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  e.rows.resize(e.pivots.size());
  return e;
}

}  // namespace

RatVec scale_integral(RatVec v) {
  Integer l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& x : v) x /= g;
  return v;
}

RatVec normalize_integral(RatVec v) {
  v = scale_integral(std::move(v));
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivots) {
  Echelon e = bareiss(m);
  const std::size_t k = e.pivots.size();
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < k; ++i) {
    Rational inv(Integer(1), e.rows[i][e.pivots[i]]);
    inv.canonicalize();
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(e.rows[i][j]) * inv;
  }
  for (std::size_t i = k; i-- > 0;) {
    const std::size_t pc = e.pivots[i];
    for (std::size_t a = 0; a < i; ++a) {
      Rational f = out(a, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < m.cols(); ++j) out(a, j) -= f * out(i, j);
    }
  }
  if (pivots) *pivots = e.pivots;
  return out;
}

std::size_t rank(const RationalMatrix& m) { return bareiss(m).pivots.size(); }

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Echelon e = bareiss(m);
  if (e.pivots.size() < n) return 0;
  Rational d(e.rows[n - 1][n - 1], e.row_scale);
  d.canonicalize();
  return e.odd_swaps ? Rational(-d) : d;
}

std::vector<RatVec> kernel_raw(const RationalMatrix& m, std::vector<std::size_t>* free_columns) {
  std::vector<std::size_t> piv;
  RationalMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RatVec> out;
  std::vector<std::size_t> frees;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    frees.push_back(f);
    RatVec v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    out.push_back(std::move(v));
  }
  if (free_columns) *free_columns = std::move(frees);
  return out;
}

SubspaceBasis kernel_basis(const RationalMatrix& m) {
  std::vector<RatVec> raw = kernel_raw(m);
  for (auto& v : raw) v = normalize_integral(std::move(v));
  return SubspaceBasis::from_independent(m.cols(), std::move(raw));
}

SubspaceBasis SubspaceBasis::span_of(std::size_t ambient, const std::vector<RatVec>& generators) {
  SubspaceBasis b(ambient);
  if (generators.empty()) return b;
  for (const auto& g : generators)
    if (g.size() != ambient) throw DimensionError("generator has wrong length");
  RationalMatrix m = RationalMatrix::from_rows(generators);
  std::vector<std::size_t> piv;
  RationalMatrix r = rref(m, &piv);
  for (std::size_t i = 0; i < piv.size(); ++i) b.vectors_.push_back(normalize_integral(r.row(i)));
  return b;
}

SubspaceBasis SubspaceBasis::from_independent(std::size_t ambient, std::vector<RatVec> vectors) {
  SubspaceBasis b(ambient);
  for (const auto& v : vectors)
    if (v.size() != ambient) throw DimensionError("basis vector has wrong length");
  if (!vectors.empty() && rank(RationalMatrix::from_rows(vectors)) != vectors.size())
    throw ValidationError("basis vectors are linearly dependent");
  b.vectors_ = std::move(vectors);
  return b;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient) {
  std::vector<RatVec> e;
  for (std::size_t i = 0; i < ambient; ++i) {
    RatVec v(ambient, Rational(0));
    v[i] = 1;
    e.push_back(std::move(v));
  }
  return from_independent(ambient, std::move(e));
}

bool SubspaceBasis::contains(const RatVec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector has wrong length");
  if (is_zero(v)) return true;
  if (vectors_.empty()) return false;
  std::vector<RatVec> rows = vectors_;
  rows.push_back(v);
  return rank(RationalMatrix::from_rows(rows)) == vectors_.size();
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspaces live in different spaces");
  if (other.dim() == 0) return true;
  std::vector<RatVec> rows = vectors_;
  rows.insert(rows.end(), other.vectors_.begin(), other.vectors_.end());
  return rank(RationalMatrix::from_rows(rows)) == dim();
}

bool SubspaceBasis::same_span(const SubspaceBasis& other) const {
  return dim() == other.dim() && contains(other);
}

SubspaceBasis column_space(const RationalMatrix& m) {
  std::vector<RatVec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return SubspaceBasis::span_of(m.rows(), cols);
}

SubspaceBasis row_space(const RationalMatrix& m) {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return SubspaceBasis::span_of(m.cols(), rows);
}

std::optional<RatVec> solve_linear(const RationalMatrix& a, const RatVec& b) {
  if (a.rows() != b.size()) throw DimensionError("right-hand side has wrong length");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  RationalMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, a.cols());
  return x;
}

std::optional<RatVec> solve_coords(const SubspaceBasis& basis, const RatVec& target) {
  if (target.size() != basis.ambient_dim()) throw DimensionError("target has wrong length");
  if (basis.dim() == 0) {
    if (is_zero(target)) return RatVec{};
    return std::nullopt;
  }
  RationalMatrix b = RationalMatrix::from_columns(basis.vectors());
  return solve_linear(b, target);
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspaces live in different spaces");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return SubspaceBasis(n);
  // Kernel of [A | -B]; each kernel vector (alpha, beta) gives A alpha in the intersection.
  RationalMatrix m(n, a.dim() + b.dim());
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = a.vectors()[j][i];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, a.dim() + j) = -b.vectors()[j][i];
  std::vector<RatVec> gens;
  for (const auto& k : kernel_raw(m)) {
    RatVec v(n, Rational(0));
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += k[j] * a.vectors()[j][i];
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span_of(n, gens);
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspaces live in different spaces");
  std::vector<RatVec> gens = a.vectors();
  gens.insert(gens.end(), b.vectors().begin(), b.vectors().end());
  return SubspaceBasis::span_of(a.ambient_dim(), gens);
}

SubspaceBasis orthogonal_complement(const SubspaceBasis& a) {
  if (a.dim() == 0) return SubspaceBasis::full(a.ambient_dim());
  return kernel_basis(RationalMatrix::from_rows(a.vectors()));
}

}  // namespace crnt
