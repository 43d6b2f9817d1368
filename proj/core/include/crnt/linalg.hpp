#ifndef CRNT_LINALG_HPP
#define CRNT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "crnt/matrix.hpp"
#include "crnt/rational.hpp"

namespace crnt {

/// Scales v by a positive rational so that the entries are coprime integers.
RatVec scale_integral(RatVec v);

/// Like scale_integral, and additionally makes the first nonzero entry positive.
RatVec normalize_integral(RatVec v);

/// A linearly independent set of vectors in Q^ambient.  Bases built through
/// span_of are canonical: reduced row echelon vectors scaled to coprime
/// integers with a positive leading entry.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient = 0) : ambient_(ambient) {}

  static SubspaceBasis span_of(std::size_t ambient, const std::vector<RatVec>& generators);
  /// Keeps the given vectors as they are; throws if they are dependent.
  static SubspaceBasis from_independent(std::size_t ambient, std::vector<RatVec> vectors);
  static SubspaceBasis full(std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return vectors_.size(); }
  const std::vector<RatVec>& vectors() const noexcept { return vectors_; }

  bool contains(const RatVec& v) const;
  bool contains(const SubspaceBasis& other) const;
  bool same_span(const SubspaceBasis& other) const;

 private:
  std::size_t ambient_;
  std::vector<RatVec> vectors_;
};

std::size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Right null space, normalized.
SubspaceBasis kernel_basis(const RationalMatrix& m);

/// Right null space in "free variable" form: one vector per non-pivot column c
/// with entry 1 at c and 0 at every other non-pivot column.  No sign change or
/// rescaling is applied.  `free_columns` receives the non-pivot columns.
std::vector<RatVec> kernel_raw(const RationalMatrix& m, std::vector<std::size_t>* free_columns = nullptr);

SubspaceBasis column_space(const RationalMatrix& m);
SubspaceBasis row_space(const RationalMatrix& m);

/// Coordinates of target in the given basis (in basis order), or nullopt when
/// target is outside the span.
std::optional<RatVec> solve_coords(const SubspaceBasis& basis, const RatVec& target);

/// Any solution of A x = b, or nullopt.
std::optional<RatVec> solve_linear(const RationalMatrix& a, const RatVec& b);

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis orthogonal_complement(const SubspaceBasis& a);

/// Reduced row echelon form over the rationals, with the pivot column list.
RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivots = nullptr);

Rational dot(const RatVec& a, const RatVec& b);

}  // namespace crnt

#endif
