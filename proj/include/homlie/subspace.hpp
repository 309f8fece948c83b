#pragma once

#include <cstddef>
#include <vector>

#include "matrix.hpp"

namespace homlie {

/// Linear subspace of Q^ambient with a canonical reduced-row-echelon basis.
/// Two equal subspaces always hold identical basis matrices, so equality is
/// a plain matrix comparison.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    s.basis_ = rref(Matrix::from_rows(vectors, ambient)).mat;
    return s;
  }

  static Subspace from_echelon(Matrix echelon_rows) {
    Subspace s(echelon_rows.cols());
    s.basis_ = std::move(echelon_rows);
    return s;
  }

  static Subspace full(std::size_t ambient) { return from_echelon(Matrix::identity(ambient)); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw input_error("ambient dimension mismatch");
    Vec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t lead = 0;
      while (lead < ambient_ && basis_.at(i, lead) == 0) ++lead;
      if (lead == ambient_ || w[lead] == 0) continue;
      const Rational f = w[lead];
      for (std::size_t j = lead; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
    return is_zero(w);
  }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis().row(i))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw input_error("subspace sum: ambient mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis().row(i));
  return Subspace::span(a.ambient(), rows);
}

/// Constraint rows of a subspace: a basis of its annihilator under the
/// standard bilinear form, i.e. v lies in S iff every constraint row
/// pairs to zero with v.
inline Matrix constraint_rows(const Subspace& s) { return nullspace(s.basis()); }

/// Intersection via the nullspace of the two stacked constraint systems.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw input_error("subspace intersect: ambient mismatch");
  const Matrix ca = constraint_rows(a), cb = constraint_rows(b);
  Matrix stacked(ca.rows() + cb.rows(), a.ambient());
  for (std::size_t i = 0; i < ca.rows(); ++i)
    for (std::size_t j = 0; j < a.ambient(); ++j) stacked.at(i, j) = ca.at(i, j);
  for (std::size_t i = 0; i < cb.rows(); ++i)
    for (std::size_t j = 0; j < a.ambient(); ++j) stacked.at(ca.rows() + i, j) = cb.at(i, j);
  return Subspace::from_echelon(nullspace(stacked));
}

inline bool subspace_eq(const Subspace& a, const Subspace& b) { return a == b; }

} // namespace homlie
