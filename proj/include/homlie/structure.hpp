#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "subspace.hpp"

namespace homlie {

/// Degree-homogeneous subspace of the algebra, carried by its canonical
/// echelon basis; every echelon row of a graded subspace is itself
/// homogeneous, and row_degrees records the degree of each.
struct GradedSubspace {
  Subspace part;
  std::vector<Degree> row_degrees;

  std::size_t dim() const { return part.dim(); }
};

/// Wrap a subspace, computing per-row degrees. Throws if some basis row is
/// not homogeneous (the subspace is then not graded).
inline GradedSubspace graded_from(const HomColorAlgebra& a, Subspace s) {
  GradedSubspace g;
  g.row_degrees.reserve(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    std::optional<Degree> d;
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (s.basis().at(r, c) == 0) continue;
      if (!d)
        d = a.space.deg(c);
      else if (*d != a.space.deg(c))
        throw input_error("subspace is not graded: basis row " + std::to_string(r + 1) +
                          " mixes degrees");
    }
    g.row_degrees.push_back(d.value_or(degree_zero(a.space.group)));
  }
  g.part = std::move(s);
  return g;
}

inline GradedSubspace full_space(const HomColorAlgebra& a) {
  return graded_from(a, Subspace::full(a.dim()));
}

inline GradedSubspace zero_space(const HomColorAlgebra& a) {
  return graded_from(a, Subspace(a.dim()));
}

/// Span of bracket_eval over all tuples of basis vectors of the slots.
inline GradedSubspace bracket_span(const HomColorAlgebra& a, const std::vector<GradedSubspace>& slots) {
  if (slots.size() != a.arity()) throw input_error("bracket_span needs one subspace per slot");
  std::vector<Vec> vecs;
  std::vector<std::size_t> pick(slots.size(), 0);
  for (const auto& s : slots)
    if (s.part.ambient() != a.dim()) throw input_error("bracket_span: ambient mismatch");
  bool any_empty = false;
  for (const auto& s : slots) any_empty |= s.dim() == 0;
  if (!any_empty) {
    std::vector<Vec> args(slots.size());
    auto rec = [&](auto&& self, std::size_t s) -> void {
      if (s == slots.size()) {
        vecs.push_back(bracket_eval(a, args));
        return;
      }
      for (std::size_t r = 0; r < slots[s].dim(); ++r) {
        args[s] = slots[s].part.basis().row(r);
        self(self, s + 1);
      }
    };
    rec(rec, 0);
  }
  return graded_from(a, Subspace::span(a.dim(), vecs));
}

/// L_0 = L, L_k = [L_{k-1}, ..., L_{k-1}]. Stops at the requested depth, at
/// a fixed point, or at the zero space, whichever comes first.
inline std::vector<GradedSubspace> derived_sequence(const HomColorAlgebra& a, std::size_t depth) {
  std::vector<GradedSubspace> seq{full_space(a)};
  for (std::size_t k = 0; k < depth; ++k) {
    GradedSubspace next = bracket_span(a, std::vector<GradedSubspace>(a.arity(), seq.back()));
    const bool stable = next.part == seq.back().part;
    const bool zero = next.dim() == 0;
    seq.push_back(std::move(next));
    if (stable || zero) break;
  }
  return seq;
}

/// L^0 = L, L^k = [L^{k-1}, L, ..., L].
inline std::vector<GradedSubspace> descending_central_sequence(const HomColorAlgebra& a,
                                                               std::size_t depth) {
  const GradedSubspace full = full_space(a);
  std::vector<GradedSubspace> seq{full};
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<GradedSubspace> slots(a.arity(), full);
    slots[0] = seq.back();
    GradedSubspace next = bracket_span(a, slots);
    const bool stable = next.part == seq.back().part;
    const bool zero = next.dim() == 0;
    seq.push_back(std::move(next));
    if (stable || zero) break;
  }
  return seq;
}

/// Z(L) = {x : [x, L, ..., L] = 0}: nullspace of the stacked maps
/// x -> [x, e_t] over all canonical (n-1)-tuples t.
inline GradedSubspace center(const HomColorAlgebra& a) {
  std::vector<Vec> rows;
  for_each_canonical(a.dim(), a.arity() - 1, [&](const IndexTuple& t) {
    std::vector<Vec> images(a.dim());
    IndexTuple full(a.arity());
    for (std::size_t s = 0; s < t.size(); ++s) full[s + 1] = t[s];
    for (std::uint32_t i = 0; i < a.dim(); ++i) {
      full[0] = i;
      images[i] = bracket_basis(a, full);
    }
    for (std::size_t c = 0; c < a.dim(); ++c) {
      Vec row(a.dim());
      bool nz = false;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        row[i] = images[i][c];
        nz |= row[i] != 0;
      }
      if (nz) rows.push_back(std::move(row));
    }
  });
  if (rows.empty()) return full_space(a);
  return graded_from(a, Subspace::from_echelon(nullspace(Matrix::from_rows(rows, a.dim()))));
}

/// Z_L(H) = {x : [x, h, y_3, ..., y_n] = 0 for all h in H, y_i in L}. The
/// element is placed in the first slot only; by eps-skew-symmetry this
/// equals the any-slot condition.
inline GradedSubspace centralizer(const HomColorAlgebra& a, const GradedSubspace& H) {
  if (H.part.ambient() != a.dim()) throw input_error("centralizer: ambient mismatch");
  if (H.dim() == 0) return full_space(a);
  std::vector<Vec> rows;
  for (std::size_t hr = 0; hr < H.dim(); ++hr) {
    const Vec h = H.part.basis().row(hr);
    for_each_canonical(a.dim(), a.arity() - 2, [&](const IndexTuple& t) {
      std::vector<Vec> images(a.dim());
      std::vector<Vec> args(a.arity());
      args[1] = h;
      for (std::size_t s = 0; s < t.size(); ++s) args[s + 2] = unit_vec(a.dim(), t[s]);
      for (std::uint32_t i = 0; i < a.dim(); ++i) {
        args[0] = unit_vec(a.dim(), i);
        images[i] = bracket_eval(a, args);
      }
      for (std::size_t c = 0; c < a.dim(); ++c) {
        Vec row(a.dim());
        bool nz = false;
        for (std::size_t i = 0; i < a.dim(); ++i) {
          row[i] = images[i][c];
          nz |= row[i] != 0;
        }
        if (nz) rows.push_back(std::move(row));
      }
    });
  }
  if (rows.empty()) return full_space(a);
  return graded_from(a, Subspace::from_echelon(nullspace(Matrix::from_rows(rows, a.dim()))));
}

struct ContainmentWitness {
  std::string what;
  Vec vector;
};

struct SubspaceCheck {
  bool ok = true;
  std::optional<ContainmentWitness> witness;
};

/// alpha(H) in H and [H, ..., H] in H.
inline SubspaceCheck check_hom_subalgebra(const HomColorAlgebra& a, const GradedSubspace& H) {
  SubspaceCheck rep;
  for (std::size_t r = 0; r < H.dim(); ++r) {
    Vec img = a.alpha.mat.apply(H.part.basis().row(r));
    if (!H.part.contains(img)) {
      rep.ok = false;
      rep.witness = ContainmentWitness{"alpha(H) not contained in H", std::move(img)};
      return rep;
    }
  }
  const GradedSubspace span = bracket_span(a, std::vector<GradedSubspace>(a.arity(), H));
  for (std::size_t r = 0; r < span.dim(); ++r) {
    Vec v = span.part.basis().row(r);
    if (!H.part.contains(v)) {
      rep.ok = false;
      rep.witness = ContainmentWitness{"[H,...,H] not contained in H", std::move(v)};
      return rep;
    }
  }
  return rep;
}

/// alpha(I) in I and [I, L, ..., L] in I.
inline SubspaceCheck check_hom_ideal(const HomColorAlgebra& a, const GradedSubspace& H) {
  SubspaceCheck rep;
  for (std::size_t r = 0; r < H.dim(); ++r) {
    Vec img = a.alpha.mat.apply(H.part.basis().row(r));
    if (!H.part.contains(img)) {
      rep.ok = false;
      rep.witness = ContainmentWitness{"alpha(I) not contained in I", std::move(img)};
      return rep;
    }
  }
  std::vector<GradedSubspace> slots(a.arity(), full_space(a));
  slots[0] = H;
  const GradedSubspace span = bracket_span(a, slots);
  for (std::size_t r = 0; r < span.dim(); ++r) {
    Vec v = span.part.basis().row(r);
    if (!H.part.contains(v)) {
      rep.ok = false;
      rep.witness = ContainmentWitness{"[I, L, ..., L] not contained in I", std::move(v)};
      return rep;
    }
  }
  return rep;
}

/// H is perfect when [H, ..., H] = H.
inline bool check_perfect(const HomColorAlgebra& a, const GradedSubspace& H) {
  return bracket_span(a, std::vector<GradedSubspace>(a.arity(), H)).part == H.part;
}

} // namespace homlie
