#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "constructions.hpp"
#include "subspace.hpp"

namespace homlie {

/// Degrees a nonzero homogeneous endomorphism can have: differences of
/// occurring basis degrees, plus e.
inline std::vector<Degree> candidate_degrees(const HomColorAlgebra& a) {
  std::set<Degree> ds;
  ds.insert(degree_zero(a.space.group));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      ds.insert(degree_sub(a.space.group, a.space.deg(i), a.space.deg(j)));
  return {ds.begin(), ds.end()};
}

enum class MapKind { der, centroid, quasicentroid, zder };

inline const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::der: return "der";
    case MapKind::centroid: return "centroid";
    case MapKind::quasicentroid: return "quasicentroid";
    case MapKind::zder: return "zder";
  }
  return "?";
}

/// Solution space of one defining identity, one subspace per candidate
/// degree. Joint kinds (quasi/generalized derivations) stack all unknown
/// maps into one flattened vector of nmaps * dim^2 coordinates.
struct MapSpacePart {
  Degree degree;
  Subspace space; // ambient nmaps * dim * dim, row-major per map
};

struct DegreeIndexedMapSpace {
  int twist_power = 0;
  std::uint32_t nmaps = 1;
  std::vector<MapSpacePart> parts; // sorted by degree

  std::size_t total_dim() const {
    std::size_t s = 0;
    for (const auto& p : parts) s += p.space.dim();
    return s;
  }

  const MapSpacePart* part(const Degree& d) const {
    for (const auto& p : parts)
      if (p.degree == d) return &p;
    return nullptr;
  }
};

/// alpha^k, with k = -1 meaning the exact inverse (regular algebras only).
inline Matrix twist_matrix_power(const HomColorAlgebra& a, int k) {
  if (k >= 0) return mat_pow(a.alpha.mat, static_cast<unsigned>(k));
  const auto inv = inverse(a.alpha.mat);
  if (!inv || !check_multiplicative(a).ok)
    throw precondition_error("twist power -1 requires a regular algebra");
  return *inv;
}

namespace detail {

/// Unknown layout for maps of one fixed degree d: the in-pattern positions
/// (p, q) with deg_p = deg_q + d, ordered row-major.
struct MapPattern {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pos;
  std::vector<std::vector<int>> index; // dim x dim, -1 when off-pattern

  MapPattern(const HomColorAlgebra& a, const Degree& d)
      : index(a.dim(), std::vector<int>(a.dim(), -1)) {
    for (std::uint32_t p = 0; p < a.dim(); ++p)
      for (std::uint32_t q = 0; q < a.dim(); ++q)
        if (a.space.deg(p) == degree_add(a.space.group, a.space.deg(q), d)) {
          index[p][q] = static_cast<int>(pos.size());
          pos.emplace_back(p, q);
        }
  }

  std::size_t size() const { return pos.size(); }
};

/// Rows expressing alpha o D = D o alpha for the unknown map block mi.
inline void append_commutation_rows(const HomColorAlgebra& a, const MapPattern& pat, std::size_t nunk,
                                    std::size_t mi, std::vector<Vec>& rows) {
  const std::size_t base = mi * pat.size();
  for (std::uint32_t p = 0; p < a.dim(); ++p)
    for (std::uint32_t q = 0; q < a.dim(); ++q) {
      Vec row(nunk);
      bool nz = false;
      for (std::size_t u = 0; u < pat.size(); ++u) {
        const auto [r, c] = pat.pos[u];
        Rational coef;
        if (c == q) coef += a.alpha.mat.at(p, r); // (alpha D)_{pq} picks up D_{r,q}
        if (r == p) coef -= a.alpha.mat.at(c, q); // (D alpha)_{pq} picks up D_{p,c}
        if (coef != 0) {
          row[base + u] = coef;
          nz = true;
        }
      }
      if (nz) rows.push_back(std::move(row));
    }
}

struct TupleData {
  Vec bracket;                 // [t]
  std::vector<Rational> sign;  // eps(d, X_i) per slot
  // insertion[i][p] = [alpha^k t_1, ..., e_p at slot i, ..., alpha^k t_n]
  std::vector<std::vector<Vec>> insertion;
};

inline TupleData tuple_data(const HomColorAlgebra& a, const Matrix& ak, const Degree& d,
                            const IndexTuple& t) {
  const std::uint32_t n = a.arity();
  TupleData td;
  td.bracket = bracket_basis(a, t);
  td.sign.resize(n);
  td.insertion.assign(n, std::vector<Vec>(a.dim()));
  Degree prefix = degree_zero(a.space.group);
  for (std::uint32_t i = 0; i < n; ++i) {
    td.sign[i] = a.space.chi.eps(d, prefix);
    prefix = degree_add(a.space.group, prefix, a.space.deg(t[i]));
    std::vector<Vec> args(n);
    for (std::uint32_t s = 0; s < n; ++s) args[s] = ak.col(t[s]);
    for (std::uint32_t p = 0; p < a.dim(); ++p) {
      args[i] = unit_vec(a.dim(), p);
      td.insertion[i][p] = bracket_eval(a, args);
    }
  }
  return td;
}

inline void push_if_nonzero(std::vector<Vec>& rows, Vec row) {
  if (!is_zero(row)) rows.push_back(std::move(row));
}

/// Collects constraint rows, collapsing exact +/- duplicates (permuted
/// tuples mostly reproduce rows up to sign).
struct RowCollector {
  std::set<Vec> seen;
  std::vector<Vec> rows;

  void push(Vec row) {
    if (is_zero(row)) return;
    for (const auto& x : row) {
      if (x > 0) break;
      if (x < 0) {
        row = scaled(Rational(-1), row);
        break;
      }
    }
    if (seen.insert(row).second) rows.push_back(row);
  }
};

/// Embed pattern-coordinate nullspace rows into full nmaps*dim^2 ambient.
inline Subspace embed_solutions(const Matrix& ns, const MapPattern& pat, std::size_t dim,
                                std::uint32_t nmaps) {
  const std::size_t amb = nmaps * dim * dim;
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < ns.rows(); ++r) {
    Vec full(amb);
    for (std::uint32_t m = 0; m < nmaps; ++m)
      for (std::size_t u = 0; u < pat.size(); ++u) {
        const auto [p, q] = pat.pos[u];
        full[m * dim * dim + p * dim + q] = ns.at(r, m * pat.size() + u);
      }
    rows.push_back(std::move(full));
  }
  return Subspace::span(amb, rows);
}

} // namespace detail

/// Exact solution space of the chosen defining identity at twist power k,
/// assembled per candidate degree over all canonical tuples (the
/// identities are sign-equivariant under argument permutation, so
/// canonical tuples carry the full constraint set). alpha o D = D o alpha
/// is imposed for every kind.
inline DegreeIndexedMapSpace compute_space(const HomColorAlgebra& a, int k, MapKind kind) {
  const Matrix ak = twist_matrix_power(a, k);
  const std::uint32_t n = a.arity();
  DegreeIndexedMapSpace out;
  out.twist_power = k;
  out.nmaps = 1;
  for (const Degree& d : candidate_degrees(a)) {
    detail::MapPattern pat(a, d);
    const std::size_t nunk = pat.size();
    std::vector<Vec> rows;
    detail::append_commutation_rows(a, pat, nunk, 0, rows);
    for_each_canonical(a.dim(), n, [&](const IndexTuple& t) {
      const auto td = detail::tuple_data(a, ak, d, t);
      const auto add_value_coeffs = [&](Vec& row, std::size_t c) {
        // + D([t]) restricted to output coordinate c
        for (std::uint32_t q = 0; q < a.dim(); ++q) {
          if (td.bracket[q] == 0) continue;
          const int u = pat.index[c][q];
          if (u >= 0) row[u] += td.bracket[q];
        }
      };
      const auto sub_insertion = [&](Vec& row, std::uint32_t i, std::size_t c, const Rational& s) {
        // - s * [alpha^k .., D(t_i) at i, ..] restricted to coordinate c
        for (std::uint32_t p = 0; p < a.dim(); ++p) {
          const int u = pat.index[p][t[i]];
          if (u < 0) continue;
          const Rational& w = td.insertion[i][p][c];
          if (w != 0) row[u] -= s * w;
        }
      };
      switch (kind) {
        case MapKind::der:
          for (std::size_t c = 0; c < a.dim(); ++c) {
            Vec row(nunk);
            add_value_coeffs(row, c);
            for (std::uint32_t i = 0; i < n; ++i) sub_insertion(row, i, c, td.sign[i]);
            detail::push_if_nonzero(rows, std::move(row));
          }
          break;
        case MapKind::centroid:
          for (std::uint32_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < a.dim(); ++c) {
              Vec row(nunk);
              add_value_coeffs(row, c);
              sub_insertion(row, i, c, td.sign[i]);
              detail::push_if_nonzero(rows, std::move(row));
            }
          break;
        case MapKind::quasicentroid:
          // [D(t_1), alpha^k t_2, ...] = eps(d, X_i) [alpha^k .., D(t_i), ..]
          for (std::uint32_t i = 1; i < n; ++i)
            for (std::size_t c = 0; c < a.dim(); ++c) {
              Vec row(nunk);
              for (std::uint32_t p = 0; p < a.dim(); ++p) {
                const int u = pat.index[p][t[0]];
                if (u < 0) continue;
                const Rational& w = td.insertion[0][p][c];
                if (w != 0) row[u] += w;
              }
              sub_insertion(row, i, c, td.sign[i]);
              detail::push_if_nonzero(rows, std::move(row));
            }
          break;
        case MapKind::zder:
          for (std::size_t c = 0; c < a.dim(); ++c) {
            Vec row(nunk);
            add_value_coeffs(row, c);
            detail::push_if_nonzero(rows, std::move(row));
          }
          for (std::uint32_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < a.dim(); ++c) {
              Vec row(nunk);
              sub_insertion(row, i, c, Rational(1));
              detail::push_if_nonzero(rows, std::move(row));
            }
          break;
      }
    });
    const Matrix ns = nullspace(Matrix::from_rows(rows, nunk));
    out.parts.push_back({d, detail::embed_solutions(ns, pat, a.dim(), 1)});
  }
  return out;
}

/// Joint (D, D') space: D'([t]) = sum_i eps(d, X_i) [alpha^k .., D(t_i), ..],
/// both maps commuting with alpha. The D-projection is the quasiderivation
/// space proper.
inline DegreeIndexedMapSpace compute_qder(const HomColorAlgebra& a, int k) {
  const Matrix ak = twist_matrix_power(a, k);
  const std::uint32_t n = a.arity();
  DegreeIndexedMapSpace out;
  out.twist_power = k;
  out.nmaps = 2;
  for (const Degree& d : candidate_degrees(a)) {
    detail::MapPattern pat(a, d);
    const std::size_t nunk = 2 * pat.size();
    std::vector<Vec> rows;
    detail::append_commutation_rows(a, pat, nunk, 0, rows);
    detail::append_commutation_rows(a, pat, nunk, 1, rows);
    for_each_canonical(a.dim(), n, [&](const IndexTuple& t) {
      const auto td = detail::tuple_data(a, ak, d, t);
      for (std::size_t c = 0; c < a.dim(); ++c) {
        Vec row(nunk);
        for (std::uint32_t q = 0; q < a.dim(); ++q) {
          if (td.bracket[q] == 0) continue;
          const int u = pat.index[c][q];
          if (u >= 0) row[pat.size() + u] += td.bracket[q]; // D'([t])
        }
        for (std::uint32_t i = 0; i < n; ++i)
          for (std::uint32_t p = 0; p < a.dim(); ++p) {
            const int u = pat.index[p][t[i]];
            if (u < 0) continue;
            const Rational& w = td.insertion[i][p][c];
            if (w != 0) row[u] -= td.sign[i] * w;
          }
        detail::push_if_nonzero(rows, std::move(row));
      }
    });
    const Matrix ns = nullspace(Matrix::from_rows(rows, nunk));
    out.parts.push_back({d, detail::embed_solutions(ns, pat, a.dim(), 2)});
  }
  return out;
}

/// Joint (D^{(0)}, ..., D^{(n)}) space:
/// D^{(n)}([t]) = sum_i eps(d, X_i) [alpha^k .., D^{(i-1)}(t_i), ..],
/// every component commuting with alpha. Because the inserted map is
/// indexed by the slot, this identity is NOT sign-equivariant under
/// argument permutation; the scan must cover all orderings.
inline DegreeIndexedMapSpace compute_gder(const HomColorAlgebra& a, int k) {
  const Matrix ak = twist_matrix_power(a, k);
  const std::uint32_t n = a.arity();
  const std::uint32_t nmaps = n + 1;
  DegreeIndexedMapSpace out;
  out.twist_power = k;
  out.nmaps = nmaps;
  for (const Degree& d : candidate_degrees(a)) {
    detail::MapPattern pat(a, d);
    const std::size_t nunk = nmaps * pat.size();
    detail::RowCollector rc;
    {
      std::vector<Vec> commrows;
      for (std::uint32_t m = 0; m < nmaps; ++m)
        detail::append_commutation_rows(a, pat, nunk, m, commrows);
      for (auto& r : commrows) rc.push(std::move(r));
    }
    for_each_tuple(a.dim(), n, [&](const IndexTuple& t) {
      const auto td = detail::tuple_data(a, ak, d, t);
      for (std::size_t c = 0; c < a.dim(); ++c) {
        Vec row(nunk);
        for (std::uint32_t q = 0; q < a.dim(); ++q) {
          if (td.bracket[q] == 0) continue;
          const int u = pat.index[c][q];
          if (u >= 0) row[n * pat.size() + u] += td.bracket[q]; // D^{(n)}([t])
        }
        for (std::uint32_t i = 0; i < n; ++i)
          for (std::uint32_t p = 0; p < a.dim(); ++p) {
            const int u = pat.index[p][t[i]];
            if (u < 0) continue;
            const Rational& w = td.insertion[i][p][c];
            if (w != 0) row[i * pat.size() + u] -= td.sign[i] * w; // D^{(i-1)} in slot i
          }
        rc.push(std::move(row));
      }
    });
    const Matrix ns = nullspace(Matrix::from_rows(rc.rows, nunk));
    out.parts.push_back({d, detail::embed_solutions(ns, pat, a.dim(), nmaps)});
  }
  return out;
}

/// Slice one map block out of a joint space part and re-canonicalize.
inline Subspace project_map(const MapSpacePart& part, std::size_t dim, std::uint32_t map_index = 0) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < part.space.dim(); ++r) {
    const Vec full = part.space.basis().row(r);
    rows.emplace_back(full.begin() + map_index * dim * dim, full.begin() + (map_index + 1) * dim * dim);
  }
  return Subspace::span(dim * dim, rows);
}

inline bool part_contains_map(const MapSpacePart& part, const Matrix& m) {
  return part.space.contains(m.flatten());
}

/// Point check of the alpha^k-derivation identity for one concrete map.
inline CheckReport check_alpha_k_derivation(const HomColorAlgebra& a, const HomogeneousMap& D, int k) {
  if (!check_degree_pattern(a.space, D).empty())
    throw input_error("map entries do not match the declared degree");
  const Matrix ak = twist_matrix_power(a, k);
  CheckReport rep;
  if (a.alpha.mat * D.mat != D.mat * a.alpha.mat) {
    rep.ok = false;
    rep.note = "D does not commute with the twist map";
    return rep;
  }
  const std::uint32_t n = a.arity();
  for_each_canonical(a.dim(), n, [&](const IndexTuple& t) {
    if (!rep.ok) return;
    Vec lhs = D.mat.apply(bracket_basis(a, t));
    Vec rhs = zero_vec(a.dim());
    Degree prefix = degree_zero(a.space.group);
    for (std::uint32_t i = 0; i < n; ++i) {
      std::vector<Vec> args(n);
      for (std::uint32_t s = 0; s < n; ++s) args[s] = ak.col(t[s]);
      args[i] = D.mat.col(t[i]);
      axpy(rhs, Rational(a.space.chi.eps(D.degree, prefix)), bracket_eval(a, args));
      prefix = degree_add(a.space.group, prefix, a.space.deg(t[i]));
    }
    if (lhs != rhs) {
      rep.ok = false;
      rep.witness = TupleWitness{t, std::move(lhs), std::move(rhs), "Leibniz identity fails"};
    }
  });
  return rep;
}

/// Centroid identity point check (every single insertion reproduces D of
/// the bracket); shared by the tensor-centroid proposition test.
inline CheckReport check_centroid_identity(const HomColorAlgebra& a, const HomogeneousMap& D, int k) {
  if (!check_degree_pattern(a.space, D).empty())
    throw input_error("map entries do not match the declared degree");
  const Matrix ak = twist_matrix_power(a, k);
  CheckReport rep;
  if (a.alpha.mat * D.mat != D.mat * a.alpha.mat) {
    rep.ok = false;
    rep.note = "D does not commute with the twist map";
    return rep;
  }
  const std::uint32_t n = a.arity();
  for_each_canonical(a.dim(), n, [&](const IndexTuple& t) {
    if (!rep.ok) return;
    const Vec lhs = D.mat.apply(bracket_basis(a, t));
    Degree prefix = degree_zero(a.space.group);
    for (std::uint32_t i = 0; i < n; ++i) {
      std::vector<Vec> args(n);
      for (std::uint32_t s = 0; s < n; ++s) args[s] = ak.col(t[s]);
      args[i] = D.mat.col(t[i]);
      Vec rhs = scaled(Rational(a.space.chi.eps(D.degree, prefix)), bracket_eval(a, args));
      prefix = degree_add(a.space.group, prefix, a.space.deg(t[i]));
      if (lhs != rhs) {
        rep.ok = false;
        rep.witness = TupleWitness{t, lhs, std::move(rhs),
                                   "centroid identity fails at slot " + std::to_string(i + 1)};
        return;
      }
    }
  });
  return rep;
}

/// Color commutator [D, D'] = D D' - eps(d, d') D' D of degree d + d'.
inline HomogeneousMap commutator(const HomColorAlgebra& a, const HomogeneousMap& d1,
                                 const HomogeneousMap& d2) {
  const Rational s(a.space.chi.eps(d1.degree, d2.degree));
  Matrix m = d1.mat * d2.mat;
  const Matrix n = d2.mat * d1.mat;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= s * n.at(i, j);
  return HomogeneousMap{std::move(m), degree_add(a.space.group, d1.degree, d2.degree)};
}

/// omega(D) = D o alpha, same degree.
inline HomogeneousMap omega_twist(const HomColorAlgebra& a, const HomogeneousMap& d) {
  return HomogeneousMap{d.mat * a.alpha.mat, d.degree};
}

/// ad_{x_1..x_{n-1}} : y -> [x_1, ..., x_{n-1}, y]; degree is the sum of
/// the argument degrees. Whether it is an alpha^k-derivation is a separate
/// check, never assumed.
inline HomogeneousMap inner_derivation(const HomColorAlgebra& a, const std::vector<Vec>& xs) {
  if (xs.size() + 1 != a.arity()) throw input_error("inner derivation needs n-1 arguments");
  Degree d = degree_zero(a.space.group);
  for (const auto& x : xs) {
    if (x.size() != a.dim()) throw input_error("argument dimension mismatch");
    std::optional<Degree> xd;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (x[i] == 0) continue;
      if (!xd)
        xd = a.space.deg(i);
      else if (*xd != a.space.deg(i))
        throw precondition_error("inner derivation arguments must be homogeneous");
    }
    if (xd) d = degree_add(a.space.group, d, *xd);
  }
  Matrix m(a.dim(), a.dim());
  std::vector<Vec> args(a.arity());
  for (std::size_t s = 0; s + 1 < a.arity(); ++s) args[s] = xs[s];
  for (std::uint32_t j = 0; j < a.dim(); ++j) {
    args[a.arity() - 1] = unit_vec(a.dim(), j);
    const Vec col = bracket_eval(a, args);
    for (std::size_t i = 0; i < a.dim(); ++i) m.at(i, j) = col[i];
  }
  return HomogeneousMap{std::move(m), std::move(d)};
}

// ---- the derivation algebra ---------------------------------------------------

struct DerAlgebraResult {
  bool ok = false;
  std::string error;
  HomColorAlgebra algebra;        // binary, twist = (D -> D o alpha)
  std::vector<Matrix> basis_maps; // the underlying endomorphisms
};

namespace detail {

inline std::optional<Vec> expand_in(const Subspace& s, const Vec& v) {
  Vec w = v;
  Vec coeffs(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    std::size_t lead = 0;
    while (lead < s.ambient() && s.basis().at(r, lead) == 0) ++lead;
    if (lead == s.ambient()) continue;
    coeffs[r] = w[lead];
    if (w[lead] != 0) {
      const Rational f = w[lead];
      for (std::size_t j = lead; j < s.ambient(); ++j) w[j] -= f * s.basis().at(r, j);
    }
  }
  if (!is_zero(w)) return std::nullopt;
  return coeffs;
}

} // namespace detail

/// Binary Hom-Lie color algebra on the subspace sum of Der_{alpha^k} for
/// k up to k_max (k = -1 included for regular algebras), with the color
/// commutator as bracket and D -> D o alpha as twist. Fails gracefully
/// when the commutator or the twist does not close on that subspace.
inline DerAlgebraResult der_algebra(const HomColorAlgebra& a, unsigned k_max) {
  DerAlgebraResult res;
  const std::size_t amb = a.dim() * a.dim();
  const bool regular = classify(a).regular;
  std::vector<Vec> rows;
  for (int k = regular ? -1 : 0; k <= static_cast<int>(k_max); ++k) {
    const auto space = compute_space(a, k, MapKind::der);
    for (const auto& part : space.parts)
      for (std::size_t r = 0; r < part.space.dim(); ++r) rows.push_back(part.space.basis().row(r));
  }
  const Subspace sum = Subspace::span(amb, rows);
  const std::size_t N = sum.dim();

  ColorSpace ds;
  ds.group = a.space.group;
  ds.chi = a.space.chi;
  std::vector<Degree> degs;
  for (std::size_t r = 0; r < N; ++r) {
    const Matrix m = Matrix::unflatten(sum.basis().row(r), a.dim(), a.dim());
    res.basis_maps.push_back(m);
    std::optional<Degree> d;
    for (std::size_t p = 0; p < a.dim(); ++p)
      for (std::size_t q = 0; q < a.dim(); ++q) {
        if (m.at(p, q) == 0) continue;
        const Degree dd = degree_sub(a.space.group, a.space.deg(p), a.space.deg(q));
        if (!d)
          d = dd;
        else if (*d != dd) {
          res.error = "derivation basis row is not degree-homogeneous";
          return res;
        }
      }
    degs.push_back(d.value_or(degree_zero(a.space.group)));
    ds.basis.push_back({"D" + std::to_string(r + 1), degs.back()});
  }

  Matrix twist(N, N);
  for (std::size_t j = 0; j < N; ++j) {
    const auto coeffs = detail::expand_in(sum, (res.basis_maps[j] * a.alpha.mat).flatten());
    if (!coeffs) {
      res.error = "omega does not map the derivation space into itself";
      return res;
    }
    for (std::size_t i = 0; i < N; ++i) twist.at(i, j) = (*coeffs)[i];
  }

  std::vector<RawBracketEntry> raw;
  for (std::uint32_t i = 0; i < N; ++i)
    for (std::uint32_t j = i; j < N; ++j) {
      const HomogeneousMap di{res.basis_maps[i], degs[i]};
      const HomogeneousMap dj{res.basis_maps[j], degs[j]};
      const auto coeffs = detail::expand_in(sum, commutator(a, di, dj).mat.flatten());
      if (!coeffs) {
        res.error = "commutator does not close on the derivation space";
        return res;
      }
      raw.push_back({{i, j}, *coeffs});
    }
  res.algebra.space = std::move(ds);
  res.algebra.alpha = HomogeneousMap{std::move(twist), degree_zero(a.space.group)};
  res.algebra.bracket = load_normalize(res.algebra.space, 2, raw);
  res.ok = true;
  return res;
}

// ---- centroid of a commutative associative algebra ------------------------------

/// C(A) = {f : f(ab) = f(a)b = a f(b)}, as a subspace of flattened dim^2
/// matrices.
inline Subspace assoc_centroid(const CommAssocAlgebra& A) {
  const std::size_t d = A.dim(), amb = d * d;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec& vij = A.product(i, j);
      for (std::size_t c = 0; c < d; ++c) {
        Vec left(amb), right(amb);
        for (std::size_t q = 0; q < d; ++q) {
          if (vij[q] == 0) continue;
          left[c * d + q] += vij[q];
          right[c * d + q] += vij[q];
        }
        for (std::size_t p = 0; p < d; ++p) {
          const Rational& lw = A.product(p, j)[c]; // f(e_i) e_j
          if (lw != 0) left[p * d + i] -= lw;
          const Rational& rw = A.product(i, p)[c]; // e_i f(e_j)
          if (rw != 0) right[p * d + j] -= rw;
        }
        detail::push_if_nonzero(rows, std::move(left));
        detail::push_if_nonzero(rows, std::move(right));
      }
    }
  return Subspace::from_echelon(nullspace(Matrix::from_rows(rows, amb)));
}

/// Verify the centroid identity of f (x) phi on the tensor product algebra.
inline CheckReport check_tensor_centroid(const CommAssocAlgebra& A, const HomColorAlgebra& L,
                                         const Matrix& f, const HomogeneousMap& phi, int k) {
  if (f.rows() != A.dim() || f.cols() != A.dim()) throw input_error("centroid factor has wrong shape");
  const HomColorAlgebra T = tensor_product(A, L);
  const std::size_t da = A.dim(), dl = L.dim();
  Matrix Fm(da * dl, da * dl);
  for (std::size_t p = 0; p < da; ++p)
    for (std::size_t i = 0; i < da; ++i) {
      if (f.at(p, i) == 0) continue;
      for (std::size_t q = 0; q < dl; ++q)
        for (std::size_t j = 0; j < dl; ++j) Fm.at(p * dl + q, i * dl + j) = f.at(p, i) * phi.mat.at(q, j);
    }
  return check_centroid_identity(T, HomogeneousMap{std::move(Fm), phi.degree}, k);
}

} // namespace homlie
