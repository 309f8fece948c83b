#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grading.hpp"
#include "matrix.hpp"

namespace homlie {

struct BasisElement {
  std::string name;
  Degree degree;

  bool operator==(const BasisElement&) const = default;
};

/// G-graded vector space with a distinguished homogeneous basis and the
/// bicharacter that controls all Koszul signs.
struct ColorSpace {
  GradingGroup group;
  Bicharacter chi;
  std::vector<BasisElement> basis;

  std::size_t dim() const { return basis.size(); }
  const Degree& deg(std::size_t i) const { return basis[i].degree; }

  void validate() const {
    group.validate();
    if (chi.group != group) throw input_error("bicharacter group differs from space group");
    std::vector<std::string> names;
    for (const auto& b : basis) {
      check_degree(group, b.degree);
      if (b.degree != reduce(group, b.degree))
        throw input_error("basis degree not reduced: " + b.name);
      names.push_back(b.name);
    }
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
      throw input_error("duplicate basis name");
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == name) return i;
    return std::nullopt;
  }

  bool operator==(const ColorSpace&) const = default;
};

/// Linear map of a fixed degree d: entry (i,j) may be nonzero only when
/// deg(e_i) = deg(e_j) + d. Column j holds the image of e_j.
struct HomogeneousMap {
  Matrix mat;
  Degree degree;

  bool operator==(const HomogeneousMap&) const = default;
};

struct PatternViolation {
  std::size_t row = 0, col = 0;
};

/// Entries of `f` that sit outside the degree pattern of its declared degree.
inline std::vector<PatternViolation> check_degree_pattern(const ColorSpace& s, const HomogeneousMap& f) {
  std::vector<PatternViolation> out;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (f.mat.at(i, j) != 0 && s.deg(i) != degree_add(s.group, s.deg(j), f.degree))
        out.push_back({i, j});
  return out;
}

inline bool is_even_map(const ColorSpace& s, const HomogeneousMap& f) {
  return f.degree == degree_zero(s.group);
}

using IndexTuple = std::vector<std::uint32_t>;

/// Structure constants of the n-ary bracket, stored only on weakly
/// increasing index tuples; every other ordering is reconstructed through
/// Koszul signs, which makes eps-skew-symmetry structural.
struct NAryBracket {
  std::uint32_t arity = 2;
  std::map<IndexTuple, Vec> constants;

  bool operator==(const NAryBracket&) const = default;
};

struct HomColorAlgebra {
  ColorSpace space;
  NAryBracket bracket;
  HomogeneousMap alpha; // degree e

  std::size_t dim() const { return space.dim(); }
  std::uint32_t arity() const { return bracket.arity; }
  Vec alpha_col(std::size_t j) const { return alpha.mat.col(j); }

  bool operator==(const HomColorAlgebra&) const = default;
};

// ---- tuple enumeration ------------------------------------------------------

/// Visit every weakly increasing tuple of the given length over [0, dim),
/// in lexicographic order.
template <class F>
void for_each_canonical(std::size_t dim, std::size_t len, F&& f) {
  if (len == 0) {
    IndexTuple empty;
    f(empty);
    return;
  }
  if (dim == 0) return;
  IndexTuple t(len, 0);
  while (true) {
    f(t);
    std::size_t i = len;
    while (i > 0 && t[i - 1] == dim - 1) --i;
    if (i == 0) return;
    const auto v = ++t[i - 1];
    for (std::size_t j = i; j < len; ++j) t[j] = v;
  }
}

/// Visit every tuple (all orderings) of the given length over [0, dim).
template <class F>
void for_each_tuple(std::size_t dim, std::size_t len, F&& f) {
  if (len == 0) {
    IndexTuple empty;
    f(empty);
    return;
  }
  if (dim == 0) return;
  IndexTuple t(len, 0);
  while (true) {
    f(t);
    std::size_t i = len;
    while (i > 0 && t[i - 1] == dim - 1) --i;
    if (i == 0) return;
    ++t[i - 1];
    for (std::size_t j = i; j < len; ++j) t[j] = 0;
  }
}

inline Degree tuple_degree(const HomColorAlgebra& a, const IndexTuple& t) {
  Degree d = degree_zero(a.space.group);
  for (auto i : t) d = degree_add(a.space.group, d, a.space.deg(i));
  return d;
}

// ---- bracket evaluation -----------------------------------------------------

struct Koszul {
  int sign = 1;
  bool forced_zero = false; // an even-degree index repeats
  IndexTuple tuple;         // weakly increasing
};

/// Sort the tuple by adjacent transpositions, folding in -eps(u, v) per
/// swap. Returns the canonical tuple and accumulated sign, or the zero
/// marker when a repeated index has even degree.
inline Koszul koszul_normalize(const HomColorAlgebra& a, IndexTuple t) {
  for (auto i : t)
    if (i >= a.dim()) throw input_error("basis index out of range");
  Koszul k;
  for (std::size_t pass = 0; pass + 1 < t.size(); ++pass)
    for (std::size_t j = 0; j + 1 < t.size() - pass; ++j)
      if (t[j] > t[j + 1]) {
        k.sign *= -a.space.chi.eps(a.space.deg(t[j]), a.space.deg(t[j + 1]));
        std::swap(t[j], t[j + 1]);
      }
  for (std::size_t j = 0; j + 1 < t.size(); ++j)
    if (t[j] == t[j + 1] && a.space.chi.even(a.space.deg(t[j]))) {
      k.forced_zero = true;
      break;
    }
  k.tuple = std::move(t);
  return k;
}

/// Bracket of basis elements in any order: normalize, look up, scale.
inline Vec bracket_basis(const HomColorAlgebra& a, const IndexTuple& t) {
  if (t.size() != a.arity()) throw input_error("bracket arity mismatch");
  const Koszul k = koszul_normalize(a, t);
  if (k.forced_zero) return zero_vec(a.dim());
  const auto it = a.bracket.constants.find(k.tuple);
  if (it == a.bracket.constants.end()) return zero_vec(a.dim());
  return k.sign == 1 ? it->second : scaled(Rational(-1), it->second);
}

/// Multilinear extension over arbitrary vectors; expands over the nonzero
/// support of each argument.
inline Vec bracket_eval(const HomColorAlgebra& a, const std::vector<Vec>& args) {
  if (args.size() != a.arity()) throw input_error("bracket arity mismatch");
  const std::size_t n = args.size();
  std::vector<std::vector<std::pair<std::uint32_t, const Rational*>>> nz(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (args[s].size() != a.dim()) throw input_error("bracket argument dimension mismatch");
    for (std::uint32_t i = 0; i < a.dim(); ++i)
      if (args[s][i] != 0) nz[s].emplace_back(i, &args[s][i]);
    if (nz[s].empty()) return zero_vec(a.dim());
  }
  Vec out = zero_vec(a.dim());
  IndexTuple idx(n);
  Rational coeff;
  auto rec = [&](auto&& self, std::size_t s, const Rational& c) -> void {
    if (s == n) {
      axpy(out, c, bracket_basis(a, idx));
      return;
    }
    for (const auto& [i, p] : nz[s]) {
      idx[s] = i;
      self(self, s + 1, c * *p);
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

// ---- definitional checkers --------------------------------------------------

struct GradingViolation {
  enum class Kind { bracket_degree, alpha_entry } kind = Kind::bracket_degree;
  IndexTuple tuple;             // offending stored key (bracket violations)
  std::size_t coord = 0;        // output coordinate / matrix row
  std::size_t col = 0;          // matrix column (alpha violations)
  std::string message;
};

struct GradingReport {
  std::vector<GradingViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Degree additivity of every stored constant plus evenness of alpha.
inline GradingReport check_grading(const HomColorAlgebra& a) {
  GradingReport rep;
  for (const auto& [t, v] : a.bracket.constants) {
    const Degree want = tuple_degree(a, t);
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (v[c] != 0 && a.space.deg(c) != want) {
        GradingViolation viol;
        viol.kind = GradingViolation::Kind::bracket_degree;
        viol.tuple = t;
        viol.coord = c;
        viol.message = "bracket value coordinate " + a.space.basis[c].name + " has degree " +
                       degree_str(a.space.deg(c)) + ", tuple degree is " + degree_str(want);
        rep.violations.push_back(std::move(viol));
      }
  }
  if (!is_even_map(a.space, a.alpha)) {
    GradingViolation viol;
    viol.kind = GradingViolation::Kind::alpha_entry;
    viol.message = "twist map must be even (degree e)";
    rep.violations.push_back(std::move(viol));
  }
  for (const auto& pv : check_degree_pattern(a.space, a.alpha)) {
    GradingViolation viol;
    viol.kind = GradingViolation::Kind::alpha_entry;
    viol.coord = pv.row;
    viol.col = pv.col;
    viol.message = "twist map entry (" + a.space.basis[pv.row].name + ", " + a.space.basis[pv.col].name +
                   ") breaks the even degree pattern";
    rep.violations.push_back(std::move(viol));
  }
  return rep;
}

struct JacobiViolation {
  IndexTuple x; // length n-1
  IndexTuple y; // length n
  Vec residual; // LHS - RHS
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// LHS - RHS of the twisted n-ary Jacobi identity for one basis instance,
/// with X the total x-degree and Y_i the degree sum of y_1..y_{i-1}.
inline Vec hom_jacobi_residual(const HomColorAlgebra& a, const IndexTuple& x, const IndexTuple& y) {
  const std::uint32_t n = a.arity();
  std::vector<Vec> outer(n);
  for (std::size_t s = 0; s + 1 < n; ++s) outer[s] = a.alpha_col(x[s]);
  outer[n - 1] = bracket_basis(a, y);
  Vec lhs = bracket_eval(a, outer);

  const Degree xdeg = tuple_degree(a, x);
  Vec rhs = zero_vec(a.dim());
  Degree yprefix = degree_zero(a.space.group);
  IndexTuple inner_args(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s + 1 < n; ++s) inner_args[s] = x[s];
    inner_args[n - 1] = y[i];
    std::vector<Vec> term(n);
    for (std::uint32_t j = 0; j < n; ++j) term[j] = a.alpha_col(y[j]);
    term[i] = bracket_basis(a, inner_args);
    axpy(rhs, Rational(a.space.chi.eps(xdeg, yprefix)), bracket_eval(a, term));
    yprefix = degree_add(a.space.group, yprefix, a.space.deg(y[i]));
  }
  return lhs - rhs;
}

/// Scans weakly increasing x/(n-1) and y/n basis tuples; both sides of the
/// identity transform by the same Koszul sign under argument permutation,
/// so this enumeration is equivalent to the full one.
inline JacobiReport check_hom_jacobi(const HomColorAlgebra& a) {
  JacobiReport rep;
  for_each_canonical(a.dim(), a.arity() - 1, [&](const IndexTuple& x) {
    for_each_canonical(a.dim(), a.arity(), [&](const IndexTuple& y) {
      Vec r = hom_jacobi_residual(a, x, y);
      if (!is_zero(r)) rep.violations.push_back({x, y, std::move(r)});
    });
  });
  return rep;
}

struct TupleWitness {
  IndexTuple tuple;
  Vec lhs, rhs;
  std::string note;
};

struct CheckReport {
  bool ok = true;
  std::optional<TupleWitness> witness;
  std::string note;
};

/// alpha([t]) = [alpha t_1, ..., alpha t_n] on all canonical tuples.
inline CheckReport check_multiplicative(const HomColorAlgebra& a) {
  CheckReport rep;
  for_each_canonical(a.dim(), a.arity(), [&](const IndexTuple& t) {
    if (!rep.ok) return;
    Vec lhs = a.alpha.mat.apply(bracket_basis(a, t));
    std::vector<Vec> args(a.arity());
    for (std::size_t s = 0; s < a.arity(); ++s) args[s] = a.alpha_col(t[s]);
    Vec rhs = bracket_eval(a, args);
    if (lhs != rhs) {
      rep.ok = false;
      rep.witness = TupleWitness{t, std::move(lhs), std::move(rhs), "alpha([t]) != [alpha(t)]"};
    }
  });
  return rep;
}

struct Classification {
  bool multiplicative = false;
  bool regular = false;
  bool involutive = false;
};

inline Classification classify(const HomColorAlgebra& a) {
  Classification c;
  c.multiplicative = check_multiplicative(a).ok;
  c.regular = c.multiplicative && inverse(a.alpha.mat).has_value();
  c.involutive = a.alpha.mat * a.alpha.mat == Matrix::identity(a.dim());
  return c;
}

/// Morphism check: f even, f alpha = alpha' f, and f([t]) = [f t]' on all
/// canonical tuples. Source and target must share group, bicharacter and
/// arity.
inline CheckReport check_morphism(const HomogeneousMap& f, const HomColorAlgebra& src,
                                  const HomColorAlgebra& dst) {
  if (src.space.group != dst.space.group || src.space.chi != dst.space.chi)
    throw input_error("morphism check: source and target gradings differ");
  if (src.arity() != dst.arity()) throw input_error("morphism check: arity mismatch");
  if (!is_even_map(src.space, f)) throw input_error("morphism check: map must be even");
  if (f.mat.rows() != dst.dim() || f.mat.cols() != src.dim())
    throw input_error("morphism check: matrix shape mismatch");

  CheckReport rep;
  if (f.mat * src.alpha.mat != dst.alpha.mat * f.mat) {
    rep.ok = false;
    rep.note = "f does not intertwine the twist maps (f alpha != alpha' f)";
    return rep;
  }
  for_each_canonical(src.dim(), src.arity(), [&](const IndexTuple& t) {
    if (!rep.ok) return;
    Vec lhs = f.mat.apply(bracket_basis(src, t));
    std::vector<Vec> args(src.arity());
    for (std::size_t s = 0; s < src.arity(); ++s) args[s] = f.mat.col(t[s]);
    Vec rhs = bracket_eval(dst, args);
    if (lhs != rhs) {
      rep.ok = false;
      rep.witness = TupleWitness{t, std::move(lhs), std::move(rhs), "f([t]) != [f(t)]'"};
    }
  });
  return rep;
}

// ---- normalization of raw constants -----------------------------------------

struct RawBracketEntry {
  IndexTuple args;
  Vec value;
};

/// Fold arbitrary-order entries onto canonical keys. Conflicting values for
/// one canonical key and nonzero values on forced-zero tuples are input
/// errors; consistent duplicates merge silently.
inline NAryBracket load_normalize(const ColorSpace& space, std::uint32_t arity,
                                  const std::vector<RawBracketEntry>& raw) {
  if (arity < 2) throw input_error("bracket arity must be at least 2");
  NAryBracket b;
  b.arity = arity;
  HomColorAlgebra shell{space, NAryBracket{arity, {}}, HomogeneousMap{Matrix(space.dim(), space.dim()), degree_zero(space.group)}};
  auto key_str = [&](const IndexTuple& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + space.basis[t[i]].name;
    return s + "]";
  };
  for (const auto& e : raw) {
    if (e.args.size() != arity) throw input_error("bracket entry " + key_str(e.args) + " has wrong arity");
    if (e.value.size() != space.dim()) throw input_error("bracket value has wrong dimension");
    const Koszul k = koszul_normalize(shell, e.args);
    if (k.forced_zero) {
      if (!is_zero(e.value))
        throw input_error("entry " + key_str(e.args) +
                          " repeats an even-degree index and must be zero");
      continue;
    }
    Vec canon = k.sign == 1 ? e.value : scaled(Rational(-1), e.value);
    auto it = b.constants.find(k.tuple);
    if (it != b.constants.end()) {
      if (it->second != canon)
        throw input_error("conflicting values for canonical key " + key_str(k.tuple));
    } else if (!is_zero(canon)) {
      b.constants.emplace(k.tuple, std::move(canon));
    }
  }
  return b;
}

/// Assemble a bracket by evaluating `eval` on every weakly increasing
/// tuple. `eval` must describe an eps-skew bracket; a nonzero value on a
/// forced-zero tuple is reported as a precondition failure.
template <class Eval>
NAryBracket build_bracket(const ColorSpace& space, std::uint32_t arity, Eval&& eval) {
  if (arity < 2) throw input_error("bracket arity must be at least 2");
  NAryBracket b;
  b.arity = arity;
  HomColorAlgebra shell{space, NAryBracket{arity, {}}, HomogeneousMap{Matrix(space.dim(), space.dim()), degree_zero(space.group)}};
  for_each_canonical(space.dim(), arity, [&](const IndexTuple& t) {
    Vec v = eval(t);
    if (is_zero(v)) return;
    if (koszul_normalize(shell, t).forced_zero)
      throw precondition_error("construction yields a nonzero value on a tuple forced to zero "
                               "by eps-skew-symmetry");
    b.constants.emplace(t, std::move(v));
  });
  return b;
}

} // namespace homlie
