#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace homlie {

/// Graded space M with an even self-map; the carrier of a module structure.
struct HomModule {
  ColorSpace mspace;
  HomogeneousMap alpha_m;
};

/// The n polylinear actions omega_1..omega_n. omega[i] (0-based) takes the
/// module element in slot i; keys are full argument tuples (L basis indices
/// everywhere except the M basis index in slot i). All n maps are stored
/// explicitly so the checker can validate their mutual determination
/// instead of assuming it.
struct ModuleActions {
  std::uint32_t arity = 2;
  std::size_t dim_l = 0, dim_m = 0;
  std::vector<std::map<IndexTuple, Vec>> omega;

  const Vec* find(std::uint32_t i, const IndexTuple& key) const {
    const auto it = omega[i].find(key);
    return it == omega[i].end() ? nullptr : &it->second;
  }
};

inline Vec omega_basis(const ModuleActions& acts, std::uint32_t i, const IndexTuple& key) {
  const Vec* v = acts.find(i, key);
  return v ? *v : zero_vec(acts.dim_m);
}

/// Multilinear evaluation; args[i] is an M vector, every other slot an L vector.
inline Vec omega_eval(const ModuleActions& acts, std::uint32_t i, const std::vector<Vec>& args) {
  Vec out = zero_vec(acts.dim_m);
  IndexTuple key(acts.arity);
  auto rec = [&](auto&& self, std::size_t s, const Rational& c) -> void {
    if (s == acts.arity) {
      axpy(out, c, omega_basis(acts, i, key));
      return;
    }
    const std::size_t d = s == i ? acts.dim_m : acts.dim_l;
    for (std::uint32_t b = 0; b < d; ++b) {
      if (args[s][b] == 0) continue;
      key[s] = b;
      self(self, s + 1, c * args[s][b]);
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

/// Visit all full argument tuples for omega_i: L indices except slot i.
template <class F>
void for_each_action_tuple(std::uint32_t arity, std::uint32_t i, std::size_t dim_l, std::size_t dim_m,
                           F&& f) {
  IndexTuple t(arity, 0);
  const auto limit = [&](std::size_t s) { return s == i ? dim_m : dim_l; };
  for (std::size_t s = 0; s < arity; ++s)
    if (limit(s) == 0) return;
  while (true) {
    f(t);
    std::size_t s = arity;
    while (s > 0 && t[s - 1] + 1 == limit(s - 1)) --s;
    if (s == 0) return;
    ++t[s - 1];
    for (std::size_t j = s; j < arity; ++j) t[j] = 0;
  }
}

/// M = L acting on itself through the bracket.
inline ModuleActions self_module_actions(const HomColorAlgebra& a) {
  ModuleActions acts;
  acts.arity = a.arity();
  acts.dim_l = acts.dim_m = a.dim();
  acts.omega.resize(a.arity());
  for (std::uint32_t i = 0; i < a.arity(); ++i)
    for_each_action_tuple(a.arity(), i, a.dim(), a.dim(), [&](const IndexTuple& t) {
      Vec v = bracket_basis(a, t);
      if (!is_zero(v)) acts.omega[i].emplace(t, std::move(v));
    });
  return acts;
}

inline HomModule self_module(const HomColorAlgebra& a) { return HomModule{a.space, a.alpha}; }

struct ModuleViolation {
  char axiom = 'a';
  std::uint32_t omega_index = 0; // 1-based, matching the omega_i naming
  IndexTuple args;               // axioms a, b: the full argument tuple
  std::size_t swap_pos = 0;      // axiom a: left position of the swapped pair (0-based)
  IndexTuple x, y;               // axioms c, d
  std::uint32_t m = 0;           // axioms c, d: module basis index
  Vec residual;
};

struct ModuleReport {
  std::vector<ModuleViolation> violations; // at most one witness per axiom
  bool ok() const { return violations.empty(); }
};

/// Checks axioms a)-d). Axiom b) is read as relating omega_i to
/// omega_{i+1} (the module slot moves with the swap); axiom d)'s right side
/// applies omega_i with the inner omega_{n-1} value in slot i.
inline ModuleReport check_module(const HomColorAlgebra& a, const HomModule& mod,
                                 const ModuleActions& acts) {
  if (mod.mspace.group != a.space.group || mod.mspace.chi != a.space.chi)
    throw input_error("module check: gradings differ");
  if (acts.arity != a.arity() || acts.dim_l != a.dim() || acts.dim_m != mod.mspace.dim())
    throw input_error("module check: dimension mismatch");
  if (!is_even_map(mod.mspace, mod.alpha_m) || !check_degree_pattern(mod.mspace, mod.alpha_m).empty())
    throw input_error("module check: alpha_M must be even");

  const std::uint32_t n = a.arity();
  const auto& chi = a.space.chi;
  const auto& g = a.space.group;
  ModuleReport rep;

  // a) eps-skew-symmetry in adjacent x-type arguments
  for (std::uint32_t i = 0; i < n && rep.ok(); ++i) {
    for_each_action_tuple(n, i, a.dim(), mod.mspace.dim(), [&](const IndexTuple& t) {
      if (!rep.ok()) return;
      for (std::uint32_t p = 0; p + 1 < n; ++p) {
        if (p == i || p + 1 == i) continue;
        IndexTuple s = t;
        std::swap(s[p], s[p + 1]);
        const Rational sign(-chi.eps(a.space.deg(t[p]), a.space.deg(t[p + 1])));
        Vec lhs = omega_basis(acts, i, s);
        Vec rhs = scaled(sign, omega_basis(acts, i, t));
        if (lhs != rhs) {
          ModuleViolation v;
          v.axiom = 'a';
          v.omega_index = i + 1;
          v.args = t;
          v.swap_pos = p;
          v.residual = lhs - rhs;
          rep.violations.push_back(std::move(v));
          return;
        }
      }
    });
  }

  // b) moving the module element past the next x relates omega_i and omega_{i+1}
  for (std::uint32_t i = 0; i + 1 < n && rep.ok(); ++i) {
    for_each_action_tuple(n, i, a.dim(), mod.mspace.dim(), [&](const IndexTuple& t) {
      if (!rep.ok()) return;
      IndexTuple s = t;
      std::swap(s[i], s[i + 1]); // module index now sits in slot i+1
      const Rational sign(-chi.eps(mod.mspace.deg(t[i]), a.space.deg(t[i + 1])));
      Vec lhs = omega_basis(acts, i, t);
      Vec rhs = scaled(sign, omega_basis(acts, i + 1, s));
      if (lhs != rhs) {
        ModuleViolation v;
        v.axiom = 'b';
        v.omega_index = i + 1;
        v.args = t;
        v.residual = lhs - rhs;
        rep.violations.push_back(std::move(v));
      }
    });
  }

  const auto acol = [&](std::uint32_t j) { return a.alpha_col(j); };
  const auto amcol = [&](std::uint32_t j) { return mod.alpha_m.mat.col(j); };

  // c) omega_n compatibility with the bracket
  {
    bool done = false;
    for_each_tuple(a.dim(), n - 1, [&](const IndexTuple& x) {
      if (done) return;
      const Degree xdeg = tuple_degree(a, x);
      for_each_tuple(a.dim(), n - 1, [&](const IndexTuple& y) {
        if (done) return;
        for (std::uint32_t m = 0; m < mod.mspace.dim(); ++m) {
          IndexTuple inner_key(n);
          for (std::size_t s = 0; s + 1 < n; ++s) inner_key[s] = y[s];
          inner_key[n - 1] = m;
          std::vector<Vec> largs(n);
          for (std::size_t s = 0; s + 1 < n; ++s) largs[s] = acol(x[s]);
          largs[n - 1] = omega_basis(acts, n - 1, inner_key);
          const Vec lhs = omega_eval(acts, n - 1, largs);

          Vec rhs = zero_vec(mod.mspace.dim());
          Degree yprefix = degree_zero(g);
          for (std::uint32_t i = 0; i + 1 < n; ++i) {
            IndexTuple br(n);
            for (std::size_t s = 0; s + 1 < n; ++s) br[s] = x[s];
            br[n - 1] = y[i];
            std::vector<Vec> targs(n);
            for (std::size_t s = 0; s + 1 < n; ++s) targs[s] = acol(y[s]);
            targs[i] = bracket_basis(a, br);
            targs[n - 1] = amcol(m);
            axpy(rhs, Rational(chi.eps(xdeg, yprefix)), omega_eval(acts, n - 1, targs));
            yprefix = degree_add(g, yprefix, a.space.deg(y[i]));
          }
          IndexTuple inner2(n);
          for (std::size_t s = 0; s + 1 < n; ++s) inner2[s] = x[s];
          inner2[n - 1] = m;
          std::vector<Vec> last(n);
          for (std::size_t s = 0; s + 1 < n; ++s) last[s] = acol(y[s]);
          last[n - 1] = omega_basis(acts, n - 1, inner2);
          axpy(rhs, Rational(chi.eps(xdeg, yprefix)), omega_eval(acts, n - 1, last));

          if (lhs != rhs) {
            ModuleViolation v;
            v.axiom = 'c';
            v.omega_index = n;
            v.x = x;
            v.y = y;
            v.m = m;
            v.residual = lhs - rhs;
            rep.violations.push_back(std::move(v));
            done = true;
            return;
          }
        }
      });
    });
  }

  // d) omega_{n-1} against a full bracket in the last slot
  {
    bool done = false;
    for_each_tuple(a.dim(), n - 2, [&](const IndexTuple& x) {
      if (done) return;
      for (std::uint32_t m = 0; m < mod.mspace.dim() && !done; ++m) {
        Degree xdeg = tuple_degree(a, x);
        xdeg = degree_add(g, xdeg, mod.mspace.deg(m));
        for_each_tuple(a.dim(), n, [&](const IndexTuple& y) {
          if (done) return;
          std::vector<Vec> largs(n);
          for (std::size_t s = 0; s + 2 < n; ++s) largs[s] = acol(x[s]);
          largs[n - 2] = amcol(m);
          largs[n - 1] = bracket_basis(a, y);
          const Vec lhs = omega_eval(acts, n - 2, largs);

          Vec rhs = zero_vec(mod.mspace.dim());
          Degree yprefix = degree_zero(g);
          for (std::uint32_t i = 0; i < n; ++i) {
            IndexTuple inner_key(n);
            for (std::size_t s = 0; s + 2 < n; ++s) inner_key[s] = x[s];
            inner_key[n - 2] = m;
            inner_key[n - 1] = y[i];
            std::vector<Vec> targs(n);
            for (std::uint32_t s = 0; s < n; ++s) targs[s] = acol(y[s]);
            targs[i] = omega_basis(acts, n - 2, inner_key);
            axpy(rhs, Rational(chi.eps(xdeg, yprefix)), omega_eval(acts, i, targs));
            yprefix = degree_add(g, yprefix, a.space.deg(y[i]));
          }

          if (lhs != rhs) {
            ModuleViolation v;
            v.axiom = 'd';
            v.omega_index = n - 1;
            v.x = x;
            v.y = y;
            v.m = m;
            v.residual = lhs - rhs;
            rep.violations.push_back(std::move(v));
            done = true;
          }
        });
      }
    });
  }

  return rep;
}

/// omega~_i = omega_i with beta on every L slot and the identity on the
/// module slot. beta must be an even endomorphism of the algebra.
inline ModuleActions twist_actions(const HomColorAlgebra& a, const ModuleActions& acts,
                                   const HomogeneousMap& beta) {
  if (!check_morphism(beta, a, a).ok)
    throw precondition_error("twist_actions requires an endomorphism of the algebra");
  ModuleActions out;
  out.arity = acts.arity;
  out.dim_l = acts.dim_l;
  out.dim_m = acts.dim_m;
  out.omega.resize(acts.arity);
  for (std::uint32_t i = 0; i < acts.arity; ++i)
    for_each_action_tuple(acts.arity, i, acts.dim_l, acts.dim_m, [&](const IndexTuple& t) {
      std::vector<Vec> args(acts.arity);
      for (std::size_t s = 0; s < acts.arity; ++s)
        args[s] = s == i ? unit_vec(acts.dim_m, t[s]) : beta.mat.col(t[s]);
      Vec v = omega_eval(acts, i, args);
      if (!is_zero(v)) out.omega[i].emplace(t, std::move(v));
    });
  return out;
}

/// Self-module twisted by alpha^k (multiplicative algebras only).
inline ModuleActions powers_self_module(const HomColorAlgebra& a, unsigned k) {
  if (k < 1) throw input_error("power must be >= 1");
  if (!check_multiplicative(a).ok)
    throw precondition_error("powers_self_module requires a multiplicative algebra");
  return twist_actions(a, self_module_actions(a),
                       HomogeneousMap{mat_pow(a.alpha.mat, k), degree_zero(a.space.group)});
}

struct ModuleWithActions {
  HomModule mod;
  ModuleActions acts;
};

/// Block-diagonal direct sum of two modules over the same algebra.
inline ModuleWithActions direct_sum_modules(const HomColorAlgebra& a, const HomModule& m1,
                                            const ModuleActions& a1, const HomModule& m2,
                                            const ModuleActions& a2) {
  if (m1.mspace.group != a.space.group || m2.mspace.group != a.space.group)
    throw input_error("direct sum: gradings differ");
  const std::size_t d1 = m1.mspace.dim(), d2 = m2.mspace.dim();

  ModuleWithActions out;
  out.mod.mspace.group = a.space.group;
  out.mod.mspace.chi = a.space.chi;
  out.mod.mspace.basis = m1.mspace.basis;
  for (auto b : m2.mspace.basis) {
    if (out.mod.mspace.index_of(b.name)) b.name += "'";
    out.mod.mspace.basis.push_back(std::move(b));
  }
  Matrix am(d1 + d2, d1 + d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j) am.at(i, j) = m1.alpha_m.mat.at(i, j);
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d2; ++j) am.at(d1 + i, d1 + j) = m2.alpha_m.mat.at(i, j);
  out.mod.alpha_m = HomogeneousMap{std::move(am), degree_zero(a.space.group)};

  out.acts.arity = a.arity();
  out.acts.dim_l = a.dim();
  out.acts.dim_m = d1 + d2;
  out.acts.omega.resize(a.arity());
  for (std::uint32_t i = 0; i < a.arity(); ++i) {
    for (const auto& [t, v] : a1.omega[i]) {
      Vec w(d1 + d2);
      for (std::size_t c = 0; c < d1; ++c) w[c] = v[c];
      out.acts.omega[i].emplace(t, std::move(w));
    }
    for (const auto& [t, v] : a2.omega[i]) {
      IndexTuple key = t;
      key[i] += static_cast<std::uint32_t>(d1);
      Vec w(d1 + d2);
      for (std::size_t c = 0; c < d2; ++c) w[d1 + c] = v[c];
      out.acts.omega[i].emplace(std::move(key), std::move(w));
    }
  }
  return out;
}

/// Algebra structure on L + M for trivially graded input: all-L tuples
/// bracket as in L, a single module element acts through omega, two or
/// more module elements give zero.
inline HomColorAlgebra semidirect_sum(const HomColorAlgebra& a, const HomModule& mod,
                                      const ModuleActions& acts) {
  if (a.space.group.coords() != 0)
    throw precondition_error("semidirect sum is stated for trivial grading only");
  if (!check_module(a, mod, acts).ok())
    throw precondition_error("actions do not satisfy the module axioms");

  const std::size_t dl = a.dim(), dm = mod.mspace.dim(), dim = dl + dm;
  HomColorAlgebra out;
  out.space.group = a.space.group;
  out.space.chi = a.space.chi;
  out.space.basis = a.space.basis;
  for (auto b : mod.mspace.basis) {
    if (out.space.index_of(b.name)) b.name += "'";
    out.space.basis.push_back(std::move(b));
  }
  Matrix am(dim, dim);
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dl; ++j) am.at(i, j) = a.alpha.mat.at(i, j);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dm; ++j) am.at(dl + i, dl + j) = mod.alpha_m.mat.at(i, j);
  out.alpha = HomogeneousMap{std::move(am), degree_zero(a.space.group)};

  const std::uint32_t n = a.arity();
  out.bracket = build_bracket(out.space, n, [&](const IndexTuple& t) {
    std::size_t m_count = 0;
    for (auto i : t)
      if (i >= dl) ++m_count;
    Vec v(dim);
    if (m_count == 0) {
      const Vec w = bracket_basis(a, t);
      for (std::size_t c = 0; c < dl; ++c) v[c] = w[c];
    } else if (m_count == 1) {
      // canonical order puts the module index last
      IndexTuple key(n);
      for (std::size_t s = 0; s + 1 < n; ++s) key[s] = t[s];
      key[n - 1] = t[n - 1] - static_cast<std::uint32_t>(dl);
      const Vec w = omega_basis(acts, n - 1, key);
      for (std::size_t c = 0; c < dm; ++c) v[dl + c] = w[c];
    }
    return v;
  });
  return out;
}

} // namespace homlie
