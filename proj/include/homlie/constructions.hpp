#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace homlie {

/// Commutative associative algebra over Q, given by a dense product table
/// (table[i*dim+j] = coordinates of e_i * e_j).
struct CommAssocAlgebra {
  std::vector<std::string> basis;
  std::vector<Vec> table;

  std::size_t dim() const { return basis.size(); }

  const Vec& product(std::size_t i, std::size_t j) const { return table[i * dim() + j]; }

  Vec multiply(const Vec& u, const Vec& v) const {
    Vec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (v[j] != 0) axpy(out, u[i] * v[j], product(i, j));
    }
    return out;
  }

  struct Violation {
    std::string what;
  };

  std::vector<Violation> validate() const {
    std::vector<Violation> out;
    if (table.size() != dim() * dim()) {
      out.push_back({"product table has wrong size"});
      return out;
    }
    for (const auto& v : table)
      if (v.size() != dim()) {
        out.push_back({"product value has wrong dimension"});
        return out;
      }
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (product(i, j) != product(j, i))
          out.push_back({"not commutative at (" + basis[i] + ", " + basis[j] + ")"});
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k) {
          const Vec lhs = multiply(product(i, j), unit_vec(dim(), k));
          const Vec rhs = multiply(unit_vec(dim(), i), product(j, k));
          if (lhs != rhs)
            out.push_back({"not associative at (" + basis[i] + ", " + basis[j] + ", " + basis[k] + ")"});
        }
    return out;
  }
};

// ---- arity reduction ---------------------------------------------------------

inline void require_reduction_element(const HomColorAlgebra& a, const Vec& xi) {
  if (xi.size() != a.dim()) throw input_error("reduction element has wrong dimension");
  const Degree e = degree_zero(a.space.group);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (xi[i] != 0 && a.space.deg(i) != e)
      throw precondition_error("reduction element is not homogeneous of degree e (coordinate " +
                               a.space.basis[i].name + ")");
  if (a.alpha.mat.apply(xi) != xi)
    throw precondition_error("reduction element is not fixed by the twist map");
}

/// Fix the first k slots of the bracket with degree-e, alpha-fixed vectors:
/// {x_1,...,x_{n-k}} = [xi_1,...,xi_k, x_1,...,x_{n-k}].
inline HomColorAlgebra reduce_by_elements(const HomColorAlgebra& a, const std::vector<Vec>& xis) {
  const std::size_t k = xis.size();
  if (k == 0) throw input_error("reduction needs at least one element");
  if (a.arity() < k + 2) throw precondition_error("reduction would drop arity below 2");
  for (const auto& xi : xis) require_reduction_element(a, xi);

  const std::uint32_t m = a.arity() - static_cast<std::uint32_t>(k);
  HomColorAlgebra out;
  out.space = a.space;
  out.alpha = a.alpha;
  out.bracket = build_bracket(a.space, m, [&](const IndexTuple& t) {
    std::vector<Vec> args;
    args.reserve(a.arity());
    for (const auto& xi : xis) args.push_back(xi);
    for (auto i : t) args.push_back(unit_vec(a.dim(), i));
    return bracket_eval(a, args);
  });
  return out;
}

inline HomColorAlgebra reduce_by_element(const HomColorAlgebra& a, const Vec& xi) {
  return reduce_by_elements(a, {xi});
}

// ---- twisting by a map -------------------------------------------------------

struct TwistResult {
  HomColorAlgebra algebra;
  CheckReport morphism; // beta need not be an endomorphism; callers get the verdict
};

/// {.,...,.} = beta [.,...,.] with new twist beta o alpha. Performed
/// unconditionally; the endomorphism check on beta is reported alongside.
inline TwistResult yau_twist(const HomColorAlgebra& a, const HomogeneousMap& beta) {
  if (!is_even_map(a.space, beta)) throw input_error("twist map must be even");
  if (beta.mat.rows() != a.dim() || beta.mat.cols() != a.dim())
    throw input_error("twist map has wrong shape");
  if (!check_degree_pattern(a.space, beta).empty())
    throw input_error("twist map entries break the even degree pattern");

  TwistResult res;
  res.algebra.space = a.space;
  res.algebra.alpha = HomogeneousMap{beta.mat * a.alpha.mat, degree_zero(a.space.group)};
  res.algebra.bracket.arity = a.arity();
  for (const auto& [t, v] : a.bracket.constants) {
    Vec w = beta.mat.apply(v);
    if (!is_zero(w)) res.algebra.bracket.constants.emplace(t, std::move(w));
  }
  res.morphism = check_morphism(beta, a, a);
  return res;
}

/// yau_twist with beta = alpha^k; requires a multiplicative algebra.
inline HomColorAlgebra twist_power(const HomColorAlgebra& a, unsigned k) {
  if (k < 1) throw input_error("twist power must be >= 1");
  if (!check_multiplicative(a).ok)
    throw precondition_error("twist power requires a multiplicative algebra");
  return yau_twist(a, HomogeneousMap{mat_pow(a.alpha.mat, k), degree_zero(a.space.group)}).algebra;
}

/// Twist by the exact inverse of alpha; the result carries the identity
/// twist (an n-Lie color algebra). Requires a regular algebra.
inline HomColorAlgebra untwist(const HomColorAlgebra& a) {
  const auto inv = inverse(a.alpha.mat);
  if (!inv || !check_multiplicative(a).ok)
    throw precondition_error("untwist requires a regular algebra (invertible multiplicative twist)");
  return yau_twist(a, HomogeneousMap{*inv, degree_zero(a.space.group)}).algebra;
}

// ---- semi-morphisms ----------------------------------------------------------

/// beta alpha = alpha beta and beta[t] = [t_1,...,beta(t_i),...,t_n] for
/// every slot i. Checking all slots makes the canonical-tuple scan
/// equivalent to the full one.
inline CheckReport check_semi_morphism(const HomColorAlgebra& a, const HomogeneousMap& beta) {
  if (!is_even_map(a.space, beta)) throw input_error("semi-morphism candidate must be even");
  CheckReport rep;
  if (beta.mat * a.alpha.mat != a.alpha.mat * beta.mat) {
    rep.ok = false;
    rep.note = "beta does not commute with the twist map";
    return rep;
  }
  for_each_canonical(a.dim(), a.arity(), [&](const IndexTuple& t) {
    if (!rep.ok) return;
    const Vec lhs = beta.mat.apply(bracket_basis(a, t));
    for (std::uint32_t slot = 0; slot < a.arity(); ++slot) {
      std::vector<Vec> args(a.arity());
      for (std::size_t s = 0; s < a.arity(); ++s) args[s] = unit_vec(a.dim(), t[s]);
      args[slot] = beta.mat.col(t[slot]);
      Vec rhs = bracket_eval(a, args);
      if (lhs != rhs) {
        rep.ok = false;
        rep.witness = TupleWitness{t, lhs, std::move(rhs),
                                   "beta[t] != [..., beta in slot " + std::to_string(slot + 1) + ", ...]"};
        return;
      }
    }
  });
  return rep;
}

/// {x_1,...,x_n} = [x_1,...,beta(x_i),...,x_n] for a semi-morphism beta;
/// slot is 1-based and the result is slot-independent.
inline HomColorAlgebra semimorphism_twist(const HomColorAlgebra& a, const HomogeneousMap& beta,
                                          std::uint32_t slot = 1) {
  if (slot < 1 || slot > a.arity()) throw input_error("slot out of range");
  if (!check_semi_morphism(a, beta).ok)
    throw precondition_error("map is not a semi-morphism of this algebra");
  HomColorAlgebra out;
  out.space = a.space;
  out.alpha = a.alpha;
  out.bracket = build_bracket(a.space, a.arity(), [&](const IndexTuple& t) {
    std::vector<Vec> args(a.arity());
    for (std::size_t s = 0; s < a.arity(); ++s) args[s] = unit_vec(a.dim(), t[s]);
    args[slot - 1] = beta.mat.col(t[slot - 1]);
    return bracket_eval(a, args);
  });
  return out;
}

// ---- averaging operators -----------------------------------------------------

/// beta alpha = alpha beta and, for every ordered pair of slots i != j,
/// beta [...,beta(x_i),...] = [...,beta(x_i),...,beta(x_j),...].
inline CheckReport check_averaging(const HomColorAlgebra& a, const HomogeneousMap& beta) {
  if (!is_even_map(a.space, beta)) throw input_error("averaging candidate must be even");
  CheckReport rep;
  if (beta.mat * a.alpha.mat != a.alpha.mat * beta.mat) {
    rep.ok = false;
    rep.note = "beta does not commute with the twist map";
    return rep;
  }
  for_each_canonical(a.dim(), a.arity(), [&](const IndexTuple& t) {
    if (!rep.ok) return;
    for (std::uint32_t i = 0; i < a.arity() && rep.ok; ++i) {
      std::vector<Vec> single(a.arity());
      for (std::size_t s = 0; s < a.arity(); ++s) single[s] = unit_vec(a.dim(), t[s]);
      single[i] = beta.mat.col(t[i]);
      const Vec lhs = beta.mat.apply(bracket_eval(a, single));
      for (std::uint32_t j = 0; j < a.arity(); ++j) {
        if (j == i) continue;
        std::vector<Vec> both = single;
        both[j] = beta.mat.col(t[j]);
        Vec rhs = bracket_eval(a, both);
        if (lhs != rhs) {
          rep.ok = false;
          rep.witness = TupleWitness{t, lhs, std::move(rhs),
                                     "slots (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
          break;
        }
      }
    }
  });
  return rep;
}

inline HomColorAlgebra averaging_twist_single(const HomColorAlgebra& a, const HomogeneousMap& beta,
                                              std::uint32_t slot = 1) {
  if (slot < 1 || slot > a.arity()) throw input_error("slot out of range");
  if (!check_averaging(a, beta).ok)
    throw precondition_error("map is not an averaging operator of this algebra");
  HomColorAlgebra out;
  out.space = a.space;
  out.alpha = a.alpha;
  out.bracket = build_bracket(a.space, a.arity(), [&](const IndexTuple& t) {
    std::vector<Vec> args(a.arity());
    for (std::size_t s = 0; s < a.arity(); ++s) args[s] = unit_vec(a.dim(), t[s]);
    args[slot - 1] = beta.mat.col(t[slot - 1]);
    return bracket_eval(a, args);
  });
  return out;
}

inline HomColorAlgebra averaging_twist_double(const HomColorAlgebra& a, const HomogeneousMap& beta,
                                              std::uint32_t slot_i = 1, std::uint32_t slot_j = 2) {
  if (slot_i < 1 || slot_j < 1 || slot_i > a.arity() || slot_j > a.arity() || slot_i == slot_j)
    throw input_error("need two distinct slots in range");
  if (!check_averaging(a, beta).ok)
    throw precondition_error("map is not an averaging operator of this algebra");
  HomColorAlgebra out;
  out.space = a.space;
  out.alpha = a.alpha;
  out.bracket = build_bracket(a.space, a.arity(), [&](const IndexTuple& t) {
    std::vector<Vec> args(a.arity());
    for (std::size_t s = 0; s < a.arity(); ++s) args[s] = unit_vec(a.dim(), t[s]);
    args[slot_i - 1] = beta.mat.col(t[slot_i - 1]);
    args[slot_j - 1] = beta.mat.col(t[slot_j - 1]);
    return bracket_eval(a, args);
  });
  return out;
}

// ---- tensor product ----------------------------------------------------------

/// A (x) L with [a_1 (x) x_1, ..., a_n (x) x_n] = a_1...a_n (x) [x_1,...,x_n],
/// twist 1 (x) alpha, and degree(a (x) x) = degree(x). Basis order is
/// row-major over (A index, L index).
inline HomColorAlgebra tensor_product(const CommAssocAlgebra& A, const HomColorAlgebra& L) {
  if (!A.validate().empty())
    throw precondition_error("coefficient algebra is not commutative associative");
  const std::size_t da = A.dim(), dl = L.dim(), dim = da * dl;

  HomColorAlgebra out;
  out.space.group = L.space.group;
  out.space.chi = L.space.chi;
  out.space.basis.reserve(dim);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dl; ++j)
      out.space.basis.push_back({A.basis[i] + "*" + L.space.basis[j].name, L.space.deg(j)});

  Matrix am(dim, dim);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t p = 0; p < dl; ++p)
      for (std::size_t q = 0; q < dl; ++q) am.at(i * dl + p, i * dl + q) = L.alpha.mat.at(p, q);
  out.alpha = HomogeneousMap{std::move(am), degree_zero(L.space.group)};

  out.bracket = build_bracket(out.space, L.arity(), [&](const IndexTuple& t) {
    IndexTuple lpart(t.size());
    Vec aval = unit_vec(da, t[0] / dl);
    lpart[0] = t[0] % dl;
    for (std::size_t s = 1; s < t.size(); ++s) {
      aval = A.multiply(aval, unit_vec(da, t[s] / dl));
      lpart[s] = t[s] % dl;
    }
    Vec out_v(dim);
    if (is_zero(aval)) return out_v;
    const Vec lval = bracket_basis(L, lpart);
    for (std::size_t p = 0; p < da; ++p) {
      if (aval[p] == 0) continue;
      for (std::size_t q = 0; q < dl; ++q) out_v[p * dl + q] = aval[p] * lval[q];
    }
    return out_v;
  });
  return out;
}

} // namespace homlie
