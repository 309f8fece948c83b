#pragma once

// Shared fixtures for the test suites. The algebras mirror the JSON
// documents under fixtures/ so in-process tests and CLI tests see the
// same objects.

#include <random>
#include <string>
#include <vector>

#include <homlie/homlie.hpp>

namespace testsupport {

using namespace homlie;

inline std::string fixtures_dir() {
#ifdef HOMLIE_FIXTURES_DIR
  return HOMLIE_FIXTURES_DIR;
#else
  return "fixtures";
#endif
}

inline std::string fixture(const std::string& name) { return fixtures_dir() + "/" + name; }

inline Degree deg(std::vector<std::int64_t> c) { return Degree{std::move(c)}; }

/// 3-ary, dim 4, G = Z_2, eps(i,j) = (-1)^{ij}; brackets [e1,e2,e3] = e2,
/// [e1,e2,e4] = e1; alpha: e1 -> e3, e2 -> e4, e3, e4 -> 0.
inline HomColorAlgebra make_f1() {
  ColorSpace s;
  s.group = GradingGroup{0, {2}};
  s.chi = Bicharacter{s.group, {{1}}};
  s.basis = {{"e1", deg({1})}, {"e2", deg({0})}, {"e3", deg({1})}, {"e4", deg({0})}};
  Matrix a(4, 4);
  a.at(2, 0) = 1;
  a.at(3, 1) = 1;
  std::vector<RawBracketEntry> raw = {{{0, 1, 2}, unit_vec(4, 1)}, {{0, 1, 3}, unit_vec(4, 0)}};
  HomColorAlgebra alg;
  alg.space = s;
  alg.bracket = load_normalize(s, 3, raw);
  alg.alpha = HomogeneousMap{std::move(a), degree_zero(s.group)};
  return alg;
}

inline HomColorAlgebra make_f1_alpha_id() {
  HomColorAlgebra a = make_f1();
  a.alpha.mat = Matrix::identity(4);
  return a;
}

/// 4-ary, dim 5, G = Z_2 x Z_2, eps((i1,i2),(j1,j2)) = (-1)^{i1 j2 - i2 j1},
/// alpha = id (the untwisted 4-Lie color algebra).
inline HomColorAlgebra make_f2_base() {
  ColorSpace s;
  s.group = GradingGroup{0, {2, 2}};
  s.chi = Bicharacter{s.group, {{0, 1}, {1, 0}}};
  s.basis = {{"e1", deg({0, 0})},
             {"e2", deg({0, 0})},
             {"e3", deg({0, 1})},
             {"e4", deg({1, 0})},
             {"e5", deg({1, 1})}};
  std::vector<RawBracketEntry> raw = {
      {{1, 2, 3, 4}, unit_vec(5, 0)}, {{0, 2, 3, 4}, unit_vec(5, 1)}, {{0, 1, 3, 4}, unit_vec(5, 2)}};
  HomColorAlgebra alg;
  alg.space = s;
  alg.bracket = load_normalize(s, 4, raw);
  alg.alpha = HomogeneousMap{Matrix::identity(5), degree_zero(s.group)};
  return alg;
}

inline HomogeneousMap make_swap12(const HomColorAlgebra& a) {
  Matrix m = Matrix::identity(a.dim());
  m.at(0, 0) = m.at(1, 1) = 0;
  m.at(0, 1) = m.at(1, 0) = 1;
  return HomogeneousMap{std::move(m), degree_zero(a.space.group)};
}

inline HomColorAlgebra make_f2_alpha() { return yau_twist(make_f2_base(), make_swap12(make_f2_base())).algebra; }

/// Trivially graded dim-5 binary algebra with [e4, e5] = e3, alpha = id
/// (the grading-forgotten double reduction of the 4-ary fixture).
inline HomColorAlgebra make_reduction_ungraded() {
  ColorSpace s;
  s.group = GradingGroup{0, {}};
  s.chi = Bicharacter{s.group, {}};
  for (int i = 1; i <= 5; ++i) s.basis.push_back({"e" + std::to_string(i), deg({})});
  std::vector<RawBracketEntry> raw = {{{3, 4}, unit_vec(5, 2)}};
  HomColorAlgebra alg;
  alg.space = s;
  alg.bracket = load_normalize(s, 2, raw);
  alg.alpha = HomogeneousMap{Matrix::identity(5), degree_zero(s.group)};
  return alg;
}

/// Trivially graded zero-bracket algebra of the given dimension and arity.
inline HomColorAlgebra make_zero_ungraded(std::size_t dim, std::uint32_t arity) {
  ColorSpace s;
  s.group = GradingGroup{0, {}};
  s.chi = Bicharacter{s.group, {}};
  for (std::size_t i = 1; i <= dim; ++i) s.basis.push_back({"e" + std::to_string(i), deg({})});
  HomColorAlgebra alg;
  alg.space = s;
  alg.bracket = NAryBracket{arity, {}};
  alg.alpha = HomogeneousMap{Matrix::identity(dim), degree_zero(s.group)};
  return alg;
}

/// Zero bracket over an arbitrary graded space (every even map is an
/// endomorphism of these, which the property suites exploit).
inline HomColorAlgebra make_zero_graded(const ColorSpace& space, std::uint32_t arity) {
  HomColorAlgebra alg;
  alg.space = space;
  alg.bracket = NAryBracket{arity, {}};
  alg.alpha = HomogeneousMap{Matrix::identity(space.dim()), degree_zero(space.group)};
  return alg;
}

/// Ungraded sl(2): [h,e] = 2e, [h,f] = -2f, [e,f] = h. Perfect, with
/// derivation algebra equal to the inner one.
inline HomColorAlgebra make_sl2() {
  ColorSpace s;
  s.group = GradingGroup{0, {}};
  s.chi = Bicharacter{s.group, {}};
  s.basis = {{"h", deg({})}, {"e", deg({})}, {"f", deg({})}};
  Vec he = scaled(Rational(2), unit_vec(3, 1));
  Vec hf = scaled(Rational(-2), unit_vec(3, 2));
  std::vector<RawBracketEntry> raw = {{{0, 1}, he}, {{0, 2}, hf}, {{1, 2}, unit_vec(3, 0)}};
  HomColorAlgebra alg;
  alg.space = s;
  alg.bracket = load_normalize(s, 2, raw);
  alg.alpha = HomogeneousMap{Matrix::identity(3), degree_zero(s.group)};
  return alg;
}

/// Invertible diagonal endomorphism diag(1, 1, 1, a, 1/a) of the 4-ary
/// fixture; the bracket relations force exactly this shape on diagonals
/// fixing e1, e2, e3.
inline HomogeneousMap make_f2_diag_endo(const Rational& a4) {
  Matrix m = Matrix::identity(5);
  m.at(3, 3) = a4;
  m.at(4, 4) = Rational(1) / a4;
  return HomogeneousMap{std::move(m), Degree{{0, 0}}};
}

inline CommAssocAlgebra make_rationals_algebra() {
  CommAssocAlgebra A;
  A.basis = {"1"};
  A.table = {Vec{Rational(1)}};
  return A;
}

/// Q[t]/(t^2): basis {1, t}, t*t = 0.
inline CommAssocAlgebra make_dual_numbers() {
  CommAssocAlgebra A;
  A.basis = {"1", "t"};
  A.table.assign(4, zero_vec(2));
  A.table[0 * 2 + 0] = unit_vec(2, 0);
  A.table[0 * 2 + 1] = unit_vec(2, 1);
  A.table[1 * 2 + 0] = unit_vec(2, 1);
  return A;
}

// ---- seeded random helpers ---------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng, int num_range = 6, int den_range = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rational(num(rng), den(rng));
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

/// Random even map: entries only on the degree-preserving pattern.
inline HomogeneousMap random_even_map(std::mt19937_64& rng, const ColorSpace& s) {
  Matrix m(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (s.deg(i) == s.deg(j)) m.at(i, j) = random_rational(rng);
  return HomogeneousMap{std::move(m), degree_zero(s.group)};
}

/// Random homogeneous map of the given degree.
inline HomogeneousMap random_homogeneous_map(std::mt19937_64& rng, const ColorSpace& s, const Degree& d) {
  Matrix m(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (s.deg(i) == degree_add(s.group, s.deg(j), d)) m.at(i, j) = random_rational(rng);
  return HomogeneousMap{std::move(m), d};
}

/// Random small graded space over Z_2 with random degrees.
inline ColorSpace random_z2_space(std::mt19937_64& rng, std::size_t dim) {
  ColorSpace s;
  s.group = GradingGroup{0, {2}};
  s.chi = Bicharacter{s.group, {{1}}};
  std::uniform_int_distribution<int> bit(0, 1);
  for (std::size_t i = 1; i <= dim; ++i)
    s.basis.push_back({"e" + std::to_string(i), deg({bit(rng)})});
  return s;
}

/// Full verification predicate used by the construction property suites.
inline bool fully_verifies(const HomColorAlgebra& a) {
  return check_grading(a).ok() && check_hom_jacobi(a).ok();
}

} // namespace testsupport
