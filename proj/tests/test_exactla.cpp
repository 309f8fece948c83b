#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace homlie;

TEST_CASE("rational parse and format round out") {
  CHECK(rat_str(rat_parse("2/4")) == "1/2");
  CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
  CHECK(rat_str(rat_parse("7")) == "7");
  CHECK(rat_str(rat_parse("0/5")) == "0");
  CHECK(rat_str(Rational(3, 1)) == "3");
  CHECK_THROWS_AS(rat_parse("1/0"), input_error);
  CHECK_THROWS_AS(rat_parse("a"), input_error);
  CHECK_THROWS_AS(rat_parse("1.5"), input_error);
  CHECK_THROWS_AS(rat_parse(""), input_error);
  CHECK_THROWS_AS(rat_parse("1/ 2"), input_error);
}

TEST_CASE("rref on the stated examples") {
  // [[2,4],[1,2]] -> [[1,2]], pivot column 1
  Matrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 1;
  m.at(1, 1) = 2;
  auto r = rref(m);
  REQUIRE(r.mat.rows() == 1);
  CHECK(r.mat.at(0, 0) == 1);
  CHECK(r.mat.at(0, 1) == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0});

  auto id = rref(Matrix::identity(3));
  CHECK(id.mat == Matrix::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto z = rref(Matrix(2, 3));
  CHECK(z.mat.rows() == 0);
  CHECK(z.pivots.empty());
}

TEST_CASE("nullspace on the stated examples") {
  Matrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  Matrix ns = nullspace(m);
  REQUIRE(ns.rows() == 1);
  CHECK(ns.at(0, 0) == 1);
  CHECK(ns.at(0, 1) == -1);

  CHECK(nullspace(Matrix::identity(4)).rows() == 0);
  CHECK(nullspace(Matrix(1, 3)).rows() == 3);
}

TEST_CASE("subspace lattice examples") {
  const Subspace x = Subspace::span(2, {Vec{Rational(1), Rational(0)}});
  const Subspace y = Subspace::span(2, {Vec{Rational(0), Rational(1)}});
  CHECK(subspace_sum(x, y) == Subspace::full(2));
  CHECK(subspace_intersect(x, y).dim() == 0);
  CHECK(Subspace::span(2, {Vec{Rational(1), Rational(1)}}).contains(Vec{Rational(2), Rational(2)}));
  CHECK_THROWS_AS(subspace_sum(x, Subspace::full(3)), input_error);
}

TEST_CASE("rank-nullity and nullspace soundness on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dims(1, 6);
  for (int it = 0; it < 60; ++it) {
    const std::size_t r = dims(rng), c = dims(rng);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = testsupport::random_rational(rng, 4, 2);
    const Matrix ns = nullspace(m);
    CHECK(rank(m) + ns.rows() == c);
    for (std::size_t v = 0; v < ns.rows(); ++v) CHECK(is_zero(m.apply(ns.row(v))));
  }
}

TEST_CASE("dimension formula for sum and intersection") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dims(1, 5);
  for (int it = 0; it < 40; ++it) {
    const std::size_t amb = dims(rng) + 1;
    auto random_space = [&] {
      std::vector<Vec> rows;
      const int count = dims(rng);
      for (int i = 0; i < count; ++i) rows.push_back(testsupport::random_vec(rng, amb));
      return Subspace::span(amb, rows);
    };
    const Subspace a = random_space(), b = random_space();
    const Subspace s = subspace_sum(a, b), i = subspace_intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("subspace equality agrees with mutual containment") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 40; ++it) {
    const std::size_t amb = 4;
    std::vector<Vec> rows1, rows2;
    for (int i = 0; i < 3; ++i) rows1.push_back(testsupport::random_vec(rng, amb));
    // rows2 spans the same space via random invertible recombination
    rows2 = rows1;
    rows2[0] = rows1[0] + rows1[1];
    rows2[1] = rows1[1] + scaled(Rational(3), rows1[2]);
    const Subspace a = Subspace::span(amb, rows1), b = Subspace::span(amb, rows2);
    CHECK(a == b);
    CHECK((a.contains(b) && b.contains(a)));
  }
}

TEST_CASE("matrix inverse round trip") {
  Matrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 4;
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(2));
  Matrix sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 1;
  CHECK_FALSE(inverse(sing).has_value());
}
