#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncalc/errors.hpp"
#include "ncalc/linalg.hpp"

using namespace ncalc;

namespace {

Matrix mat(std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(entries[r * cols + c]);
  return m;
}

RVec vec(const std::vector<long>& entries) {
  RVec v;
  for (long e : entries) v.emplace_back(e);
  return v;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  return Rational(num(rng), den(rng));
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("3/6")->str() == "1/2");
  CHECK(Rational::parse("-4/2")->str() == "-2");
  CHECK(Rational::parse("0")->str() == "0");
  CHECK(Rational::parse("7")->str() == "7");
  CHECK(!Rational::parse("3/0").has_value());
  CHECK(!Rational::parse("").has_value());
  CHECK(!Rational::parse("1/").has_value());
  CHECK(!Rational::parse("a").has_value());
  CHECK(!Rational::parse("1.5").has_value());
  CHECK(!Rational::parse("1/-2").has_value());
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
}

TEST_CASE("rref of the identity is the identity") {
  RrefResult r = rref(Matrix::identity(2));
  CHECK(r.m == Matrix::identity(2));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of the zero matrix is zero with no pivots") {
  RrefResult r = rref(Matrix(3, 3));
  CHECK(r.m == Matrix(3, 3));
  CHECK(r.pivots.empty());
}

TEST_CASE("rref reduces a rank-1 matrix") {
  RrefResult r = rref(mat(2, 2, {2, 4, 1, 2}));
  CHECK(r.m == mat(2, 2, {1, 2, 0, 0}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("nullspace of injective and zero maps") {
  CHECK(nullspace(Matrix::identity(4)).dim() == 0);
  Subspace k = nullspace(Matrix(2, 3));
  CHECK(k.dim() == 3);
  CHECK(k == Subspace::full(3));
}

TEST_CASE("nullspace of a single constraint") {
  Subspace k = nullspace(mat(1, 3, {1, 1, 0}));
  CHECK(k.dim() == 2);
  CHECK(k.contains(vec({1, -1, 0})));
  CHECK(!k.contains(vec({1, 1, 0})));
}

TEST_CASE("solve: identity, inconsistent, underdetermined") {
  auto s1 = solve(Matrix::identity(2), vec({3, -5}));
  REQUIRE(s1.has_value());
  CHECK(s1->particular == vec({3, -5}));
  CHECK(s1->kernel.dim() == 0);

  CHECK(!solve(mat(2, 2, {1, 0, 0, 0}), vec({0, 1})).has_value());

  auto s3 = solve(mat(1, 2, {1, 1}), vec({2}));
  REQUIRE(s3.has_value());
  CHECK(s3->particular == vec({2, 0}));
  CHECK(s3->kernel.dim() == 1);
  CHECK(s3->kernel.contains(vec({1, -1})));
}

TEST_CASE("subspace membership, intersection, sum") {
  Subspace sp = Subspace::from_generators(3, {vec({2, 4, 6})});
  CHECK(sp.contains(vec({1, 2, 3})));
  CHECK(!sp.contains(vec({1, 2, 4})));

  Subspace x = Subspace::from_generators(2, {vec({1, 0})});
  Subspace y = Subspace::from_generators(2, {vec({0, 1})});
  CHECK(subspace_intersect(x, y).dim() == 0);
  CHECK(subspace_sum(x, y) == Subspace::full(2));

  CHECK_THROWS_AS((void)subspace_sum(x, Subspace::full(3)), Error);
}

TEST_CASE("subspace equality is basis independent") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 5;
    Matrix gens = random_matrix(rng, 3, d);
    std::vector<RVec> rows;
    for (std::size_t r = 0; r < 3; ++r) rows.push_back(gens.row(r));
    Subspace a = Subspace::from_generators(d, rows);

    // Random invertible-ish recombination: shuffled sums of scaled rows.
    std::vector<RVec> mixed;
    for (std::size_t r = 0; r < 3; ++r) {
      RVec w(d);
      for (std::size_t s = 0; s < 3; ++s) {
        Rational f = random_rational(rng);
        if (s == r && f.is_zero()) f = Rational(1);
        for (std::size_t c = 0; c < d; ++c) w[c] += f * rows[s][c];
      }
      mixed.push_back(std::move(w));
    }
    mixed.insert(mixed.end(), rows.begin(), rows.end());  // keep the span equal
    Subspace b = Subspace::from_generators(d, mixed);
    CHECK(a == b);
  }
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t rows = dim(rng), cols = dim(rng);
    Matrix m = random_matrix(rng, rows, cols);
    RrefResult r1 = rref(m);
    RrefResult r2 = rref(r1.m);
    CHECK(r1.m == r2.m);
    CHECK(r1.pivots == r2.pivots);
    CHECK(r1.pivots.size() + nullspace(m).dim() == cols);
  }
}

TEST_CASE("solve results satisfy the system exactly") {
  std::mt19937 rng(13579);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    const std::size_t rows = dim(rng), cols = dim(rng);
    Matrix m = random_matrix(rng, rows, cols);
    // Consistent by construction: b = m * x0.
    RVec x0(cols);
    for (auto& x : x0) x = random_rational(rng);
    RVec b = m.apply(x0);
    auto s = solve(m, b);
    REQUIRE(s.has_value());
    CHECK(m.apply(s->particular) == b);
    for (const RVec& k : s->kernel.basis()) {
      RVec mk = m.apply(k);
      CHECK(std::all_of(mk.begin(), mk.end(), [](const Rational& x) { return x.is_zero(); }));
    }
  }
}

TEST_CASE("echelon basis accumulates the same canonical subspace") {
  std::mt19937 rng(24680);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 6;
    std::vector<RVec> rows;
    std::uniform_int_distribution<std::size_t> cnt(0, 5);
    const std::size_t k = cnt(rng);
    for (std::size_t i = 0; i < k; ++i) rows.push_back(random_matrix(rng, 1, d).row(0));
    EchelonBasis acc(d);
    for (const RVec& r : rows) acc.insert(r);
    CHECK(acc.to_subspace() == Subspace::from_generators(d, rows));
  }
}

TEST_CASE("kernel refiner agrees with the assembled nullspace") {
  std::mt19937 rng(11223);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t rows = dim(rng), cols = dim(rng);
    Matrix m = random_matrix(rng, rows, cols);
    KernelRefiner ref(cols);
    for (std::size_t r = 0; r < rows; ++r) {
      SparseRow row;
      for (std::size_t c = 0; c < cols; ++c)
        if (!m.at(r, c).is_zero()) row.emplace_back(c, m.at(r, c));
      if (!row.empty()) ref.constrain(row);
    }
    CHECK(ref.subspace() == nullspace(m));
  }
}

TEST_CASE("coordinates reproduce vectors in the span and reject outsiders") {
  Subspace s = Subspace::from_generators(3, {vec({1, 0, 1}), vec({0, 1, 1})});
  auto c = s.coordinates(vec({2, 3, 5}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rational(2));
  CHECK((*c)[1] == Rational(3));
  CHECK(!s.coordinates(vec({0, 0, 1})).has_value());
}
