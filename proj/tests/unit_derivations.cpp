#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncalc/derivations.hpp"
#include "ncalc/errors.hpp"
#include "oracles.hpp"

using namespace ncalc;

namespace {

Derivation zero_derivation(const Algebra& a) { return Derivation(a, Matrix(a.dim(), a.dim())); }

}  // namespace

TEST_CASE("the ground field has no nonzero derivations") {
  CHECK(derivations(preset("matrix", 1)).dim() == 0);
}

TEST_CASE("Der of matrix algebras equals the span of inner derivations") {
  for (long n : {2L, 3L}) {
    Algebra a = preset("matrix", n);
    VModule v = derivations(a);
    CHECK(v.space() == oracles::inner_derivation_span(a));
    CHECK(v.dim() == static_cast<std::size_t>(n * n - 1));
  }
}

TEST_CASE("Der of the quaternions equals the inner span of dimension 3") {
  Algebra h = preset("quaternions");
  VModule v = derivations(h);
  CHECK(v.dim() == 3);
  CHECK(v.space() == oracles::inner_derivation_span(h));
}

TEST_CASE("the Leibniz solver agrees with the elementary-matrix defect oracle") {
  for (auto a : {preset("matrix", 2), preset("dual-numbers"), preset("triangular", 2), preset("quaternions"),
                 preset("group-algebra-cyclic", 3)}) {
    CHECK(derivations(a).space() == oracles::leibniz_solution_space(a));
  }
}

TEST_CASE("dual numbers: Der is spanned by 1 -> 0, x -> x") {
  Algebra d = preset("dual-numbers");
  VModule v = derivations(d);
  REQUIRE(v.dim() == 1);
  Matrix e(2, 2);
  e.at(1, 1) = 1;  // columns: image of 1 is 0, image of x is x
  CHECK(v.basis()[0].matrix() == e);
}

TEST_CASE("inner derivations: unit and central elements give zero") {
  Algebra m2 = preset("matrix", 2);
  CHECK(inner_derivation(m2.unit()).is_zero());
  Algebra c3 = preset("group-algebra-cyclic", 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(inner_derivation(c3.basis_element(i)).is_zero());
}

TEST_CASE("inner derivation arithmetic in the matrix algebra") {
  Algebra m2 = preset("matrix", 2);
  Derivation ad = inner_derivation(m2.basis_element(0));  // ad_{E11}
  CHECK(ad(m2.basis_element(1)) == m2.basis_element(1));   // [E11, E12] = E12
  CHECK(ad(m2.basis_element(2)) == -m2.basis_element(2));  // [E11, E21] = -E21
}

TEST_CASE("inner derivations always lie inside Der") {
  for (auto a : {preset("matrix", 2), preset("triangular", 3), preset("quaternions"), preset("dual-numbers")}) {
    VModule v = derivations(a);
    for (std::size_t i = 0; i < a.dim(); ++i) CHECK(v.contains(inner_derivation(a.basis_element(i))));
  }
}

TEST_CASE("every derivation kills the unit") {
  for (auto a : {preset("matrix", 2), preset("matrix", 3), preset("dual-numbers"), preset("triangular", 2)}) {
    for (const Derivation& v : derivations(a).basis()) CHECK(v(a.unit()).is_zero());
  }
}

TEST_CASE("z_action by the unit and by zero") {
  Algebra m2 = preset("matrix", 2);
  VModule v = derivations(m2);
  const Derivation& u = v.basis()[0];
  CHECK(z_action(m2.unit(), u) == u);
  CHECK(z_action(m2.zero(), u).is_zero());
}

TEST_CASE("dual numbers: x annihilates the derivation module") {
  Algebra d = preset("dual-numbers");
  VModule v = derivations(d);
  const Element x = d.basis_element(1);
  Derivation xe = z_action(x, v.basis()[0]);
  // Direct matrix product: L_x * D_E computed by hand here.
  Matrix expected = left_mult_matrix(x) * v.basis()[0].matrix();
  CHECK(xe.matrix() == expected);
  CHECK(xe.is_zero());
}

TEST_CASE("z_action rejects non-central multipliers") {
  Algebra m2 = preset("matrix", 2);
  VModule v = derivations(m2);
  CHECK_THROWS_WITH_AS((void)z_action(m2.basis_element(0), v.basis()[0]), doctest::Contains("not-central"), Error);
}

TEST_CASE("derivations have zero defect; the zero map too") {
  Algebra m2 = preset("matrix", 2);
  CHECK(leibniz_defect(m2, Matrix(4, 4)).is_zero());
  for (const Derivation& v : derivations(m2).basis()) CHECK(leibniz_defect(m2, v.matrix()).is_zero());
}

TEST_CASE("the defect of sv is -[e_i, s] * v(e_j) on every basis pair") {
  Algebra m2 = preset("matrix", 2);
  const Element s = m2.basis_element(0);  // E11, not central
  const Derivation v = inner_derivation(m2.basis_element(1));
  DefectTensor d = leibniz_defect(m2, left_mult_matrix(s) * v.matrix());
  bool any_nonzero = false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Element expected = -mul(commutator(m2.basis_element(i), s), v(m2.basis_element(j)));
      CHECK(m2.element(d.at(i, j)) == expected);
      any_nonzero = any_nonzero || !expected.is_zero();
    }
  CHECK(any_nonzero);
}

TEST_CASE("the sv defect identity holds for random non-central multipliers") {
  for (auto a : {preset("matrix", 2), preset("quaternions"), preset("triangular", 2)}) {
    const std::size_t n = a.dim();
    VModule der = derivations(a);
    for (std::size_t si = 0; si < n; ++si)
      for (const Derivation& v : der.basis()) {
        const Element s = a.basis_element(si);
        DefectTensor d = leibniz_defect(a, left_mult_matrix(s) * v.matrix());
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            CHECK(a.element(d.at(i, j)) == -mul(commutator(a.basis_element(i), s), v(a.basis_element(j))));
      }
  }
}

TEST_CASE("non-derivations are rejected with a defect location") {
  Algebra m2 = preset("matrix", 2);
  Matrix bad(4, 4);
  bad.at(0, 0) = 1;  // 1 -> E11 violates v(1) = 0
  try {
    Derivation v(m2, bad);
    FAIL("expected NotADerivation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotADerivation);
    CHECK(e.location().find("defect at basis pair") != std::string::npos);
  }
}

TEST_CASE("z_closure: full basis unchanged, empty generators give zero") {
  Algebra m2 = preset("matrix", 2);
  VModule der = derivations(m2);
  CHECK(z_closure(m2, der.basis()).space() == der.space());
  CHECK(z_closure(m2, {}).dim() == 0);
}

TEST_CASE("z_closure of the dual-number derivation is itself") {
  Algebra d = preset("dual-numbers");
  VModule der = derivations(d);
  VModule c = z_closure(d, {der.basis()[0]});
  CHECK(c.space() == der.space());
}

TEST_CASE("z_closure is idempotent and monotone") {
  Algebra c4 = preset("group-algebra-cyclic", 4);
  Algebra m2 = preset("matrix", 2);
  for (const Algebra& a : {c4, m2}) {
    VModule der = derivations(a);
    std::vector<Derivation> some(der.basis().begin(),
                                 der.basis().begin() + static_cast<long>(der.dim() / 2 + (der.dim() > 0 ? 1 : 0)));
    if (some.empty()) continue;
    VModule once = z_closure(a, some);
    VModule twice = z_closure(a, once.basis());
    CHECK(once.space() == twice.space());
    VModule full = z_closure(a, der.basis());
    for (const RVec& row : once.space().basis()) CHECK(full.space().contains(row));
  }
}

TEST_CASE("Der is closed under the center action and z_action is a module action") {
  for (auto a : {preset("dual-numbers"), preset("group-algebra-cyclic", 4), preset("matrix", 2)}) {
    Center zc = center(a);
    VModule der = derivations(a);
    for (const Element& z : zc.basis())
      for (const Element& z2 : zc.basis())
        for (const Derivation& v : der.basis()) {
          CHECK(der.contains(z_action(zc, z, v)));
          // (z z') v = z (z' v)
          CHECK(z_action(zc, mul(z, z2), v) == z_action(zc, z, z_action(zc, z2, v)));
          // (z + z') v = z v + z' v
          Derivation sum_action(a, z_action(zc, z, v).matrix() + z_action(zc, z2, v).matrix());
          CHECK(z_action(zc, z + z2, v) == sum_action);
        }
  }
}

TEST_CASE("derivation application matches its matrix") {
  Algebra m2 = preset("matrix", 2);
  Derivation ad = inner_derivation(m2.basis_element(1));
  Element x = m2.element({Rational(1), Rational(2), Rational(3), Rational(4)});
  CHECK(ad(x) == commutator(m2.basis_element(1), x));
  CHECK(zero_derivation(m2)(x).is_zero());
}
