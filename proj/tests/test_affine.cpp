#include "doctest.h"
#include "trussalg/affine.hpp"

using namespace trussalg;

TEST_CASE("rational strings round trip") {
  CHECK(rat_to_string(Rational(3)) == "3");
  CHECK(rat_to_string(Rational(-1, 2)) == "-1/2");
  CHECK(rat_from_string("7/21") == Rational(1, 3));
  CHECK(rat_from_string("-4") == Rational(-4));
  CHECK_THROWS_AS(rat_from_string("x/y"), StructuralError);
  CHECK_THROWS_AS(rat_from_string("1/0"), StructuralError);
}

TEST_CASE("rational matrix arithmetic") {
  RatMat a(2, 2);
  a.at(0, 0) = Rational(1, 2);
  a.at(0, 1) = 1;
  a.at(1, 1) = 2;
  const RatMat i = RatMat::identity(2);
  CHECK(a * i == a);
  CHECK((a - a).is_zero());
  CHECK((a + a).at(0, 0) == 1);
  CHECK((a * a).at(0, 1) == Rational(5, 2));
  CHECK(a.upper_triangular() == a);
  CHECK(a.strictly_lower_triangular().is_zero());
}

TEST_CASE("block product matches the full matrix embedding") {
  SampleGen gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    const BlockMatrix x = gen.coset_point(3), y = gen.coset_point(3);
    CHECK((x * y).embed() == x.embed() * y.embed());
    CHECK((x + y).embed() == x.embed() + y.embed());
  }
}

TEST_CASE("the coset unit is idempotent and the coset is closed") {
  SampleGen gen(11);
  std::vector<BlockMatrix> ideal;
  for (int i = 0; i < 8; ++i) ideal.push_back(gen.ideal_vector(3));
  const CosetTrussCheck c = coset_truss_check(BlockMatrix::coset_unit(3), ideal);
  CHECK(c.idempotent);
  CHECK(c.closure_ok);
}

TEST_CASE("operator construction and application") {
  const int n = 2;
  const AffineOperator id = AffineOperator::identity(n);
  SampleGen gen(3);
  const BlockMatrix x = gen.coset_point(n);
  CHECK(id.apply(x) == x);
  const BlockMatrix q = BlockMatrix::coset_unit(n);
  CHECK(AffineOperator::constant(q).apply(x) == q);
  const AffineOperator up = AffineOperator::upper_projection_lift(n);
  CHECK(up.apply(x).a == x.a.upper_triangular());
  CHECK(up.apply(x).b == x.b);
  CHECK(up.apply(x).alpha == x.alpha);
  const AffineOperator lo = AffineOperator::lower_projection_lift(n);
  CHECK(lo.apply(x).a == x.a.strictly_lower_triangular());
  CHECK(lo.apply(x).b.is_zero());
}

TEST_CASE("powers and composition") {
  const int n = 2;
  const AffineOperator up = AffineOperator::upper_projection_lift(n);
  SampleGen gen(5);
  const BlockMatrix x = gen.coset_point(n);
  CHECK(up.compose(up).apply(x) == up.apply(x));  // projections are idempotent
  CHECK(up.power(3).apply(x) == up.apply(x));
  CHECK(up.power(0).apply(x) == x);
}

TEST_CASE("projection lifts are affine Nijenhuis operators on the coset") {
  const int n = 3;
  SampleGen gen(13);
  std::vector<BlockMatrix> pts;
  for (int i = 0; i < 12; ++i) pts.push_back(gen.coset_point(n));
  const BlockMatrix q = BlockMatrix::coset_unit(n);
  for (const AffineOperator& N : {AffineOperator::upper_projection_lift(n),
                                  AffineOperator::lower_projection_lift(n),
                                  AffineOperator::identity(n),
                                  AffineOperator::constant(q)}) {
    CHECK(maps_coset_to_coset(N, pts));
    CHECK(is_affine_nijenhuis(N, pts));
    for (const BlockMatrix& x : pts)
      for (const BlockMatrix& y : pts) CHECK(torsion(N, q, x, y) == q);
  }
}

TEST_CASE("scaled operators stay torsion free and compatible with the original") {
  const int n = 3;
  SampleGen gen(17);
  std::vector<BlockMatrix> pts;
  for (int i = 0; i < 8; ++i) pts.push_back(gen.coset_point(n));
  const AffineOperator up = AffineOperator::upper_projection_lift(n);
  const AffineOperator scaled = up.scaled(Rational(2, 3));
  const BlockMatrix zero = BlockMatrix::zero(n);
  for (const BlockMatrix& x : pts)
    for (const BlockMatrix& y : pts) {
      CHECK(torsion(scaled, zero, x, y) == zero);
      // a o_{2/3 N} b = 2/3 (a o_N b)
      CHECK(nijenhuis_product(scaled, x, y) == nijenhuis_product(up, x, y).scaled(Rational(2, 3)));
    }
  CHECK(operators_compatible(scaled, up, pts));
}

TEST_CASE("barycentric combinations need unit weight sum") {
  const int n = 2;
  const std::vector<AffineOperator> ops{AffineOperator::identity(n),
                                        AffineOperator::upper_projection_lift(n)};
  CHECK_NOTHROW(barycentric_combination(ops, {Rational(1, 2), Rational(1, 2)}));
  CHECK_THROWS_AS(barycentric_combination(ops, {Rational(1, 2), Rational(1, 3)}),
                  StructuralError);
  CHECK_THROWS_AS(barycentric_combination(ops, {Rational(1)}), StructuralError);
}

TEST_CASE("full verification suite passes with the default configuration") {
  AffineVerifyConfig cfg;
  cfg.trials = 24;  // smaller sample set in the unit run; acceptance uses 64
  const AffineVerifyReport r = affine_verify(cfg);
  CHECK(r.coset_idempotent);
  CHECK(r.coset_closure);
  CHECK(r.product_rule_matches_embedding);
  CHECK(r.lift_ne_condition);
  CHECK(r.lift_torsion_trivial);
  CHECK(r.example_operator_affine);
  CHECK(r.example_operator_nijenhuis);
  CHECK(r.product_biaffine);
  CHECK(r.bracket_equals_commutator);
  CHECK(r.bracket_antisymmetric);
  CHECK(r.bracket_jacobi);
  CHECK(r.linearisation_intertwines);
  CHECK(r.all());
}

TEST_CASE("deformed bracket identities on random coset points") {
  const int n = 3;
  SampleGen gen(23);
  std::vector<BlockMatrix> pts;
  for (int i = 0; i < 8; ++i) pts.push_back(gen.coset_point(n));
  const AffineOperator up = AffineOperator::upper_projection_lift(n);
  for (const BlockMatrix& x : pts)
    for (const BlockMatrix& y : pts) {
      const BlockMatrix lhs = deformed_bracket(up, x, y);
      const BlockMatrix rhs = nijenhuis_product(up, x, y) - nijenhuis_product(up, y, x);
      CHECK(lhs == rhs);
      // the image relation: linearised N of the deformed bracket
      CHECK(up.linearised(lhs) == commutator_bracket(up.apply(x), up.apply(y)));
    }
  CHECK(bracket_jacobi(up, pts));
  CHECK(linearisation_intertwines(up, pts));
}
