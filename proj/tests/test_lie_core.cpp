#include <doctest.h>

#include "orbitkit/lie_algebra.hpp"

#include <string>

using namespace orbitkit;

namespace {

std::string fixture(const std::string& name) {
  return std::string(ORBITKIT_FIXTURE_DIR) + "/" + name;
}

RatVec rv(std::initializer_list<std::int64_t> xs) {
  RatVec v;
  for (auto x : xs) v.push_back(Rational(x));
  return v;
}

} // namespace

TEST_CASE("rational arithmetic and normalization") {
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(-5).abs() == Rational(5));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7).is_integer());
  CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-2/4") == Rational(-1, 2));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational::parse("5/-10") == Rational(-1, 2));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1/2x"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational overflow detection") {
  Rational big(INT64_MAX);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  // near-boundary intermediates that reduce back into range are fine
  CHECK(Rational(INT64_MAX, 2) * Rational(2) == Rational(INT64_MAX));
  CHECK(Rational(INT64_MAX) / Rational(INT64_MAX) == Rational(1));
}

TEST_CASE("rref canonical form and rank") {
  RatMat m = {rv({2, 4, 6}), rv({1, 2, 3}), rv({0, 0, 1})};
  auto pivots = rref(m);
  REQUIRE(pivots.size() == 2);
  CHECK(m[0] == rv({1, 2, 0}));
  CHECK(m[1] == rv({0, 0, 1}));
  CHECK(rank(RatMat{rv({1, 1}), rv({1, -1})}) == 2);
}

TEST_CASE("nullspace and solve") {
  RatMat m = {rv({1, 2, 3})};
  RatMat ns = nullspace(m, 3);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(dot(m[0], v) == Rational(0));

  RatVec x;
  CHECK(solve({rv({1, 1}), rv({1, -1})}, rv({3, 1}), x));
  CHECK(x == rv({2, 1}));
  CHECK_FALSE(solve({rv({1, 1}), rv({2, 2})}, rv({1, 3}), x));
}

TEST_CASE("subspace canonical equality, sum, intersection, annihilator") {
  Subspace a(Side::algebra, 3, {rv({1, 1, 0}), rv({0, 0, 2})});
  Subspace b(Side::algebra, 3, {rv({2, 2, 2}), rv({0, 0, -1})});
  CHECK(a == b); // same span, different presentation
  CHECK(a.dim() == 2);
  CHECK(a.contains(rv({3, 3, 7})));
  CHECK_FALSE(a.contains(rv({1, 0, 0})));

  Subspace c(Side::algebra, 3, {rv({1, 0, 0})});
  CHECK((a + c).dim() == 3);
  Subspace d(Side::algebra, 3, {rv({1, 1, 0}), rv({1, 0, 0})});
  Subspace meet = a.intersect(d);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(rv({1, 1, 0})));

  Subspace ann = a.annihilator();
  CHECK(ann.side() == Side::dual);
  CHECK(ann.dim() == 1);
  CHECK(ann.annihilator() == a);               // involution
  CHECK(a.dim() + ann.dim() == a.ambient_dim());
}

TEST_CASE("parse free-fall fixture") {
  LieAlgebra g = LieAlgebra::load(fixture("freefall.lie"));
  CHECK(g.dim() == 5);
  CHECK(g.labels()[0] == "e1");
  // [e5, e4] = -e3
  CHECK(g.bracket(g.basis_vector(4), g.basis_vector(3)) == rv({0, 0, -1, 0, 0}));
  CHECK(g.bracket_basis(3, 4) == rv({0, 0, 1, 0, 0}));
}

TEST_CASE("parse minimal and malformed inputs") {
  LieAlgebra one = LieAlgebra::parse("dim 1\n");
  CHECK(one.dim() == 1);
  CHECK(one.structure_check().nilpotent_class == 1);

  // antisymmetry-inconsistent double declaration
  CHECK_THROWS_AS(LieAlgebra::parse("dim 3\n"
                                    "bracket e1 e2 -> e3\n"
                                    "bracket e2 e1 -> e3\n"),
                  ParseError);
  // consistent double declaration is accepted
  LieAlgebra ok = LieAlgebra::parse("dim 3\n"
                                    "bracket e1 e2 -> e3\n"
                                    "bracket e2 e1 -> -1*e3\n");
  CHECK(ok.bracket_basis(0, 1) == rv({0, 0, 1}));

  CHECK_THROWS_AS(LieAlgebra::parse("dim 2\nbracket e1 e9 -> e2\n"), ParseError);
  CHECK_THROWS_AS(LieAlgebra::parse("bracket e1 e2 -> e3\n"), ParseError);
  CHECK_THROWS_AS(LieAlgebra::parse("dim 2\nbracket e1 e2 -> e1\nbracket e1 e2 -> e2\n"), ParseError);
  CHECK_THROWS_AS(LieAlgebra::parse("dim 2\nnonsense\n"), ParseError);
  try {
    LieAlgebra::parse("dim 2\n\nbracket e1 e3 -> e2\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  LieAlgebra g = LieAlgebra::load(fixture("freefall.lie"));
  RatVec u = rv({1, 2, 3, 4, 5});
  RatVec v = rv({-1, 0, 2, 1, 3});
  CHECK(is_zero(g.bracket(u, u)));
  CHECK(g.bracket(u, v) == scale(Rational(-1), g.bracket(v, u)));
  RatVec lhs = g.bracket(add(u, u), v);
  CHECK(lhs == scale(Rational(2), g.bracket(u, v)));
}

TEST_CASE("heisenberg bracket and class") {
  LieAlgebra g = LieAlgebra::load(fixture("heisenberg.lie"));
  CHECK(g.dim() == 3);
  std::size_t b = g.index_of("e_b"), gm = g.index_of("e_g");
  CHECK(g.bracket_basis(b, gm) == rv({1, 0, 0}));
  StructureReport rep = g.structure_check();
  CHECK(rep.jacobi);
  CHECK(rep.nilpotent_class == 2);
}

TEST_CASE("structure_check: classes of the fixture algebras") {
  CHECK(LieAlgebra::load(fixture("freefall.lie")).structure_check().nilpotent_class == 3);
  CHECK(LieAlgebra::load(fixture("sixdim.lie")).structure_check().nilpotent_class == 5);
  CHECK(LieAlgebra::load(fixture("bargmann.lie")).structure_check().nilpotent_class == 3);
  StructureReport gal = LieAlgebra::load(fixture("galilei.lie")).structure_check();
  CHECK(gal.jacobi);
  CHECK_FALSE(gal.nilpotent_class.has_value());
}

TEST_CASE("structure_check detects a jacobi violation") {
  LieAlgebra bad = LieAlgebra::parse("dim 5\n"
                                     "bracket e5 e4 -> -1*e3\n"
                                     "bracket e5 e3 -> -1*e2\n"
                                     "bracket e4 e3 -> e4\n");
  CHECK_FALSE(bad.structure_check().jacobi);
}

TEST_CASE("lower central series of free-fall") {
  LieAlgebra g = LieAlgebra::load(fixture("freefall.lie"));
  auto series = g.lower_central_series();
  REQUIRE(series.size() == 3);
  Subspace c1 = g.span_of(Side::algebra, {rv({1,0,0,0,0}), rv({0,1,0,0,0}), rv({0,0,1,0,0})});
  Subspace c2 = g.span_of(Side::algebra, {rv({1,0,0,0,0}), rv({0,1,0,0,0})});
  CHECK(series[0] == c1);
  CHECK(series[1] == c2);
  CHECK(series[2].dim() == 0);
}

TEST_CASE("coadjoint_vector examples") {
  LieAlgebra h = LieAlgebra::load(fixture("heisenberg.lie"));
  Covector x = rv({-1, 0, 0});
  // Z = b*e_b gives (0, 0, b)
  RatVec z = scale(Rational(7), h.basis_vector(h.index_of("e_b")));
  CHECK(h.coadjoint_vector(z, x) == rv({0, 0, 7}));
  // central Z acts trivially
  CHECK(is_zero(h.coadjoint_vector(h.basis_vector(h.index_of("e_a")), x)));

  LieAlgebra ff = LieAlgebra::load(fixture("freefall.lie"));
  Covector y = rv({1, 1, 0, 0, 5});
  RatVec e5 = ff.basis_vector(4);
  CHECK(ff.coadjoint_vector(e5, y) == rv({0, 0, 1, 0, 0}));
}

TEST_CASE("exp_coadjoint: free-fall flow and inverses") {
  LieAlgebra ff = LieAlgebra::load(fixture("freefall.lie"));
  Covector x = rv({1, 1, 0, 0, 5});
  Rational q(3, 2);
  RatVec z = scale(q, ff.basis_vector(3)); // q*e4
  Covector moved = ff.exp_coadjoint(z, x);
  Covector expect = {Rational(1), Rational(1), -q, Rational(0), q * q / Rational(2) + Rational(5)};
  CHECK(moved == expect);
  CHECK(ff.exp_coadjoint(scale(Rational(-1), z), moved) == x);
  CHECK(ff.exp_coadjoint(RatVec(5), x) == x);

  LieAlgebra h = LieAlgebra::load(fixture("heisenberg.lie"));
  Covector hx = rv({-1, 0, 0});
  RatVec zb = scale(Rational(4), h.basis_vector(h.index_of("e_b")));
  CHECK(h.exp_coadjoint(zb, hx) == rv({-1, 0, 4}));
}

TEST_CASE("exp_coadjoint round trip on random rational points") {
  LieAlgebra g = LieAlgebra::load(fixture("sixdim.lie"));
  Covector x = {Rational(1), Rational(-2), Rational(1, 2), Rational(0), Rational(3), Rational(7, 3)};
  RatVec z = {Rational(1, 2), Rational(0), Rational(-1), Rational(2), Rational(1, 3), Rational(1)};
  Covector y = g.exp_coadjoint(z, x);
  CHECK(g.exp_coadjoint(scale(Rational(-1), z), y) == x);
}

TEST_CASE("exp_coadjoint refuses non-nilpotent input") {
  LieAlgebra gal = LieAlgebra::load(fixture("galilei.lie"));
  Covector x = gal.named_covectors().at("massive");
  CHECK_THROWS_AS(gal.exp_coadjoint(gal.basis_vector(0), x), std::domain_error);
}

TEST_CASE("perp_at examples") {
  LieAlgebra six = LieAlgebra::load(fixture("sixdim.lie"));
  Covector x = rv({1, 0, 0, 0, 0, 1});
  Subspace a = six.span_of(Side::algebra,
                           {six.basis_vector(0), six.basis_vector(1), six.basis_vector(2)});
  Subspace perp = six.perp_at(a, x);
  Subspace expect = six.span_of(Side::algebra,
                                {six.basis_vector(0), six.basis_vector(1),
                                 six.basis_vector(2), six.basis_vector(5)});
  CHECK(perp == expect);

  // e = 0 -> whole algebra
  CHECK(six.perp_at(six.zero_subspace(Side::algebra), x) == six.whole_algebra());

  // Heisenberg stabilizer at x = (-1,0,0) is the center
  LieAlgebra h = LieAlgebra::load(fixture("heisenberg.lie"));
  Covector hx = rv({-1, 0, 0});
  Subspace gx = h.perp_at(h.whole_algebra(), hx);
  CHECK(gx == h.span_of(Side::algebra, {h.basis_vector(0)}));
  // and membership in it is exactly "coadjoint_vector vanishes"
  for (std::size_t i = 0; i < h.dim(); ++i) {
    bool kills = is_zero(h.coadjoint_vector(h.basis_vector(i), hx));
    CHECK(kills == gx.contains(h.basis_vector(i)));
  }
}

TEST_CASE("orth involution and dimension count") {
  LieAlgebra ff = LieAlgebra::load(fixture("freefall.lie"));
  Subspace s = ff.span_of(Side::algebra, {sub(ff.basis_vector(0), ff.basis_vector(1))});
  Subspace o = orth(s);
  CHECK(o.side() == Side::dual);
  CHECK(o.dim() == 4);
  CHECK(orth(o) == s);
  CHECK(orth(ff.whole_algebra()).dim() == 0);

  // dual-side annihilator of the ideal span(e1,e2)
  Subspace ideal = ff.span_of(Side::algebra, {ff.basis_vector(0), ff.basis_vector(1)});
  Subspace ann = orth(ideal);
  CHECK(ann.dim() == 3);
  for (const auto& row : ann.basis()) {
    CHECK(row[0] == Rational(0));
    CHECK(row[1] == Rational(0));
  }
}

TEST_CASE("galilei fixture: named covector and stabilizer dimension") {
  LieAlgebra gal = LieAlgebra::load(fixture("galilei.lie"));
  CHECK(gal.dim() == 11);
  REQUIRE(gal.named_covectors().count("massive") == 1);
  Covector x = gal.named_covectors().at("massive");
  CHECK(x[2] == Rational(1));
  CHECK(x[9] == Rational(-1));
  CHECK(x[10] == Rational(-1));
  Subspace gx = gal.perp_at(gal.whole_algebra(), x);
  CHECK(gx.dim() == 3); // so the orbit has dimension 8
}
