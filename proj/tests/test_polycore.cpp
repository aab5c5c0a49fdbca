#include "support.hpp"

#include "chimukai/error.hpp"
#include "chimukai/forms.hpp"

#include <doctest.h>

using namespace chimukai;
using testing::P;

TEST_CASE("parse and print round trip") {
  Ring r = Ring::make({"x", "y", "z"});
  for (const char* s : {"x^2*y - 3/4*z + 1", "0", "-x", "x*y*z^3 + 2"}) {
    MultiPoly p = P(r, s);
    CHECK(P(r, p.to_string()) == p);
  }
  CHECK(P(r, "(x + y)^2") == P(r, "x^2 + 2*x*y + y^2"));
  CHECK_THROWS_AS(P(r, "x + w"), Error);
  CHECK_THROWS_AS(P(r, "x +"), Error);
}

TEST_CASE("ring axioms on random polynomials") {
  Ring r = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    MultiPoly a = testing::random_poly(r, rng, 3, 4), b = testing::random_poly(r, rng, 3, 4),
              c = testing::random_poly(r, rng, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("normal form examples") {
  Ring r = Ring::make({"x", "y"});
  Ideal i = Ideal(r, {P(r, "x^2 - y"), P(r, "y^2 - 1")}).with_basis(MonomialOrder::grevlex());
  CHECK(normal_form(P(r, "x^2*y"), i) == P(r, "1"));
  CHECK(normal_form(P(r, "0"), i).is_zero());
  CHECK(normal_form(P(r, "(x + 3)*(x^2 - y) - y*(y^2 - 1)"), i).is_zero());
  CHECK_THROWS_AS(normal_form(P(r, "x"), Ideal(r, {P(r, "x")})), Error);
}

TEST_CASE("buchberger examples") {
  Ring r = Ring::make({"x", "y"});
  auto gb = buchberger({P(r, "x"), P(r, "y")}, MonomialOrder::grevlex());
  CHECK(gb.basis().size() == 2);
  auto gb2 = buchberger({P(r, "x^2 - y"), P(r, "x*y - 1")}, MonomialOrder::grevlex());
  bool found = false;
  for (const auto& g : gb2.basis()) found = found || g == P(r, "y^2 - x");
  CHECK(found);
  auto gb3 = buchberger({P(r, "3*x^2 + 6*y")}, MonomialOrder::lex());
  REQUIRE(gb3.basis().size() == 1);
  CHECK(gb3.basis()[0] == P(r, "x^2 + 2*y"));
}

TEST_CASE("normal form is idempotent and order independent for membership") {
  Ring r = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    std::vector<MultiPoly> gens;
    for (int g = 0; g < 2 + int(rng() % 2); ++g) gens.push_back(testing::random_poly(r, rng, 2, 3));
    for (auto kind : {OrderKind::grevlex, OrderKind::grlex, OrderKind::lex}) {
      Ideal i = Ideal(r, gens).with_basis(MonomialOrder(kind));
      MultiPoly f = testing::random_poly(r, rng, 3, 5);
      MultiPoly nf = normal_form(f, i);
      CHECK(normal_form(nf, i) == nf);
      CHECK(ideal_contains(i, f - nf));
    }
  }
}

TEST_CASE("membership agrees with a brute-force linear algebra oracle") {
  std::mt19937_64 rng(7);
  int members = 0, non_members = 0;
  for (int k = 0; k < 60; ++k) {
    int n = 1 + int(rng() % 3);
    std::vector<std::string> vars = {"x", "y", "z"};
    vars.resize(std::size_t(n));
    Ring r = Ring::make(vars);
    std::vector<MultiPoly> gens;
    for (int g = 0; g < 1 + int(rng() % 3); ++g) gens.push_back(testing::random_homogeneous(r, rng, 1 + int(rng() % 3), 3));
    Ideal i = Ideal(r, gens).with_basis(MonomialOrder::grevlex());
    for (int t = 0; t < 4; ++t) {
      int d = 2 + int(rng() % 3);
      MultiPoly f(r);
      if (t % 2 == 0) {
        for (const auto& g : gens)
          if (!g.is_zero() && *g.homogeneous_degree() <= d)
            f += g * testing::random_homogeneous(r, rng, d - *g.homogeneous_degree(), 2);
      } else {
        f = testing::random_homogeneous(r, rng, d, 3);
      }
      bool oracle = testing::brute_force_member(gens, f);
      (oracle ? members : non_members)++;
      CHECK(ideal_contains(i, f) == oracle);
    }
  }
  CHECK(members > 0);
  CHECK(non_members > 0);
}

TEST_CASE("standard monomials") {
  Ring r = Ring::make({"x", "y"});
  auto sm = standard_monomials(Ideal(r, {P(r, "x^2"), P(r, "y")}).with_basis(MonomialOrder::grevlex()));
  REQUIRE(sm);
  CHECK(sm->size() == 2);
  CHECK_FALSE(standard_monomials(Ideal(r, {P(r, "x")}).with_basis(MonomialOrder::grevlex())));
}

TEST_CASE("exterior derivative examples") {
  Ring r = Ring::make({"x", "y"});
  auto x = P(r, "x"), y = P(r, "y");
  auto xdy = DifferentialForm::basis(x, {1});
  CHECK(exterior_d(xdy) == DifferentialForm::basis(P(r, "1"), {0, 1}));
  CHECK(exterior_d(DifferentialForm::basis(x, {0})).is_zero());
  auto dxy = exterior_d(DifferentialForm::function(x * y));
  CHECK(dxy == DifferentialForm::basis(y, {0}) + DifferentialForm::basis(x, {1}));
  CHECK(dxy.to_string() == "y*dx + x*dy");
  CHECK(DifferentialForm::basis(P(r, "1"), {1, 0}) == DifferentialForm::basis(P(r, "-1"), {0, 1}));
  CHECK(DifferentialForm::basis(x, {1, 1}).empty());
}

namespace {

DifferentialForm random_form(const Ring& r, std::mt19937_64& rng, int degree) {
  DifferentialForm w(r);
  const int n = int(r.nvars());
  for (int t = 0; t < 3; ++t) {
    std::vector<int> idx;
    for (int k = 0; k < degree; ++k) idx.push_back(int(rng() % std::uint64_t(n)));
    w += DifferentialForm::basis(testing::random_poly(r, rng, 2, 2), idx);
  }
  return w;
}

}  // namespace

TEST_CASE("d squared vanishes, wedge is graded commutative, Leibniz holds") {
  Ring r = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(3);
  for (int k = 0; k < 60; ++k) {
    int p = int(rng() % 3), q = int(rng() % 3);
    auto a = random_form(r, rng, p), b = random_form(r, rng, q);
    CHECK(exterior_d(exterior_d(a)).is_zero());
    auto ab = wedge(a, b), ba = wedge(b, a);
    if ((p * q) % 2) CHECK((ab + ba).is_zero());
    else CHECK((ab - ba).is_zero());
    MultiPoly f = testing::random_poly(r, rng, 2, 3);
    auto lhs = exterior_d(f * a);
    auto rhs = wedge(DifferentialForm::differential(f), a) + f * exterior_d(a);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("forms over a quotient ring") {
  Ring r = Ring::make({"x", "y"});
  auto q = std::make_shared<const Ideal>(Ideal(r, {P(r, "x*y - 1")}).with_basis(MonomialOrder::grevlex()));
  // d(xy) = y dx + x dy vanishes in Ω of k[x, 1/x]
  auto w = DifferentialForm::differential(P(r, "x*y"), q);
  CHECK(w.is_zero());
  CHECK_FALSE(DifferentialForm::differential(P(r, "x"), q).is_zero());
}

TEST_CASE("weighted rings and orders") {
  Ring r = Ring::make({"x", "y"}, {2, 3});
  CHECK(P(r, "x^3 + y^2").homogeneous_degree() == 6);
  CHECK_FALSE(P(r, "x + y").homogeneous_degree());
  CHECK_THROWS_AS(Ring::make({"x"}, {0}), Error);
  CHECK_THROWS_AS(Ring::make({"x", "y"}, {1}), Error);
  Ring s = Ring::make({"x", "y"});
  CHECK_THROWS_AS(P(r, "x") + P(s, "x"), Error);
}
