#include "support.hpp"

#include "chimukai/hochschild.hpp"

#include <doctest.h>

using namespace chimukai;
using testing::P;

namespace {

HochschildChain chain(const Ring& r, std::vector<std::string> entries, const Rational& w = 1) {
  HochschildChain c(r, int(entries.size()) - 1);
  std::vector<MultiPoly> polys;
  for (const auto& e : entries) polys.push_back(P(r, e));
  c.add(polys, w);
  return c;
}

HochschildChain random_chain(const Ring& r, std::mt19937_64& rng, int degree) {
  HochschildChain c(r, degree);
  for (int t = 0; t < 2; ++t) {
    std::vector<MultiPoly> entries;
    for (int k = 0; k <= degree; ++k) entries.push_back(testing::random_poly(r, rng, 2, 2));
    c.add(entries, Rational(long(rng() % 5) + 1));
  }
  return c;
}

}  // namespace

TEST_CASE("boundary examples") {
  Ring r = Ring::make({"x", "y"});
  CHECK(boundary(chain(r, {"x", "y"})).is_zero());
  HochschildChain want(r, 1);
  want.add({P(r, "x"), P(r, "y")});
  want.add({P(r, "1"), P(r, "x*y")}, -1);
  want.add({P(r, "y"), P(r, "x")});
  CHECK(boundary(chain(r, {"1", "x", "y"})) == want);
  CHECK(boundary(chain(r, {"1", "x", "y"})).to_string() == "-1⊗x*y + y⊗x + x⊗y");
}

TEST_CASE("hkr examples") {
  Ring r = Ring::make({"x", "y", "z"});
  CHECK(hkr(chain(r, {"x", "y"})) == DifferentialForm::basis(P(r, "x"), {1}));
  CHECK(hkr(chain(r, {"1", "x", "y"})) == DifferentialForm::basis(P(r, "1/2"), {0, 1}));
  CHECK(hkr(chain(r, {"1", "x", "y"})).to_string() == "1/2*dx∧dy");
  CHECK(hkr(boundary(chain(r, {"1", "x", "y", "z"}))).is_zero());
  CHECK(chain(r, {"x", "3"}).is_zero());
}

TEST_CASE("shuffle examples") {
  Ring r = Ring::make({"x", "y"});
  auto s = shuffle(chain(r, {"x", "y"}), chain(r, {"y", "x^2"}));
  HochschildChain want(r, 2);
  want.add({P(r, "x*y"), P(r, "y"), P(r, "x^2")});
  want.add({P(r, "x*y"), P(r, "x^2"), P(r, "y")}, -1);
  CHECK(s == want);
  auto scaled = shuffle(chain(r, {"x", "y"}), chain(r, {"y^2"}));
  CHECK(scaled == chain(r, {"x*y^2", "y"}));
}

TEST_CASE("randomized HKR suite") {
  Ring r = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(23);
  for (int k = 0; k < 80; ++k) {
    int deg = 1 + int(rng() % 3);
    auto c = random_chain(r, rng, deg);
    auto bc = boundary(c);
    if (deg >= 2) CHECK(boundary(bc).is_zero());
    CHECK(hkr(bc).is_zero());
    int p = int(rng() % 2) + 1, q = int(rng() % 2) + 1;
    auto a = random_chain(r, rng, p), b = random_chain(r, rng, q);
    CHECK(hkr(shuffle(a, b)) == wedge(hkr(a), hkr(b)));
  }
}
