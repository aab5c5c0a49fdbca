#include "support.hpp"

#include "chimukai/error.hpp"
#include "chimukai/resolutions.hpp"

#include <doctest.h>

using namespace chimukai;
using testing::P;

namespace {

ModulePresentation quotient(const Ring& r, std::vector<std::string> gens) {
  return ModulePresentation::quotient(Ideal::parse(r, gens));
}

Integer binom(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), unsigned(n), unsigned(k));
  return b;
}

/// Alternating sum of Σ t^shift over the modules of a complex.
std::map<int, Integer> alternating_numerator(const FreeComplex& c) {
  std::map<int, Integer> out;
  for (int i = c.lo(); i <= c.hi(); ++i)
    for (int s : c.shifts(i)) out[s] += ((i % 2) + 2) % 2 ? -1 : 1;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void check_exact(const FreeComplex& e, const ModulePresentation& m) {
  CHECK(hilbert_series(homology(e, e.lo())) == hilbert_series(m));
  for (int i = e.lo() + 1; i <= e.hi(); ++i) CHECK(hilbert_series(homology(e, i)).is_zero());
}

}  // namespace

TEST_CASE("syzygy examples") {
  Ring r = Ring::make({"x", "y"});
  ModulePresentation xy{r, {0}, PolyMatrix::parse(r, {{"x", "y"}})};
  PolyMatrix s = syzygies(xy);
  REQUIRE(s.cols() == 1);
  CHECK(((s(0, 0) == P(r, "-y") && s(1, 0) == P(r, "x")) || (s(0, 0) == P(r, "y") && s(1, 0) == P(r, "-x"))));
  CHECK((xy.relations * s).is_zero());

  ModulePresentation id{r, {0, 0}, PolyMatrix::parse(r, {{"1", "0"}, {"0", "1"}})};
  CHECK(syzygies(id).cols() == 0);

  ModulePresentation xx{r, {0}, PolyMatrix::parse(r, {{"x", "x"}})};
  PolyMatrix t = syzygies(xx);
  REQUIRE(t.cols() == 1);
  CHECK(t(0, 0) == -t(1, 0));
  CHECK(t(0, 0).is_constant());
}

TEST_CASE("free resolution examples") {
  Ring r2 = Ring::make({"x", "y"});
  CHECK(free_resolution(quotient(r2, {"x", "y"}), 8).ranks() == std::vector<std::size_t>{1, 2, 1});
  auto free = free_resolution(ModulePresentation::free(r2, {0}), 8);
  CHECK(free.length() == 0);
  CHECK(free.ranks() == std::vector<std::size_t>{1});
  Ring r3 = Ring::make({"x", "y", "z"});
  CHECK(free_resolution(quotient(r3, {"x", "y", "z"}), 8).ranks() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK_THROWS_AS(free_resolution(quotient(r3, {"x", "y", "z"}), 2), Error);
}

TEST_CASE("Koszul oracle on regular sequences of forms") {
  Ring r = Ring::make({"x", "y", "z"});
  std::vector<std::vector<std::string>> sequences = {
      {"x^2", "y^3"}, {"x*y - z^2", "x + y"}, {"x^2 + y^2", "y*z", "z^3 - x^3"}, {"x", "y^2 - x*z", "z^2"}};
  for (const auto& seq : sequences) {
    auto m = quotient(r, seq);
    auto e = free_resolution(m, 8);
    std::vector<std::size_t> want;
    for (int i = 0; i <= int(seq.size()); ++i) want.push_back(binom(int(seq.size()), i).get_ui());
    CHECK(e.ranks() == want);
    check_exact(e, m);
    std::vector<MultiPoly> f;
    for (const auto& s : seq) f.push_back(P(r, s));
    CHECK(free_resolution(quotient(r, seq), 8).ranks() == koszul_complex(r, f).ranks());
  }
}

TEST_CASE("resolutions of non complete intersections are exact") {
  Ring r = Ring::make({"x", "y", "z", "w"});
  for (auto gens : std::vector<std::vector<std::string>>{{"x*z", "x*w", "y*z", "y*w"},
                                                         {"x*y", "y*z", "z*w", "w*x"},
                                                         {"x^2", "x*y", "y^2"},
                                                         {"x*z - y^2", "x*w - y*z", "y*w - z^2"}}) {
    auto m = quotient(r, gens);
    auto e = free_resolution(m, 8);
    check_exact(e, m);
    auto hs = hilbert_series(m);
    CHECK(alternating_numerator(e) == hs.numerator);
  }
  // twisted cubic: Betti numbers 1, 3, 2
  CHECK(free_resolution(quotient(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}), 8).ranks() ==
        std::vector<std::size_t>{1, 3, 2});
}

TEST_CASE("tensor products of complexes") {
  Ring r = Ring::make({"x", "y"});
  auto kx = koszul_complex(r, {P(r, "x")});
  auto ky = koszul_complex(r, {P(r, "y")});
  auto kxy = koszul_complex(r, {P(r, "x"), P(r, "y")});
  auto t = tensor_complexes(kx, ky);
  CHECK(t.ranks() == kxy.ranks());
  CHECK(hilbert_series(homology(t, 0)) == hilbert_series(homology(kxy, 0)));
  CHECK(hilbert_series(homology(t, 1)).is_zero());
  CHECK(hilbert_series(homology(t, 2)).is_zero());
  FreeComplex unit(r, 0, {{0}}, {});
  auto u = tensor_complexes(kxy, unit);
  CHECK(u.ranks() == kxy.ranks());
  CHECK(u.differential(1) == kxy.differential(1));
  Ring r3 = Ring::make({"x", "y", "z"});
  auto a = koszul_complex(r3, {P(r3, "x"), P(r3, "y")});
  auto b = koszul_complex(r3, {P(r3, "z")});
  CHECK(tensor_complexes(a, b).ranks() == std::vector<std::size_t>{1, 3, 3, 1});
}

TEST_CASE("homology examples") {
  Ring r = Ring::make({"x", "y"});
  auto k = koszul_complex(r, {P(r, "x"), P(r, "y")});
  CHECK(length(homology(k, 0)).value == 1);
  CHECK(hilbert_series(homology(k, 0)) == hilbert_series(quotient(r, {"x", "y"})));
  CHECK(hilbert_series(homology(k, 1)).is_zero());
  CHECK(hilbert_series(homology(k, 2)).is_zero());
  // Koszul(x, x) is not exact: H_1 = A/(x)(-1)
  auto kxx = koszul_complex(r, {P(r, "x"), P(r, "x")});
  CHECK(hilbert_series(homology(kxx, 1)).to_string() == "t/(1 - t)");
  // dual of Koszul shifts homology to the top
  auto d = dual_complex(k);
  CHECK(d.lo() == -2);
  CHECK(length(homology(d, -2)).value == 1);
  CHECK(hilbert_series(homology(d, -1)).is_zero());
}

TEST_CASE("Hilbert series examples") {
  Ring r = Ring::make({"x", "y"});
  auto a = ModulePresentation::free(r, {0});
  CHECK(hilbert_series(a).to_string() == "1/(1 - t)^2");
  CHECK(hilbert_series(quotient(r, {"x", "y"})).to_string() == "1");
  CHECK(hilbert_series(quotient(r, {"x^2", "y"})).to_string() == "1 + t");
  CHECK(krull_dim(quotient(r, {"x^2", "y"})) == 0);
  CHECK(length(quotient(r, {"x^2", "y"})).value == 2);
  CHECK(krull_dim(quotient(r, {"x"})) == 1);
  CHECK(length(quotient(r, {"x"})).infinite);
  CHECK(length(quotient(r, {"x"})).to_string() == "INFINITE");
  auto zero = quotient(r, {"1"});
  CHECK(krull_dim(zero) == 0);
  CHECK(length(zero).value == 0);
  CHECK(hilbert_series(zero).is_zero());
  auto hs = hilbert_series(quotient(r, {"x^3"}));
  CHECK(hs.coefficients(0, 4) == std::vector<Integer>{1, 2, 3, 3, 3});
}

TEST_CASE("Euler characteristic invariance on random Koszul-type complexes") {
  Ring r = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(17);
  for (int k = 0; k < 12; ++k) {
    std::vector<MultiPoly> f;
    int c = 1 + int(rng() % 3);
    for (int i = 0; i < c; ++i) f.push_back(testing::random_homogeneous(r, rng, 1 + int(rng() % 2), 2));
    bool nonzero = std::all_of(f.begin(), f.end(), [](const MultiPoly& p) { return !p.is_zero(); });
    if (!nonzero) continue;
    auto kc = koszul_complex(r, f);
    std::map<int, Integer> homology_sum;
    for (int i = kc.lo(); i <= kc.hi(); ++i)
      for (const auto& [deg, coef] : hilbert_series(homology(kc, i)).numerator) homology_sum[deg] += (i % 2 ? -1 : 1) * coef;
    std::erase_if(homology_sum, [](const auto& kv) { return kv.second == 0; });
    CHECK(homology_sum == alternating_numerator(kc));
  }
}

TEST_CASE("krull dimension and length do not depend on the monomial order") {
  Ring r = Ring::make({"x", "y", "z"});
  for (auto gens : std::vector<std::vector<std::string>>{
           {"x^2", "y^2", "z^2"}, {"x*y", "z^2"}, {"x^2 - y*z", "y^3"}, {"x + y + z", "x*y*z", "x^2 + z^2"}}) {
    auto m = quotient(r, gens);
    AlgebraOptions base;
    for (auto kind : {OrderKind::grlex, OrderKind::lex}) {
      AlgebraOptions o;
      o.order = MonomialOrder(kind);
      CHECK(krull_dim(m, o) == krull_dim(m, base));
      CHECK(length(m, o) == length(m, base));
    }
  }
}

TEST_CASE("minimize keeps homology and presentations reject bad input") {
  Ring r = Ring::make({"x", "y"});
  // A <-(1 x)- A^2 <- ... contains a unit entry
  ModulePresentation p{r, {0}, PolyMatrix::parse(r, {{"x", "x^2", "y"}})};
  auto e = free_resolution(p, 8);
  CHECK(e.ranks() == std::vector<std::size_t>{1, 2, 1});
  CHECK_THROWS_AS((ModulePresentation{r, {0}, PolyMatrix::parse(r, {{"x + y^2"}})}.column_degrees()), Error);
  auto sum = direct_sum(quotient(r, {"x"}), quotient(r, {"y"}));
  CHECK(sum.rank() == 2);
  CHECK(hilbert_series(sum).to_string() == "2/(1 - t)");
}
