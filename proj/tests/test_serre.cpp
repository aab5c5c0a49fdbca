#include "support.hpp"

#include "chimukai/error.hpp"
#include "chimukai/serre.hpp"

#include <doctest.h>

using namespace chimukai;

namespace {

ModulePresentation quotient(const Ring& r, std::vector<std::string> gens) {
  return ModulePresentation::quotient(Ideal::parse(r, gens));
}

std::vector<Integer> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("admissibility") {
  Ring r2 = Ring::make({"x", "y"});
  CHECK(admissible(quotient(r2, {"x", "y"}), quotient(r2, {"x", "y"})).admissible);
  CHECK(admissible(quotient(r2, {"x"}), quotient(r2, {"y"})).admissible);
  Ring r4 = Ring::make({"x", "y", "z", "w"});
  auto a = admissible(quotient(r4, {"x", "y"}), quotient(r4, {"x", "z"}));
  CHECK_FALSE(a.admissible);
  CHECK(a.support_dim == 1);
  CHECK_FALSE(a.diagnostic.empty());
  CHECK_THROWS_AS(serre_chi(quotient(r4, {"x", "y"}), quotient(r4, {"x", "z"})), Error);
}

TEST_CASE("serre multiplicity examples") {
  Ring r2 = Ring::make({"x", "y"});
  auto lines = serre_chi(quotient(r2, {"x"}), quotient(r2, {"y"}));
  CHECK(lines.tor_lengths == ints({1, 0}));
  CHECK(lines.chi == 1);
  CHECK(lines.classification == Classification::Proper);
  CHECK(lines.conjecture_status == ConjectureStatus::PositiveAsConjectured);

  Ring rw = Ring::make({"x", "y"}, {2, 1});
  auto tangent = serre_chi(quotient(rw, {"x"}), quotient(rw, {"x - y^2"}));
  CHECK(tangent.chi == 2);
  CHECK(tangent.classification == Classification::Proper);

  Ring r4 = Ring::make({"x", "y", "z", "w"});
  auto vanish = serre_chi(quotient(r4, {"x", "y"}), quotient(r4, {"x + y", "z", "w"}));
  CHECK(vanish.chi == 0);
  CHECK(vanish.tor_lengths == ints({1, 1, 0}));
  CHECK(vanish.classification == Classification::NonProper);
  CHECK(vanish.conjecture_status == ConjectureStatus::VanishesAsConjectured);

  auto self = serre_chi(quotient(r2, {"x", "y"}), quotient(r2, {"x", "y"}));
  CHECK(self.tor_lengths == ints({1, 2, 1}));
  CHECK(self.chi == 0);
  CHECK(self.classification == Classification::NonProper);
  CHECK(std::string(to_string(self.classification)) == "NON_PROPER");
}

TEST_CASE("signed complexes agree with the Tor formula") {
  Ring r2 = Ring::make({"x", "y"});
  auto t = chi_via_complex(quotient(r2, {"x"}), quotient(r2, {"y"}));
  CHECK(t.tensor == 1);
  CHECK(t.signed_dual == 1);
  auto k = chi_via_complex(quotient(r2, {"x", "y"}), quotient(r2, {"x", "y"}));
  CHECK(k.tensor == 0);
  CHECK(k.signed_dual == 0);
  auto f = chi_via_complex(ModulePresentation::free(r2, {0}), quotient(r2, {"x^2", "y"}));
  CHECK(f.tensor == 2);
  CHECK(f.signed_dual == 2);
}

TEST_CASE("symmetry, additivity and the conjecture audit on a pair list") {
  Ring r3 = Ring::make({"x", "y", "z"});
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> pairs = {
      {{"x", "y"}, {"z"}},
      {{"x", "y"}, {"z^2 - x*y"}},
      {{"x", "y^2 - z^2"}, {"y"}},
      {{"x^2 + y^2 - z^2"}, {"x", "y"}},
      {{"x", "y", "z"}, {"x", "y", "z"}},
      {{"x", "y"}, {"x", "z"}},
      {{"x*y", "z"}, {"x - y", "z^2"}},
  };
  for (const auto& [a, b] : pairs) {
    auto m = quotient(r3, a), n = quotient(r3, b);
    auto ab = serre_chi(m, n), ba = serre_chi(n, m);
    CHECK(ab.chi == ba.chi);
    CHECK(ab.conjecture_status != ConjectureStatus::Violation);
    if (ab.classification == Classification::Proper) CHECK(ab.chi > 0);
    else CHECK(ab.chi == 0);
    Integer alt = 0;
    for (std::size_t i = 0; i < ab.tor_lengths.size(); ++i) alt += (i % 2 ? -1 : 1) * ab.tor_lengths[i];
    CHECK(alt == ab.chi);
    CHECK(ab.dim_m + ab.dim_n <= ab.dim_a);
    auto c = chi_via_complex(m, n);
    CHECK(c.tensor == ab.chi);
    CHECK(c.signed_dual == ab.chi);
  }
  auto m1 = quotient(r3, {"x", "y"}), m2 = quotient(r3, {"x", "z"}), n = quotient(r3, {"x - y - z", "y^2 + z^2"});
  CHECK(serre_chi(direct_sum(m1, m2), n).chi == serre_chi(m1, n).chi + serre_chi(m2, n).chi);
}

TEST_CASE("non Cohen-Macaulay example: chi is below the naive length") {
  Ring r = Ring::make({"x", "y", "z", "w"});
  auto rep = serre_chi(quotient(r, {"x*z", "x*w", "y*z", "y*w"}), quotient(r, {"x - z", "y - w"}));
  CHECK(rep.tor_lengths == ints({3, 1, 0, 0}));
  CHECK(rep.chi == 2);
}

TEST_CASE("zero module and resolution bound") {
  Ring r = Ring::make({"x", "y"});
  CHECK_THROWS_AS(serre_chi(quotient(r, {"1"}), quotient(r, {"x", "y"})), Error);
  SerreOptions o;
  o.max_resolution_length = 1;
  CHECK_THROWS_AS(serre_chi(quotient(r, {"x", "y"}), quotient(r, {"x", "y"}), o), Error);
}
