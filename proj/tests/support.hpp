#pragma once

#include "chimukai/groebner.hpp"
#include "chimukai/linalg.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace chimukai;

inline MultiPoly P(const Ring& r, const std::string& s) { return MultiPoly::parse(r, s); }

/// Exponent vectors of weighted degree d.
inline std::vector<Exponents> monomials_of_degree(const Ring& r, int d) {
  std::vector<Exponents> out;
  Exponents e(r.nvars(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == r.nvars()) {
      if (left % r.weight(i) == 0) {
        e[i] = left / r.weight(i);
        out.push_back(e);
      }
      return;
    }
    for (int k = 0; k * r.weight(i) <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k * r.weight(i));
    }
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

/// Random polynomial with small integer coefficients.
inline MultiPoly random_poly(const Ring& r, std::mt19937_64& rng, int max_exp, int terms) {
  MultiPoly p(r);
  for (int t = 0; t < terms; ++t) {
    Exponents e(r.nvars());
    for (auto& x : e) x = int(rng() % std::uint64_t(max_exp + 1));
    p += MultiPoly(r, e, Rational(long(rng() % 7) - 3));
  }
  return p;
}

inline MultiPoly random_homogeneous(const Ring& r, std::mt19937_64& rng, int degree, int terms) {
  auto mons = monomials_of_degree(r, degree);
  MultiPoly p(r);
  for (int t = 0; t < terms && !mons.empty(); ++t)
    p += MultiPoly(r, mons[rng() % mons.size()], Rational(long(rng() % 7) - 3));
  return p;
}

/// Membership of a homogeneous f in a homogeneous ideal by linear algebra on
/// the degree-deg(f) piece.
inline bool brute_force_member(const std::vector<MultiPoly>& gens, const MultiPoly& f) {
  if (f.is_zero()) return true;
  const Ring& r = f.ring();
  int d = *f.homogeneous_degree();
  auto target = monomials_of_degree(r, d);
  std::vector<MultiPoly> span;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = *g.homogeneous_degree();
    for (const auto& m : monomials_of_degree(r, d - dg)) span.push_back(g.mul_monomial(m, 1));
  }
  RatMatrix a(target.size(), span.size());
  std::vector<Rational> b(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    for (std::size_t j = 0; j < span.size(); ++j) a(i, j) = span[j].coeff(target[i]);
    b[i] = f.coeff(target[i]);
  }
  return solve(a, b).has_value();
}

}  // namespace testing
