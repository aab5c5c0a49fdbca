#pragma once

#include "chimukai/forms.hpp"

#include <map>
#include <string>
#include <vector>

namespace chimukai {

/// Normalized Hochschild chain Σ w · b_0 ⊗ b_1 ⊗ ... ⊗ b_r of a polynomial
/// algebra. Entries are expanded into monomials; a tensor with a constant
/// entry in positions 1..r is zero.
class HochschildChain {
public:
  using Key = std::vector<Exponents>;

  HochschildChain() = default;
  HochschildChain(Ring ring, int degree);

  const Ring& ring() const { return ring_; }
  int degree() const { return degree_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds w · entries[0] ⊗ ... ⊗ entries[r], expanded multilinearly.
  void add(const std::vector<MultiPoly>& entries, const Rational& w = 1);
  void add_monomial(const Key& key, const Rational& w);

  HochschildChain& operator+=(const HochschildChain& o);
  friend HochschildChain operator+(HochschildChain a, const HochschildChain& b) { return a += b; }
  friend bool operator==(const HochschildChain& a, const HochschildChain& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_ && (a.terms_.empty() || a.ring_ == b.ring_);
  }

  /// e.g. "x⊗y - 1⊗x*y".
  std::string to_string() const;

private:
  Ring ring_;
  int degree_ = 0;
  std::map<Key, Rational> terms_;
};

/// b(b_0⊗...⊗b_r) = Σ_{i<r} (-1)^i ...⊗b_i b_{i+1}⊗... + (-1)^r b_r b_0⊗b_1⊗...⊗b_{r-1}.
HochschildChain boundary(const HochschildChain& c);

/// b_0⊗...⊗b_r ↦ (1/r!) b_0 db_1∧...∧db_r.
DifferentialForm hkr(const HochschildChain& c);

/// (a_0⊗a')·(b_0⊗b') = a_0 b_0 ⊗ Σ_{shuffles σ} sign(σ) σ(a'⊗b').
HochschildChain shuffle(const HochschildChain& c, const HochschildChain& d);

}  // namespace chimukai
