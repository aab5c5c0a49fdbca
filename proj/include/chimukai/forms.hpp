#pragma once

#include "chimukai/groebner.hpp"

#include <cstdint>
#include <map>
#include <memory>

namespace chimukai {

/// Kähler form Σ f_J dx_J over Q[x] or over a quotient Q[x]/I.
///
/// Index sets J are stored as bitmasks with the variables in increasing
/// order, so antisymmetry is absorbed into the coefficient sign. For a
/// quotient ring, coefficients are kept reduced modulo I and `is_zero`
/// decides vanishing in Ω_{A/I} = Ω_A / (I·Ω_A + dI ∧ Ω_A).
class DifferentialForm {
public:
  using Mask = std::uint32_t;

  DifferentialForm() = default;
  explicit DifferentialForm(Ring ring, std::shared_ptr<const Ideal> quotient = nullptr);

  static DifferentialForm function(const MultiPoly& f, std::shared_ptr<const Ideal> quotient = nullptr);
  /// f · dx_{i1} ∧ ... ∧ dx_{ik}; indices in any order, repeats give zero.
  static DifferentialForm basis(const MultiPoly& f, const std::vector<int>& indices,
                                std::shared_ptr<const Ideal> quotient = nullptr);
  /// df as a one-form.
  static DifferentialForm differential(const MultiPoly& f, std::shared_ptr<const Ideal> quotient = nullptr);

  const Ring& ring() const { return ring_; }
  const std::shared_ptr<const Ideal>& quotient() const { return quotient_; }
  const std::map<Mask, MultiPoly>& terms() const { return terms_; }
  MultiPoly coefficient(const std::vector<int>& sorted_indices) const;

  /// Syntactic zero (no stored terms).
  bool empty() const { return terms_.empty(); }
  /// Zero as an element of Ω of the (quotient) ring.
  bool is_zero() const;

  /// Degree of a pure-degree form; throws on mixed degrees.
  int degree() const;
  DifferentialForm part(int degree) const;

  DifferentialForm& operator+=(const DifferentialForm& o);
  DifferentialForm& operator-=(const DifferentialForm& o);
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend DifferentialForm operator*(const MultiPoly& f, const DifferentialForm& w);
  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);

  /// e.g. "x*dx∧dy - dz".
  std::string to_string() const;

private:
  void add(Mask m, const MultiPoly& f);
  MultiPoly reduce(const MultiPoly& f) const;

  Ring ring_;
  std::shared_ptr<const Ideal> quotient_;
  std::map<Mask, MultiPoly> terms_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm exterior_d(const DifferentialForm& w);

/// Sign of moving the dx's of `b` past those of `a` into sorted position.
int wedge_sign(DifferentialForm::Mask a, DifferentialForm::Mask b);

}  // namespace chimukai
