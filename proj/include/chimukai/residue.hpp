#pragma once

#include "chimukai/groebner.hpp"
#include "chimukai/linalg.hpp"

#include <vector>

namespace chimukai {

/// Jacobi ring Q[x]/(∂f) of a quasi-homogeneous isolated singularity. The
/// grading is the weighted degree of the ring of f.
class JacobiRing {
public:
  explicit JacobiRing(const MultiPoly& f);

  const MultiPoly& f() const { return f_; }
  const Ring& ring() const { return f_.ring(); }
  int weighted_degree() const { return degree_; }
  const Ideal& jacobian() const { return jacobian_; }
  /// Standard monomials, ascending.
  const std::vector<Exponents>& basis() const { return basis_; }
  std::size_t milnor_number() const { return basis_.size(); }
  /// ∏ (d / w_i - 1).
  Rational product_formula() const;

  const MultiPoly& hessian() const { return hessian_; }
  /// Normal form of the Hessian determinant; spans the socle.
  const MultiPoly& socle() const { return socle_; }
  int socle_degree() const { return socle_degree_; }
  /// The standard monomial spanning the top graded piece.
  const Exponents& socle_monomial() const { return socle_monomial_; }

  MultiPoly normal_form(const MultiPoly& g) const;

private:
  MultiPoly f_;
  int degree_ = 0;
  Ideal jacobian_;
  std::vector<Exponents> basis_;
  MultiPoly hessian_;
  MultiPoly socle_;
  int socle_degree_ = 0;
  Exponents socle_monomial_;
};

/// Determinant of a square polynomial matrix.
MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m);

/// Res(g) normalized by Res(hess f) = μ.
Rational grothendieck_residue(const MultiPoly& g, const JacobiRing& jr);

/// [Res(b_i b_j)] over the standard basis.
RatMatrix residue_gram(const JacobiRing& jr);

}  // namespace chimukai
