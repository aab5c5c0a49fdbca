#include "chimukai/residue.hpp"

#include "chimukai/error.hpp"

namespace chimukai {

MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "determinant of an empty matrix");
  if (n == 1) return m[0][0];
  // cofactor expansion along the first row
  MultiPoly det(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly t = m[0][c] * poly_determinant(minor);
    if (c % 2) det -= t;
    else det += t;
  }
  return det;
}

JacobiRing::JacobiRing(const MultiPoly& f) : f_(f) {
  const Ring& ring = f.ring();
  const std::size_t n = ring.nvars();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "Jacobi ring needs at least one variable");
  auto d = f.homogeneous_degree();
  if (!d || f.is_zero())
    throw Error(ErrorKind::NotHomogeneous, "f is not quasi-homogeneous for the declared weights");
  degree_ = *d;
  std::vector<MultiPoly> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(f.derivative(i));
  jacobian_ = Ideal(ring, partials).with_basis(MonomialOrder::grevlex());
  auto std_mons = standard_monomials(jacobian_);
  if (!std_mons || std_mons->empty())
    throw Error(ErrorKind::InvalidInput, "singularity is not isolated: the Jacobian ideal is not zero-dimensional");
  basis_ = *std_mons;

  std::vector<std::vector<MultiPoly>> h(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = partials[i].derivative(j);
  hessian_ = poly_determinant(h);
  socle_ = normal_form(hessian_);
  if (socle_.is_zero()) throw Error(ErrorKind::Internal, "Hessian vanishes in the Jacobi ring");
  auto sd = socle_.homogeneous_degree();
  if (!sd) throw Error(ErrorKind::Internal, "socle class is not homogeneous");
  socle_degree_ = *sd;
  int top_count = 0;
  for (const auto& e : basis_) {
    int deg = ring.degree(e);
    if (deg > socle_degree_) throw Error(ErrorKind::Internal, "standard monomial above the socle degree");
    if (deg == socle_degree_) {
      socle_monomial_ = e;
      ++top_count;
    }
  }
  if (top_count != 1) throw Error(ErrorKind::Internal, "top graded piece of the Jacobi ring is not one-dimensional");
}

Rational JacobiRing::product_formula() const {
  Rational p = 1;
  for (int w : ring().weights()) p *= Rational(degree_) / w - 1;
  return p;
}

MultiPoly JacobiRing::normal_form(const MultiPoly& g) const {
  require_same_ring(g.ring(), ring(), "Jacobi ring");
  return chimukai::normal_form(g, jacobian_);
}

Rational grothendieck_residue(const MultiPoly& g, const JacobiRing& jr) {
  Rational c = jr.normal_form(g).coeff(jr.socle_monomial());
  Rational h = jr.socle().coeff(jr.socle_monomial());
  return Rational(long(jr.milnor_number())) * c / h;
}

RatMatrix residue_gram(const JacobiRing& jr) {
  const auto& b = jr.basis();
  RatMatrix g(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      g(i, j) = grothendieck_residue(MultiPoly(jr.ring(), b[i], 1) * MultiPoly(jr.ring(), b[j], 1), jr);
  return g;
}

}  // namespace chimukai
