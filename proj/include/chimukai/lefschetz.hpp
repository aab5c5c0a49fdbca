#pragma once

#include "chimukai/cohomology.hpp"
#include "chimukai/linalg.hpp"

#include <vector>

namespace chimukai {

/// Lefschetz data for X = ∏P^{n_i} with an ample class L = Σ c_i h_i.
/// Degrees below are half-degrees p (classes in H^{2p}), d = dim X.
class LefschetzContext {
public:
  /// coefficients empty means L = Σ h_i. Verifies hard Lefschetz.
  explicit LefschetzContext(CohRing ring, std::vector<Rational> coefficients = {});

  const CohRing& ring() const { return ring_; }
  int dimension() const { return ring_.dimension(); }
  const RatClass& ample() const { return l_; }
  /// L^k.
  RatClass ample_power(int k) const;

  /// Matrix of multiplication by L^k from H^{2p} to H^{2(p+k)} in monomial bases.
  RatMatrix multiplication_matrix(int p, int k) const;
  /// Whether L^{d-2p} : H^{2p} -> H^{2(d-p)} is bijective.
  bool hard_lefschetz(int p) const;
  /// Basis of ker L^{d-2q+1} on H^{2q}, for 2q <= d.
  const std::vector<RatClass>& primitive_basis(int q) const;

private:
  CohRing ring_;
  RatClass l_;
  std::vector<std::vector<RatClass>> primitive_;
};

struct PrimitiveComponent {
  int k;        ///< power of L
  RatClass p;   ///< primitive of half-degree deg(a) - k
};

/// a = Σ L^k p_k with p_k primitive; zero components omitted.
std::vector<PrimitiveComponent> primitive_decomposition(const RatClass& a, const LefschetzContext& ctx);
RatClass reassemble(const std::vector<PrimitiveComponent>& parts, const LefschetzContext& ctx);

/// Λ(L^k m) = L^{k-1} m for k > 0, 0 otherwise.
RatClass lambda_op(const RatClass& a, const LefschetzContext& ctx);
/// *(L^k m) = (-1)^q L^{d-2q-k} m for m primitive in H^{2q}.
RatClass star(const RatClass& a, const LefschetzContext& ctx);

struct HodgeForm {
  std::vector<RatClass> basis;
  RatMatrix gram;
  std::vector<Rational> minors;
  bool positive_definite = false;
};
/// (a, b) ↦ (-1)^j ∫ L^{d-2j} a b on primitive classes of half-degree j.
HodgeForm hodge_form(int j, const LefschetzContext& ctx);

/// [L, Λ] acts on L^k m (m primitive of half-degree q) by [k > 0] - [k < d - 2q];
/// checked on every basis vector of the decomposition.
bool commutator_check(const LefschetzContext& ctx);

// Correspondences on X × X.

/// Matrix of the action on H*(X) in the monomial basis; column a is the image of e_a.
RatMatrix action_matrix(const RatClass& lambda, const LefschetzContext& ctx);
/// Class on X × X acting by the given matrix.
RatClass correspondence_from_action(const RatMatrix& m, const LefschetzContext& ctx);
/// B[a][b] = ∫ e_a · *(e_b).
RatMatrix star_pairing_matrix(const LefschetzContext& ctx);
/// Adjoint with respect to (m, n) ↦ ∫ m · *(n).
RatClass transpose(const RatClass& lambda, const LefschetzContext& ctx);
/// μ ∘ λ (apply λ first).
RatClass compose(const RatClass& mu, const RatClass& lambda, const LefschetzContext& ctx);
/// Tr(λ' ∘ λ).
Rational trace_form(const RatClass& lambda, const LefschetzContext& ctx);
/// π^p = Σ_{deg e_a = p} e_a^∨ ⊗ e_a, p = 0..d.
std::vector<RatClass> kunneth_projectors(const LefschetzContext& ctx);

/// Throws unless lambda is a nonzero class of pure degree dim X, or zero.
void require_correspondence(const RatClass& lambda, const LefschetzContext& ctx);

}  // namespace chimukai
