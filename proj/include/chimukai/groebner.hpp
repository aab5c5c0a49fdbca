#pragma once

#include "chimukai/poly.hpp"

#include <memory>
#include <stop_token>
#include <vector>

namespace chimukai {

/// Column of a free module A^r; entry i is the coefficient of basis vector i.
using PolyVector = std::vector<MultiPoly>;

/// Gröbner basis of a submodule of the graded free module ⊕ A(-shift_i).
///
/// Terms are compared degree-first (weighted degree plus shift) for graded
/// monomial orders, then by the monomial order, then by position (lower
/// position is larger). For lex the degree step is skipped.
///
/// Generators can be added incrementally; `complete()` resumes Buchberger's
/// algorithm with the normal selection strategy. For rank one the product
/// criterion is used as well as the chain criterion; for higher rank only the
/// chain criterion applies.
class ModuleGB {
public:
  ModuleGB(Ring ring, std::vector<int> shifts, MonomialOrder order, bool track_lifts = false);
  ~ModuleGB();
  ModuleGB(ModuleGB&&) noexcept;
  ModuleGB& operator=(ModuleGB&&) noexcept;

  const Ring& ring() const;
  std::size_t rank() const;
  const MonomialOrder& order() const;

  /// Appends a generator; the basis is stale until complete() is called.
  void add(const PolyVector& v);
  void complete(std::stop_token stop = {});

  std::size_t generator_count() const;
  /// Live basis elements, each monic.
  std::vector<PolyVector> basis() const;
  /// Interreduces the live basis so that no term of any element is divisible
  /// by another element's leading term.
  void make_reduced();

  /// Full normal form; zero iff v lies in the submodule.
  PolyVector reduce(const PolyVector& v) const;
  bool contains(const PolyVector& v) const;

  /// Leading monomials of the live basis, grouped by position.
  std::vector<std::vector<Exponents>> leading_monomials() const;

  /// Generators of the syzygy module of the added generators, as vectors in
  /// A^{generator_count()}. Requires track_lifts.
  std::vector<PolyVector> generator_syzygies(std::stop_token stop = {}) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Weighted degree of a homogeneous vector in ⊕ A(-shift_i); nullopt when the
/// vector is not homogeneous. Zero vectors report nullopt.
std::optional<int> vector_degree(const PolyVector& v, const std::vector<int>& shifts);

/// Greedy minimal generating set of the submodule spanned by `vectors`
/// (homogeneous, processed in ascending degree). Returns indices kept.
std::vector<std::size_t> minimal_generator_indices(const Ring& ring, const std::vector<int>& shifts,
                                                   const std::vector<PolyVector>& vectors,
                                                   const std::vector<int>& degrees,
                                                   const MonomialOrder& order,
                                                   std::stop_token stop = {});

/// Ideal with an optional, write-once cached Gröbner basis.
class Ideal {
public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<MultiPoly> generators);
  static Ideal parse(const Ring& ring, const std::vector<std::string>& generators);

  const Ring& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  bool has_basis() const { return static_cast<bool>(gb_); }
  bool has_basis(const MonomialOrder& order) const { return gb_ && gb_->order == order; }
  const std::vector<MultiPoly>& basis() const;
  const MonomialOrder& basis_order() const;

  /// Copy carrying a reduced Gröbner basis for `order`.
  Ideal with_basis(const MonomialOrder& order) const;

  bool is_homogeneous() const;

private:
  friend Ideal buchberger(const std::vector<MultiPoly>&, const MonomialOrder&);
  struct Cached {
    MonomialOrder order;
    std::vector<MultiPoly> basis;
  };
  Ring ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<const Cached> gb_;
};

/// Reduced Gröbner basis (monic, sorted by ascending leading monomial).
Ideal buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order);

/// Unique remainder of f modulo the cached basis, which must be for `order`.
MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal, const MonomialOrder& order);
MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal);

bool ideal_contains(const Ideal& ideal, const MultiPoly& f);

/// Monomials outside the leading-term ideal, when there are finitely many;
/// sorted ascending by the basis order.
std::optional<std::vector<Exponents>> standard_monomials(const Ideal& ideal);

}  // namespace chimukai
