#include "chimukai/groebner.hpp"

#include "chimukai/error.hpp"

#include <algorithm>

namespace chimukai {

Ideal::Ideal(Ring ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (auto& g : gens_) {
    if (g.is_zero()) g = MultiPoly(ring_);
    require_same_ring(g.ring(), ring_, "ideal");
  }
}

Ideal Ideal::parse(const Ring& ring, const std::vector<std::string>& generators) {
  std::vector<MultiPoly> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(MultiPoly::parse(ring, g));
  return Ideal(ring, std::move(gens));
}

const std::vector<MultiPoly>& Ideal::basis() const {
  if (!gb_) throw Error(ErrorKind::MissingBasis, "ideal has no cached Groebner basis");
  return gb_->basis;
}

const MonomialOrder& Ideal::basis_order() const {
  if (!gb_) throw Error(ErrorKind::MissingBasis, "ideal has no cached Groebner basis");
  return gb_->order;
}

Ideal Ideal::with_basis(const MonomialOrder& order) const {
  if (has_basis(order)) return *this;
  Ideal out = *this;
  if (gens_.empty()) {
    out.gb_ = std::make_shared<const Cached>(Cached{order, {}});
    return out;
  }
  Ideal computed = buchberger(gens_, order);
  out.gb_ = computed.gb_;
  return out;
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const MultiPoly& g) { return g.homogeneous_degree().has_value(); });
}

Ideal buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw Error(ErrorKind::InvalidInput, "buchberger: empty generator list");
  Ring ring = gens.front().ring();
  for (const auto& g : gens)
    if (!g.is_zero()) require_same_ring(g.ring(), ring, "buchberger");
  ModuleGB gb(ring, {0}, order);
  for (const auto& g : gens) gb.add({g.is_zero() ? MultiPoly(ring) : g});
  gb.complete();
  gb.make_reduced();
  std::vector<MultiPoly> basis;
  for (auto& v : gb.basis()) basis.push_back(std::move(v[0]));
  std::sort(basis.begin(), basis.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return order.compare(a.leading_term(order).first, b.leading_term(order).first, ring) < 0;
  });
  Ideal out(ring, gens);
  out.gb_ = std::make_shared<const Ideal::Cached>(Ideal::Cached{order, std::move(basis)});
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal, const MonomialOrder& order) {
  if (!ideal.has_basis()) throw Error(ErrorKind::MissingBasis, "normal_form: ideal has no cached Groebner basis");
  if (!ideal.has_basis(order))
    throw Error(ErrorKind::MissingBasis, "normal_form: cached basis was computed for a different order");
  if (f.is_zero()) return MultiPoly(ideal.ring());
  require_same_ring(f.ring(), ideal.ring(), "normal_form");
  const auto& basis = ideal.basis();
  std::vector<std::pair<Exponents, Rational>> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(g.leading_term(order));

  MultiPoly rem(f.ring());
  MultiPoly p = f;
  while (!p.is_zero()) {
    auto [e, c] = p.leading_term(order);
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!divides(leads[k].first, e)) continue;
      Exponents m(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i] - leads[k].first[i];
      p -= basis[k].mul_monomial(m, c / leads[k].second);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(e, c);
      p.add_term(e, -c);
    }
  }
  return rem;
}

MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal) {
  return normal_form(f, ideal, ideal.basis_order());
}

bool ideal_contains(const Ideal& ideal, const MultiPoly& f) {
  const Ideal& with = ideal.has_basis() ? ideal : ideal.with_basis(MonomialOrder::grevlex());
  return normal_form(f, with).is_zero();
}

std::optional<std::vector<Exponents>> standard_monomials(const Ideal& ideal) {
  const auto& order = ideal.basis_order();
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.nvars();
  std::vector<Exponents> leads;
  for (const auto& g : ideal.basis()) leads.push_back(g.leading_term(order).first);
  std::vector<int> bound(n, -1);
  for (const auto& e : leads) {
    int support = -1, count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > 0) {
        support = int(i);
        ++count;
      }
    if (count == 0) return std::vector<Exponents>{};  // unit ideal
    if (count == 1 && (bound[support] < 0 || e[support] < bound[support])) bound[support] = e[support];
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;
  std::vector<Exponents> out;
  Exponents e(n, 0);
  for (;;) {
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Exponents& l) { return divides(l, e); });
    if (standard) out.push_back(e);
    std::size_t i = 0;
    while (i < n) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(),
            [&](const Exponents& a, const Exponents& b) { return order.compare(a, b, ring) < 0; });
  return out;
}

}  // namespace chimukai
