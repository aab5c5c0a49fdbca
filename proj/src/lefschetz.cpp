#include "chimukai/lefschetz.hpp"

#include <algorithm>

namespace chimukai {

namespace {

int require_pure(const RatClass& a, const char* where) {
  auto d = a.pure_degree();
  if (!d) throw Error(ErrorKind::InvalidInput, std::string(where) + ": class is not homogeneous");
  return *d;
}

std::vector<Rational> coordinates(const RatClass& a, const std::vector<std::size_t>& basis) {
  std::vector<Rational> v;
  v.reserve(basis.size());
  for (auto i : basis) v.push_back(a[i]);
  return v;
}

RatClass from_coordinates(const CohRing& ring, const std::vector<std::size_t>& basis, const std::vector<Rational>& v) {
  RatClass a(ring);
  for (std::size_t k = 0; k < basis.size(); ++k) a[basis[k]] = v[k];
  return a;
}

}  // namespace

LefschetzContext::LefschetzContext(CohRing ring, std::vector<Rational> coefficients) : ring_(std::move(ring)) {
  if (coefficients.empty()) coefficients.assign(ring_.factors(), Rational(1));
  if (coefficients.size() != ring_.factors())
    throw Error(ErrorKind::InvalidInput, "ample class needs one coefficient per factor");
  l_ = RatClass(ring_);
  for (std::size_t f = 0; f < ring_.factors(); ++f) {
    if (coefficients[f] <= 0) throw Error(ErrorKind::InvalidInput, "ample class coefficients must be positive");
    l_ += coefficients[f] * RatClass::hyperplane(ring_, f);
  }
  const int d = dimension();
  for (int p = 0; 2 * p <= d; ++p)
    if (!hard_lefschetz(p))
      throw Error(ErrorKind::Internal, "hard Lefschetz fails in half-degree " + std::to_string(p));
  for (int q = 0; 2 * q <= d; ++q) {
    auto basis = ring_.basis(q);
    RatMatrix m = multiplication_matrix(q, d - 2 * q + 1);
    std::vector<RatClass> prim;
    for (const auto& v : kernel(m)) prim.push_back(from_coordinates(ring_, basis, v));
    primitive_.push_back(std::move(prim));
  }
}

RatClass LefschetzContext::ample_power(int k) const {
  RatClass out = RatClass::one(ring_);
  for (int i = 0; i < k; ++i) out = out * l_;
  return out;
}

RatMatrix LefschetzContext::multiplication_matrix(int p, int k) const {
  auto src = ring_.basis(p), dst = ring_.basis(p + k);
  RatMatrix m(dst.size(), src.size());
  RatClass lk = ample_power(k);
  for (std::size_t c = 0; c < src.size(); ++c) {
    RatClass img = lk * RatClass::monomial(ring_, ring_.exponents(src[c]), Rational(1));
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = img[dst[r]];
  }
  return m;
}

bool LefschetzContext::hard_lefschetz(int p) const {
  const int d = dimension();
  if (2 * p > d) return hard_lefschetz(d - p);
  RatMatrix m = multiplication_matrix(p, d - 2 * p);
  return m.rows() == m.cols() && rank(m) == m.cols();
}

const std::vector<RatClass>& LefschetzContext::primitive_basis(int q) const {
  if (q < 0 || 2 * q > dimension()) throw Error(ErrorKind::OutOfRange, "primitive classes live in half-degrees <= d/2");
  return primitive_[std::size_t(q)];
}

std::vector<PrimitiveComponent> primitive_decomposition(const RatClass& a, const LefschetzContext& ctx) {
  require_same_coh_ring(a.ring(), ctx.ring(), "primitive_decomposition");
  if (a.is_zero()) return {};
  const int j = require_pure(a, "primitive_decomposition");
  const int d = ctx.dimension();
  auto basis = ctx.ring().basis(j);
  std::vector<std::pair<int, RatClass>> columns;  // (k, primitive basis element)
  for (int k = 0; k <= j; ++k) {
    int q = j - k;
    if (2 * q > d) continue;
    for (const auto& m : ctx.primitive_basis(q)) columns.push_back({k, m});
  }
  RatMatrix sys(basis.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    RatClass img = ctx.ample_power(columns[c].first) * columns[c].second;
    for (std::size_t r = 0; r < basis.size(); ++r) sys(r, c) = img[basis[r]];
  }
  auto x = solve(sys, coordinates(a, basis));
  if (!x) throw Error(ErrorKind::Internal, "Lefschetz decomposition has no solution");
  std::vector<PrimitiveComponent> out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if ((*x)[c] == 0) continue;
    int k = columns[c].first;
    auto it = std::find_if(out.begin(), out.end(), [&](const PrimitiveComponent& pc) { return pc.k == k; });
    if (it == out.end()) {
      out.push_back({k, RatClass(ctx.ring())});
      it = out.end() - 1;
    }
    it->p += (*x)[c] * columns[c].second;
  }
  return out;
}

RatClass reassemble(const std::vector<PrimitiveComponent>& parts, const LefschetzContext& ctx) {
  RatClass a(ctx.ring());
  for (const auto& pc : parts) a += ctx.ample_power(pc.k) * pc.p;
  return a;
}

RatClass lambda_op(const RatClass& a, const LefschetzContext& ctx) {
  RatClass out(ctx.ring());
  for (const auto& pc : primitive_decomposition(a, ctx))
    if (pc.k > 0) out += ctx.ample_power(pc.k - 1) * pc.p;
  return out;
}

RatClass star(const RatClass& a, const LefschetzContext& ctx) {
  const int d = ctx.dimension();
  RatClass out(ctx.ring());
  for (const auto& pc : primitive_decomposition(a, ctx)) {
    int q = require_pure(pc.p, "star");
    // (-1)^{i(i+1)/2} with i = 2q equals (-1)^q
    Rational sign = q % 2 ? -1 : 1;
    out += sign * (ctx.ample_power(d - 2 * q - pc.k) * pc.p);
  }
  return out;
}

HodgeForm hodge_form(int j, const LefschetzContext& ctx) {
  const int d = ctx.dimension();
  if (j < 0 || 2 * j > d) throw Error(ErrorKind::OutOfRange, "hodge_form needs 0 <= 2j <= dim X");
  HodgeForm h;
  h.basis = ctx.primitive_basis(j);
  const std::size_t n = h.basis.size();
  h.gram = RatMatrix(n, n);
  RatClass lpow = ctx.ample_power(d - 2 * j);
  Rational sign = j % 2 ? -1 : 1;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.gram(a, b) = sign * (lpow * h.basis[a] * h.basis[b]).integral();
  h.minors = leading_principal_minors(h.gram);
  h.positive_definite = positive_definite(h.gram);
  return h;
}

bool commutator_check(const LefschetzContext& ctx) {
  const int d = ctx.dimension();
  for (int q = 0; 2 * q <= d; ++q)
    for (const auto& m : ctx.primitive_basis(q))
      for (int k = 0; k <= d - 2 * q; ++k) {
        RatClass v = ctx.ample_power(k) * m;
        RatClass lhs = ctx.ample() * lambda_op(v, ctx) - lambda_op(ctx.ample() * v, ctx);
        int weight = (k > 0 ? 1 : 0) - (k < d - 2 * q ? 1 : 0);
        if (lhs != Rational(weight) * v) return false;
      }
  return true;
}

void require_correspondence(const RatClass& lambda, const LefschetzContext& ctx) {
  require_same_coh_ring(lambda.ring(), CohRing::product(ctx.ring(), ctx.ring()), "correspondence");
  if (lambda.is_zero()) return;
  auto d = lambda.pure_degree();
  if (!d || *d != ctx.dimension())
    throw Error(ErrorKind::InvalidInput, "correspondence must have pure degree dim X");
}

RatMatrix action_matrix(const RatClass& lambda, const LefschetzContext& ctx) {
  require_correspondence(lambda, ctx);
  const CohRing& x = ctx.ring();
  const std::size_t n = x.size();
  RatMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    RatClass img = integral_transform(lambda, x, x, RatClass::monomial(x, x.exponents(a), Rational(1)));
    for (std::size_t b = 0; b < n; ++b) m(b, a) = img[b];
  }
  return m;
}

RatClass correspondence_from_action(const RatMatrix& m, const LefschetzContext& ctx) {
  const CohRing& x = ctx.ring();
  const std::size_t n = x.size();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::InvalidInput, "action matrix has the wrong size");
  // Poincaré pairing P[a][c] = ∫ e_a e_c; the dual basis is e_a^∨ = Σ_c (P^{-1})[c][a] e_c
  RatMatrix p(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      p(a, c) = (RatClass::monomial(x, x.exponents(a), Rational(1)) * RatClass::monomial(x, x.exponents(c), Rational(1)))
                    .integral();
  auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorKind::Internal, "Poincaré pairing is degenerate");
  CohRing xx = CohRing::product(x, x);
  RatClass out(xx);
  std::vector<int> e(xx.factors());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (m(b, a) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        Rational w = m(b, a) * (*pinv)(c, a);
        if (w == 0) continue;
        auto ec = x.exponents(c), eb = x.exponents(b);
        for (std::size_t f = 0; f < x.factors(); ++f) {
          e[f] = ec[f];
          e[x.factors() + f] = eb[f];
        }
        out[xx.index(e)] += w;
      }
    }
  return out;
}

RatMatrix star_pairing_matrix(const LefschetzContext& ctx) {
  const CohRing& x = ctx.ring();
  const std::size_t n = x.size();
  RatMatrix b(n, n);
  std::vector<RatClass> stars;
  for (std::size_t i = 0; i < n; ++i) stars.push_back(star(RatClass::monomial(x, x.exponents(i), Rational(1)), ctx));
  for (std::size_t a = 0; a < n; ++a) {
    RatClass ea = RatClass::monomial(x, x.exponents(a), Rational(1));
    for (std::size_t c = 0; c < n; ++c) b(a, c) = (ea * stars[c]).integral();
  }
  return b;
}

RatClass transpose(const RatClass& lambda, const LefschetzContext& ctx) {
  RatMatrix a = action_matrix(lambda, ctx);
  RatMatrix b = star_pairing_matrix(ctx);
  auto binv = inverse(b);
  if (!binv) throw Error(ErrorKind::Internal, "pairing (m, *n) is degenerate");
  return correspondence_from_action(*binv * a.transpose() * b, ctx);
}

RatClass compose(const RatClass& mu, const RatClass& lambda, const LefschetzContext& ctx) {
  require_correspondence(mu, ctx);
  require_correspondence(lambda, ctx);
  const CohRing& x = ctx.ring();
  return compose_correspondences(lambda, mu, x, x, x);
}

Rational trace_form(const RatClass& lambda, const LefschetzContext& ctx) {
  require_correspondence(lambda, ctx);
  if (lambda.is_zero()) return 0;
  return action_matrix(compose(transpose(lambda, ctx), lambda, ctx), ctx).trace();
}

std::vector<RatClass> kunneth_projectors(const LefschetzContext& ctx) {
  const CohRing& x = ctx.ring();
  std::vector<RatClass> out;
  for (int p = 0; p <= ctx.dimension(); ++p) {
    RatMatrix m(x.size(), x.size());
    for (auto i : x.basis(p)) m(i, i) = 1;
    out.push_back(correspondence_from_action(m, ctx));
  }
  return out;
}

}  // namespace chimukai
