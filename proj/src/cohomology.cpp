#include "chimukai/cohomology.hpp"

#include <algorithm>

namespace chimukai {

CohRing::CohRing(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int n : dims_)
    if (n < 0 || n > 16) throw Error(ErrorKind::OutOfRange, "projective factor dimension must be in [0, 16]");
  size_ = 1;
  for (int n : dims_) {
    stride_.push_back(size_);
    size_ *= std::size_t(n + 1);
    dimension_ += n;
  }
  if (size_ > (1u << 20)) throw Error(ErrorKind::Unsupported, "cohomology ring too large");
  degree_.resize(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    auto e = exponents(i);
    degree_[i] = std::accumulate(e.begin(), e.end(), 0);
  }
}

CohRing CohRing::product(const CohRing& a, const CohRing& b) {
  std::vector<int> d = a.dims_;
  d.insert(d.end(), b.dims_.begin(), b.dims_.end());
  return CohRing(std::move(d));
}

std::size_t CohRing::index(const std::vector<int>& exps) const {
  if (exps.size() != dims_.size()) throw Error(ErrorKind::InvalidInput, "exponent vector has wrong length");
  std::size_t idx = 0;
  for (std::size_t f = 0; f < dims_.size(); ++f) {
    if (exps[f] < 0 || exps[f] > dims_[f]) throw Error(ErrorKind::OutOfRange, "exponent outside the truncation");
    idx += stride_[f] * std::size_t(exps[f]);
  }
  return idx;
}

std::vector<int> CohRing::exponents(std::size_t index) const {
  std::vector<int> e(dims_.size());
  for (std::size_t f = 0; f < dims_.size(); ++f) {
    e[f] = int(index % std::size_t(dims_[f] + 1));
    index /= std::size_t(dims_[f] + 1);
  }
  return e;
}

int CohRing::degree(std::size_t index) const {
  return degree_.empty() ? 0 : degree_[index];
}

std::vector<std::size_t> CohRing::basis(int p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i)
    if (degree(i) == p) out.push_back(i);
  return out;
}

std::string CohRing::name() const {
  if (dims_.empty()) return "pt";
  std::string out;
  for (std::size_t f = 0; f < dims_.size(); ++f) out += (f ? "x" : "") + std::string("P^") + std::to_string(dims_[f]);
  return out;
}

FloatClass to_float(const RatClass& a) {
  FloatClass out(a.ring());
  for (std::size_t i = 0; i < a.ring().size(); ++i) out[i] = a[i].get_d();
  return out;
}

RatClass first_chern_class(const CohRing& ring) {
  RatClass c(ring);
  for (std::size_t f = 0; f < ring.factors(); ++f)
    c += Rational(ring.dims()[f] + 1) * RatClass::hyperplane(ring, f);
  return c;
}

RatClass sqrt_ch_omega(const CohRing& ring) {
  return exp(Rational(-1, 2) * first_chern_class(ring));
}

Integer BundleData::rank() const {
  Integer r = 0;
  for (const auto& root : roots) r += root.multiplicity;
  return r;
}

BundleData tangent_bundle(const CohRing& ring) {
  BundleData b;
  for (std::size_t f = 0; f < ring.factors(); ++f) {
    b.roots.push_back({RatClass::hyperplane(ring, f), Integer(ring.dims()[f] + 1)});
    b.roots.push_back({RatClass(ring), Integer(-1)});
  }
  return b;
}

BundleData line_bundle(const CohRing& ring, const std::vector<Integer>& twists) {
  if (twists.size() != ring.factors()) throw Error(ErrorKind::InvalidInput, "twist vector has wrong length");
  RatClass c1(ring);
  for (std::size_t f = 0; f < ring.factors(); ++f) c1 += Rational(twists[f]) * RatClass::hyperplane(ring, f);
  return {{{c1, Integer(1)}}};
}

namespace {

void check_root(const RatClass& root, const CohRing& ring) {
  require_same_coh_ring(root.ring(), ring, "bundle root");
  auto d = root.pure_degree();
  if (d && *d != 1) throw Error(ErrorKind::InvalidInput, "Chern roots must have degree 1");
}

/// Coefficients of x / (1 - e^{-x}).
std::vector<Rational> todd_series(int n) {
  // (1 - e^{-x}) / x = Σ (-1)^k x^k / (k+1)!
  std::vector<Rational> g(std::size_t(n + 1));
  Integer fact = 1;
  for (int k = 0; k <= n; ++k) {
    fact *= k + 1;
    g[std::size_t(k)] = Rational(k % 2 ? -1 : 1) / Rational(fact);
  }
  std::vector<Rational> q(std::size_t(n + 1));
  q[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += g[std::size_t(j)] * q[std::size_t(k - j)];
    q[std::size_t(k)] = -s;
  }
  return q;
}

RatClass power(const RatClass& a, const Integer& m) {
  if (m < 0) return power(inverse(a), -m);
  RatClass out = RatClass::one(a.ring());
  for (Integer k = 0; k < m; ++k) out = out * a;
  return out;
}

using Expansion = std::vector<std::pair<Integer, std::vector<Integer>>>;

}  // namespace

RatClass chern_character(const BundleData& b, const CohRing& ring) {
  RatClass ch(ring);
  for (const auto& r : b.roots) {
    check_root(r.c1, ring);
    ch += Rational(r.multiplicity) * exp(r.c1);
  }
  return ch;
}

RatClass todd(const BundleData& b, const CohRing& ring) {
  auto q = todd_series(ring.dimension());
  RatClass td = RatClass::one(ring);
  for (const auto& r : b.roots) {
    check_root(r.c1, ring);
    td = td * power(apply_series(q, r.c1), r.multiplicity);
  }
  return td;
}

RatClass todd_class(const CohRing& ring) { return todd(tangent_bundle(ring), ring); }

RatClass sqrt_todd(const CohRing& ring) { return sqrt_unipotent(todd_class(ring)); }

SheafDescriptor SheafDescriptor::structure_sheaf(std::size_t factors) {
  return line(std::vector<Integer>(factors, Integer(0)));
}

SheafDescriptor SheafDescriptor::line(std::vector<Integer> twists) {
  SheafDescriptor s;
  s.kind = Kind::LineBundle;
  s.twists = std::move(twists);
  return s;
}

SheafDescriptor SheafDescriptor::linear(std::vector<int> codims, std::vector<Integer> twists) {
  SheafDescriptor s;
  s.kind = Kind::Linear;
  if (twists.empty()) twists.assign(codims.size(), Integer(0));
  s.codims = std::move(codims);
  s.twists = std::move(twists);
  return s;
}

SheafDescriptor SheafDescriptor::sum(std::vector<SheafDescriptor> parts) {
  SheafDescriptor s;
  s.kind = Kind::Sum;
  s.parts = std::move(parts);
  return s;
}

SheafDescriptor SheafDescriptor::shift(SheafDescriptor inner) {
  SheafDescriptor s;
  s.kind = Kind::Shift;
  s.parts.push_back(std::move(inner));
  return s;
}

std::string SheafDescriptor::to_string() const {
  auto twist_text = [&] {
    std::string t;
    for (std::size_t i = 0; i < twists.size(); ++i) t += (i ? "," : "") + chimukai::to_string(twists[i]);
    return t;
  };
  bool untwisted = std::all_of(twists.begin(), twists.end(), [](const Integer& a) { return a == 0; });
  switch (kind) {
    case Kind::LineBundle: return "O(" + twist_text() + ")";
    case Kind::Linear: {
      std::string c;
      for (std::size_t i = 0; i < codims.size(); ++i) c += (i ? "," : "") + std::to_string(codims[i]);
      return "O_Y[codim " + c + "]" + (untwisted ? "" : "(" + twist_text() + ")");
    }
    case Kind::Sum: {
      if (parts.empty()) return "0";
      std::string out;
      for (const auto& p : parts) out += (out.empty() ? "" : " + ") + p.to_string();
      return out;
    }
    case Kind::Shift: return parts.at(0).to_string() + "[1]";
  }
  return "?";
}

void validate(const SheafDescriptor& s, const CohRing& ring) {
  using Kind = SheafDescriptor::Kind;
  switch (s.kind) {
    case Kind::LineBundle:
      if (s.twists.size() != ring.factors())
        throw Error(ErrorKind::InvalidInput, "line bundle needs one twist per factor");
      return;
    case Kind::Linear:
      if (s.codims.size() != ring.factors() || s.twists.size() != ring.factors())
        throw Error(ErrorKind::InvalidInput, "linear subvariety needs one codimension and twist per factor");
      for (std::size_t f = 0; f < ring.factors(); ++f)
        if (s.codims[f] < 0 || s.codims[f] > ring.dims()[f])
          throw Error(ErrorKind::OutOfRange, "codimension outside [0, n] in factor " + std::to_string(f));
      return;
    case Kind::Sum:
      for (const auto& p : s.parts) validate(p, ring);
      return;
    case Kind::Shift:
      if (s.parts.size() != 1) throw Error(ErrorKind::InvalidInput, "shift wraps exactly one sheaf");
      validate(s.parts[0], ring);
      return;
  }
}

int codimension(const SheafDescriptor& s) {
  using Kind = SheafDescriptor::Kind;
  switch (s.kind) {
    case Kind::LineBundle: return 0;
    case Kind::Linear: return std::accumulate(s.codims.begin(), s.codims.end(), 0);
    case Kind::Shift: return codimension(s.parts.at(0));
    case Kind::Sum:
      if (s.parts.empty()) throw Error(ErrorKind::InvalidInput, "codimension of the zero sheaf");
      for (const auto& p : s.parts)
        if (codimension(p) != codimension(s.parts[0]))
          throw Error(ErrorKind::Unsupported, "codimension of a mixed direct sum");
      return codimension(s.parts[0]);
  }
  return 0;
}

RatClass sheaf_class(const SheafDescriptor& s, const CohRing& ring) {
  validate(s, ring);
  using Kind = SheafDescriptor::Kind;
  switch (s.kind) {
    case Kind::LineBundle: return chern_character(line_bundle(ring, s.twists), ring);
    case Kind::Linear: {
      RatClass ch = chern_character(line_bundle(ring, s.twists), ring);
      for (std::size_t f = 0; f < ring.factors(); ++f) {
        RatClass h = RatClass::hyperplane(ring, f);
        RatClass k = RatClass::one(ring) - exp(-h);
        for (int j = 0; j < s.codims[f]; ++j) ch = ch * k;
      }
      return ch;
    }
    case Kind::Sum: {
      RatClass out(ring);
      for (const auto& p : s.parts) out += sheaf_class(p, ring);
      return out;
    }
    case Kind::Shift: return -sheaf_class(s.parts[0], ring);
  }
  return RatClass(ring);
}

RatClass mukai_vector(const SheafDescriptor& s, const CohRing& ring) {
  return sheaf_class(s, ring) * sqrt_todd(ring);
}

std::vector<std::pair<Integer, std::vector<Integer>>> k_theory_expansion(const SheafDescriptor& s,
                                                                         const CohRing& ring) {
  validate(s, ring);
  using Kind = SheafDescriptor::Kind;
  Expansion out;
  switch (s.kind) {
    case Kind::LineBundle: out.push_back({Integer(1), s.twists}); break;
    case Kind::Linear: {
      // Koszul resolution of each linear factor: Σ_j (-1)^j C(c, j) O(-j)
      out.push_back({Integer(1), s.twists});
      for (std::size_t f = 0; f < ring.factors(); ++f) {
        Expansion next;
        for (const auto& [m, a] : out)
          for (int j = 0; j <= s.codims[f]; ++j) {
            auto b = a;
            b[f] -= j;
            Integer c = signed_binomial(Integer(s.codims[f]), j);
            next.push_back({j % 2 ? Integer(-m * c) : Integer(m * c), b});
          }
        out = std::move(next);
      }
      break;
    }
    case Kind::Sum:
      for (const auto& p : s.parts) {
        auto e = k_theory_expansion(p, ring);
        out.insert(out.end(), e.begin(), e.end());
      }
      break;
    case Kind::Shift:
      for (auto& [m, a] : k_theory_expansion(s.parts[0], ring)) out.push_back({Integer(-m), a});
      break;
  }
  return out;
}

Integer euler_pairing(const SheafDescriptor& s, const SheafDescriptor& t, const CohRing& ring) {
  auto es = k_theory_expansion(s, ring), et = k_theory_expansion(t, ring);
  Integer chi = 0;
  for (const auto& [ms, a] : es)
    for (const auto& [mt, b] : et) {
      // χ(O(a), O(b)) = χ(O(b - a)) = ∏ C(n + b - a, n)
      Integer term = ms * mt;
      for (std::size_t f = 0; f < ring.factors() && term != 0; ++f) {
        int n = ring.dims()[f];
        term *= signed_binomial(Integer(n + b[f] - a[f]), n);
      }
      chi += term;
    }
  return chi;
}

GrrCheck grr_check(const SheafDescriptor& s, const CohRing& ring) {
  GrrCheck g;
  g.lhs = (sheaf_class(s, ring) * todd_class(ring)).integral();
  g.rhs = euler_pairing(SheafDescriptor::structure_sheaf(ring.factors()), s, ring);
  return g;
}

Rational td_pairing(const RatClass& x, const RatClass& y) {
  require_same_coh_ring(x.ring(), y.ring(), "td_pairing");
  return (x * y * todd_class(x.ring())).integral();
}

GaussClass lambda_twist_vector(const SheafDescriptor& s, const CohRing& ring, const GaussClass& lambda) {
  require_same_coh_ring(lambda.ring(), ring, "lambda_twist_vector");
  if (tau(lambda) != -lambda)
    throw Error(ErrorKind::InvalidInput, "twist class must satisfy tau(L) = -L (odd half-degrees only)");
  GaussClass v = convert<Gaussian>(mukai_vector(s, ring));
  return v * exp(Gaussian::i() * lambda);
}

RatClass compose_correspondences(const RatClass& mu, const RatClass& nu, const CohRing& x, const CohRing& y,
                                 const CohRing& z) {
  CohRing xy = CohRing::product(x, y), yz = CohRing::product(y, z);
  require_same_coh_ring(mu.ring(), xy, "compose (first correspondence)");
  require_same_coh_ring(nu.ring(), yz, "compose (second correspondence)");
  CohRing xyz = CohRing::product(xy, z);
  std::vector<std::size_t> p12, p23;
  for (std::size_t f = 0; f < xy.factors(); ++f) p12.push_back(f);
  for (std::size_t f = 0; f < yz.factors(); ++f) p23.push_back(x.factors() + f);
  RatClass prod = embed(mu, xyz, p12) * embed(nu, xyz, p23);
  std::vector<bool> keep(xyz.factors(), true);
  for (std::size_t f = 0; f < y.factors(); ++f) keep[x.factors() + f] = false;
  return integrate_out(prod, keep);
}

RatClass diagonal_class(const CohRing& x) {
  CohRing xx = CohRing::product(x, x);
  RatClass out(xx);
  std::vector<int> e(xx.factors());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto a = x.exponents(i);
    for (std::size_t f = 0; f < x.factors(); ++f) {
      e[f] = x.dims()[f] - a[f];
      e[x.factors() + f] = a[f];
    }
    out[xx.index(e)] += 1;
  }
  return out;
}

}  // namespace chimukai
