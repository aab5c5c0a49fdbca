#pragma once

#include "chimukai/error.hpp"
#include "chimukai/forms.hpp"
#include "chimukai/scalar.hpp"

#include <complex>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace chimukai {

/// H*(P^{n_1} × ... × P^{n_k}, Q) = Q[h_1..h_k]/(h_i^{n_i+1}).
/// Monomials are indexed in mixed radix with factor 0 least significant.
class CohRing {
public:
  CohRing() = default;
  explicit CohRing(std::vector<int> dims);
  static CohRing projective_space(int n) { return CohRing({n}); }
  static CohRing product(const CohRing& a, const CohRing& b);

  const std::vector<int>& dims() const { return dims_; }
  std::size_t factors() const { return dims_.size(); }
  /// Complex dimension Σ n_i.
  int dimension() const { return dimension_; }
  std::size_t size() const { return size_; }

  std::size_t index(const std::vector<int>& exps) const;
  std::vector<int> exponents(std::size_t index) const;
  int degree(std::size_t index) const;
  std::size_t top_index() const { return size_ - 1; }
  /// Indices of the monomials of half-degree p, ascending.
  std::vector<std::size_t> basis(int p) const;

  std::string name() const;

  friend bool operator==(const CohRing& a, const CohRing& b) { return a.dims_ == b.dims_; }
  friend bool operator!=(const CohRing& a, const CohRing& b) { return !(a == b); }

private:
  std::vector<int> dims_;
  std::vector<std::size_t> stride_;
  std::vector<int> degree_;
  std::size_t size_ = 1;
  int dimension_ = 0;
};

inline void require_same_coh_ring(const CohRing& a, const CohRing& b, const char* where) {
  if (a != b) throw Error(ErrorKind::RingMismatch, std::string(where) + ": classes live in different rings");
}

namespace detail {
inline std::string coeff_text(const Rational& q) { return to_string(q); }
inline std::string coeff_text(const Gaussian& g) { return to_string(g); }
inline std::string coeff_text(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}
inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Gaussian& g) { return g.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_negative_real(const Rational& q) { return q < 0; }
inline bool is_negative_real(const Gaussian& g) { return g.im == 0 && g.re < 0; }
inline bool is_negative_real(double x) { return x < 0; }
}  // namespace detail

/// Element of a CohRing with coefficients in T (Rational, Gaussian or double).
template <class T>
class CohClass {
public:
  CohClass() = default;
  explicit CohClass(CohRing ring) : ring_(std::move(ring)), coef_(ring_.size(), T(0)) {}

  static CohClass constant(const CohRing& ring, const T& c) {
    CohClass x(ring);
    x.coef_[0] = c;
    return x;
  }
  static CohClass one(const CohRing& ring) { return constant(ring, T(1)); }
  /// Hyperplane class h_i.
  static CohClass hyperplane(const CohRing& ring, std::size_t i) {
    std::vector<int> e(ring.factors(), 0);
    e.at(i) = 1;
    return monomial(ring, e, T(1));
  }
  static CohClass monomial(const CohRing& ring, const std::vector<int>& exps, const T& c) {
    CohClass x(ring);
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > ring.dims()[i]) return x;
    x.coef_[ring.index(exps)] = c;
    return x;
  }

  const CohRing& ring() const { return ring_; }
  const std::vector<T>& coefficients() const { return coef_; }
  const T& operator[](std::size_t i) const { return coef_[i]; }
  T& operator[](std::size_t i) { return coef_[i]; }
  T coefficient(const std::vector<int>& exps) const { return coef_[ring_.index(exps)]; }

  bool is_zero() const {
    for (const auto& c : coef_)
      if (!detail::is_zero(c)) return false;
    return true;
  }
  /// Component in H^{2p}.
  CohClass part(int p) const {
    CohClass out(ring_);
    for (std::size_t i = 0; i < coef_.size(); ++i)
      if (ring_.degree(i) == p) out.coef_[i] = coef_[i];
    return out;
  }
  /// Half-degree when the class is nonzero and pure.
  std::optional<int> pure_degree() const {
    std::optional<int> d;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (detail::is_zero(coef_[i])) continue;
      if (d && *d != ring_.degree(i)) return std::nullopt;
      d = ring_.degree(i);
    }
    return d;
  }
  /// Coefficient of the fundamental monomial h_1^{n_1}...h_k^{n_k}.
  T integral() const { return coef_[ring_.top_index()]; }
  const T& constant_term() const { return coef_[0]; }

  template <class F>
  CohClass map(F f) const {
    CohClass out(ring_);
    for (std::size_t i = 0; i < coef_.size(); ++i) out.coef_[i] = f(coef_[i], ring_.degree(i));
    return out;
  }

  CohClass& operator+=(const CohClass& o) {
    require_same_coh_ring(ring_, o.ring_, "class addition");
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
    return *this;
  }
  CohClass& operator-=(const CohClass& o) {
    require_same_coh_ring(ring_, o.ring_, "class subtraction");
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
    return *this;
  }
  CohClass& operator*=(const T& s) {
    for (auto& c : coef_) c *= s;
    return *this;
  }
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator-(CohClass a) {
    for (auto& c : a.coef_) c = -c;
    return a;
  }
  friend CohClass operator*(const T& s, CohClass a) { return a *= s; }
  friend CohClass operator*(const CohClass& a, const CohClass& b) {
    require_same_coh_ring(a.ring_, b.ring_, "class product");
    const CohRing& r = a.ring_;
    CohClass out(r);
    const auto& dims = r.dims();
    std::vector<int> ea, eb, es(dims.size());
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
      if (detail::is_zero(a.coef_[i])) continue;
      ea = r.exponents(i);
      for (std::size_t j = 0; j < b.coef_.size(); ++j) {
        if (detail::is_zero(b.coef_[j])) continue;
        eb = r.exponents(j);
        bool fits = true;
        for (std::size_t f = 0; f < dims.size() && fits; ++f) {
          es[f] = ea[f] + eb[f];
          fits = es[f] <= dims[f];
        }
        if (fits) out.coef_[r.index(es)] += a.coef_[i] * b.coef_[j];
      }
    }
    return out;
  }
  friend bool operator==(const CohClass& a, const CohClass& b) { return a.ring_ == b.ring_ && a.coef_ == b.coef_; }
  friend bool operator!=(const CohClass& a, const CohClass& b) { return !(a == b); }

  /// e.g. "1 + 3/2*h + h^2" on P^n, "h1*h2^2" on products.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      const T& c = coef_[i];
      if (detail::is_zero(c)) continue;
      std::string mono;
      auto e = ring_.exponents(i);
      for (std::size_t f = 0; f < e.size(); ++f) {
        if (e[f] == 0) continue;
        std::string h = ring_.factors() == 1 ? "h" : "h" + std::to_string(f + 1);
        if (e[f] > 1) h += "^" + std::to_string(e[f]);
        mono += (mono.empty() ? "" : "*") + h;
      }
      bool neg = detail::is_negative_real(c);
      std::string mag = detail::coeff_text(neg ? T(-c) : c);
      bool compound = mag.find_first_of("+ ") != std::string::npos;
      if (compound) mag = "(" + mag + ")";
      std::string term;
      if (mono.empty()) term = mag;
      else if (mag == "1") term = mono;
      else term = mag + "*" + mono;
      if (out.empty()) out = (neg ? "-" : "") + term;
      else out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
  }

private:
  CohRing ring_;
  std::vector<T> coef_;
};

using RatClass = CohClass<Rational>;
using GaussClass = CohClass<Gaussian>;
using FloatClass = CohClass<double>;

/// Truncated power series f(x) = Σ c_k x^k evaluated on a class with zero
/// constant term (nilpotent), for k up to the ring dimension.
template <class T>
CohClass<T> apply_series(const std::vector<T>& c, const CohClass<T>& x) {
  if (!detail::is_zero(x.constant_term()))
    throw Error(ErrorKind::InvalidInput, "power series argument must have zero constant term");
  CohClass<T> out(x.ring());
  CohClass<T> power = CohClass<T>::one(x.ring());
  for (std::size_t k = 0; k < c.size() && int(k) <= x.ring().dimension(); ++k) {
    if (!detail::is_zero(c[k])) out += c[k] * power;
    power = power * x;
  }
  return out;
}

template <class T>
CohClass<T> exp(const CohClass<T>& x) {
  std::vector<T> c;
  T f = T(1);
  for (int k = 0; k <= x.ring().dimension(); ++k) {
    if (k > 0) f /= T(k);
    c.push_back(f);
  }
  return apply_series(c, x);
}

/// Inverse of a class with constant term 1 (after scaling).
template <class T>
CohClass<T> inverse(const CohClass<T>& a) {
  T c0 = a.constant_term();
  if (detail::is_zero(c0)) throw Error(ErrorKind::InvalidInput, "class with zero constant term is not invertible");
  CohClass<T> u = (T(1) / c0) * a;
  CohClass<T> x = u - CohClass<T>::one(a.ring());
  std::vector<T> c;
  for (int k = 0; k <= a.ring().dimension(); ++k) c.push_back(k % 2 ? T(-1) : T(1));
  return (T(1) / c0) * apply_series(c, x);
}

/// Square root with constant term 1 of a class with constant term 1.
template <class T>
CohClass<T> sqrt_unipotent(const CohClass<T>& a) {
  if (a.constant_term() != T(1)) throw Error(ErrorKind::InvalidInput, "square root needs constant term 1");
  CohClass<T> x = a - CohClass<T>::one(a.ring());
  // binom(1/2, k)
  std::vector<T> c;
  T b = T(1);
  for (int k = 0; k <= a.ring().dimension(); ++k) {
    c.push_back(b);
    b *= (T(1) / T(2) - T(k)) / T(k + 1);
  }
  return apply_series(c, x);
}

template <class T, class S>
CohClass<T> convert(const CohClass<S>& a) {
  CohClass<T> out(a.ring());
  for (std::size_t i = 0; i < a.ring().size(); ++i) out[i] = T(a[i]);
  return out;
}

FloatClass to_float(const RatClass& a);

/// (-1)^p on H^{2p}.
template <class T>
CohClass<T> tau(const CohClass<T>& v) {
  return v.map([](const T& c, int p) { return p % 2 ? T(-c) : c; });
}

/// Σ (n_i + 1) h_i = c_1(T_X).
RatClass first_chern_class(const CohRing& ring);
/// √ch(ω_X) = exp(-c_1/2).
RatClass sqrt_ch_omega(const CohRing& ring);

/// v ↦ τ(v) · √ch(ω_X)^{-1}.
template <class T>
CohClass<T> dual(const CohClass<T>& v) {
  return tau(v) * convert<T>(exp(Rational(1, 2) * first_chern_class(v.ring())));
}

/// ∫ v^∨ w.
template <class T>
T mukai_pairing(const CohClass<T>& v, const CohClass<T>& w) {
  require_same_coh_ring(v.ring(), w.ring(), "mukai_pairing");
  return (dual(v) * w).integral();
}

/// Formal sum of line bundles given by their first Chern classes.
struct BundleData {
  struct Root {
    RatClass c1;
    Integer multiplicity;
  };
  std::vector<Root> roots;
  Integer rank() const;
};

BundleData tangent_bundle(const CohRing& ring);
BundleData line_bundle(const CohRing& ring, const std::vector<Integer>& twists);

RatClass chern_character(const BundleData& b, const CohRing& ring);
RatClass todd(const BundleData& b, const CohRing& ring);
RatClass todd_class(const CohRing& ring);
RatClass sqrt_todd(const CohRing& ring);

/// Coherent sheaf descriptors on a product of projective spaces.
struct SheafDescriptor {
  enum class Kind { LineBundle, Linear, Sum, Shift };
  Kind kind = Kind::LineBundle;
  std::vector<Integer> twists;      ///< LineBundle, Linear
  std::vector<int> codims;          ///< Linear
  std::vector<SheafDescriptor> parts;  ///< Sum (any), Shift (exactly one)

  static SheafDescriptor structure_sheaf(std::size_t factors);
  static SheafDescriptor line(std::vector<Integer> twists);
  static SheafDescriptor linear(std::vector<int> codims, std::vector<Integer> twists = {});
  static SheafDescriptor sum(std::vector<SheafDescriptor> parts);
  static SheafDescriptor shift(SheafDescriptor s);

  std::string to_string() const;
};

void validate(const SheafDescriptor& s, const CohRing& ring);
/// Total codimension of a linear subvariety descriptor.
int codimension(const SheafDescriptor& s);

RatClass sheaf_class(const SheafDescriptor& s, const CohRing& ring);
RatClass mukai_vector(const SheafDescriptor& s, const CohRing& ring);
/// χ(s, t) from the K-theory of line bundles, without characteristic classes.
Integer euler_pairing(const SheafDescriptor& s, const SheafDescriptor& t, const CohRing& ring);
/// Line-bundle expansion of a descriptor: signed multiplicities of O(a).
std::vector<std::pair<Integer, std::vector<Integer>>> k_theory_expansion(const SheafDescriptor& s,
                                                                         const CohRing& ring);

struct GrrCheck {
  Rational lhs;  ///< ∫ ch(s) td(X)
  Integer rhs;   ///< χ(O, s)
  bool pass() const { return lhs == Rational(rhs); }
};
GrrCheck grr_check(const SheafDescriptor& s, const CohRing& ring);

/// ∫ x y td(X).
Rational td_pairing(const RatClass& x, const RatClass& y);

/// μ_Λ(s) = v(s) · exp(iΛ); requires τ(Λ) = -Λ.
GaussClass lambda_twist_vector(const SheafDescriptor& s, const CohRing& ring, const GaussClass& lambda);

// Γ̂ class.

/// Euler's constant γ.
extern const double kEulerGamma;
/// ζ(n) for 2 <= n <= 16.
double zeta(int n);

/// exp(γ ch_1(T_X) + Σ_{n>=2} ζ(n)/n ch_n(T_X)), truncated above half-degree `order`.
FloatClass gamma_class(const CohRing& ring, int order);

struct GammaIdentityResult {
  double max_error = 0.0;
  std::vector<std::complex<double>> lhs;
  std::vector<std::complex<double>> rhs;
};
/// Compares z/(1 - e^{-z}) with e^{iπq} Γ(1+q) Γ(1-q), z = 2πiq, through q^order.
GammaIdentityResult gamma_identity_check(int order);

// Correspondences and transforms.

/// Image of a class on the factors of `a.ring()` inside `target`, with factor
/// j of a sent to target factor positions[j].
template <class T>
CohClass<T> embed(const CohClass<T>& a, const CohRing& target, const std::vector<std::size_t>& positions) {
  if (positions.size() != a.ring().factors()) throw Error(ErrorKind::InvalidInput, "embed: factor count mismatch");
  for (std::size_t j = 0; j < positions.size(); ++j)
    if (positions[j] >= target.factors() || target.dims()[positions[j]] != a.ring().dims()[j])
      throw Error(ErrorKind::InvalidInput, "embed: factor mismatch");
  CohClass<T> out(target);
  std::vector<int> e(target.factors(), 0);
  for (std::size_t i = 0; i < a.ring().size(); ++i) {
    if (detail::is_zero(a[i])) continue;
    auto ea = a.ring().exponents(i);
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t j = 0; j < positions.size(); ++j) e[positions[j]] = ea[j];
    out[target.index(e)] += a[i];
  }
  return out;
}

/// Fiber integration over the factors with keep[f] == false.
template <class T>
CohClass<T> integrate_out(const CohClass<T>& a, const std::vector<bool>& keep) {
  const CohRing& r = a.ring();
  if (keep.size() != r.factors()) throw Error(ErrorKind::InvalidInput, "integrate_out: factor count mismatch");
  std::vector<int> kept;
  for (std::size_t f = 0; f < r.factors(); ++f)
    if (keep[f]) kept.push_back(r.dims()[f]);
  CohRing target(kept);
  CohClass<T> out(target);
  std::vector<int> e;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (detail::is_zero(a[i])) continue;
    auto ea = r.exponents(i);
    bool top = true;
    e.clear();
    for (std::size_t f = 0; f < r.factors(); ++f) {
      if (keep[f]) e.push_back(ea[f]);
      else top = top && ea[f] == r.dims()[f];
    }
    if (top) out[target.index(e)] += a[i];
  }
  return out;
}

/// Pullback along X × Y → X (first = true) or X × Y → Y.
template <class T>
CohClass<T> pullback(const CohClass<T>& a, const CohRing& x, const CohRing& y, bool first) {
  CohRing xy = CohRing::product(x, y);
  std::vector<std::size_t> pos;
  std::size_t off = first ? 0 : x.factors();
  for (std::size_t j = 0; j < (first ? x : y).factors(); ++j) pos.push_back(off + j);
  require_same_coh_ring(a.ring(), first ? x : y, "pullback");
  return embed(a, xy, pos);
}

/// Pushforward from X × Y to X (to_first = true) or to Y.
template <class T>
CohClass<T> pushforward(const CohClass<T>& a, const CohRing& x, const CohRing& y, bool to_first) {
  require_same_coh_ring(a.ring(), CohRing::product(x, y), "pushforward");
  std::vector<bool> keep(x.factors() + y.factors(), !to_first);
  for (std::size_t f = 0; f < x.factors(); ++f) keep[f] = to_first;
  return integrate_out(a, keep);
}

/// φ^μ(a) = π_Y*(π_X^* a · μ).
template <class T>
CohClass<T> integral_transform(const CohClass<T>& mu, const CohRing& x, const CohRing& y, const CohClass<T>& a) {
  return pushforward(pullback(a, x, y, true) * mu, x, y, false);
}

/// ν ∘ μ for μ on X × Y and ν on Y × Z.
RatClass compose_correspondences(const RatClass& mu, const RatClass& nu, const CohRing& x, const CohRing& y,
                                 const CohRing& z);

/// Σ_a e_a^∨ ⊗ e_a on X × X.
RatClass diagonal_class(const CohRing& x);

// Denis trace.

/// Square matrix of polynomials with e·e = e (checked), optionally over A/I.
class IdempotentMatrix {
public:
  IdempotentMatrix(std::vector<std::vector<MultiPoly>> entries, std::shared_ptr<const Ideal> quotient = nullptr);
  std::size_t size() const { return entries_.size(); }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  const Ring& ring() const { return ring_; }
  const std::shared_ptr<const Ideal>& quotient() const { return quotient_; }
  MultiPoly trace() const;

private:
  Ring ring_;
  std::vector<std::vector<MultiPoly>> entries_;
  std::shared_ptr<const Ideal> quotient_;
};

/// Tr(ê) with ê = e + Σ_{n=1}^{max_order} (2n)!/(n!)^2 (e - 1/2)(de)^{2n}.
DifferentialForm denis_trace(const IdempotentMatrix& e, int max_order);

}  // namespace chimukai
