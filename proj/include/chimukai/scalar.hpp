#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace chimukai {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" or "p" in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q"; throws Error(InvalidInput) otherwise.
Rational parse_rational(std::string_view text);

/// Signed binomial: the polynomial m(m-1)...(m-k+1)/k! evaluated at any
/// integer m. Zero for k < 0.
Integer signed_binomial(const Integer& m, long k);

/// Element a + b i of Q(i).
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(const Rational& r) : re(r), im(0) {}  // NOLINT: implicit by design of Q ⊂ Q(i)
  Gaussian(const Rational& r, const Rational& i) : re(r), im(i) {}
  Gaussian(long r) : re(r), im(0) {}  // NOLINT

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  Gaussian conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }

  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const Gaussian& g);

/// Floating value that carries the tolerance it is meant to be compared at.
struct Approx {
  double value = 0.0;
  double tol = 0.0;
};

/// Tagged coefficient: exact rational, exact Gaussian rational, or float.
using Scalar = std::variant<Rational, Gaussian, Approx>;

std::string to_string(const Scalar& s);

}  // namespace chimukai
