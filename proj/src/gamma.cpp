#include "chimukai/cohomology.hpp"

#include <cmath>
#include <numbers>

namespace chimukai {

/// Decimal expansions from the DLMF tables, rechecked with mpmath at 40 digits.
const double kEulerGamma = 0.577215664901532860606512090082402431;

namespace {

constexpr double kZeta[] = {
    1.64493406684822643647241516664602519,   // ζ(2)
    1.20205690315959428539973816151144999,   // ζ(3)
    1.08232323371113819151600369654116790,   // ζ(4)
    1.03692775514336992633136548645703417,   // ζ(5)
    1.01734306198444913971451792979092053,   // ζ(6)
    1.00834927738192282683979754984979676,   // ζ(7)
    1.00407735619794433937868523850865247,   // ζ(8)
    1.00200839282608221441785276923241206,   // ζ(9)
    1.00099457512781808533714595890031902,   // ζ(10)
    1.00049418860411946455870228252646994,   // ζ(11)
    1.00024608655330804829863799804773967,   // ζ(12)
    1.00012271334757848914675183652635740,   // ζ(13)
    1.00006124813505870482925854510513533,   // ζ(14)
    1.00003058823630702049355172851064506,   // ζ(15)
    1.00001528225940865187173257148763672,   // ζ(16)
};

using Series = std::vector<std::complex<double>>;

/// exp of a series with zero constant term.
Series exp_series(const Series& a) {
  Series b(a.size());
  b[0] = 1.0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    std::complex<double> s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += double(j) * a[j] * b[k - j];
    b[k] = s / double(k);
  }
  return b;
}

}  // namespace

double zeta(int n) {
  if (n < 2 || n > 16) throw Error(ErrorKind::OutOfRange, "zeta(n) is tabulated for 2 <= n <= 16");
  return kZeta[n - 2];
}

FloatClass gamma_class(const CohRing& ring, int order) {
  if (order < 0 || order > ring.dimension())
    throw Error(ErrorKind::OutOfRange, "Gamma class order must lie in [0, dim X]");
  if (ring.dimension() > 16) throw Error(ErrorKind::Unsupported, "Gamma class needs zeta values beyond 16");
  FloatClass x(ring);
  double fact = 1.0;
  for (int n = 1; n <= ring.dimension(); ++n) {
    fact *= n;
    double weight = n == 1 ? kEulerGamma : zeta(n) / n;
    for (std::size_t f = 0; f < ring.factors(); ++f) {
      std::vector<int> e(ring.factors(), 0);
      e[f] = n;
      // ch_n(T_X) = Σ (n_f + 1) h_f^n / n!
      x += FloatClass::monomial(ring, e, weight * (ring.dims()[f] + 1) / fact);
    }
  }
  FloatClass g = exp(x);
  return g.map([&](double c, int p) { return p > order ? 0.0 : c; });
}

GammaIdentityResult gamma_identity_check(int order) {
  if (order < 0 || order > 16) throw Error(ErrorKind::OutOfRange, "Gamma identity order must lie in [0, 16]");
  const std::size_t n = std::size_t(order) + 1;
  const std::complex<double> i(0.0, 1.0);
  const double pi = std::numbers::pi;

  // left: z / (1 - e^{-z}) with z = 2πi q
  Series lhs(n);
  {
    std::vector<Rational> g(n);
    Integer fact = 1;
    for (std::size_t k = 0; k < n; ++k) {
      fact *= Integer(k + 1);
      g[k] = Rational(k % 2 ? -1 : 1) / Rational(fact);
    }
    std::vector<Rational> q(n);
    q[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      Rational s = 0;
      for (std::size_t j = 1; j <= k; ++j) s += g[j] * q[k - j];
      q[k] = -s;
    }
    std::complex<double> zk = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      lhs[k] = q[k].get_d() * zk;
      zk *= 2.0 * pi * i;
    }
  }

  // right: exp(iπq + log Γ(1+q) + log Γ(1-q)),
  // log Γ(1 ± q) = ∓γq + Σ_{m>=2} ζ(m) (∓q)^m / m
  Series log_rhs(n);
  if (n > 1) log_rhs[1] = i * pi;
  for (int sign : {1, -1}) {
    if (n > 1) log_rhs[1] += -double(sign) * kEulerGamma;
    for (std::size_t m = 2; m < n; ++m) log_rhs[m] += zeta(int(m)) * std::pow(-double(sign), double(m)) / double(m);
  }
  Series rhs = exp_series(log_rhs);

  GammaIdentityResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  for (std::size_t k = 0; k < n; ++k) r.max_error = std::max(r.max_error, std::abs(lhs[k] - rhs[k]));
  return r;
}

}  // namespace chimukai
