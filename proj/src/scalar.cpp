#include "chimukai/scalar.hpp"

#include "chimukai/error.hpp"

#include <cctype>
#include <cstdio>

namespace chimukai {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::RingMismatch: return "ring mismatch";
    case ErrorKind::NotHomogeneous: return "not homogeneous";
    case ErrorKind::MissingBasis: return "missing Groebner basis";
    case ErrorKind::Inadmissible: return "inadmissible";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::NotIdempotent: return "not idempotent";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Cancelled: return "cancelled";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorKind::InvalidInput,
                 "malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else {
      throw bad();
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) throw bad();
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  q.canonicalize();
  return q;
}

Integer signed_binomial(const Integer& m, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= (m - i);
    den *= (i + 1);
  }
  return num / den;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  Rational n = o.re * o.re + o.im * o.im;
  if (n == 0) throw Error(ErrorKind::InvalidInput, "division by zero Gaussian rational");
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = r;
  im = i;
  return *this;
}

std::string to_string(const Gaussian& g) {
  if (g.im == 0) return to_string(g.re);
  std::string out;
  if (g.re != 0) out = to_string(g.re) + (g.im < 0 ? " - " : " + ");
  else if (g.im < 0) out = "-";
  Rational a = abs(g.im);
  if (a != 1) out += to_string(a) + "*";
  return out + "i";
}

std::string to_string(const Scalar& s) {
  if (auto q = std::get_if<Rational>(&s)) return to_string(*q);
  if (auto g = std::get_if<Gaussian>(&s)) return to_string(*g);
  const auto& a = std::get<Approx>(s);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", a.value);
  return buf;
}

}  // namespace chimukai
