#pragma once

#include "chimukai/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chimukai {

using Exponents = std::vector<int>;

/// Polynomial ring Q[x_1..x_n] with positive integer weights (the grading).
class Ring {
public:
  Ring() = default;
  static Ring make(std::vector<std::string> vars, std::vector<int> weights = {});

  std::size_t nvars() const { return info_ ? info_->vars.size() : 0; }
  const std::vector<std::string>& vars() const { return info_->vars; }
  const std::vector<int>& weights() const { return info_->weights; }
  const std::string& var_name(std::size_t i) const { return info_->vars[i]; }
  int weight(std::size_t i) const { return info_->weights[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool standard_grading() const;

  int degree(const Exponents& e) const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
  struct Info {
    std::vector<std::string> vars;
    std::vector<int> weights;
  };
  std::shared_ptr<const Info> info_;
};

/// Throws Error(RingMismatch) unless the rings agree.
void require_same_ring(const Ring& a, const Ring& b, const char* where);

enum class OrderKind { grevlex, grlex, lex };

const char* to_string(OrderKind kind);
OrderKind parse_order_kind(std::string_view name);

/// Monomial order. Graded kinds compare weighted degree first; ties are
/// broken along `perm` (perm[0] is the most significant variable).
class MonomialOrder {
public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::vector<int> perm = {})
      : kind_(kind), perm_(std::move(perm)) {}

  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder grlex() { return MonomialOrder(OrderKind::grlex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }

  OrderKind kind() const { return kind_; }
  bool graded() const { return kind_ != OrderKind::lex; }

  /// Sign of a - b.
  int compare(const Exponents& a, const Exponents& b, const Ring& ring) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.perm_ == b.perm_;
  }

private:
  int var_at(std::size_t k) const { return perm_.empty() ? int(k) : perm_[k]; }

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<int> perm_;
};

bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);

class MultiPoly {
public:
  using Terms = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}
  MultiPoly(Ring ring, const Rational& c);
  MultiPoly(Ring ring, Exponents e, const Rational& c);

  static MultiPoly var(const Ring& ring, std::size_t i);
  static MultiPoly parse(const Ring& ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient.
  Rational constant_term() const;
  Rational coeff(const Exponents& e) const;

  /// Weighted degree when every term has the same weighted degree.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  std::pair<Exponents, Rational> leading_term(const MonomialOrder& order) const;

  MultiPoly derivative(std::size_t var) const;
  MultiPoly pow(unsigned k) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly mul_monomial(const Exponents& e, const Rational& c) const;

  /// Canonical text: terms in descending grevlex order.
  std::string to_string() const;
  std::string to_string(const MonomialOrder& order) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a) { return a.scaled(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  void add_term(const Exponents& e, const Rational& c);

private:
  Ring ring_;
  Terms terms_;
};

}  // namespace chimukai
