#include "chimukai/poly.hpp"

#include "chimukai/error.hpp"

#include <algorithm>

namespace chimukai {

Ring Ring::make(std::vector<std::string> vars, std::vector<int> weights) {
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size())
    throw Error(ErrorKind::InvalidInput, "weight count differs from variable count");
  for (int w : weights)
    if (w <= 0) throw Error(ErrorKind::InvalidInput, "variable weights must be positive");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) throw Error(ErrorKind::InvalidInput, "empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j])
        throw Error(ErrorKind::InvalidInput, "duplicate variable '" + vars[i] + "'");
  }
  Ring r;
  r.info_ = std::make_shared<const Info>(Info{std::move(vars), std::move(weights)});
  return r;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < nvars(); ++i)
    if (info_->vars[i] == name) return i;
  return std::nullopt;
}

bool Ring::standard_grading() const {
  return !info_ || std::all_of(info_->weights.begin(), info_->weights.end(),
                               [](int w) { return w == 1; });
}

int Ring::degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * info_->weights[i];
  return d;
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.info_ == b.info_) return true;
  if (!a.info_ || !b.info_) return false;
  return a.info_->vars == b.info_->vars && a.info_->weights == b.info_->weights;
}

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (a != b) throw Error(ErrorKind::RingMismatch, std::string(where) + ": operands live in different rings");
}

const char* to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::lex: return "lex";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view name) {
  if (name == "grevlex") return OrderKind::grevlex;
  if (name == "grlex") return OrderKind::grlex;
  if (name == "lex") return OrderKind::lex;
  throw Error(ErrorKind::InvalidInput, "unknown monomial order '" + std::string(name) + "'");
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b, const Ring& ring) const {
  const std::size_t n = a.size();
  if (graded()) {
    int da = ring.degree(a), db = ring.degree(b);
    if (da != db) return da < db ? -1 : 1;
  }
  if (kind_ == OrderKind::grevlex) {
    for (std::size_t k = n; k-- > 0;) {
      int v = var_at(k);
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    int v = var_at(k);
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  }
  return 0;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

MultiPoly::MultiPoly(Ring ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace(Exponents(ring_.nvars(), 0), c);
}

MultiPoly::MultiPoly(Ring ring, Exponents e, const Rational& c) : ring_(std::move(ring)) {
  if (e.size() != ring_.nvars())
    throw Error(ErrorKind::InvalidInput, "exponent vector length differs from variable count");
  if (c != 0) terms_.emplace(std::move(e), c);
}

MultiPoly MultiPoly::var(const Ring& ring, std::size_t i) {
  Exponents e(ring.nvars(), 0);
  e.at(i) = 1;
  return MultiPoly(ring, std::move(e), 1);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](int x) { return x == 0; }));
}

Rational MultiPoly::constant_term() const { return coeff(Exponents(ring_.nvars(), 0)); }

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    int de = ring_.degree(e);
    if (d && *d != de) return std::nullopt;
    d = de;
  }
  return d ? d : std::optional<int>(0);
}

int MultiPoly::max_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, ring_.degree(e));
  return d;
}

std::pair<Exponents, Rational> MultiPoly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first, ring_) > 0) best = it;
  return *best;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    out.terms_.emplace(std::move(f), c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out(ring_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) out *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(ring_);
  if (c == 0) return out;
  for (const auto& [e, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, a * c);
  return out;
}

MultiPoly MultiPoly::mul_monomial(const Exponents& m, const Rational& c) const {
  MultiPoly out(ring_);
  if (c == 0) return out;
  for (const auto& [e, a] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += m[i];
    out.terms_.emplace(std::move(f), a * c);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (!ring_.nvars() && terms_.empty()) ring_ = o.ring_;
  require_same_ring(ring_, o.ring_, "polynomial addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (!ring_.nvars() && terms_.empty()) ring_ = o.ring_;
  require_same_ring(ring_, o.ring_, "polynomial subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
  MultiPoly out(a.ring_);
  const std::size_t n = a.ring_.nvars();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string MultiPoly::to_string() const { return to_string(MonomialOrder::grevlex()); }

std::string MultiPoly::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [&](auto* x, auto* y) {
    return order.compare(x->first, y->first, ring_) > 0;
  });
  std::string out;
  bool first = true;
  for (const auto* t : sorted) {
    const auto& [e, c] = *t;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    Rational a = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.var_name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += chimukai::to_string(a);
    } else {
      if (a != 1) out += chimukai::to_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace chimukai
