#include "chimukai/hochschild.hpp"

#include "chimukai/error.hpp"

#include <algorithm>

namespace chimukai {

namespace {

Exponents plus(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_one(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::string monomial_text(const Ring& ring, const Exponents& e) {
  return MultiPoly(ring, e, 1).to_string();
}

}  // namespace

HochschildChain::HochschildChain(Ring ring, int degree) : ring_(std::move(ring)), degree_(degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidInput, "Hochschild degree must be non-negative");
}

void HochschildChain::add_monomial(const Key& key, const Rational& w) {
  if (int(key.size()) != degree_ + 1) throw Error(ErrorKind::InvalidInput, "tensor has the wrong number of entries");
  if (w == 0) return;
  for (std::size_t i = 1; i < key.size(); ++i)
    if (is_one(key[i])) return;
  auto [it, fresh] = terms_.emplace(key, w);
  if (!fresh) {
    it->second += w;
    if (it->second == 0) terms_.erase(it);
  }
}

void HochschildChain::add(const std::vector<MultiPoly>& entries, const Rational& w) {
  if (int(entries.size()) != degree_ + 1) throw Error(ErrorKind::InvalidInput, "tensor has the wrong number of entries");
  for (const auto& e : entries) require_same_ring(e.ring(), ring_, "Hochschild chain");
  std::vector<std::pair<Key, Rational>> partial{{{}, w}};
  for (const auto& e : entries) {
    std::vector<std::pair<Key, Rational>> next;
    for (const auto& [k, c] : partial)
      for (const auto& [m, a] : e.terms()) {
        Key k2 = k;
        k2.push_back(m);
        next.push_back({std::move(k2), c * a});
      }
    partial = std::move(next);
  }
  for (const auto& [k, c] : partial) add_monomial(k, c);
}

HochschildChain& HochschildChain::operator+=(const HochschildChain& o) {
  if (o.terms_.empty()) return *this;
  if (degree_ != o.degree_) throw Error(ErrorKind::InvalidInput, "adding chains of different degree");
  if (!ring_.nvars() && terms_.empty()) ring_ = o.ring_;
  require_same_ring(ring_, o.ring_, "Hochschild chain sum");
  for (const auto& [k, c] : o.terms_) add_monomial(k, c);
  return *this;
}

std::string HochschildChain::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string t;
    for (std::size_t i = 0; i < k.size(); ++i) t += (i ? "⊗" : "") + monomial_text(ring_, k[i]);
    Rational a = abs(c);
    std::string mag = a == 1 ? t : chimukai::to_string(a) + "*" + t;
    if (out.empty()) out = (c < 0 ? "-" : "") + mag;
    else out += (c < 0 ? " - " : " + ") + mag;
  }
  return out;
}

HochschildChain boundary(const HochschildChain& c) {
  if (c.degree() < 1) throw Error(ErrorKind::InvalidInput, "boundary of a degree-0 chain");
  const int r = c.degree();
  HochschildChain out(c.ring(), r - 1);
  for (const auto& [k, w] : c.terms()) {
    for (int i = 0; i < r; ++i) {
      HochschildChain::Key face;
      for (int j = 0; j < i; ++j) face.push_back(k[std::size_t(j)]);
      face.push_back(plus(k[std::size_t(i)], k[std::size_t(i + 1)]));
      for (int j = i + 2; j <= r; ++j) face.push_back(k[std::size_t(j)]);
      out.add_monomial(face, i % 2 ? Rational(-w) : w);
    }
    HochschildChain::Key face{plus(k[std::size_t(r)], k[0])};
    for (int j = 1; j < r; ++j) face.push_back(k[std::size_t(j)]);
    out.add_monomial(face, r % 2 ? Rational(-w) : w);
  }
  return out;
}

DifferentialForm hkr(const HochschildChain& c) {
  DifferentialForm out(c.ring());
  Rational fact = 1;
  for (int j = 2; j <= c.degree(); ++j) fact *= j;
  for (const auto& [k, w] : c.terms()) {
    DifferentialForm term = DifferentialForm::function(MultiPoly(c.ring(), k[0], w / fact));
    for (std::size_t j = 1; j < k.size(); ++j)
      term = wedge(term, DifferentialForm::differential(MultiPoly(c.ring(), k[j], 1)));
    out += term;
  }
  return out;
}

HochschildChain shuffle(const HochschildChain& c, const HochschildChain& d) {
  if (!c.is_zero() && !d.is_zero()) require_same_ring(c.ring(), d.ring(), "shuffle");
  const Ring& ring = c.is_zero() ? d.ring() : c.ring();
  const int p = c.degree(), q = d.degree();
  HochschildChain out(ring, p + q);
  // each (p, q)-shuffle is a choice of the p slots that take the entries of c
  for (const auto& [a, wa] : c.terms())
    for (const auto& [b, wb] : d.terms()) {
      std::vector<bool> from_c(std::size_t(p + q), false);
      std::fill(from_c.begin(), from_c.begin() + p, true);
      std::sort(from_c.begin(), from_c.end());
      do {
        HochschildChain::Key key{plus(a[0], b[0])};
        int ia = 1, ib = 1, inversions = 0, taken_b = 0;
        for (std::size_t s = 0; s < from_c.size(); ++s) {
          if (from_c[s]) {
            key.push_back(a[std::size_t(ia++)]);
            inversions += taken_b;
          } else {
            key.push_back(b[std::size_t(ib++)]);
            ++taken_b;
          }
        }
        Rational w = wa * wb;
        out.add_monomial(key, inversions % 2 ? Rational(-w) : w);
      } while (std::next_permutation(from_c.begin(), from_c.end()));
    }
  return out;
}

}  // namespace chimukai
