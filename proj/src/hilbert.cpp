#include "chimukai/error.hpp"
#include "chimukai/resolutions.hpp"

#include <algorithm>
#include <numeric>

namespace chimukai {

namespace {

using Laurent = std::map<int, Integer>;

void add_into(Laurent& acc, const Laurent& p, int shift = 0, int sign = 1) {
  for (const auto& [e, c] : p) {
    Integer& slot = acc[e + shift];
    if (sign > 0) slot += c;
    else slot -= c;
    if (slot == 0) acc.erase(e + shift);
  }
}

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Integer& slot = out[ea + eb];
      slot += ca * cb;
      if (slot == 0) out.erase(ea + eb);
    }
  return out;
}

/// Dense coefficients c_0..c_k of t^{-lo}·p.
std::vector<Integer> dense(const Laurent& p, int& lo) {
  lo = p.begin()->first;
  std::vector<Integer> c(std::size_t(p.rbegin()->first - lo + 1));
  for (const auto& [e, v] : p) c[std::size_t(e - lo)] = v;
  return c;
}

Laurent sparse(const std::vector<Integer>& c, int lo) {
  Laurent out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out[lo + int(i)] = c[i];
  return out;
}

/// Order of vanishing at t = 1 and the quotient by (1-t)^order.
std::pair<int, Laurent> divide_out_one_minus_t(const Laurent& p) {
  if (p.empty()) return {0, p};
  int lo = 0;
  auto c = dense(p, lo);
  int ord = 0;
  while (c.size() > 1 && std::accumulate(c.begin(), c.end(), Integer(0)) == 0) {
    std::vector<Integer> q(c.size() - 1);
    Integer run = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      run += c[i];
      q[i] = run;
    }
    c = std::move(q);
    ++ord;
  }
  return {ord, sparse(c, lo)};
}

bool pairwise_coprime(const std::vector<Exponents>& g) {
  const std::size_t n = g.empty() ? 0 : g.front().size();
  std::vector<bool> used(n, false);
  for (const auto& e : g)
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > 0) {
        if (used[i]) return false;
        used[i] = true;
      }
  return true;
}

void minimalize(std::vector<Exponents>& g) {
  std::sort(g.begin(), g.end(), [](const Exponents& a, const Exponents& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
    return sa != sb ? sa < sb : a < b;
  });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Exponents> keep;
  for (auto& e : g)
    if (std::none_of(keep.begin(), keep.end(), [&](const Exponents& k) { return divides(k, e); }))
      keep.push_back(std::move(e));
  g = std::move(keep);
}

Laurent numerator(const Ring& ring, std::vector<Exponents> g) {
  minimalize(g);
  if (g.empty()) return {{0, Integer(1)}};
  for (const auto& e : g)
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) return {};
  if (pairwise_coprime(g)) {
    Laurent out{{0, Integer(1)}};
    for (const auto& e : g) out = multiply(out, {{0, Integer(1)}, {ring.degree(e), Integer(-1)}});
    return out;
  }
  // pivot on the variable occurring in the most generators
  const std::size_t n = ring.nvars();
  std::size_t v = 0;
  int best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    int count = 0;
    for (const auto& e : g) count += e[i] > 0;
    if (count > best) {
      best = count;
      v = i;
    }
  }
  std::vector<Exponents> plus = g;
  Exponents xv(n, 0);
  xv[v] = 1;
  plus.push_back(xv);
  std::vector<Exponents> colon;
  for (auto e : g) {
    if (e[v] > 0) --e[v];
    colon.push_back(std::move(e));
  }
  Laurent out = numerator(ring, std::move(plus));
  add_into(out, numerator(ring, std::move(colon)), ring.weight(v));
  return out;
}

std::vector<std::vector<Exponents>> leading_module(const ModulePresentation& p, const AlgebraOptions& opts) {
  p.column_degrees();
  ModuleGB gb(p.ring, p.shifts, opts.order);
  for (const auto& c : p.relations.columns()) gb.add(c);
  gb.complete(opts.stop);
  auto lm = gb.leading_monomials();
  lm.resize(p.rank());
  return lm;
}

std::string format_poly(const Laurent& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : p) {
    Integer a = abs(c);
    std::string mag;
    if (e == 0) mag = to_string(a);
    else {
      std::string var = e == 1 ? "t" : "t^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      mag = a == 1 ? var : to_string(a) + "*" + var;
    }
    if (out.empty()) out = (c < 0 ? "-" : "") + mag;
    else out += (c < 0 ? " - " : " + ") + mag;
  }
  return out;
}

}  // namespace

std::map<int, Integer> monomial_hilbert_numerator(const Ring& ring, std::vector<Exponents> gens) {
  return numerator(ring, std::move(gens));
}

int HilbertSeries::krull_dim() const {
  if (numerator.empty()) return 0;
  return int(weights.size()) - divide_out_one_minus_t(numerator).first;
}

std::map<int, Integer> HilbertSeries::reduced_numerator() const {
  return divide_out_one_minus_t(numerator).second;
}

std::optional<Integer> HilbertSeries::length() const {
  if (numerator.empty()) return Integer(0);
  auto [ord, q] = divide_out_one_minus_t(numerator);
  if (ord != int(weights.size())) return std::nullopt;
  // N = (1-t)^d Q and ∏(1-t^w) = (1-t)^d ∏(1 + ... + t^{w-1}), so HS(1) = Q(1)/∏w.
  Integer value = 0;
  for (const auto& [e, c] : q) value += c;
  Integer denom = 1;
  for (int w : weights) denom *= w;
  if (value % denom != 0) throw Error(ErrorKind::Internal, "non-integral module length");
  return Integer(value / denom);
}

std::vector<Integer> HilbertSeries::coefficients(int from, int to) const {
  if (to < from) return {};
  int lo = numerator.empty() ? from : std::min(from, numerator.begin()->first);
  std::vector<Integer> c(std::size_t(to - lo + 1));
  for (const auto& [e, v] : numerator)
    if (e <= to) c[std::size_t(e - lo)] += v;
  for (int w : weights)
    for (std::size_t k = std::size_t(w); k < c.size(); ++k) c[k] += c[k - std::size_t(w)];
  return {c.begin() + (from - lo), c.end()};
}

std::string HilbertSeries::to_string() const {
  if (numerator.empty()) return "0";
  bool standard = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
  if (standard) {
    int d = krull_dim();
    std::string num = format_poly(reduced_numerator());
    if (d == 0) return num;
    std::string den = d == 1 ? "(1 - t)" : "(1 - t)^" + std::to_string(d);
    return (reduced_numerator().size() > 1 ? "(" + num + ")" : num) + "/" + den;
  }
  std::string den;
  for (int w : weights) den += w == 1 ? "(1 - t)" : "(1 - t^" + std::to_string(w) + ")";
  std::string num = format_poly(numerator);
  return (numerator.size() > 1 ? "(" + num + ")" : num) + "/" + den;
}

HilbertSeries hilbert_series(const ModulePresentation& p, const AlgebraOptions& opts) {
  auto lm = leading_module(p, opts);
  HilbertSeries hs;
  hs.weights = p.ring.weights();
  for (std::size_t j = 0; j < p.rank(); ++j) add_into(hs.numerator, numerator(p.ring, lm[j]), p.shifts[j]);
  return hs;
}

int krull_dim(const ModulePresentation& p, const AlgebraOptions& opts) {
  return hilbert_series(p, opts).krull_dim();
}

ModuleLength length(const ModulePresentation& p, const AlgebraOptions& opts) {
  auto l = hilbert_series(p, opts).length();
  if (!l) return {true, 0};
  return {false, *l};
}

std::optional<Integer> standard_monomial_count(const ModulePresentation& p, const AlgebraOptions& opts) {
  auto lm = leading_module(p, opts);
  const std::size_t n = p.ring.nvars();
  Integer total = 0;
  for (const auto& leads : lm) {
    std::vector<int> bound(n, -1);
    bool unit = false;
    for (const auto& e : leads) {
      int support = -1, count = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] > 0) {
          support = int(i);
          ++count;
        }
      if (count == 0) unit = true;
      if (count == 1 && (bound[support] < 0 || e[support] < bound[support])) bound[support] = e[support];
    }
    if (unit) continue;
    if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) return std::nullopt;
    Exponents e(n, 0);
    for (;;) {
      if (std::none_of(leads.begin(), leads.end(), [&](const Exponents& l) { return divides(l, e); })) ++total;
      std::size_t i = 0;
      while (i < n) {
        if (++e[i] < bound[i]) break;
        e[i] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
  return total;
}

}  // namespace chimukai
