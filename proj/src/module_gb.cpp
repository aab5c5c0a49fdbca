#include "chimukai/error.hpp"
#include "chimukai/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace chimukai {
namespace {

struct MTerm {
  Exponents mon;
  int comp;
  Rational coef;
};

// Strictly descending in the term order, no zero coefficients.
using MVec = std::vector<MTerm>;

class TermOrder {
public:
  TermOrder(Ring ring, MonomialOrder order, std::vector<int> shifts)
      : ring_(std::move(ring)), order_(std::move(order)), shifts_(std::move(shifts)) {}

  int compare(const Exponents& a, int ca, const Exponents& b, int cb) const {
    if (order_.graded()) {
      int da = ring_.degree(a) + shift(ca);
      int db = ring_.degree(b) + shift(cb);
      if (da != db) return da < db ? -1 : 1;
    }
    int c = order_.compare(a, b, ring_);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }

private:
  int shift(int c) const { return c < int(shifts_.size()) ? shifts_[c] : 0; }

  Ring ring_;
  MonomialOrder order_;
  std::vector<int> shifts_;
};

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// a[start..] - c * m * b
MVec sub_mul(const MVec& a, std::size_t start, const Rational& c, const Exponents& m,
             const MVec& b, const TermOrder& ord) {
  MVec out;
  out.reserve(a.size() - start + b.size());
  std::size_t i = start, j = 0;
  Exponents shifted;
  bool have_shifted = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_shifted) {
      shifted = add_exp(b[j].mon, m);
      have_shifted = true;
    }
    int cmp;
    if (i >= a.size()) cmp = -1;
    else if (j >= b.size()) cmp = 1;
    else cmp = ord.compare(a[i].mon, a[i].comp, shifted, b[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(MTerm{std::move(shifted), b[j].comp, -c * b[j].coef});
      ++j;
      have_shifted = false;
    } else {
      Rational s = a[i].coef - c * b[j].coef;
      if (s != 0) out.push_back(MTerm{a[i].mon, a[i].comp, std::move(s)});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return out;
}

MVec mul_term(const MVec& a, const Rational& c, const Exponents& m) {
  MVec out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(MTerm{add_exp(t.mon, m), t.comp, c * t.coef});
  return out;
}

}  // namespace

struct ModuleGB::Impl {
  struct Elem {
    MVec v;
    MVec lift;
    bool live = true;
  };
  struct Pair {
    int i, j;
    Exponents lcm;
    int comp;
  };

  Impl(Ring ring, std::vector<int> shifts, MonomialOrder order, bool track)
      : rank(shifts.size()),
        ord(ring, order, shifts),
        lift_ord(ring, order, {}),
        track(track) {}

  std::size_t rank;
  TermOrder ord;
  TermOrder lift_ord;
  bool track;
  std::vector<MVec> inputs;
  std::vector<Elem> elems;
  std::vector<Pair> pending;
  std::set<std::pair<int, int>> pending_set;

  const Ring& ring() const { return ord.ring(); }

  MVec to_mvec(const PolyVector& v) const {
    if (v.size() != rank)
      throw Error(ErrorKind::InvalidInput, "module vector has wrong length");
    MVec out;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero()) continue;
      require_same_ring(v[c].ring(), ring(), "module Groebner basis");
      for (const auto& [e, a] : v[c].terms()) out.push_back(MTerm{e, int(c), a});
    }
    std::sort(out.begin(), out.end(), [&](const MTerm& x, const MTerm& y) {
      return ord.compare(x.mon, x.comp, y.mon, y.comp) > 0;
    });
    return out;
  }

  PolyVector from_mvec(const MVec& v, std::size_t r) const {
    PolyVector out(r, MultiPoly(ring()));
    for (const auto& t : v) out[t.comp].add_term(t.mon, t.coef);
    return out;
  }

  int find_divisor(const MTerm& t) const {
    for (std::size_t k = 0; k < elems.size(); ++k) {
      const auto& e = elems[k];
      if (!e.live) continue;
      const auto& lt = e.v.front();
      if (lt.comp == t.comp && divides(lt.mon, t.mon)) return int(k);
    }
    return -1;
  }

  MVec reduce_full(MVec f, MVec* lift) const {
    MVec rem;
    std::size_t start = 0;
    while (start < f.size()) {
      const MTerm& t = f[start];
      int g = find_divisor(t);
      if (g < 0) {
        rem.push_back(t);
        ++start;
        continue;
      }
      const auto& ge = elems[g];
      Exponents m = sub_exp(t.mon, ge.v.front().mon);
      Rational c = t.coef / ge.v.front().coef;
      if (lift) *lift = sub_mul(*lift, 0, c, m, ge.lift, lift_ord);
      f = sub_mul(f, start, c, m, ge.v, ord);
      start = 0;
    }
    return rem;
  }

  void insert(MVec v, MVec lift) {
    Rational inv = 1 / v.front().coef;
    for (auto& t : v) t.coef *= inv;
    for (auto& t : lift) t.coef *= inv;
    int n = int(elems.size());
    for (int k = 0; k < n; ++k) {
      if (!elems[k].live) continue;
      const auto& a = elems[k].v.front();
      if (a.comp != v.front().comp) continue;
      pending.push_back(Pair{k, n, lcm(a.mon, v.front().mon), a.comp});
      pending_set.insert({k, n});
    }
    elems.push_back(Elem{std::move(v), std::move(lift), true});
  }

  bool chain_skip(const Pair& p) const {
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (int(k) == p.i || int(k) == p.j || !elems[k].live) continue;
      const auto& lt = elems[k].v.front();
      if (lt.comp != p.comp || !divides(lt.mon, p.lcm)) continue;
      auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
      if (pending_set.count(key(p.i, int(k))) || pending_set.count(key(p.j, int(k)))) continue;
      return true;
    }
    return false;
  }

  std::pair<MVec, MVec> s_vector(int i, int j, const Exponents& l) const {
    const auto& a = elems[i];
    const auto& b = elems[j];
    Exponents mi = sub_exp(l, a.v.front().mon);
    Exponents mj = sub_exp(l, b.v.front().mon);
    MVec s = sub_mul(mul_term(a.v, 1, mi), 0, 1, mj, b.v, ord);
    MVec lift;
    if (track) lift = sub_mul(mul_term(a.lift, 1, mi), 0, 1, mj, b.lift, lift_ord);
    return {std::move(s), std::move(lift)};
  }

  void complete(std::stop_token stop) {
    while (!pending.empty()) {
      if (stop.stop_requested()) throw Error(ErrorKind::Cancelled, "Groebner basis computation cancelled");
      std::size_t best = 0;
      for (std::size_t k = 1; k < pending.size(); ++k)
        if (ord.compare(pending[k].lcm, pending[k].comp, pending[best].lcm, pending[best].comp) < 0)
          best = k;
      Pair p = std::move(pending[best]);
      pending[best] = std::move(pending.back());
      pending.pop_back();
      pending_set.erase({p.i, p.j});

      const auto& lti = elems[p.i].v.front();
      const auto& ltj = elems[p.j].v.front();
      if (rank == 1 && coprime(lti.mon, ltj.mon)) continue;
      if (chain_skip(p)) continue;

      auto [s, lift] = s_vector(p.i, p.j, p.lcm);
      MVec r = reduce_full(std::move(s), track ? &lift : nullptr);
      if (!r.empty()) insert(std::move(r), std::move(lift));
    }
    // Drop elements whose leading term is divisible by another live one.
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!elems[i].live) continue;
      const auto& a = elems[i].v.front();
      for (std::size_t j = 0; j < elems.size(); ++j) {
        if (i == j || !elems[j].live) continue;
        const auto& b = elems[j].v.front();
        if (b.comp != a.comp || !divides(b.mon, a.mon)) continue;
        if (b.mon != a.mon || j < i) {
          elems[i].live = false;
          break;
        }
      }
    }
  }
};

ModuleGB::ModuleGB(Ring ring, std::vector<int> shifts, MonomialOrder order, bool track_lifts)
    : impl_(std::make_unique<Impl>(std::move(ring), std::move(shifts), std::move(order), track_lifts)) {}
ModuleGB::~ModuleGB() = default;
ModuleGB::ModuleGB(ModuleGB&&) noexcept = default;
ModuleGB& ModuleGB::operator=(ModuleGB&&) noexcept = default;

const Ring& ModuleGB::ring() const { return impl_->ring(); }
std::size_t ModuleGB::rank() const { return impl_->rank; }
const MonomialOrder& ModuleGB::order() const { return impl_->ord.order(); }
std::size_t ModuleGB::generator_count() const { return impl_->inputs.size(); }

void ModuleGB::add(const PolyVector& v) {
  auto& I = *impl_;
  MVec mv = I.to_mvec(v);
  int index = int(I.inputs.size());
  I.inputs.push_back(mv);
  if (mv.empty()) return;
  MVec lift;
  if (I.track) lift.push_back(MTerm{Exponents(I.ring().nvars(), 0), index, Rational(1)});
  I.insert(std::move(mv), std::move(lift));
}

void ModuleGB::complete(std::stop_token stop) { impl_->complete(std::move(stop)); }

std::vector<PolyVector> ModuleGB::basis() const {
  std::vector<PolyVector> out;
  for (const auto& e : impl_->elems)
    if (e.live) out.push_back(impl_->from_mvec(e.v, impl_->rank));
  return out;
}

void ModuleGB::make_reduced() {
  auto& I = *impl_;
  for (auto& e : I.elems) {
    if (!e.live) continue;
    e.live = false;
    MVec lift = e.lift;
    MVec r = I.reduce_full(e.v, I.track ? &lift : nullptr);
    e.live = true;
    // The leading term is irreducible by the others, so r keeps it.
    e.v = std::move(r);
    e.lift = std::move(lift);
  }
}

PolyVector ModuleGB::reduce(const PolyVector& v) const {
  return impl_->from_mvec(impl_->reduce_full(impl_->to_mvec(v), nullptr), impl_->rank);
}

bool ModuleGB::contains(const PolyVector& v) const {
  return impl_->reduce_full(impl_->to_mvec(v), nullptr).empty();
}

std::vector<std::vector<Exponents>> ModuleGB::leading_monomials() const {
  std::vector<std::vector<Exponents>> out(impl_->rank);
  for (const auto& e : impl_->elems)
    if (e.live) out[e.v.front().comp].push_back(e.v.front().mon);
  return out;
}

std::vector<PolyVector> ModuleGB::generator_syzygies(std::stop_token stop) const {
  const auto& I = *impl_;
  if (!I.track) throw Error(ErrorKind::Internal, "syzygies requested without lift tracking");
  if (!I.pending.empty()) throw Error(ErrorKind::Internal, "syzygies requested on an incomplete basis");
  const std::size_t n = I.inputs.size();
  std::vector<PolyVector> out;
  std::vector<int> live;
  for (std::size_t k = 0; k < I.elems.size(); ++k)
    if (I.elems[k].live) live.push_back(int(k));
  for (std::size_t a = 0; a < live.size(); ++a) {
    for (std::size_t b = a + 1; b < live.size(); ++b) {
      if (stop.stop_requested()) throw Error(ErrorKind::Cancelled, "syzygy computation cancelled");
      const auto& x = I.elems[live[a]].v.front();
      const auto& y = I.elems[live[b]].v.front();
      if (x.comp != y.comp) continue;
      auto [s, lift] = I.s_vector(live[a], live[b], lcm(x.mon, y.mon));
      MVec r = I.reduce_full(std::move(s), &lift);
      if (!r.empty()) throw Error(ErrorKind::Internal, "S-vector of a Groebner basis did not reduce to zero");
      if (!lift.empty()) out.push_back(I.from_mvec(lift, n));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    MVec lift{MTerm{Exponents(I.ring().nvars(), 0), int(j), Rational(1)}};
    MVec r = I.reduce_full(I.inputs[j], &lift);
    if (!r.empty()) throw Error(ErrorKind::Internal, "generator does not reduce to zero modulo its own basis");
    if (!lift.empty()) out.push_back(I.from_mvec(lift, n));
  }
  return out;
}

std::optional<int> vector_degree(const PolyVector& v, const std::vector<int>& shifts) {
  std::optional<int> deg;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    auto d = v[c].homogeneous_degree();
    if (!d) return std::nullopt;
    int total = *d + shifts[c];
    if (deg && *deg != total) return std::nullopt;
    deg = total;
  }
  return deg;
}

std::vector<std::size_t> minimal_generator_indices(const Ring& ring, const std::vector<int>& shifts,
                                                   const std::vector<PolyVector>& vectors,
                                                   const std::vector<int>& degrees,
                                                   const MonomialOrder& order, std::stop_token stop) {
  std::vector<std::size_t> idx(vectors.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return degrees[a] < degrees[b]; });
  ModuleGB gb(ring, shifts, order);
  std::vector<std::size_t> kept;
  for (std::size_t i : idx) {
    bool zero = std::all_of(vectors[i].begin(), vectors[i].end(), [](const MultiPoly& p) { return p.is_zero(); });
    if (zero || gb.contains(vectors[i])) continue;
    gb.add(vectors[i]);
    gb.complete(stop);
    kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace chimukai
