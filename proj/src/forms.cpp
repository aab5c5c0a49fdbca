#include "chimukai/forms.hpp"

#include "chimukai/error.hpp"

#include <bit>

namespace chimukai {

namespace {

std::vector<DifferentialForm::Mask> masks_of_size(std::size_t n, int k) {
  std::vector<DifferentialForm::Mask> out;
  for (DifferentialForm::Mask m = 0; m < (DifferentialForm::Mask(1) << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

}  // namespace

int wedge_sign(DifferentialForm::Mask a, DifferentialForm::Mask b) {
  // count pairs (i in a, j in b) with i > j
  int inversions = 0;
  while (b) {
    int j = std::countr_zero(b);
    b &= b - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

DifferentialForm::DifferentialForm(Ring ring, std::shared_ptr<const Ideal> quotient)
    : ring_(std::move(ring)), quotient_(std::move(quotient)) {
  if (ring_.nvars() > 31) throw Error(ErrorKind::Unsupported, "differential forms support at most 31 variables");
  if (quotient_) {
    require_same_ring(quotient_->ring(), ring_, "differential form quotient");
    if (!quotient_->has_basis())
      throw Error(ErrorKind::MissingBasis, "quotient ideal for differential forms needs a Groebner basis");
  }
}

DifferentialForm DifferentialForm::function(const MultiPoly& f, std::shared_ptr<const Ideal> quotient) {
  DifferentialForm w(f.ring(), std::move(quotient));
  w.add(0, f);
  return w;
}

DifferentialForm DifferentialForm::basis(const MultiPoly& f, const std::vector<int>& indices,
                                         std::shared_ptr<const Ideal> quotient) {
  DifferentialForm w(f.ring(), std::move(quotient));
  Mask m = 0;
  int sign = 1;
  for (int i : indices) {
    if (i < 0 || std::size_t(i) >= f.ring().nvars())
      throw Error(ErrorKind::OutOfRange, "differential index out of range");
    Mask bit = Mask(1) << i;
    if (m & bit) return w;
    sign *= wedge_sign(m, bit);
    m |= bit;
  }
  w.add(m, f.scaled(sign));
  return w;
}

DifferentialForm DifferentialForm::differential(const MultiPoly& f, std::shared_ptr<const Ideal> quotient) {
  return exterior_d(function(f, std::move(quotient)));
}

MultiPoly DifferentialForm::reduce(const MultiPoly& f) const {
  return quotient_ ? normal_form(f, *quotient_) : f;
}

void DifferentialForm::add(Mask m, const MultiPoly& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    MultiPoly r = reduce(f);
    if (!r.is_zero()) terms_.emplace(m, std::move(r));
    return;
  }
  it->second = reduce(it->second + f);
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly DifferentialForm::coefficient(const std::vector<int>& sorted_indices) const {
  Mask m = 0;
  for (int i : sorted_indices) m |= Mask(1) << i;
  auto it = terms_.find(m);
  return it == terms_.end() ? MultiPoly(ring_) : it->second;
}

int DifferentialForm::degree() const {
  if (terms_.empty()) return 0;
  int d = std::popcount(terms_.begin()->first);
  for (const auto& [m, f] : terms_)
    if (std::popcount(m) != d) throw Error(ErrorKind::InvalidInput, "form has mixed degree");
  return d;
}

DifferentialForm DifferentialForm::part(int degree) const {
  DifferentialForm out(ring_, quotient_);
  for (const auto& [m, f] : terms_)
    if (std::popcount(m) == degree) out.terms_.emplace(m, f);
  return out;
}

bool DifferentialForm::is_zero() const {
  if (terms_.empty()) return true;
  if (!quotient_) return false;
  // Decide membership of each homogeneous part in I·Ω^k + dI ∧ Ω^{k-1}.
  const std::size_t n = ring_.nvars();
  std::map<int, std::vector<Mask>> by_degree;
  for (const auto& [m, f] : terms_) by_degree[std::popcount(m)].push_back(m);
  for (const auto& [k, present] : by_degree) {
    auto masks = masks_of_size(n, k);
    std::map<Mask, std::size_t> pos;
    for (std::size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = i;
    ModuleGB gb(ring_, std::vector<int>(masks.size(), k), quotient_->basis_order());
    for (const auto& g : quotient_->basis()) {
      for (Mask m : masks) {
        PolyVector v(masks.size(), MultiPoly(ring_));
        v[pos[m]] = g;
        gb.add(v);
      }
      if (k == 0) continue;
      DifferentialForm dg = DifferentialForm::differential(g);
      for (Mask rest : masks_of_size(n, k - 1)) {
        DifferentialForm prod = wedge(dg, DifferentialForm::basis(MultiPoly(ring_, 1), [&] {
          std::vector<int> idx;
          for (std::size_t i = 0; i < n; ++i)
            if (rest & (Mask(1) << i)) idx.push_back(int(i));
          return idx;
        }()));
        if (prod.terms_.empty()) continue;
        PolyVector v(masks.size(), MultiPoly(ring_));
        for (const auto& [m, f] : prod.terms_) v[pos[m]] = f;
        gb.add(v);
      }
    }
    gb.complete();
    PolyVector w(masks.size(), MultiPoly(ring_));
    for (Mask m : present) w[pos[m]] = terms_.at(m);
    if (!gb.contains(w)) return false;
  }
  return true;
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
  if (!ring_.nvars() && terms_.empty()) {
    ring_ = o.ring_;
    quotient_ = o.quotient_;
  }
  require_same_ring(ring_, o.ring_, "form addition");
  for (const auto& [m, f] : o.terms_) add(m, f);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) {
  if (!ring_.nvars() && terms_.empty()) {
    ring_ = o.ring_;
    quotient_ = o.quotient_;
  }
  require_same_ring(ring_, o.ring_, "form subtraction");
  for (const auto& [m, f] : o.terms_) add(m, -f);
  return *this;
}

DifferentialForm operator*(const MultiPoly& f, const DifferentialForm& w) {
  DifferentialForm out(w.ring_, w.quotient_);
  for (const auto& [m, g] : w.terms_) out.add(m, f * g);
  return out;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_ring(a.ring(), b.ring(), "wedge");
  DifferentialForm out(a.ring(), a.quotient() ? a.quotient() : b.quotient());
  for (const auto& [ma, fa] : a.terms())
    for (const auto& [mb, fb] : b.terms()) {
      if (ma & mb) continue;
      MultiPoly c = fa * fb;
      if (wedge_sign(ma, mb) < 0) c = -c;
      out += DifferentialForm::basis(c, [&] {
        std::vector<int> idx;
        for (std::size_t i = 0; i < a.ring().nvars(); ++i)
          if ((ma | mb) & (DifferentialForm::Mask(1) << i)) idx.push_back(int(i));
        return idx;
      }(), out.quotient());
    }
  return out;
}

DifferentialForm exterior_d(const DifferentialForm& w) {
  DifferentialForm out(w.ring(), w.quotient());
  const std::size_t n = w.ring().nvars();
  for (const auto& [m, f] : w.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      DifferentialForm::Mask bit = DifferentialForm::Mask(1) << i;
      if (m & bit) continue;
      MultiPoly df = f.derivative(i);
      if (df.is_zero()) continue;
      // dx_i moves past the dx_j with j < i
      if (std::popcount(m & (bit - 1)) % 2) df = -df;
      std::vector<int> idx;
      for (std::size_t j = 0; j < n; ++j)
        if ((m | bit) & (DifferentialForm::Mask(1) << j)) idx.push_back(int(j));
      out += DifferentialForm::basis(df, idx, w.quotient());
    }
  }
  return out;
}

std::string DifferentialForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, f] : terms_) {
    std::string coeff = f.to_string();
    std::string dx;
    for (std::size_t i = 0; i < ring_.nvars(); ++i)
      if (m & (Mask(1) << i)) dx += (dx.empty() ? "d" : "∧d") + ring_.var_name(i);
    bool single = coeff.find(' ') == std::string::npos;
    std::string term;
    if (dx.empty()) term = single ? coeff : "(" + coeff + ")";
    else if (coeff == "1") term = dx;
    else if (coeff == "-1") term = "-" + dx;
    else term = (single ? coeff : "(" + coeff + ")") + "*" + dx;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

}  // namespace chimukai
