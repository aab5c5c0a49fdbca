#include "chimukai/cohomology.hpp"

namespace chimukai {

namespace {

using FormMatrix = std::vector<std::vector<DifferentialForm>>;

MultiPoly reduce(const MultiPoly& f, const std::shared_ptr<const Ideal>& q) {
  return q ? normal_form(f, *q) : f;
}

/// Matrix product with wedge on entries. Entries of (de) are one-forms, so
/// the sign of each product is carried by the wedge itself.
FormMatrix multiply(const FormMatrix& a, const FormMatrix& b, const Ring& ring,
                    const std::shared_ptr<const Ideal>& q) {
  const std::size_t n = a.size();
  FormMatrix out(n, std::vector<DifferentialForm>(n, DifferentialForm(ring, q)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].empty()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].empty()) out[i][j] += wedge(a[i][k], b[k][j]);
    }
  return out;
}

bool all_empty(const FormMatrix& m) {
  for (const auto& row : m)
    for (const auto& w : row)
      if (!w.empty()) return false;
  return true;
}

}  // namespace

IdempotentMatrix::IdempotentMatrix(std::vector<std::vector<MultiPoly>> entries, std::shared_ptr<const Ideal> quotient)
    : entries_(std::move(entries)), quotient_(std::move(quotient)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "idempotent matrix must be nonempty");
  for (const auto& row : entries_)
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "idempotent matrix must be square");
  ring_ = quotient_ ? quotient_->ring() : entries_[0][0].ring();
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (e.ring().nvars() || !e.is_zero()) require_same_ring(e.ring(), ring_, "idempotent matrix");
  if (quotient_ && !quotient_->has_basis())
    throw Error(ErrorKind::MissingBasis, "quotient ideal needs a Groebner basis");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly s(ring_);
      for (std::size_t k = 0; k < n; ++k) s += entries_[i][k] * entries_[k][j];
      if (!reduce(s - entries_[i][j], quotient_).is_zero())
        throw Error(ErrorKind::NotIdempotent, "matrix is not idempotent: (e*e - e) entry (" + std::to_string(i) +
                                                  ", " + std::to_string(j) + ") is nonzero");
    }
}

MultiPoly IdempotentMatrix::trace() const {
  MultiPoly t(ring_);
  for (std::size_t i = 0; i < size(); ++i) t += entries_[i][i];
  return reduce(t, quotient_);
}

DifferentialForm denis_trace(const IdempotentMatrix& e, int max_order) {
  if (max_order < 0) throw Error(ErrorKind::InvalidInput, "max_order must be non-negative");
  const std::size_t n = e.size();
  const Ring& ring = e.ring();
  const auto& q = e.quotient();

  FormMatrix de(n, std::vector<DifferentialForm>(n, DifferentialForm(ring, q)));
  FormMatrix shifted(n, std::vector<DifferentialForm>(n, DifferentialForm(ring, q)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      de[i][j] = DifferentialForm::differential(e(i, j), q);
      MultiPoly s = e(i, j);
      if (i == j) s -= MultiPoly(ring, Rational(1, 2));
      shifted[i][j] = DifferentialForm::function(s, q);
    }

  DifferentialForm out = DifferentialForm::function(e.trace(), q);
  FormMatrix de2 = multiply(de, de, ring, q);
  FormMatrix power = de2;
  Rational central = 1;  // (2n)! / (n!)^2
  for (int k = 1; k <= max_order && 2 * k <= int(ring.nvars()); ++k) {
    central = central * (2 * k) * (2 * k - 1) / (Rational(k) * k);
    if (all_empty(power)) break;
    FormMatrix term = multiply(shifted, power, ring, q);
    for (std::size_t i = 0; i < n; ++i) out += MultiPoly(ring, central) * term[i][i];
    power = multiply(power, de2, ring, q);
  }
  return out;
}

}  // namespace chimukai
