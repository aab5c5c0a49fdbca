#include "chimukai/resolutions.hpp"

#include "chimukai/error.hpp"

#include <algorithm>
#include <bit>

namespace chimukai {

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(ring_)) {}

PolyMatrix PolyMatrix::from_columns(Ring ring, std::size_t rows, const std::vector<PolyVector>& cols) {
  PolyMatrix m(std::move(ring), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorKind::InvalidInput, "column has wrong length");
    for (std::size_t r = 0; r < rows; ++r)
      if (!cols[c][r].is_zero()) m(r, c) = cols[c][r];
  }
  return m;
}

PolyMatrix PolyMatrix::parse(const Ring& ring, const std::vector<std::vector<std::string>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(ring, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = MultiPoly::parse(ring, rows[r][c]);
  }
  return m;
}

PolyVector PolyMatrix::column(std::size_t c) const {
  PolyVector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<PolyVector> PolyMatrix::columns() const {
  std::vector<PolyVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidInput, "polynomial matrix product shape mismatch");
  PolyMatrix out(a.ring_.nvars() ? a.ring_ : b.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// ModulePresentation

ModulePresentation ModulePresentation::quotient(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  std::vector<PolyVector> cols;
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) cols.push_back({g});
  return {ring, {0}, PolyMatrix::from_columns(ring, 1, cols)};
}

ModulePresentation ModulePresentation::free(const Ring& ring, std::vector<int> shifts) {
  std::size_t r = shifts.size();
  return {ring, std::move(shifts), PolyMatrix(ring, r, 0)};
}

std::vector<int> ModulePresentation::column_degrees() const {
  if (relations.rows() != rank())
    throw Error(ErrorKind::InvalidInput, "relation matrix row count differs from the number of generators");
  std::vector<int> out;
  out.reserve(relations.cols());
  for (std::size_t c = 0; c < relations.cols(); ++c) {
    PolyVector col = relations.column(c);
    bool zero = std::all_of(col.begin(), col.end(), [](const MultiPoly& p) { return p.is_zero(); });
    if (zero) {
      out.push_back(0);
      continue;
    }
    auto d = vector_degree(col, shifts);
    if (!d)
      throw Error(ErrorKind::NotHomogeneous,
                  "relation column " + std::to_string(c) +
                      " is not homogeneous for the declared grading; homogenize the input "
                      "(add a variable or choose weights that make every relation homogeneous)");
    out.push_back(*d);
  }
  return out;
}

bool ModulePresentation::is_homogeneous() const {
  try {
    column_degrees();
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotHomogeneous) return false;
    throw;
  }
}

// ---------------------------------------------------------------------------
// FreeComplex

FreeComplex::FreeComplex(Ring ring, int lo, std::vector<std::vector<int>> shifts, std::vector<PolyMatrix> diffs)
    : ring_(std::move(ring)), lo_(lo), shifts_(std::move(shifts)), diffs_(std::move(diffs)) {
  if (shifts_.empty()) throw Error(ErrorKind::InvalidInput, "complex needs at least one module");
  if (diffs_.size() + 1 != shifts_.size())
    throw Error(ErrorKind::InvalidInput, "complex needs one differential between adjacent modules");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const auto& d = diffs_[k];
    if (d.rows() != shifts_[k].size() || d.cols() != shifts_[k + 1].size())
      throw Error(ErrorKind::InvalidInput, "differential d_" + std::to_string(lo_ + int(k) + 1) + " has the wrong shape");
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        const auto& e = d(r, c);
        if (e.is_zero()) continue;
        require_same_ring(e.ring(), ring_, "complex");
        auto deg = e.homogeneous_degree();
        if (!deg || *deg != shifts_[k + 1][c] - shifts_[k][r])
          throw Error(ErrorKind::NotHomogeneous,
                      "differential d_" + std::to_string(lo_ + int(k) + 1) + " is not homogeneous for the declared shifts");
      }
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    if (!(diffs_[k] * diffs_[k + 1]).is_zero())
      throw Error(ErrorKind::InvalidInput, "d_" + std::to_string(lo_ + int(k) + 1) + " ∘ d_" +
                                               std::to_string(lo_ + int(k) + 2) + " is not zero");
}

std::size_t FreeComplex::rank(int i) const {
  if (i < lo() || i > hi()) return 0;
  return shifts_[i - lo_].size();
}

const std::vector<int>& FreeComplex::shifts(int i) const {
  if (i < lo() || i > hi()) throw Error(ErrorKind::OutOfRange, "complex index out of range");
  return shifts_[i - lo_];
}

const PolyMatrix& FreeComplex::differential(int i) const {
  if (i <= lo() || i > hi()) throw Error(ErrorKind::OutOfRange, "differential index out of range");
  return diffs_[i - lo_ - 1];
}

std::vector<std::size_t> FreeComplex::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& s : shifts_) out.push_back(s.size());
  return out;
}

int FreeComplex::length() const {
  int first = -1, last = -1;
  for (int k = 0; k < int(shifts_.size()); ++k)
    if (!shifts_[k].empty()) {
      if (first < 0) first = k;
      last = k;
    }
  return first < 0 ? 0 : last - first;
}

// ---------------------------------------------------------------------------
// kernels

namespace {

template <class T>
std::vector<T> erase_index(std::vector<T> v, std::size_t i) {
  v.erase(v.begin() + std::ptrdiff_t(i));
  return v;
}

PolyMatrix drop(const PolyMatrix& m, std::optional<std::size_t> row, std::optional<std::size_t> col) {
  PolyMatrix out(m.ring(), m.rows() - (row ? 1 : 0), m.cols() - (col ? 1 : 0));
  for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
    if (row && r == *row) continue;
    for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
      if (col && c == *col) continue;
      out(rr, cc) = m(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_unit(const PolyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && m(r, c).is_constant()) return std::pair{r, c};
  return std::nullopt;
}

// Gaussian elimination of the unit at (r, c): the block δ - γ u^{-1} β.
PolyMatrix eliminate(const PolyMatrix& m, std::size_t r, std::size_t c) {
  Rational inv = 1 / m(r, c).constant_term();
  PolyMatrix out = drop(m, r, c);
  for (std::size_t i = 0, ii = 0; i < m.rows(); ++i) {
    if (i == r) continue;
    if (!m(i, c).is_zero()) {
      MultiPoly g = m(i, c).scaled(inv);
      for (std::size_t j = 0, jj = 0; j < m.cols(); ++j) {
        if (j == c) continue;
        if (!m(r, j).is_zero()) out(ii, jj) -= g * m(r, j);
        ++jj;
      }
    }
    ++ii;
  }
  return out;
}

bool is_zero_vector(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

std::vector<int> degrees_of(const std::vector<PolyVector>& vs, const std::vector<int>& shifts) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    auto d = vector_degree(v, shifts);
    if (!d) throw Error(ErrorKind::Internal, "expected a homogeneous vector");
    out.push_back(*d);
  }
  return out;
}

std::vector<PolyVector> select(const std::vector<PolyVector>& vs, const std::vector<std::size_t>& idx) {
  std::vector<PolyVector> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(vs[i]);
  return out;
}

std::vector<PolyVector> minimal_subset(const Ring& ring, const std::vector<int>& shifts,
                                       std::vector<PolyVector> vs, const AlgebraOptions& opts) {
  std::vector<PolyVector> nonzero;
  for (auto& v : vs)
    if (!is_zero_vector(v)) nonzero.push_back(std::move(v));
  auto deg = degrees_of(nonzero, shifts);
  return select(nonzero, minimal_generator_indices(ring, shifts, nonzero, deg, opts.order, opts.stop));
}

// Minimal generators of the kernel of the map A^{source} -> A^{target} whose
// columns are `columns`.
std::vector<PolyVector> kernel_columns(const Ring& ring, const std::vector<int>& target_shifts,
                                       const std::vector<PolyVector>& columns,
                                       const std::vector<int>& source_shifts, const AlgebraOptions& opts) {
  const std::size_t n = columns.size();
  if (n == 0) return {};
  std::vector<PolyVector> syz;
  if (target_shifts.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyVector e(n, MultiPoly(ring));
      e[j] = MultiPoly(ring, 1);
      syz.push_back(std::move(e));
    }
  } else {
    ModuleGB gb(ring, target_shifts, opts.order, true);
    for (const auto& c : columns) gb.add(c);
    gb.complete(opts.stop);
    syz = gb.generator_syzygies(opts.stop);
  }
  return minimal_subset(ring, source_shifts, std::move(syz), opts);
}

std::vector<PolyVector> top_block(const std::vector<PolyVector>& vs, std::size_t k) {
  std::vector<PolyVector> out;
  for (const auto& v : vs) {
    PolyVector t(v.begin(), v.begin() + std::ptrdiff_t(k));
    if (!is_zero_vector(t)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

PolyMatrix syzygies(const ModulePresentation& p, const AlgebraOptions& opts) {
  auto deg = p.column_degrees();
  auto z = kernel_columns(p.ring, p.shifts, p.relations.columns(), deg, opts);
  return PolyMatrix::from_columns(p.ring, p.relations.cols(), z);
}

ModulePresentation canonicalize(const ModulePresentation& p) {
  ModulePresentation out = p;
  out.column_degrees();
  while (auto u = find_unit(out.relations)) {
    out.relations = eliminate(out.relations, u->first, u->second);
    out.shifts = erase_index(out.shifts, u->first);
  }
  std::vector<PolyVector> keep;
  for (auto& c : out.relations.columns())
    if (!is_zero_vector(c)) keep.push_back(std::move(c));
  out.relations = PolyMatrix::from_columns(out.ring, out.rank(), keep);
  return out;
}

FreeComplex minimize(const FreeComplex& c) {
  int lo = c.lo();
  std::vector<std::vector<int>> shifts;
  std::vector<PolyMatrix> diffs;
  for (int i = c.lo(); i <= c.hi(); ++i) shifts.push_back(c.shifts(i));
  for (int i = c.lo() + 1; i <= c.hi(); ++i) diffs.push_back(c.differential(i));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < diffs.size(); ++k) {
      auto u = find_unit(diffs[k]);
      if (!u) continue;
      auto [r, col] = *u;
      diffs[k] = eliminate(diffs[k], r, col);
      if (k + 1 < diffs.size()) diffs[k + 1] = drop(diffs[k + 1], col, std::nullopt);
      if (k > 0) diffs[k - 1] = drop(diffs[k - 1], std::nullopt, r);
      shifts[k] = erase_index(shifts[k], r);
      shifts[k + 1] = erase_index(shifts[k + 1], col);
      changed = true;
    }
  }
  return FreeComplex(c.ring(), lo, std::move(shifts), std::move(diffs));
}

FreeComplex free_resolution(const ModulePresentation& p0, std::size_t max_length, const AlgebraOptions& opts) {
  ModulePresentation p = canonicalize(p0);
  const Ring& ring = p.ring;
  std::vector<std::vector<int>> shifts{p.shifts};
  std::vector<PolyMatrix> diffs;
  auto rel = minimal_subset(ring, p.shifts, p.relations.columns(), opts);
  if (!rel.empty()) {
    shifts.push_back(degrees_of(rel, p.shifts));
    diffs.push_back(PolyMatrix::from_columns(ring, p.rank(), rel));
  }
  while (diffs.size() + 1 == shifts.size() && !diffs.empty()) {
    if (opts.stop.stop_requested()) throw Error(ErrorKind::Cancelled, "resolution cancelled");
    const auto& top = diffs.back();
    auto z = kernel_columns(ring, shifts[shifts.size() - 2], top.columns(), shifts.back(), opts);
    if (z.empty()) break;
    if (diffs.size() + 1 > max_length)
      throw Error(ErrorKind::OutOfRange, "free resolution exceeds max length " + std::to_string(max_length));
    auto deg = degrees_of(z, shifts.back());
    diffs.push_back(PolyMatrix::from_columns(ring, shifts.back().size(), z));
    shifts.push_back(std::move(deg));
  }
  FreeComplex out = minimize(FreeComplex(ring, 0, std::move(shifts), std::move(diffs)));
  if (out.length() > int(ring.nvars()))
    throw Error(ErrorKind::Internal, "resolution longer than the number of variables");
  return out;
}

FreeComplex tensor_complexes(const FreeComplex& c, const FreeComplex& d) {
  require_same_ring(c.ring(), d.ring(), "tensor_complexes");
  const Ring& ring = c.ring();
  int lo = c.lo() + d.lo(), hi = c.hi() + d.hi();
  // offsets[n][i] = position of block C_i ⊗ D_{n-i} inside total degree n
  auto block_offset = [&](int n, int i) {
    std::size_t off = 0;
    for (int a = c.lo(); a < i; ++a) off += c.rank(a) * d.rank(n - a);
    return off;
  };
  std::vector<std::vector<int>> shifts;
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> s;
    for (int i = c.lo(); i <= c.hi(); ++i) {
      int j = n - i;
      if (j < d.lo() || j > d.hi()) continue;
      for (int a : c.shifts(i))
        for (int b : d.shifts(j)) s.push_back(a + b);
    }
    shifts.push_back(std::move(s));
  }
  std::vector<PolyMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    PolyMatrix m(ring, shifts[n - 1 - lo].size(), shifts[n - lo].size());
    for (int i = c.lo(); i <= c.hi(); ++i) {
      int j = n - i;
      if (j < d.lo() || j > d.hi()) continue;
      std::size_t src = block_offset(n, i);
      std::size_t rd = d.rank(j);
      for (std::size_t p = 0; p < c.rank(i); ++p)
        for (std::size_t q = 0; q < rd; ++q) {
          std::size_t col = src + p * rd + q;
          if (i > c.lo()) {
            std::size_t dst = block_offset(n - 1, i - 1);
            const auto& dc = c.differential(i);
            for (std::size_t p2 = 0; p2 < c.rank(i - 1); ++p2)
              if (!dc(p2, p).is_zero()) m(dst + p2 * rd + q, col) += dc(p2, p);
          }
          if (j > d.lo()) {
            std::size_t dst = block_offset(n - 1, i);
            const auto& dd = d.differential(j);
            std::size_t rd2 = d.rank(j - 1);
            for (std::size_t q2 = 0; q2 < rd2; ++q2)
              if (!dd(q2, q).is_zero()) {
                MultiPoly e = (i % 2 == 0) ? dd(q2, q) : -dd(q2, q);
                m(dst + p * rd2 + q2, col) += e;
              }
          }
        }
    }
    diffs.push_back(std::move(m));
  }
  return FreeComplex(ring, lo, std::move(shifts), std::move(diffs));
}

FreeComplex dual_complex(const FreeComplex& c) {
  std::vector<std::vector<int>> shifts;
  for (int j = -c.hi(); j <= -c.lo(); ++j) {
    std::vector<int> s = c.shifts(-j);
    for (auto& x : s) x = -x;
    shifts.push_back(std::move(s));
  }
  std::vector<PolyMatrix> diffs;
  for (int j = -c.hi() + 1; j <= -c.lo(); ++j) diffs.push_back(c.differential(-j + 1).transpose());
  return FreeComplex(c.ring(), -c.hi(), std::move(shifts), std::move(diffs));
}

FreeComplex koszul_complex(const Ring& ring, const std::vector<MultiPoly>& f) {
  const std::size_t n = f.size();
  if (n > 20) throw Error(ErrorKind::Unsupported, "Koszul complex on more than 20 elements");
  std::vector<int> deg;
  for (const auto& g : f) {
    auto d = g.homogeneous_degree();
    if (!d) throw Error(ErrorKind::NotHomogeneous, "Koszul complex needs homogeneous elements");
    deg.push_back(*d);
  }
  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned m = 0; m < (1u << n); ++m) subsets[std::popcount(m)].push_back(m);
  // lexicographic order on the sorted index lists
  auto key = [&](unsigned m) {
    std::vector<int> v;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (1u << i)) v.push_back(int(i));
    return v;
  };
  for (auto& s : subsets) std::sort(s.begin(), s.end(), [&](unsigned a, unsigned b) { return key(a) < key(b); });
  std::vector<std::vector<int>> shifts;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<int> s;
    for (unsigned m : subsets[k]) {
      int total = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m & (1u << i)) total += deg[i];
      s.push_back(total);
    }
    shifts.push_back(std::move(s));
  }
  std::vector<PolyMatrix> diffs;
  for (std::size_t k = 1; k <= n; ++k) {
    PolyMatrix d(ring, subsets[k - 1].size(), subsets[k].size());
    for (std::size_t col = 0; col < subsets[k].size(); ++col) {
      unsigned m = subsets[k][col];
      auto idx = key(m);
      for (std::size_t t = 0; t < idx.size(); ++t) {
        unsigned face = m & ~(1u << idx[t]);
        auto row = std::size_t(std::find(subsets[k - 1].begin(), subsets[k - 1].end(), face) - subsets[k - 1].begin());
        d(row, col) = t % 2 == 0 ? f[idx[t]] : -f[idx[t]];
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ring, 0, std::move(shifts), std::move(diffs));
}

ModulePresentation homology_with_coefficients(const FreeComplex& c, const ModulePresentation& np, int i,
                                              const AlgebraOptions& opts) {
  if (i < c.lo() || i > c.hi())
    throw Error(ErrorKind::OutOfRange, "homology index " + std::to_string(i) + " outside [" +
                                           std::to_string(c.lo()) + ", " + std::to_string(c.hi()) + "]");
  require_same_ring(c.ring(), np.ring, "homology_with_coefficients");
  const Ring& ring = c.ring();
  const std::size_t m = np.rank();
  const auto phi_deg = np.column_degrees();
  const std::size_t q = np.relations.cols();

  auto tshifts = [&](int k) {
    std::vector<int> s;
    if (k < c.lo() || k > c.hi()) return s;
    for (int a : c.shifts(k))
      for (int b : np.shifts) s.push_back(a + b);
    return s;
  };
  // columns of d_k ⊗ 1 with their degrees
  auto d_cols = [&](int k, std::vector<int>& degs) {
    std::vector<PolyVector> out;
    if (k <= c.lo() || k > c.hi()) return out;
    const auto& d = c.differential(k);
    std::size_t rows = c.rank(k - 1) * m;
    for (std::size_t a = 0; a < c.rank(k); ++a)
      for (std::size_t b = 0; b < m; ++b) {
        PolyVector v(rows, MultiPoly(ring));
        for (std::size_t a2 = 0; a2 < c.rank(k - 1); ++a2) v[a2 * m + b] = d(a2, a);
        out.push_back(std::move(v));
        degs.push_back(c.shifts(k)[a] + np.shifts[b]);
      }
    return out;
  };
  // columns of 1 ⊗ φ on the k-th term
  auto phi_cols = [&](int k, std::vector<int>& degs) {
    std::vector<PolyVector> out;
    if (k < c.lo() || k > c.hi()) return out;
    std::size_t rows = c.rank(k) * m;
    for (std::size_t a = 0; a < c.rank(k); ++a)
      for (std::size_t r = 0; r < q; ++r) {
        PolyVector v(rows, MultiPoly(ring));
        for (std::size_t b = 0; b < m; ++b) v[a * m + b] = np.relations(b, r);
        out.push_back(std::move(v));
        degs.push_back(c.shifts(k)[a] + phi_deg[r]);
      }
    return out;
  };

  const auto ti = tshifts(i);
  std::vector<PolyVector> kernel;
  if (i > c.lo() && !tshifts(i - 1).empty()) {
    std::vector<int> src;
    auto cols = d_cols(i, src);
    auto extra = phi_cols(i - 1, src);
    cols.insert(cols.end(), extra.begin(), extra.end());
    auto z = kernel_columns(ring, tshifts(i - 1), cols, src, opts);
    kernel = minimal_subset(ring, ti, top_block(z, ti.size()), opts);
  } else {
    for (std::size_t j = 0; j < ti.size(); ++j) {
      PolyVector e(ti.size(), MultiPoly(ring));
      e[j] = MultiPoly(ring, 1);
      kernel.push_back(std::move(e));
    }
  }
  if (kernel.empty()) return ModulePresentation::free(ring, {});
  auto kdeg = degrees_of(kernel, ti);

  std::vector<int> src = kdeg;
  std::vector<PolyVector> cols = kernel;
  auto img = d_cols(i + 1, src);
  cols.insert(cols.end(), img.begin(), img.end());
  auto rel = phi_cols(i, src);
  cols.insert(cols.end(), rel.begin(), rel.end());
  auto z = kernel_columns(ring, ti, cols, src, opts);
  auto relations = top_block(z, kernel.size());
  ModulePresentation out{ring, kdeg, PolyMatrix::from_columns(ring, kernel.size(), relations)};
  return canonicalize(out);
}

ModulePresentation homology(const FreeComplex& c, int i, const AlgebraOptions& opts) {
  return homology_with_coefficients(c, ModulePresentation::free(c.ring(), {0}), i, opts);
}

ModulePresentation direct_sum(const ModulePresentation& mp, const ModulePresentation& np) {
  require_same_ring(mp.ring, np.ring, "direct_sum");
  const std::size_t m = mp.rank(), n = np.rank();
  std::vector<int> shifts = mp.shifts;
  shifts.insert(shifts.end(), np.shifts.begin(), np.shifts.end());
  PolyMatrix rel(mp.ring, m + n, mp.relations.cols() + np.relations.cols());
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < mp.relations.cols(); ++c) rel(r, c) = mp.relations(r, c);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < np.relations.cols(); ++c) rel(m + r, mp.relations.cols() + c) = np.relations(r, c);
  return {mp.ring, std::move(shifts), std::move(rel)};
}

ModulePresentation tensor_presentations(const ModulePresentation& mp, const ModulePresentation& np) {
  require_same_ring(mp.ring, np.ring, "tensor_presentations");
  const Ring& ring = mp.ring;
  const std::size_t m = mp.rank(), n = np.rank();
  std::vector<int> shifts;
  for (int a : mp.shifts)
    for (int b : np.shifts) shifts.push_back(a + b);
  std::vector<PolyVector> cols;
  for (std::size_t r = 0; r < mp.relations.cols(); ++r)
    for (std::size_t b = 0; b < n; ++b) {
      PolyVector v(m * n, MultiPoly(ring));
      for (std::size_t a = 0; a < m; ++a) v[a * n + b] = mp.relations(a, r);
      cols.push_back(std::move(v));
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t r = 0; r < np.relations.cols(); ++r) {
      PolyVector v(m * n, MultiPoly(ring));
      for (std::size_t b = 0; b < n; ++b) v[a * n + b] = np.relations(b, r);
      cols.push_back(std::move(v));
    }
  return {ring, std::move(shifts), PolyMatrix::from_columns(ring, m * n, cols)};
}

}  // namespace chimukai
