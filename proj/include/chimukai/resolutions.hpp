#pragma once

#include "chimukai/groebner.hpp"

#include <map>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

namespace chimukai {

/// Dense matrix of polynomials, row-major.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  static PolyMatrix from_columns(Ring ring, std::size_t rows, const std::vector<PolyVector>& cols);
  static PolyMatrix parse(const Ring& ring, const std::vector<std::vector<std::string>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MultiPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyVector column(std::size_t c) const;
  std::vector<PolyVector> columns() const;
  PolyMatrix transpose() const;
  bool is_zero() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MultiPoly> data_;
};

/// Cokernel of a homogeneous relation matrix F_1 -> F_0 = ⊕ A(-shift_i).
struct ModulePresentation {
  Ring ring;
  std::vector<int> shifts;
  PolyMatrix relations;  // rank() rows

  std::size_t rank() const { return shifts.size(); }

  /// A/I on one generator of degree 0.
  static ModulePresentation quotient(const Ideal& ideal);
  static ModulePresentation free(const Ring& ring, std::vector<int> shifts);

  /// Degrees of the relation columns; zero columns report degree 0.
  /// Throws Error(NotHomogeneous).
  std::vector<int> column_degrees() const;
  bool is_homogeneous() const;
};

/// Settings shared by the commutative-algebra routines.
struct AlgebraOptions {
  MonomialOrder order = MonomialOrder::grevlex();
  std::stop_token stop;
};

/// Bounded complex of graded free modules F_lo <- ... <- F_hi.
/// differential(i) : F_i -> F_{i-1}, rows indexed by F_{i-1}.
class FreeComplex {
public:
  FreeComplex() = default;
  /// shifts[k] are the generator degrees of F_{lo+k}; diffs[k] is d_{lo+k+1}.
  /// Validates shapes, homogeneity, and d∘d = 0.
  FreeComplex(Ring ring, int lo, std::vector<std::vector<int>> shifts, std::vector<PolyMatrix> diffs);

  const Ring& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + int(shifts_.size()) - 1; }
  std::size_t rank(int i) const;
  const std::vector<int>& shifts(int i) const;
  /// d_i for lo < i <= hi.
  const PolyMatrix& differential(int i) const;
  std::vector<std::size_t> ranks() const;
  /// hi - lo after trimming zero modules at the ends.
  int length() const;

private:
  Ring ring_;
  int lo_ = 0;
  std::vector<std::vector<int>> shifts_;
  std::vector<PolyMatrix> diffs_;
};

/// Columns generate the syzygy module of the relation columns; the product
/// relations × result is zero.
PolyMatrix syzygies(const ModulePresentation& p, const AlgebraOptions& opts = {});

/// Unit pruning plus removal of zero columns. The zero module comes back
/// with rank 0.
ModulePresentation canonicalize(const ModulePresentation& p);

/// Minimal graded free resolution, F_0 = generators of the module.
FreeComplex free_resolution(const ModulePresentation& p, std::size_t max_length,
                            const AlgebraOptions& opts = {});

/// Total complex with d(a⊗b) = da⊗b + (-1)^i a⊗db.
FreeComplex tensor_complexes(const FreeComplex& c, const FreeComplex& d);

/// Hom(C, A) as a chain complex: index -i holds F_i^*, differentials transposed.
FreeComplex dual_complex(const FreeComplex& c);

/// Koszul complex of a list of homogeneous polynomials.
FreeComplex koszul_complex(const Ring& ring, const std::vector<MultiPoly>& f);

/// Cancels constant entries of the differentials; keeps homology.
FreeComplex minimize(const FreeComplex& c);

/// ker d_i / im d_{i+1}.
ModulePresentation homology(const FreeComplex& c, int i, const AlgebraOptions& opts = {});

/// H_i(C ⊗ N) for a free complex C and a presented module N.
ModulePresentation homology_with_coefficients(const FreeComplex& c, const ModulePresentation& n, int i,
                                              const AlgebraOptions& opts = {});

/// Presentation of M ⊕ N.
ModulePresentation direct_sum(const ModulePresentation& m, const ModulePresentation& n);

/// Presentation of M ⊗ N.
ModulePresentation tensor_presentations(const ModulePresentation& m, const ModulePresentation& n);

/// Hilbert series N(t) / ∏(1 - t^{w_i}) with Laurent numerator N.
struct HilbertSeries {
  std::map<int, Integer> numerator;
  std::vector<int> weights;

  bool is_zero() const { return numerator.empty(); }
  /// Pole order at t = 1; 0 for the zero series.
  int krull_dim() const;
  /// HS(1) when krull_dim() == 0.
  std::optional<Integer> length() const;
  /// For standard grading: Q(t) with HS = Q(t) / (1-t)^krull_dim().
  std::map<int, Integer> reduced_numerator() const;
  /// Coefficients of t^k for k in [from, to].
  std::vector<Integer> coefficients(int from, int to) const;
  std::string to_string() const;

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.numerator == b.numerator && a.weights == b.weights;
  }
};

HilbertSeries hilbert_series(const ModulePresentation& p, const AlgebraOptions& opts = {});
/// Numerator of A/I for a monomial ideal I (weights from the ring).
std::map<int, Integer> monomial_hilbert_numerator(const Ring& ring, std::vector<Exponents> gens);

struct ModuleLength {
  bool infinite = false;
  Integer value = 0;
  std::string to_string() const { return infinite ? "INFINITE" : chimukai::to_string(value); }
  friend bool operator==(const ModuleLength& a, const ModuleLength& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// Zero module: dimension 0.
int krull_dim(const ModulePresentation& p, const AlgebraOptions& opts = {});
ModuleLength length(const ModulePresentation& p, const AlgebraOptions& opts = {});
/// Count of standard monomials of the leading-term module, when finite.
std::optional<Integer> standard_monomial_count(const ModulePresentation& p, const AlgebraOptions& opts = {});

}  // namespace chimukai
