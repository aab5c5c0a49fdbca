#pragma once

#include "chimukai/scalar.hpp"

#include <optional>
#include <vector>

namespace chimukai {

/// Dense matrix over Q, row-major.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  Rational trace() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
/// Basis of the right null space, one vector per column.
std::vector<std::vector<Rational>> kernel(const RatMatrix& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Determinants of the leading k×k blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const RatMatrix& m);
/// Symmetric positive definiteness via leading principal minors.
bool positive_definite(const RatMatrix& m);

}  // namespace chimukai
