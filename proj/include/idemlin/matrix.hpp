#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idemlin/errors.hpp"
#include "idemlin/semiring.hpp"

namespace idemlin {

/// Dense row-major matrix of semiring elements.
template <class T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionError("matrix: " + std::to_string(entries_.size()) + " entries for shape " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<T> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("matrix: ragged rows");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(entries));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  /// Row-major flattening.
  const std::vector<T>& entries() const noexcept { return entries_; }

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
  }

  Matrix transposed() const {
    if (rows_ * cols_ == 0) return Matrix(cols_, rows_, std::vector<T>{});
    Matrix t(cols_, rows_, entries_.front());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

enum class Side { left, right };

template <PreSemiring R>
bool mat_eq(const R& ring, const Matrix<value_t<R>>& a, const Matrix<value_t<R>>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         vec_eq(ring, std::span(a.entries()), std::span(b.entries()));
}

template <Semiring R>
Matrix<value_t<R>> zero_matrix(const R& ring, std::size_t rows, std::size_t cols) {
  return Matrix<value_t<R>>(rows, cols, ring.zero());
}

template <Semiring R>
Matrix<value_t<R>> identity_matrix(const R& ring, std::size_t n) {
  Matrix<value_t<R>> id(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) id(i, i) = ring.one();
  return id;
}

template <PreSemiring R>
Matrix<value_t<R>> mat_add(const R& ring, const Matrix<value_t<R>>& a, const Matrix<value_t<R>>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("mat_add: shape mismatch");
  std::vector<value_t<R>> out;
  out.reserve(a.entries().size());
  for (std::size_t t = 0; t < a.entries().size(); ++t) out.push_back(ring.add(a.entries()[t], b.entries()[t]));
  return Matrix<value_t<R>>(a.rows(), a.cols(), std::move(out));
}

/// Sum-of-products with the descriptor's operations. Carriers without an
/// additive identity need a nonzero inner dimension.
template <PreSemiring R>
Matrix<value_t<R>> mat_mul(const R& ring, const Matrix<value_t<R>>& a, const Matrix<value_t<R>>& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  using V = value_t<R>;
  const std::size_t inner = a.cols();
  std::vector<V> out;
  out.reserve(a.rows() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (inner == 0) {
        if constexpr (HasZero<R>) {
          out.push_back(ring.zero());
          continue;
        } else {
          throw DimensionError("mat_mul: empty inner dimension over a carrier without zero");
        }
      }
      V acc = ring.mul(a(r, 0), b(0, c));
      for (std::size_t t = 1; t < inner; ++t) acc = ring.add(acc, ring.mul(a(r, t), b(t, c)));
      out.push_back(std::move(acc));
    }
  }
  return Matrix<value_t<R>>(a.rows(), b.cols(), std::move(out));
}

/// Row vector times matrix: (x.A)_j = sum_i x_i a_{i,j}.
template <PreSemiring R>
std::vector<value_t<R>> vec_mat_mul(const R& ring, std::span<const value_t<R>> x, const Matrix<value_t<R>>& a) {
  if (x.size() != a.rows()) throw DimensionError("vec_mat_mul: length mismatch");
  if (x.empty()) {
    if constexpr (HasZero<R>) {
      return std::vector<value_t<R>>(a.cols(), ring.zero());
    } else {
      throw DimensionError("vec_mat_mul: empty vector over a carrier without zero");
    }
  }
  std::vector<value_t<R>> out;
  out.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    value_t<R> acc = ring.mul(x[0], a(0, j));
    for (std::size_t i = 1; i < x.size(); ++i) acc = ring.add(acc, ring.mul(x[i], a(i, j)));
    out.push_back(std::move(acc));
  }
  return out;
}

template <PreSemiring R>
Matrix<value_t<R>> scalar_mul(const R& ring, const value_t<R>& c, const Matrix<value_t<R>>& a, Side side) {
  std::vector<value_t<R>> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(side == Side::left ? ring.mul(c, e) : ring.mul(e, c));
  return Matrix<value_t<R>>(a.rows(), a.cols(), std::move(out));
}

/// Incremental stream M^0, M^1, M^2, ... Each call to advance() costs one product.
template <Semiring R>
class PowerStream {
 public:
  PowerStream(R ring, Matrix<value_t<R>> base)
      : ring_(std::move(ring)), base_(std::move(base)) {
    if (!base_.is_square()) throw DimensionError("power stream: matrix is not square");
    current_ = identity_matrix(ring_, base_.rows());
  }

  const Matrix<value_t<R>>& current() const noexcept { return current_; }
  std::size_t exponent() const noexcept { return exponent_; }

  const Matrix<value_t<R>>& advance() {
    current_ = mat_mul(ring_, current_, base_);
    ++exponent_;
    return current_;
  }

 private:
  R ring_;
  Matrix<value_t<R>> base_;
  Matrix<value_t<R>> current_;
  std::size_t exponent_ = 0;
};

template <Semiring R>
Matrix<value_t<R>> mat_pow(const R& ring, const Matrix<value_t<R>>& m, std::size_t k) {
  PowerStream<R> powers(ring, m);
  for (std::size_t e = 0; e < k; ++e) powers.advance();
  return powers.current();
}

/// Coefficients by ascending degree; never empty.
template <class T>
class Polynomial {
 public:
  explicit Polynomial(std::vector<T> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw DimensionError("polynomial needs at least one coefficient");
  }

  std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  std::size_t size() const noexcept { return coefficients_.size(); }
  const T& operator[](std::size_t k) const { return coefficients_[k]; }
  const std::vector<T>& coefficients() const noexcept { return coefficients_; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<T> coefficients_;
};

/// Coefficientwise sum, padding the shorter operand with zero.
template <Semiring R>
Polynomial<value_t<R>> poly_add(const R& ring, const Polynomial<value_t<R>>& p, const Polynomial<value_t<R>>& q) {
  const std::size_t n = std::max(p.size(), q.size());
  std::vector<value_t<R>> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto a = k < p.size() ? p[k] : ring.zero();
    const auto b = k < q.size() ? q[k] : ring.zero();
    out.push_back(ring.add(a, b));
  }
  return Polynomial<value_t<R>>(std::move(out));
}

/// sum_k p_k M^k with the coefficients acting from the left.
template <Semiring R>
Matrix<value_t<R>> poly_eval(const R& ring, const Polynomial<value_t<R>>& p, const Matrix<value_t<R>>& m) {
  PowerStream<R> powers(ring, m);
  Matrix<value_t<R>> acc = zero_matrix(ring, m.rows(), m.cols());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) powers.advance();
    acc = mat_add(ring, acc, scalar_mul(ring, p[k], powers.current(), Side::left));
  }
  return acc;
}

}  // namespace idemlin
