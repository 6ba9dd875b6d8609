#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <vector>

#include "partcong/errors.hpp"
#include "partcong/ring.hpp"

namespace partcong {

// Dense row-major matrix over a coefficient ring.
template <class Ring>
class Matrix {
 public:
  using Element = typename Ring::Element;

  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

  static Matrix identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  static Matrix scalar(const Ring& ring, std::size_t n, const Element& c) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Element>& data() const noexcept { return data_; }

  Matrix operator+(const Matrix& o) const {
    check_shape(o);
    Matrix out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = ring_.add(data_[k], o.data_[k]);
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    check_shape(o);
    Matrix out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = ring_.sub(data_[k], o.data_[k]);
    return out;
  }

  Matrix scale(const Element& c) const {
    Matrix out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = ring_.mul(data_[k], c);
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(ring_ == o.ring_)) throw InvalidArgument("matrix shapes or rings do not match");
    Matrix out(ring_, rows_, o.cols_);
    if constexpr (std::is_same_v<Ring, ModRing>) {
      multiply_mod(o, out);
    } else {
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
          const Element& a = (*this)(i, k);
          if (ring_.is_zero(a)) continue;
          for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = ring_.add(out(i, j), ring_.mul(a, o(k, j)));
        }
      }
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix pow(u64 e) const {
    Matrix result = identity(ring_, rows_);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  bool is_zero() const {
    for (const Element& x : data_)
      if (!ring_.is_zero(x)) return false;
    return true;
  }

  // c when the matrix equals c I, otherwise nothing.
  std::optional<Element> scalar_value() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    const Element c = (*this)(0, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j ? (*this)(i, j) != c : !ring_.is_zero((*this)(i, j))) return std::nullopt;
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ring_ == b.ring_ && a.data_ == b.data_;
  }

 private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(ring_ == o.ring_)) {
      throw InvalidArgument("matrix shapes or rings do not match");
    }
  }

  void multiply_mod(const Matrix& o, Matrix& out) const {
    if (ring_.modulus().value() <= (u64{1} << 32)) {
      multiply_lazy<u64>(o, out);
    } else {
      multiply_lazy<u128>(o, out);
    }
  }

  // Row-by-row accumulation, reduced only when the next term could overflow Acc.
  template <class Acc>
  void multiply_lazy(const Matrix& o, Matrix& out) const {
    const u64 m = ring_.modulus().value();
    const Acc sq = static_cast<Acc>(m - 1) * static_cast<Acc>(m - 1);
    const Acc budget = sq == 0 ? ~Acc{0} : (~Acc{0} - m) / sq;
    std::vector<Acc> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      Acc used = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        const Acc a = (*this)(i, k);
        if (a == 0) continue;
        if (used == budget) {
          for (Acc& x : acc) x %= m;
          used = 0;
        }
        const u64* row = o.data_.data() + k * o.cols_;
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * row[j];
        ++used;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = static_cast<u64>(acc[j] % m);
    }
  }

  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

Matrix<ModRing> reduce(const Matrix<IntegerRing>& a, const Modulus& modulus);

}  // namespace partcong
