#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <utility>
#include <vector>

#include "gsptri/error.hpp"
#include "gsptri/exact/fraction.hpp"
#include "gsptri/exact/laurent.hpp"
#include "gsptri/exact/rational.hpp"

namespace gsptri {

// Dense row-major matrix.  T{} is the additive zero and T(1) the unit; both
// Rational, LaurentPoly and Fraction qualify.  Indices are 0-based here; the
// 1-based conventions of the mathematics are converted at the call sites.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ArgumentError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  // Single-entry matrix e_{r,c}.
  static Matrix unit(std::size_t n, std::size_t r, std::size_t c) {
    Matrix m(n, n);
    m(r, c) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const T& at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ArgumentError("matrix index out of range");
    return (*this)(r, c);
  }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!gsptri::is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) { return a.map([](const T& x) { return T(-x); }); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ArgumentError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (gsptri::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (gsptri::is_zero(y)) continue;
          out(i, j) += x * y;
        }
      }
    }
    return out;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    return a.map([&](const T& x) { return T(s * x); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
      os << "]";
    }
    return os << "]";
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ArgumentError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using LMatrix = Matrix<LaurentPoly>;
using FMatrix = Matrix<Fraction>;

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
  return m.map([](const From& x) { return To(x); });
}

inline LMatrix to_laurent(const QMatrix& m) { return convert<LaurentPoly>(m); }

// Entrywise conversion back from the fraction field; throws on a genuine
// fraction.
inline LMatrix to_laurent(const FMatrix& m) {
  return m.map([](const Fraction& f) { return f.as_laurent(); });
}

inline QMatrix evaluate(const LMatrix& m, std::span<const Rational> point) {
  return m.map([&](const LaurentPoly& p) { return p.evaluate(point); });
}

}  // namespace gsptri
