#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "exsym/error.hpp"
#include "exsym/rational.hpp"

namespace exsym {

/// Coordinate vector over the backend scalar.
template <class T>
using Vec = std::vector<T>;

/// Dense row-major matrix. Dimensions in this library stay small (a few dozen),
/// so no expression templates or sparse storage.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_columns(const std::vector<Vec<T>>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<T> column(std::size_t c) const {
    Vec<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const Vec<T>& v) {
    require_dim(v.size(), rows_, "Matrix::set_column");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Vec<T> row(std::size_t r) const { return Vec<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o, "Matrix::operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o, "Matrix::operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "Matrix product: inner dimensions differ");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (Field<T>::is_exact_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (Field<T>::is_exact_zero(b(k, j))) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    require_dim(v.size(), a.cols_, "Matrix-vector product");
    Vec<T> out(a.rows_, T(0));
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (Field<T>::is_exact_zero(v[k])) continue;
      for (std::size_t i = 0; i < a.rows_; ++i) {
        if (Field<T>::is_exact_zero(a(i, k))) continue;
        out[i] += a(i, k) * v[k];
      }
    }
    return out;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  const std::vector<T>& data() const noexcept { return data_; }

 private:
  void check_same(const Matrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, what);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Vector helpers. Named functions rather than operators: ADL would not find
// operators on std::vector<mpq_class> declared in this namespace.

template <class T>
Vec<T> zeros(std::size_t n) {
  return Vec<T>(n, T(0));
}

template <class T>
Vec<T> unit(std::size_t n, std::size_t i) {
  Vec<T> v(n, T(0));
  v[i] = T(1);
  return v;
}

template <class T>
Vec<T> add(const Vec<T>& a, const Vec<T>& b) {
  require_dim(b.size(), a.size(), "add");
  Vec<T> c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

template <class T>
Vec<T> sub(const Vec<T>& a, const Vec<T>& b) {
  require_dim(b.size(), a.size(), "sub");
  Vec<T> c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

template <class T>
Vec<T> scaled(const Vec<T>& a, const T& s) {
  Vec<T> c(a);
  for (auto& x : c) x *= s;
  return c;
}

/// y += s * x
template <class T>
void axpy(const T& s, const Vec<T>& x, Vec<T>& y) {
  require_dim(x.size(), y.size(), "axpy");
  if (Field<T>::is_exact_zero(s)) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!Field<T>::is_exact_zero(x[i])) y[i] += s * x[i];
  }
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  require_dim(b.size(), a.size(), "dot");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// a^T G b
template <class T>
T bilinear(const Vec<T>& a, const Matrix<T>& g, const Vec<T>& b) {
  return dot(a, g * b);
}

template <class T>
bool is_zero(const Vec<T>& v, double tol) {
  return std::all_of(v.begin(), v.end(), [tol](const T& x) { return Field<T>::is_zero(x, tol); });
}

template <class T>
bool is_zero(const Matrix<T>& m, double tol) {
  return is_zero(m.data(), tol);
}

template <class T>
double max_abs(const Vec<T>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(to_double(x)));
  return m;
}

template <class T>
double max_abs(const Matrix<T>& m) {
  return max_abs(m.data());
}

template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hconcat: row counts differ");
  Matrix<T> c(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(r, j) = a(r, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(r, a.cols() + j) = b(r, j);
  }
  return c;
}

template <class T>
Matrix<T> vconcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vconcat: column counts differ");
  Matrix<T> c(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) c(r, j) = a(r, j);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) c(a.rows() + r, j) = b(r, j);
  return c;
}

template <class T>
bool is_symmetric(const Matrix<T>& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      T d = m(i, j) - m(j, i);
      if (!Field<T>::is_zero(d, tol)) return false;
    }
  return true;
}

/// Converts an exact matrix to the floating-point backend.
inline Matrix<double> to_float(const Matrix<Rational>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

inline Vec<double> to_float(const Vec<Rational>& v) {
  Vec<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

}  // namespace exsym
