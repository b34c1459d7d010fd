#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "jacobi/errors.hpp"
#include "jacobi/scalar.hpp"

namespace jacobi {

/// Fixed-size square matrix, row-major.
template <class T, std::size_t N>
class Mat {
 public:
  using Rows = std::array<std::array<T, N>, N>;

  Mat() {
    for (auto& row : rows_) row.fill(T{});
  }
  Mat(std::initializer_list<std::initializer_list<T>> init) : Mat() {
    std::size_t i = 0;
    for (const auto& row : init) {
      std::size_t j = 0;
      for (const auto& v : row) rows_[i][j++] = v;
      ++i;
    }
  }

  static Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m.rows_[i][i] = T(1);
    return m;
  }

  static constexpr std::size_t size() { return N; }

  T& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  Mat transpose() const {
    Mat t;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) t.rows_[i][j] = rows_[j][i];
    return t;
  }

  bool is_zero() const {
    for (const auto& row : rows_)
      for (const auto& v : row)
        if (!jacobi::is_zero(v)) return false;
    return true;
  }

  Mat& operator+=(const Mat& o) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) rows_[i][j] += o.rows_[i][j];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) rows_[i][j] -= o.rows_[i][j];
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(const Mat& a) { return T(-1) * a; }
  friend Mat operator*(const T& s, Mat a) {
    for (auto& row : a.rows_)
      for (auto& v : row) v = s * v;
    return a;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        if (jacobi::is_zero(a.rows_[i][k])) continue;
        for (std::size_t j = 0; j < N; ++j) out.rows_[i][j] += a.rows_[i][k] * b.rows_[k][j];
      }
    return out;
  }
  friend bool operator==(const Mat& a, const Mat& b) { return a.rows_ == b.rows_; }

 private:
  Rows rows_;
};

template <class T>
using Mat2 = Mat<T, 2>;
template <class T>
using Mat4 = Mat<T, 4>;

template <class T, std::size_t N>
Mat<T, N> commutator(const Mat<T, N>& a, const Mat<T, N>& b) {
  return a * b - b * a;
}

template <class T, std::size_t N>
Mat<T, N> power(const Mat<T, N>& m, unsigned k) {
  Mat<T, N> out = Mat<T, N>::identity();
  Mat<T, N> base = m;
  while (k > 0) {
    if (k & 1u) out = out * base;
    base = base * base;
    k >>= 1u;
  }
  return out;
}

/// Gauss-Jordan inverse.  Exact scalars pivot on the first nonzero entry,
/// floating scalars on the largest magnitude.
template <class T, std::size_t N>
Mat<T, N> inverse(const Mat<T, N>& m) {
  Mat<T, N> a = m;
  Mat<T, N> inv = Mat<T, N>::identity();
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = N;
    for (std::size_t row = col; row < N; ++row) {
      if (is_zero(a(row, col))) continue;
      if constexpr (is_exact_v<T>) {
        pivot = row;
        break;
      } else {
        if (pivot == N || magnitude(a(row, col)) > magnitude(a(pivot, col))) pivot = row;
      }
    }
    if (pivot == N) throw Singular();
    if (pivot != col)
      for (std::size_t j = 0; j < N; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const T scale = T(1) / a(col, col);
    for (std::size_t j = 0; j < N; ++j) {
      a(col, j) = a(col, j) * scale;
      inv(col, j) = inv(col, j) * scale;
    }
    for (std::size_t row = 0; row < N; ++row) {
      if (row == col || is_zero(a(row, col))) continue;
      const T factor = a(row, col);
      for (std::size_t j = 0; j < N; ++j) {
        a(row, j) -= factor * a(col, j);
        inv(row, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

/// Rank of a dense exact matrix by Gaussian elimination over the fraction field.
template <class T>
std::size_t rank(std::vector<std::vector<T>> rows) {
  static_assert(is_exact_v<T>, "rank is only decided exactly");
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (is_zero(rows[i][col])) continue;
      const T factor = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

template <class T, std::size_t N>
std::size_t rank(const Mat<T, N>& m) {
  std::vector<std::vector<T>> rows(N, std::vector<T>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) rows[i][j] = m(i, j);
  return rank(std::move(rows));
}

}  // namespace jacobi
