#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "xiform/scalar.hpp"

namespace xiform {

/// Dense row-major matrix of exact scalars, all over one field.
/// Zero-sized dimensions are legal; the 0x0 matrix is the empty direct summand.
class Matrix {
 public:
  /// 0x0 over Q.
  Matrix() = default;
  /// rows x cols zero matrix.
  Matrix(std::size_t rows, std::size_t cols, Field f);

  static Matrix identity(std::size_t n, Field f);
  static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_ints(Field f, const std::vector<std::vector<long long>>& rows);
  static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);
  /// A column vector.
  static Matrix column(std::span<const Scalar> entries, Field f);
  static Matrix diagonal(std::span<const Scalar> entries, Field f);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  [[nodiscard]] std::span<const Scalar> entries() const noexcept { return entries_; }

  [[nodiscard]] const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  /// Throws FieldMismatch when value is over another field.
  void set(std::size_t i, std::size_t j, Scalar value);

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const Matrix& b);
  [[nodiscard]] Matrix column_at(std::size_t j) const;
  /// Columns listed in idx, in that order.
  [[nodiscard]] Matrix select_columns(std::span<const std::size_t> idx) const;
  /// [this | other].
  [[nodiscard]] Matrix hconcat(const Matrix& other) const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_symmetric() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::rationals();
  std::vector<Scalar> entries_;
};

/// S^T * M * S.
[[nodiscard]] Matrix congruent_image(const Matrix& s, const Matrix& m);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace xiform
