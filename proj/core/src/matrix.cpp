#include "xiform/matrix.hpp"

#include <ostream>

#include "xiform/errors.hpp"

namespace xiform {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.field() != b.field()) throw FieldMismatch(std::string(op) + ": matrices over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(op) + ": shape mismatch");
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<long long>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_ints(f, v);
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long long>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Matrix m(nr, nc, f);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m.entries_[i * nc + j] = Scalar::from_int(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Matrix m(nr, nc, f);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(std::span<const Scalar> entries, Field f) {
  Matrix m(entries.size(), 1, f);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries, Field f) {
  Matrix m(entries.size(), entries.size(), f);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
  if (value.field() != field_) throw FieldMismatch("entry over " + value.field().name() + " in matrix over " + field_.name());
  entries_[i * cols_ + j] = std::move(value);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = entries_[i * cols_ + j];
  return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionMismatch("block out of range");
  Matrix b(nrows, ncols, field_);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b.entries_[i * ncols + j] = entries_[(row0 + i) * cols_ + col0 + j];
  return b;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
  if (b.field_ != field_) throw FieldMismatch("set_block: matrices over different fields");
  if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_) throw DimensionMismatch("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) entries_[(row0 + i) * cols_ + col0 + j] = b.entries_[i * b.cols_ + j];
}

Matrix Matrix::column_at(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix out(rows_, idx.size(), field_);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= cols_) throw DimensionMismatch("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out.entries_[i * idx.size() + k] = entries_[i * cols_ + idx[k]];
  }
  return out;
}

Matrix Matrix::hconcat(const Matrix& other) const {
  if (other.field_ != field_) throw FieldMismatch("hconcat: matrices over different fields");
  if (other.rows_ != rows_) throw DimensionMismatch("hconcat: row counts differ");
  Matrix out(rows_, cols_ + other.cols_, field_);
  out.set_block(0, 0, *this);
  out.set_block(0, cols_, other);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!(entries_[i * cols_ + j] == entries_[j * cols_ + i])) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.field() != field_) throw FieldMismatch("scale: scalar over another field");
  for (auto& e : entries_) e *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch("multiply: matrices over different fields");
  if (a.cols_ != b.rows_) throw DimensionMismatch("multiply: inner dimensions differ");
  Matrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.entries_[i * a.cols_ + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.entries_[k * b.cols_ + j];
        if (!bkj.is_zero()) c.entries_[i * b.cols_ + j] += aik * bkj;
      }
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix congruent_image(const Matrix& s, const Matrix& m) { return s.transpose() * m * s; }

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i != 0) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace xiform
