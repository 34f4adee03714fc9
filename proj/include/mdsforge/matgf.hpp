#pragma once

// Dense row-major matrices over a Field, with exact elimination.

#include <cstddef>
#include <span>
#include <vector>

#include "mdsforge/gf.hpp"

namespace mdsforge {

class MatGF {
 public:
  MatGF(const gf::Field& field, std::size_t rows, std::size_t cols);
  /// Every row must have the same length and every entry must live in `field`.
  static MatGF from_rows(const gf::Field& field, const std::vector<std::vector<gf::Element>>& rows);
  static MatGF identity(const gf::Field& field, std::size_t n);

  const gf::Field& field() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  gf::Element operator()(std::size_t i, std::size_t j) const { return {*field_, data_[i * cols_ + j]}; }
  void set(std::size_t i, std::size_t j, const gf::Element& v);

  gf::Word raw(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  gf::Word& raw(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  std::span<const gf::Word> row_words(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

  std::vector<gf::Element> row(std::size_t i) const;
  std::vector<gf::Element> col(std::size_t j) const;

  bool is_zero() const noexcept;

  friend bool operator==(const MatGF& a, const MatGF& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const gf::Field* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<gf::Word> data_;
};

gf::Element det(const MatGF& m);
std::size_t rank(const MatGF& m);
/// Reduced row echelon form; pivot columns are appended to `pivots` when given.
MatGF rref(const MatGF& m, std::vector<std::size_t>* pivots = nullptr);
/// Rows form a basis of {x : m x^T = 0}.
MatGF null_space(const MatGF& m);
MatGF mat_mul(const MatGF& a, const MatGF& b);
MatGF transpose(const MatGF& m);
/// Rows of `top` followed by rows of `bottom`.
MatGF vstack(const MatGF& top, const MatGF& bottom);
/// Columns of `left` followed by columns of `right`.
MatGF hstack(const MatGF& left, const MatGF& right);
MatGF select_columns(const MatGF& m, std::span<const std::size_t> cols);
bool same_row_space(const MatGF& a, const MatGF& b);

inline MatGF operator*(const MatGF& a, const MatGF& b) { return mat_mul(a, b); }

namespace kernel {
/// Determinant of the n x n row-major block in `a`, destroyed in place.
gf::Word det_in_place(const gf::Field& f, std::span<gf::Word> a, std::size_t n);
}  // namespace kernel

}  // namespace mdsforge
