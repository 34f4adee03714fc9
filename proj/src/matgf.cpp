#include "mdsforge/matgf.hpp"

#include <utility>

namespace mdsforge {

using gf::Element;
using gf::Field;
using gf::Word;

MatGF::MatGF(const Field& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatGF MatGF::from_rows(const Field& field, const std::vector<std::vector<Element>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatGF m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

MatGF MatGF::identity(const Field& field, std::size_t n) {
  MatGF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
  return m;
}

void MatGF::set(std::size_t i, std::size_t j, const Element& v) {
  if (v.field_ptr() != field_) throw Error(ErrorCode::FieldMismatch, "matrix entry from another field");
  data_[i * cols_ + j] = v.value();
}

std::vector<Element> MatGF::row(std::size_t i) const {
  std::vector<Element> r;
  r.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.emplace_back(*field_, raw(i, j));
  return r;
}

std::vector<Element> MatGF::col(std::size_t j) const {
  std::vector<Element> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.emplace_back(*field_, raw(i, j));
  return c;
}

bool MatGF::is_zero() const noexcept {
  for (Word w : data_) {
    if (w != 0) return false;
  }
  return true;
}

namespace kernel {

Word det_in_place(const Field& f, std::span<Word> a, std::size_t n) {
  Word d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      d = f.neg(d);
    }
    const Word p = a[c * n + c];
    d = f.mul(d, p);
    const Word pinv = f.inv(p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Word x = a[i * n + c];
      if (x == 0) continue;
      const Word factor = f.mul(x, pinv);
      for (std::size_t j = c + 1; j < n; ++j) {
        a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
      }
    }
  }
  return d;
}

}  // namespace kernel

Element det(const MatGF& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  std::vector<Word> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m.raw(i, j);
  }
  return {m.field(), kernel::det_in_place(m.field(), a, m.rows())};
}

MatGF rref(const MatGF& m, std::vector<std::size_t>* pivots) {
  const Field& f = m.field();
  MatGF r = m;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < r.rows() && r.raw(piv, c) == 0) ++piv;
    if (piv == r.rows()) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.raw(piv, j), r.raw(lead, j));
    }
    const Word pinv = f.inv(r.raw(lead, c));
    for (std::size_t j = c; j < r.cols(); ++j) r.raw(lead, j) = f.mul(r.raw(lead, j), pinv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      const Word x = r.raw(i, c);
      if (x == 0) continue;
      for (std::size_t j = c; j < r.cols(); ++j) r.raw(i, j) = f.sub(r.raw(i, j), f.mul(x, r.raw(lead, j)));
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return r;
}

std::size_t rank(const MatGF& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

MatGF null_space(const MatGF& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  const MatGF r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  MatGF basis(f, m.cols() - pivots.size(), m.cols());
  std::size_t b = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.raw(b, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.raw(b, pivots[i]) = f.neg(r.raw(i, free));
    ++b;
  }
  return basis;
}

MatGF mat_mul(const MatGF& a, const MatGF& b) {
  if (&a.field() != &b.field()) throw Error(ErrorCode::FieldMismatch, "matrix product across fields");
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  const Field& f = a.field();
  MatGF c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Word x = a.raw(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.raw(i, j) = f.add(c.raw(i, j), f.mul(x, b.raw(l, j)));
    }
  }
  return c;
}

MatGF transpose(const MatGF& m) {
  MatGF t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t.raw(j, i) = m.raw(i, j);
  }
  return t;
}

MatGF vstack(const MatGF& top, const MatGF& bottom) {
  if (&top.field() != &bottom.field()) throw Error(ErrorCode::FieldMismatch, "stacking across fields");
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::DimensionMismatch, "column counts differ");
  MatGF s(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) s.raw(i, j) = top.raw(i, j);
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    for (std::size_t j = 0; j < bottom.cols(); ++j) s.raw(top.rows() + i, j) = bottom.raw(i, j);
  }
  return s;
}

MatGF hstack(const MatGF& left, const MatGF& right) {
  if (&left.field() != &right.field()) throw Error(ErrorCode::FieldMismatch, "stacking across fields");
  if (left.rows() != right.rows()) throw Error(ErrorCode::DimensionMismatch, "row counts differ");
  MatGF s(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) s.raw(i, j) = left.raw(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) s.raw(i, left.cols() + j) = right.raw(i, j);
  }
  return s;
}

MatGF select_columns(const MatGF& m, std::span<const std::size_t> cols) {
  MatGF s(m.field(), m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= m.cols()) throw Error(ErrorCode::DimensionMismatch, "column index out of range");
      s.raw(i, j) = m.raw(i, cols[j]);
    }
  }
  return s;
}

bool same_row_space(const MatGF& a, const MatGF& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && rank(vstack(a, b)) == ra;
}

}  // namespace mdsforge
