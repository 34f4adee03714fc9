#include "mdsforge/symfun.hpp"

#include <algorithm>
#include <unordered_set>

namespace mdsforge::symfun {

using gf::Element;
using gf::Field;
using gf::Word;

namespace {

const Field& common_field(std::span<const Element> xs, const Field* fallback = nullptr) {
  if (xs.empty()) {
    if (!fallback) throw Error(ErrorCode::FieldMismatch, "empty point list has no field");
    return *fallback;
  }
  const Field& f = xs.front().field();
  for (const auto& x : xs) {
    if (x.field_ptr() != &f) throw Error(ErrorCode::FieldMismatch, "points from different fields");
  }
  return f;
}

std::vector<Word> words_of(std::span<const Element> xs) {
  std::vector<Word> w;
  w.reserve(xs.size());
  for (const auto& x : xs) w.push_back(x.value());
  return w;
}

std::vector<Word> weights_of(const Field& f, std::span<const Word> pts) {
  std::vector<Word> u(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Word prod = 1;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i != j) prod = f.mul(prod, f.sub(pts[i], pts[j]));
    }
    if (prod == 0) throw Error(ErrorCode::DuplicatePoints, "evaluation points are not distinct");
    u[i] = f.inv(prod);
  }
  return u;
}

}  // namespace

EvalSet::EvalSet(const Field& field, std::vector<Element> points)
    : field_(&field), points_(std::move(points)) {
  for (const auto& x : points_) {
    if (x.field_ptr() != field_) throw Error(ErrorCode::FieldMismatch, "evaluation point from another field");
  }
  words_ = words_of(points_);
  std::unordered_set<Word> seen;
  for (Word w : words_) {
    if (!seen.insert(w).second) {
      throw Error(ErrorCode::DuplicatePoints, "repeated evaluation point " + field.format(w, field.default_notation()));
    }
  }
  weight_words_ = weights_of(field, words_);
  weights_.reserve(weight_words_.size());
  for (Word w : weight_words_) weights_.emplace_back(field, w);
}

EvalSet EvalSet::from_words(const Field& field, std::vector<Word> points) {
  std::vector<Element> e;
  e.reserve(points.size());
  for (Word w : points) e.push_back(field.element(w));
  return EvalSet(field, std::move(e));
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) throw Error(ErrorCode::SpecViolation, "partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

unsigned Partition::weight() const noexcept {
  unsigned s = 0;
  for (unsigned p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<unsigned> c(parts_.empty() ? 0 : parts_.front(), 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (unsigned p : parts_) {
      if (p > j) ++c[j];
    }
  }
  return Partition(std::move(c));
}

namespace kernel {

void elementary(const Field& f, std::span<const Word> xs, std::span<Word> out) noexcept {
  if (out.empty()) return;
  std::fill(out.begin(), out.end(), 0);
  out[0] = 1;
  const std::size_t tmax = out.size() - 1;
  std::size_t filled = 0;
  for (Word x : xs) {
    filled = std::min(filled + 1, tmax);
    for (std::size_t d = filled; d >= 1; --d) out[d] = f.add(out[d], f.mul(x, out[d - 1]));
  }
}

void complete(const Field& f, std::span<const Word> xs, std::span<Word> out) noexcept {
  if (out.empty()) return;
  std::fill(out.begin(), out.end(), 0);
  out[0] = 1;
  const std::size_t tmax = out.size() - 1;
  for (Word x : xs) {
    if (x == 0) continue;
    for (std::size_t d = 1; d <= tmax; ++d) out[d] = f.add(out[d], f.mul(x, out[d - 1]));
  }
}

}  // namespace kernel

Element sigma(std::size_t t, std::span<const Element> xs) {
  if (xs.empty()) throw Error(ErrorCode::FieldMismatch, "sigma of an empty list needs a field");
  const Field& f = common_field(xs);
  if (t > xs.size()) return f.zero();
  std::vector<Word> out(t + 1);
  kernel::elementary(f, words_of(xs), out);
  return {f, out[t]};
}

Element complete_S(std::int64_t t, std::span<const Element> xs) {
  if (xs.empty()) throw Error(ErrorCode::FieldMismatch, "S_t of an empty list needs a field");
  const Field& f = common_field(xs);
  if (t < 0) return f.zero();
  std::vector<Word> out(std::size_t(t) + 1);
  kernel::complete(f, words_of(xs), out);
  return {f, out[std::size_t(t)]};
}

Element newton_residual(std::size_t N, std::span<const Element> xs) {
  if (N == 0) throw Error(ErrorCode::SpecViolation, "newton_residual needs N >= 1");
  const Field& f = common_field(xs);
  const auto w = words_of(xs);
  std::vector<Word> e(N + 1), s(N + 1);
  kernel::elementary(f, w, e);
  kernel::complete(f, w, s);
  Word acc = 0;
  for (std::size_t t = 0; t <= N; ++t) {
    const Word term = f.mul(e[t], s[N - t]);
    acc = t % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
  }
  return {f, acc};
}

std::vector<Element> dual_weights(const EvalSet& lambda) { return lambda.weights(); }

std::vector<Element> dual_weights(const Field& field, std::span<const Element> points) {
  std::vector<Element> out;
  for (Word w : weights_of(field, words_of(points))) out.emplace_back(field, w);
  return out;
}

Element weighted_power_sum(const EvalSet& lambda, std::size_t h) {
  const Field& f = lambda.field();
  Word acc = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    acc = f.add(acc, f.mul(lambda.weight_words()[i], f.pow(lambda.words()[i], std::int64_t(h))));
  }
  return {f, acc};
}

Element weighted_power_sum_closed(const EvalSet& lambda, std::size_t h) {
  const std::size_t n = lambda.size();
  if (n == 0 || h + 2 <= n) return lambda.field().zero();
  return complete_S(std::int64_t(h - n + 1), lambda.points());
}

Element vandermonde_det(std::span<const Element> xs) {
  const Field& f = common_field(xs);
  Word d = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) d = f.mul(d, f.sub(xs[j].value(), xs[i].value()));
  }
  return {f, d};
}

MatGF gvdm_matrix(const EvalSet& lambda, std::size_t h) {
  const Field& f = lambda.field();
  const std::size_t n = lambda.size();
  MatGF g(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i + 1 < n; ++i) g.raw(i, j) = f.pow(lambda.words()[j], std::int64_t(i));
    g.raw(n - 1, j) = f.pow(lambda.words()[j], std::int64_t(h));
  }
  return g;
}

Element gvdm_det(const EvalSet& lambda, std::size_t h) {
  const std::size_t n = lambda.size();
  if (n == 0 || h + 1 < n) throw Error(ErrorCode::SpecViolation, "gvdm_det needs h >= n - 1");
  return complete_S(std::int64_t(h - (n - 1)), lambda.points()) * vandermonde_det(lambda.points());
}

Element gvdm_det_direct(const EvalSet& lambda, std::size_t h) { return det(gvdm_matrix(lambda, h)); }

Element schur_poly(const Partition& lambda, std::span<const Element> xs) {
  const Field& f = common_field(xs);
  const std::size_t l = lambda.length();
  if (l > xs.size()) throw Error(ErrorCode::SpecViolation, "partition longer than the variable count");
  if (l == 0) return f.one();
  const std::size_t tmax = lambda.part(0) + l;
  std::vector<Word> s(tmax + 1);
  kernel::complete(f, words_of(xs), s);
  MatGF m(f, l, l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const long idx = long(lambda.part(i)) - long(i) + long(j);
      m.raw(i, j) = idx < 0 ? 0 : s[std::size_t(idx)];
    }
  }
  return det(m);
}

Element schur_poly_elementary(const Partition& lambda, std::span<const Element> xs) {
  const Field& f = common_field(xs);
  if (lambda.length() > xs.size()) throw Error(ErrorCode::SpecViolation, "partition longer than the variable count");
  const Partition conj = lambda.conjugate();
  const std::size_t l = conj.length();
  if (l == 0) return f.one();
  const std::size_t tmax = conj.part(0) + l;
  std::vector<Word> e(tmax + 1);
  kernel::elementary(f, words_of(xs), e);
  MatGF m(f, l, l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const long idx = long(conj.part(i)) - long(i) + long(j);
      m.raw(i, j) = idx < 0 ? 0 : e[std::size_t(idx)];
    }
  }
  return det(m);
}

Element schur_poly_bialternant(const Partition& lambda, std::span<const Element> xs) {
  const Field& f = common_field(xs);
  const std::size_t n = xs.size();
  if (lambda.length() > n) throw Error(ErrorCode::SpecViolation, "partition longer than the variable count");
  MatGF num(f, n, n), den(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ed = std::int64_t(n - 1 - i);
    const auto en = std::int64_t(lambda.part(i)) + ed;
    for (std::size_t j = 0; j < n; ++j) {
      num.raw(i, j) = f.pow(xs[j].value(), en);
      den.raw(i, j) = f.pow(xs[j].value(), ed);
    }
  }
  const Element d = det(den);
  if (d.is_zero()) throw Error(ErrorCode::DuplicatePoints, "bialternant needs distinct points");
  return det(num) / d;
}

}  // namespace mdsforge::symfun
