#pragma once

// Finite fields GF(p^m) with elements packed base-p into one 64-bit word.
//
// A Field is immutable and interned: requesting the same (p, m, modulus)
// twice yields the same object, so element compatibility is a pointer test.
// Interned fields live until program exit.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdsforge/error.hpp"

namespace mdsforge::gf {

using Word = std::uint64_t;

class Element;

enum class Notation { Integer, Vector, Power };

class Field {
 public:
  /// Returns the interned field GF(p^m). Without an explicit modulus, a
  /// built-in table covers 2^4, 2^5 and 5^2; other shapes use the smallest
  /// irreducible polynomial ordered by its base-p encoding.
  static const Field& make(std::uint64_t p, unsigned m = 1,
                           std::optional<std::vector<Word>> modulus = std::nullopt);

  /// Accepts "p", "p^m" or "p^m:c0,c1,...,cm" (ascending, cm = 1).
  static const Field& parse(std::string_view spec);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return m_ == 1; }
  bool is_even() const noexcept { return p_ == 2; }

  /// Monic modulus, ascending coefficients, m + 1 entries.
  const std::vector<Word>& modulus() const noexcept { return modulus_; }

  /// Canonical spec string; parse(spec()) returns this field.
  std::string spec() const;

  /// True when power notation "w^k" is available: for m > 1 the residue of
  /// x must be primitive; prime fields use their smallest primitive root.
  bool has_generator() const noexcept { return generator_.has_value(); }
  Word generator() const;

  Word add(Word a, Word b) const noexcept {
    switch (kind_) {
      case Kind::Prime: return a >= p_ - b ? a - (p_ - b) : a + b;
      case Kind::Binary: return a ^ b;
      case Kind::General: break;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_slow(a, b);
  }

  Word neg(Word a) const noexcept {
    switch (kind_) {
      case Kind::Prime: return a == 0 ? 0 : p_ - a;
      case Kind::Binary: return a;
      case Kind::General: break;
    }
    return neg_slow(a);
  }

  Word sub(Word a, Word b) const noexcept { return add(a, neg(b)); }

  Word mul(Word a, Word b) const noexcept {
    if (!exp_.empty()) {
      if (a == 0 || b == 0) return 0;
      return exp_[std::size_t(log_[a]) + log_[b]];
    }
    return mul_slow(a, b);
  }

  Word inv(Word a) const;
  Word div(Word a, Word b) const { return mul(a, inv(b)); }
  /// Square-and-multiply; negative exponents need a nonzero base, and 0^0 = 1.
  Word pow(Word a, std::int64_t e) const;

  bool is_square(Word a) const noexcept;
  /// Canonical root: the smaller encoding of {r, -r}.
  Word sqrt(Word a) const;

  /// Image of the integer v under Z -> GF(p).
  Word from_int(std::int64_t v) const noexcept;

  std::vector<Word> digits(Word a) const;
  Word from_digits(std::span<const Word> digits) const;

  Element element(Word encoding) const;
  Element zero() const;
  Element one() const;
  Element w() const;
  Element integer(std::int64_t v) const;

  /// Decimal encoding, "w^k", "[c0,...,c_{m-1}]", or a leading '-' on any of them.
  Element parse_element(std::string_view text) const;
  std::string format(Word a, Notation notation) const;
  Notation default_notation() const noexcept;

  /// Discrete log to base w; only for fields carrying log tables.
  std::uint64_t log_w(Word a) const;

  /// All q elements in encoding order.
  std::vector<Element> elements() const;

 private:
  enum class Kind { Prime, Binary, General };

  Field(std::uint64_t p, unsigned m, std::vector<Word> modulus);

  Word add_slow(Word a, Word b) const noexcept;
  Word neg_slow(Word a) const noexcept;
  Word mul_slow(Word a, Word b) const noexcept;
  Word pow_slow(Word a, std::uint64_t e) const noexcept;
  bool is_primitive(Word a) const;
  void build_tables(Word g);

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  Kind kind_;
  std::vector<Word> modulus_;
  std::vector<Word> place_;  // p^i
  std::vector<std::uint64_t> order_factors_;  // distinct primes of q-1
  std::optional<Word> generator_;
  Word nonresidue_ = 0;

  std::vector<std::uint32_t> exp_;  // 2(q-1) entries
  std::vector<std::uint32_t> log_;
  Word table_generator_ = 0;
  std::uint64_t log_w_scale_ = 1;  // log_g(w)^{-1} mod q-1
  std::vector<std::uint32_t> add_table_;

  friend struct FieldRegistry;
};

/// A value bound to one Field. Mixing fields throws FieldMismatch.
class Element {
 public:
  Element() = default;
  Element(const Field& field, Word value) noexcept : field_(&field), value_(value) {}

  const Field& field() const;
  const Field* field_ptr() const noexcept { return field_; }
  Word value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator/=(const Element& o);

  Element pow(std::int64_t e) const;
  Element inv() const;
  Element square() const { return *this * *this; }
  bool is_square() const;
  Element sqrt() const;

  std::string str() const;
  std::string str(Notation notation) const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }
  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend bool operator<(const Element& a, const Element& b) noexcept { return a.value_ < b.value_; }

 private:
  void require_same(const Element& o) const;

  const Field* field_ = nullptr;
  Word value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

/// Polynomial in ascending coefficient order; the zero polynomial is empty.
using Poly = std::vector<Element>;

Element poly_eval(std::span<const Element> coeffs, const Element& x);
/// Parses "x^3+21x+18", "w^3*x^2 + x - 1", or "coeffs:c0,c1,...".
Poly parse_poly(const Field& field, std::string_view text);
std::string format_poly(std::span<const Element> coeffs, Notation notation);
/// Degree of the polynomial after stripping zero top terms; -1 for zero.
long poly_degree(std::span<const Element> coeffs);

/// Splits s on `sep` outside square brackets and trims each piece.
std::vector<std::string> split_top_level(std::string_view s, char sep);

bool is_prime(std::uint64_t n);

}  // namespace mdsforge::gf
