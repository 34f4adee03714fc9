#include <gtest/gtest.h>

#include <random>

#include "mdsforge/gf.hpp"
#include "oracle.hpp"

using namespace mdsforge;
using gf::Element;
using gf::Field;
using gf::Notation;
using gf::Word;

namespace {

// Polynomial product modulo the field modulus, on base-p digit vectors.
Word naive_mul(const Field& f, Word a, Word b) {
  const auto p = f.characteristic();
  const unsigned m = f.degree();
  if (m == 1) return (a % p) * (b % p) % p;
  std::vector<std::uint64_t> x = f.digits(a), y = f.digits(b), prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  const auto& mod = f.modulus();  // monic, ascending
  for (unsigned d = 2 * m - 1; d >= m; --d) {
    const auto c = prod[d];
    if (c == 0) continue;
    for (unsigned i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * mod[i]) % p;
  }
  prod.resize(m);
  return f.from_digits(prod);
}

}  // namespace

TEST(Field, BuildsFieldsFromExplicitModuli) {
  const Field& f32 = Field::make(2, 5, std::vector<Word>{1, 0, 1, 0, 0, 1});
  EXPECT_EQ(f32.order(), 32u);
  EXPECT_EQ(f32.spec(), "2^5:1,0,1,0,0,1");
  const Field& f25 = Field::make(5, 2, std::vector<Word>{2, 4, 1});
  EXPECT_EQ(f25.order(), 25u);
  const Field& f17 = Field::make(17);
  EXPECT_EQ(f17.elements().size(), 17u);
  EXPECT_EQ(f17.elements().back().value(), 16u);
}

TEST(Field, BuiltInDefaultModuli) {
  EXPECT_EQ(Field::make(2, 4).modulus(), (std::vector<Word>{1, 1, 0, 0, 1}));
  EXPECT_EQ(Field::make(2, 5).modulus(), (std::vector<Word>{1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(Field::make(5, 2).modulus(), (std::vector<Word>{2, 4, 1}));
}

TEST(Field, FieldsAreInterned) {
  EXPECT_EQ(&Field::parse("2^4"), &Field::make(2, 4));
  EXPECT_EQ(&Field::parse("17"), &Field::make(17));
  EXPECT_EQ(&Field::parse("5^2:2,4,1"), &Field::make(5, 2));
}

TEST(Field, RejectsBadInput) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::UnknownId;
  };
  EXPECT_EQ(code_of([] { Field::make(4); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { Field::make(2, 2, std::vector<Word>{1, 0, 1}); }), ErrorCode::Reducible);
  EXPECT_EQ(code_of([] { Field::make(2, 64); }), ErrorCode::FieldTooLarge);
  EXPECT_EQ(code_of([] { Field::parse("banana"); }), ErrorCode::ParseError);
}

TEST(Field, PowerNotationNeedsPrimitiveX) {
  // x^4+x^3+x^2+x+1 is irreducible but x has order 5.
  const Field& f = Field::parse("2^4:1,1,1,1,1");
  EXPECT_THROW(f.parse_element("w^3"), Error);
  EXPECT_EQ(f.parse_element("[0,1,0,0]").value(), 2u);
}

TEST(Arithmetic, PrimeFieldSquare) {
  const Field& f = Field::make(17);
  EXPECT_EQ((f.integer(13) * f.integer(13)).value(), 169u % 17);
  EXPECT_EQ((f.integer(13) * f.integer(13)).value(), 16u);
}

TEST(Arithmetic, Gf32ReducesByModulus) {
  const Field& f = Field::parse("2^5:1,0,1,0,0,1");
  const Element w = f.w();
  EXPECT_EQ(w.pow(5), w.pow(2) + f.one());
}

TEST(Arithmetic, InverseAndNegativePowers) {
  for (const Field* f : oracle::battery()) {
    for (const auto& a : f->elements()) {
      if (a.is_zero()) continue;
      EXPECT_EQ(a * a.inv(), f->one());
      EXPECT_EQ(a.pow(-3) * a.pow(3), f->one());
    }
  }
}

TEST(Arithmetic, DivisionByZeroAndMismatch) {
  const Field& f = Field::make(7);
  const Field& g = Field::make(11);
  EXPECT_THROW(f.zero().inv(), Error);
  EXPECT_THROW(f.one() / f.zero(), Error);
  EXPECT_THROW(f.one() + g.one(), Error);
}

TEST(Arithmetic, MultiplicationMatchesNaivePolynomialProduct) {
  for (const Field* f : {&Field::make(2, 5), &Field::make(5, 2), &Field::make(3, 3), &Field::make(2, 9)}) {
    for (Word a = 0; a < f->order(); a += 3) {
      for (Word b = 0; b < f->order(); b += 5) EXPECT_EQ(f->mul(a, b), naive_mul(*f, a, b)) << f->spec();
    }
  }
}

TEST(Arithmetic, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(1);
  int checked = 0;
  for (const Field* f : oracle::battery()) {
    for (int i = 0; i < 2000; ++i, ++checked) {
      const auto a = oracle::random_element(*f, rng), b = oracle::random_element(*f, rng),
                 c = oracle::random_element(*f, rng);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a - a, f->zero());
    }
  }
  EXPECT_GE(checked, 10000);
}

TEST(Arithmetic, FermatLittleTheoremExhaustive) {
  for (const Field* f : {&Field::make(2, 10), &Field::make(3, 6), &Field::make(31, 2), &Field::make(1021)}) {
    for (const auto& a : f->elements()) {
      if (!a.is_zero()) ASSERT_EQ(a.pow(std::int64_t(f->order() - 1)), f->one()) << f->spec();
    }
  }
}

TEST(Squares, QuadraticCharacter) {
  EXPECT_TRUE(Field::make(23).integer(8).is_square());
  EXPECT_TRUE((Field::make(17).integer(3) * Field::make(17).integer(6)).is_square());
  EXPECT_FALSE(Field::make(7).integer(3).is_square());
  for (const auto& a : Field::make(2, 4).elements()) EXPECT_TRUE(a.is_square());
}

TEST(Squares, NonsquareTimesSquareIsNonsquare) {
  const Field& f = Field::make(29);
  const Element ns = f.integer(2);
  ASSERT_FALSE(ns.is_square());
  for (const auto& g : f.elements()) {
    if (!g.is_zero()) EXPECT_FALSE((ns * g * g).is_square());
  }
}

TEST(Squares, CanonicalRoots) {
  EXPECT_EQ(Field::make(19).integer(4).sqrt().value(), 2u);
  const Field& f32 = Field::parse("2^5:1,0,1,0,0,1");
  EXPECT_EQ((f32.w().pow(5) * f32.w()).sqrt(), f32.w().pow(3));
  EXPECT_EQ(Field::make(23).integer(13).sqrt().value(), 6u);
  EXPECT_THROW(Field::make(7).integer(3).sqrt(), Error);
}

TEST(Squares, SqrtOfSquareExhaustive) {
  for (const Field* f : {&Field::make(2, 10), &Field::make(3, 6), &Field::make(31, 2), &Field::make(1021),
                         &Field::make(5, 4)}) {
    for (const auto& x : f->elements()) {
      const auto r = x.square().sqrt();
      ASSERT_TRUE(r == x || r == -x) << f->spec() << " " << x.str();
      ASSERT_LE(r.value(), (-r).value());
    }
  }
}

TEST(Notation, ParseFormatRoundTrip) {
  for (const Field* f : oracle::battery()) {
    for (const auto& a : f->elements()) {
      for (Notation nt : {Notation::Integer, Notation::Vector, Notation::Power}) {
        if (nt == Notation::Power && !f->has_generator()) continue;
        if (nt == Notation::Integer && !f->is_prime_field()) continue;
        ASSERT_EQ(f->parse_element(a.str(nt)), a) << f->spec() << " " << a.str(nt);
      }
      ASSERT_EQ(f->parse_element(a.str()), a);
    }
  }
}

TEST(Notation, PowerSyntax) {
  const Field& f = Field::make(2, 4);
  EXPECT_EQ(f.parse_element("w"), f.w());
  EXPECT_EQ(f.parse_element("w^15"), f.one());
  EXPECT_EQ(f.parse_element("0"), f.zero());
  EXPECT_EQ(f.w().pow(4).str(Notation::Power), "w^4");
}

TEST(Polynomials, ParseAndEvaluate) {
  const Field& f = Field::make(23);
  const auto p = gf::parse_poly(f, "x^3+21x+18");
  ASSERT_EQ(gf::poly_degree(p), 3);
  for (const auto& a : f.elements()) {
    const std::uint64_t x = a.value();
    EXPECT_EQ(gf::poly_eval(p, a).value(), (x * x * x + 21 * x + 18) % 23);
  }
  EXPECT_EQ(gf::parse_poly(f, "coeffs:18,21,0,1"), p);
  EXPECT_EQ(gf::poly_degree(gf::Poly{f.zero()}), -1);
}
