#include "mdsforge/gf.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

namespace mdsforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::NotMDS: return "NotMDS";
    case ErrorCode::SpecViolation: return "SpecViolation";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::NotDistinct: return "NotDistinct";
    case ErrorCode::UnknownId: return "UnknownId";
  }
  return "Unknown";
}

}  // namespace mdsforge

namespace mdsforge::gf {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTableLimit = std::uint64_t(1) << 21;
constexpr std::uint64_t kAddTableLimit = 512;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return std::uint64_t(u128(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % s == 0) {
      out.push_back(s);
      while (n % s == 0) n /= s;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Dense polynomials over GF(p), ascending coefficients, no trailing zeros.
using PPoly = std::vector<std::uint64_t>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = powmod(m.back(), p - 2, p);
  while (a.size() > dm && !a.empty()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return pmod(std::move(r), m, p);
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& m, std::uint64_t p) {
  PPoly r{1};
  base = pmod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, m, p);
    base = pmulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(x^{p^i} - x, f) = 1 for 1 <= i <= m/2.
bool irreducible(const PPoly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return m == 1;
  PPoly h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = ppowmod(h, p, f, p);
    PPoly d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    if (d.empty()) return false;
    if (pgcd(f, d, p).size() > 1) return false;
  }
  return true;
}

std::vector<Word> default_modulus(std::uint64_t p, unsigned m) {
  if (p == 2 && m == 4) return {1, 1, 0, 0, 1};
  if (p == 2 && m == 5) return {1, 0, 1, 0, 0, 1};
  if (p == 5 && m == 2) return {2, 4, 1};
  std::uint64_t span = 1;
  for (unsigned i = 0; i < m; ++i) span *= p;
  for (std::uint64_t code = 1; code < span; ++code) {
    PPoly f(m + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[m] = 1;
    if (f[0] != 0 && irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::Reducible, "no irreducible polynomial found");
}

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <class Int>
std::optional<Int> parse_int(std::string_view s) {
  s = trim_view(s);
  Int v{};
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % s == 0) return n == s;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct FieldRegistry {
  using Key = std::tuple<std::uint64_t, unsigned, std::vector<Word>>;
  std::mutex mutex;
  std::map<Key, std::unique_ptr<Field>> fields;

  static FieldRegistry& instance() {
    static FieldRegistry registry;
    return registry;
  }

  const Field& get(std::uint64_t p, unsigned m, std::vector<Word> modulus) {
    std::lock_guard lock(mutex);
    Key key{p, m, modulus};
    auto it = fields.find(key);
    if (it != fields.end()) return *it->second;
    std::unique_ptr<Field> f(new Field(p, m, std::move(modulus)));
    const Field& ref = *f;
    fields.emplace(std::move(key), std::move(f));
    return ref;
  }
};

const Field& Field::make(std::uint64_t p, unsigned m, std::optional<std::vector<Word>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::BadDimension, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p)
      throw Error(ErrorCode::FieldTooLarge, "p^m must be below 2^64");
    q *= p;
  }
  std::vector<Word> mod;
  if (m == 1) {
    mod = {0, 1};
  } else if (modulus) {
    mod = *modulus;
    if (mod.size() != m + 1) throw Error(ErrorCode::ParseError, "modulus must have m+1 coefficients");
    for (Word c : mod) {
      if (c >= p) throw Error(ErrorCode::ParseError, "modulus coefficient out of range");
    }
    if (mod.back() != 1) throw Error(ErrorCode::ParseError, "modulus must be monic");
    if (!irreducible(mod, p)) throw Error(ErrorCode::Reducible, "modulus is reducible over GF(p)");
  } else {
    mod = default_modulus(p, m);
  }
  return FieldRegistry::instance().get(p, m, std::move(mod));
}

const Field& Field::parse(std::string_view spec) {
  spec = trim_view(spec);
  std::string_view head = spec;
  std::optional<std::vector<Word>> modulus;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    head = spec.substr(0, colon);
    std::vector<Word> coeffs;
    for (const auto& piece : split_top_level(spec.substr(colon + 1), ',')) {
      auto c = parse_int<std::uint64_t>(piece);
      if (!c) throw Error(ErrorCode::ParseError, "bad modulus coefficient '" + piece + "'");
      coeffs.push_back(*c);
    }
    modulus = std::move(coeffs);
  }
  std::uint64_t p = 0;
  unsigned m = 1;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    auto pp = parse_int<std::uint64_t>(head.substr(0, caret));
    auto mm = parse_int<unsigned>(head.substr(caret + 1));
    if (!pp || !mm) throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(spec) + "'");
    p = *pp;
    m = *mm;
  } else {
    auto pp = parse_int<std::uint64_t>(head);
    if (!pp) throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(spec) + "'");
    p = *pp;
    // A bare prime power such as "16" is read as 2^4.
    if (!is_prime(p) && p > 1 && !modulus) {
      auto f = distinct_prime_factors(p);
      if (f.size() == 1) {
        std::uint64_t base = f[0], v = p;
        m = 0;
        while (v > 1) {
          v /= base;
          ++m;
        }
        p = base;
      }
    }
  }
  if (m == 1 && modulus) {
    if (modulus->size() != 2 || modulus->back() != 1)
      throw Error(ErrorCode::ParseError, "prime-field modulus must be monic of degree 1");
    modulus.reset();
  }
  return make(p, m, std::move(modulus));
}

Field::Field(std::uint64_t p, unsigned m, std::vector<Word> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m_; ++i) {
    place_.push_back(q_);
    q_ *= p_;
  }
  kind_ = m_ == 1 ? Kind::Prime : (p_ == 2 ? Kind::Binary : Kind::General);
  order_factors_ = distinct_prime_factors(q_ - 1);

  if (kind_ == Kind::General && q_ <= kAddTableLimit) {
    add_table_.resize(q_ * q_);
    for (Word a = 0; a < q_; ++a) {
      for (Word b = 0; b < q_; ++b) add_table_[a * q_ + b] = std::uint32_t(add_slow(a, b));
    }
  }

  if (m_ == 1) {
    for (Word g = 1; g < q_; ++g) {
      if (is_primitive(g)) {
        generator_ = g;
        break;
      }
    }
  } else if (is_primitive(p_)) {
    generator_ = p_;  // encoding of the residue of x
  }

  if (q_ <= kTableLimit && q_ > 2) {
    Word g = generator_.value_or(0);
    if (!generator_) {
      for (Word c = 2; c < q_; ++c) {
        if (is_primitive(c)) {
          g = c;
          break;
        }
      }
    }
    build_tables(g);
  }

  if (p_ != 2) {
    for (Word z = 2; z < q_; ++z) {
      if (pow_slow(z, (q_ - 1) / 2) != 1) {
        nonresidue_ = z;
        break;
      }
    }
  }
}

void Field::build_tables(Word g) {
  table_generator_ = g;
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  Word x = 1;
  for (std::uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = std::uint32_t(x);
    exp_[i + q_ - 1] = std::uint32_t(x);
    log_[x] = std::uint32_t(i);
    x = mul_slow(x, g);
  }
  if (generator_) {
    const std::uint64_t lw = log_[*generator_];
    // lw is a unit mod q-1 because w is primitive.
    std::int64_t t0 = 0, t1 = 1;
    std::int64_t r0 = std::int64_t(q_ - 1), r1 = std::int64_t(lw);
    while (r1 != 0) {
      std::int64_t qt = r0 / r1;
      std::tie(t0, t1) = std::make_tuple(t1, t0 - qt * t1);
      std::tie(r0, r1) = std::make_tuple(r1, r0 - qt * r1);
    }
    if (t0 < 0) t0 += std::int64_t(q_ - 1);
    log_w_scale_ = std::uint64_t(t0) % (q_ - 1);
    if (q_ == 2) log_w_scale_ = 0;
  }
}

Word Field::add_slow(Word a, Word b) const noexcept {
  Word r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    Word d = (a % p_ + b % p_) % p_;
    r += d * place_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Word Field::neg_slow(Word a) const noexcept {
  Word r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    Word d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * place_[i];
    a /= p_;
  }
  return r;
}

Word Field::mul_slow(Word a, Word b) const noexcept {
  if (m_ == 1) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  std::vector<Word> da(m_), db(m_), prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = a % p_;
    db[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
  }
  for (std::size_t top = prod.size() - 1; top >= m_; --top) {
    const Word c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (unsigned i = 0; i < m_; ++i) {
      const std::size_t pos = top - m_ + i;
      prod[pos] = (prod[pos] + p_ - mulmod(c, modulus_[i], p_)) % p_;
    }
  }
  Word r = 0;
  for (unsigned i = 0; i < m_; ++i) r += prod[i] * place_[i];
  return r;
}

Word Field::pow_slow(Word a, std::uint64_t e) const noexcept {
  Word r = 1;
  while (e) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

bool Field::is_primitive(Word a) const {
  if (a == 0 || a >= q_) return false;
  if (q_ == 2) return a == 1;
  for (std::uint64_t l : order_factors_) {
    if (pow_slow(a, (q_ - 1) / l) == 1) return false;
  }
  return true;
}

std::string Field::spec() const {
  if (m_ == 1) return std::to_string(p_);
  std::string s = std::to_string(p_) + "^" + std::to_string(m_) + ":";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

Word Field::generator() const {
  if (!generator_) throw Error(ErrorCode::NotPrimitive, "x is not primitive modulo " + spec());
  return *generator_;
}

Word Field::inv(Word a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow_slow(a, q_ - 2);
}

Word Field::pow(Word a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::uint64_t ord = q_ - 1;
  std::uint64_t r = e >= 0 ? std::uint64_t(e) % ord : (ord - std::uint64_t(-(e + 1)) % ord - 1) % ord;
  if (!exp_.empty()) return exp_[mulmod(log_[a], r, ord)];
  return pow_slow(a, r);
}

bool Field::is_square(Word a) const noexcept {
  if (p_ == 2 || a == 0) return true;
  if (!exp_.empty()) return log_[a] % 2 == 0;
  return pow_slow(a, (q_ - 1) / 2) == 1;
}

Word Field::sqrt(Word a) const {
  if (a == 0) return 0;
  if (p_ == 2) return pow_slow(a, q_ / 2);
  if (!is_square(a)) throw Error(ErrorCode::NotASquare, format(a, default_notation()) + " is not a square");
  // Tonelli-Shanks with q - 1 = Q * 2^s.
  std::uint64_t Q = q_ - 1;
  unsigned s = 0;
  while (Q % 2 == 0) {
    Q /= 2;
    ++s;
  }
  Word c = pow_slow(nonresidue_, Q);
  Word t = pow_slow(a, Q);
  Word r = pow_slow(a, (Q + 1) / 2);
  unsigned M = s;
  while (t != 1) {
    unsigned i = 0;
    Word tt = t;
    while (tt != 1) {
      tt = mul(tt, tt);
      ++i;
    }
    Word b = c;
    for (unsigned j = 0; j + i + 1 < M; ++j) b = mul(b, b);
    M = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return std::min(r, neg(r));
}

Word Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t pp = std::int64_t(std::min<std::uint64_t>(p_, std::uint64_t(std::numeric_limits<std::int64_t>::max())));
  if (p_ > std::uint64_t(std::numeric_limits<std::int64_t>::max())) {
    return v >= 0 ? Word(v) : p_ - Word(-(v + 1)) - 1;
  }
  std::int64_t r = v % pp;
  if (r < 0) r += pp;
  return Word(r);
}

std::vector<Word> Field::digits(Word a) const {
  std::vector<Word> d(m_);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Word Field::from_digits(std::span<const Word> digits) const {
  if (digits.size() > m_) throw Error(ErrorCode::ParseError, "too many coefficients for " + spec());
  Word r = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= p_) throw Error(ErrorCode::ParseError, "coefficient out of range");
    r += digits[i] * place_[i];
  }
  return r;
}

Element Field::element(Word encoding) const {
  if (encoding >= q_) {
    throw Error(ErrorCode::ParseError, std::to_string(encoding) + " is not an element of GF(" + std::to_string(q_) + ")");
  }
  return Element(*this, encoding);
}

Element Field::zero() const { return Element(*this, 0); }
Element Field::one() const { return Element(*this, 1); }
Element Field::w() const { return Element(*this, generator()); }
Element Field::integer(std::int64_t v) const { return Element(*this, from_int(v)); }

Element Field::parse_element(std::string_view text) const {
  text = trim_view(text);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty element");
  if (text.front() == '-') return -parse_element(text.substr(1));
  if (text.front() == '[') {
    if (text.back() != ']') throw Error(ErrorCode::ParseError, "unterminated coefficient vector");
    std::vector<Word> d;
    for (const auto& piece : split_top_level(text.substr(1, text.size() - 2), ',')) {
      auto c = parse_int<std::uint64_t>(piece);
      if (!c) throw Error(ErrorCode::ParseError, "bad coefficient '" + piece + "'");
      d.push_back(*c);
    }
    return Element(*this, from_digits(d));
  }
  if (text.front() == 'w') {
    std::int64_t k = 1;
    if (text.size() > 1) {
      if (text[1] != '^') throw Error(ErrorCode::ParseError, "bad power notation '" + std::string(text) + "'");
      auto e = parse_int<std::int64_t>(text.substr(2));
      if (!e) throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "'");
      k = *e;
    }
    return Element(*this, pow(generator(), k));
  }
  auto v = parse_int<std::uint64_t>(text);
  if (!v) throw Error(ErrorCode::ParseError, "bad element '" + std::string(text) + "'");
  return element(*v);
}

std::uint64_t Field::log_w(Word a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "log of zero");
  if (!generator_) throw Error(ErrorCode::NotPrimitive, "no generator for " + spec());
  if (q_ == 2) return 0;
  if (exp_.empty()) throw Error(ErrorCode::NotPrimitive, "power notation needs log tables (q <= 2^21)");
  return mulmod(log_[a], log_w_scale_, q_ - 1);
}

std::string Field::format(Word a, Notation notation) const {
  switch (notation) {
    case Notation::Integer: return std::to_string(a);
    case Notation::Vector: {
      std::string s = "[";
      auto d = digits(a);
      for (unsigned i = 0; i < m_; ++i) {
        if (i) s += ',';
        s += std::to_string(d[i]);
      }
      return s + "]";
    }
    case Notation::Power: {
      if (a == 0) return "0";
      if (a == 1) return "1";
      return "w^" + std::to_string(log_w(a));
    }
  }
  return {};
}

Notation Field::default_notation() const noexcept {
  if (m_ == 1) return Notation::Integer;
  return (generator_ && !exp_.empty()) ? Notation::Power : Notation::Vector;
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(q_);
  for (Word a = 0; a < q_; ++a) out.emplace_back(*this, a);
  return out;
}

// ---------------------------------------------------------------- Element

const Field& Element::field() const {
  if (!field_) throw Error(ErrorCode::FieldMismatch, "element is not bound to a field");
  return *field_;
}

void Element::require_same(const Element& o) const {
  if (field_ == nullptr || field_ != o.field_) {
    throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
  }
}

Element Element::operator-() const { return Element(field(), field_->neg(value_)); }

Element& Element::operator+=(const Element& o) {
  require_same(o);
  value_ = field_->add(value_, o.value_);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(o);
  value_ = field_->sub(value_, o.value_);
  return *this;
}

Element& Element::operator*=(const Element& o) {
  require_same(o);
  value_ = field_->mul(value_, o.value_);
  return *this;
}

Element& Element::operator/=(const Element& o) {
  require_same(o);
  value_ = field_->div(value_, o.value_);
  return *this;
}

Element Element::pow(std::int64_t e) const { return Element(field(), field_->pow(value_, e)); }
Element Element::inv() const { return Element(field(), field_->inv(value_)); }
bool Element::is_square() const { return field().is_square(value_); }
Element Element::sqrt() const { return Element(field(), field_->sqrt(value_)); }
std::string Element::str() const { return field().format(value_, field_->default_notation()); }
std::string Element::str(Notation notation) const { return field().format(value_, notation); }

std::ostream& operator<<(std::ostream& os, const Element& e) {
  if (!e.field_ptr()) return os << "<unbound>";
  return os << e.str();
}

// ---------------------------------------------------------------- polynomials

Element poly_eval(std::span<const Element> coeffs, const Element& x) {
  const Field& f = x.field();
  Word acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (it->field_ptr() != &f) throw Error(ErrorCode::FieldMismatch, "polynomial coefficient field mismatch");
    acc = f.add(f.mul(acc, x.value()), it->value());
  }
  return Element(f, acc);
}

long poly_degree(std::span<const Element> coeffs) {
  long d = long(coeffs.size()) - 1;
  while (d >= 0 && coeffs[std::size_t(d)].is_zero()) --d;
  return d;
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(trim_view(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim_view(cur).empty() || !out.empty()) out.emplace_back(trim_view(cur));
  return out;
}

Poly parse_poly(const Field& field, std::string_view text) {
  text = trim_view(text);
  Poly coeffs;
  auto put = [&](std::size_t e, const Element& c) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, field.zero());
    coeffs[e] += c;
  };
  if (text.starts_with("coeffs:")) {
    std::size_t e = 0;
    for (const auto& piece : split_top_level(text.substr(7), ',')) put(e++, field.parse_element(piece));
    return coeffs;
  }
  // Split into signed terms outside brackets.
  std::vector<std::pair<bool, std::string>> terms;
  std::string cur;
  bool negative = false;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '[') ++depth;
    if (c == ']') --depth;
    const bool after_caret = i > 0 && text[i - 1] == '^';
    if (depth == 0 && (c == '+' || (c == '-' && !after_caret))) {
      if (!trim_view(cur).empty()) terms.emplace_back(negative, std::string(trim_view(cur)));
      cur.clear();
      negative = c == '-';
      continue;
    }
    if (c != ' ') cur += c;
  }
  if (!trim_view(cur).empty()) terms.emplace_back(negative, std::string(trim_view(cur)));
  if (terms.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");

  for (const auto& [neg, term] : terms) {
    const auto xpos = term.find('x');
    Element c = field.one();
    std::size_t e = 0;
    if (xpos == std::string::npos) {
      c = field.parse_element(term);
    } else {
      std::string_view head(term.data(), xpos);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (!head.empty()) c = field.parse_element(head);
      std::string_view tail(term.data() + xpos + 1, term.size() - xpos - 1);
      if (tail.empty()) {
        e = 1;
      } else {
        if (tail.front() != '^') throw Error(ErrorCode::ParseError, "bad term '" + term + "'");
        auto pe = parse_int<std::size_t>(tail.substr(1));
        if (!pe) throw Error(ErrorCode::ParseError, "bad exponent in '" + term + "'");
        e = *pe;
      }
    }
    put(e, neg ? -c : c);
  }
  return coeffs;
}

std::string format_poly(std::span<const Element> coeffs, Notation notation) {
  std::string s;
  for (long e = long(coeffs.size()) - 1; e >= 0; --e) {
    const Element& c = coeffs[std::size_t(e)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += "+";
    const bool unit = c.is_one();
    if (e == 0) {
      s += c.str(notation);
      continue;
    }
    if (!unit) s += c.str(notation) + (notation == Notation::Integer ? "" : "*");
    s += e == 1 ? "x" : "x^" + std::to_string(e);
  }
  return s.empty() ? "0" : s;
}

}  // namespace mdsforge::gf
