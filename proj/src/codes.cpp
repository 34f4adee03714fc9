#include "mdsforge/codes.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mdsforge/scan.hpp"

namespace mdsforge::codes {

using gf::Element;
using gf::Field;
using gf::Word;

struct LinearCode::Cache {
  std::mutex mu;
  std::optional<MatGF> parity;
  std::optional<std::size_t> schur_dim;
  std::optional<std::size_t> distance;
};

LinearCode::LinearCode(MatGF generator, Provenance provenance)
    : g_(std::move(generator)), prov_(std::move(provenance)), cache_(std::make_shared<Cache>()) {
  if (g_.rows() > g_.cols()) throw Error(ErrorCode::BadDimension, "generator has more rows than columns");
  if (rank(g_) != g_.rows()) throw Error(ErrorCode::BadDimension, "generator rows are linearly dependent");
}

const MatGF& LinearCode::parity_check() const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->parity) cache_->parity = null_space(g_);
  return *cache_->parity;
}

std::size_t LinearCode::schur_square_dim() const {
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->schur_dim) return *cache_->schur_dim;
  }
  const Field& f = field();
  const std::size_t k = this->k(), n = this->n();
  MatGF prod(f, k * (k + 1) / 2, n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b, ++row) {
      for (std::size_t j = 0; j < n; ++j) prod.raw(row, j) = f.mul(g_.raw(a, j), g_.raw(b, j));
    }
  }
  const std::size_t d = rank(prod);
  std::lock_guard lock(cache_->mu);
  cache_->schur_dim = d;
  return d;
}

std::optional<std::size_t> LinearCode::known_distance() const {
  std::lock_guard lock(cache_->mu);
  return cache_->distance;
}

void LinearCode::remember_distance(std::size_t d) const {
  std::lock_guard lock(cache_->mu);
  cache_->distance = d;
}

LinearCode grs_generator(const symfun::EvalSet& lambda, std::size_t k, const std::vector<Element>& v) {
  const Field& f = lambda.field();
  const std::size_t n = lambda.size();
  if (k < 1 || k > n || n > f.order()) throw Error(ErrorCode::BadDimension, "GRS needs 1 <= k <= n <= q");
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from n");
  MatGF g(f, k, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j].field_ptr() != &f) throw Error(ErrorCode::FieldMismatch, "multiplier from another field");
    if (v[j].is_zero()) throw Error(ErrorCode::ZeroMultiplier, "GRS multipliers must be nonzero");
    Word p = v[j].value();
    for (std::size_t i = 0; i < k; ++i) {
      g.raw(i, j) = p;
      p = f.mul(p, lambda.words()[j]);
    }
  }
  Provenance prov;
  for (std::size_t i = 0; i < k; ++i) prov.exponents.push_back(long(i));
  prov.lambda = lambda.points();
  prov.v = v;
  return LinearCode(std::move(g), std::move(prov));
}

LinearCode rs_generator(const symfun::EvalSet& lambda, std::size_t k) {
  return grs_generator(lambda, k, std::vector<Element>(lambda.size(), lambda.field().one()));
}

LinearCode dual(const LinearCode& c) { return LinearCode(c.parity_check()); }

CheckReport is_self_orthogonal(const LinearCode& c) {
  CheckReport rep;
  rep.check = "self_orthogonal";
  rep.basis = "gram";
  const Field& f = c.field();
  const MatGF& g = c.generator();
  rep.verdict = true;
  for (std::size_t a = 0; a < c.k() && rep.verdict; ++a) {
    for (std::size_t b = a; b < c.k(); ++b) {
      Word s = 0;
      for (std::size_t j = 0; j < c.n(); ++j) s = f.add(s, f.mul(g.raw(a, j), g.raw(b, j)));
      if (s != 0) {
        rep.verdict = false;
        rep.witness = Witness{{a, b}, {Element(f, s)}, "nonzero entry of G*G^T"};
        break;
      }
    }
  }
  return rep;
}

CheckReport is_self_dual(const LinearCode& c) {
  CheckReport rep = is_self_orthogonal(c);
  rep.check = "self_dual";
  if (c.n() != 2 * c.k()) {
    rep.verdict = false;
    rep.witness = Witness{{c.n(), c.k()}, {}, "self-duality needs n = 2k"};
  }
  return rep;
}

std::string distance_label(std::size_t n, std::size_t k, std::size_t d, std::optional<std::size_t> dual_d) {
  if (d + k == n + 1) return "MDS";
  if (d + k == n) {
    if (dual_d && *dual_d == k) return "NMDS";
    return "AMDS";
  }
  return "";
}

namespace {

struct DistanceTask {
  std::size_t pivot;        // first nonzero message coordinate
  Word lead;                // value of the next coordinate, if any
  bool has_lead;
};

struct DistanceResult {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::vector<Word> codeword;
};

class DistanceEnumerator {
 public:
  DistanceEnumerator(const Field& f, const MatGF& g) : f_(f), g_(g), k_(g.rows()), n_(g.cols()) {
    const std::uint64_t q = f.order();
    multiples_.assign(k_, {});
    for (std::size_t i = 0; i < k_; ++i) {
      multiples_[i].resize(q * n_);
      for (Word v = 0; v < q; ++v) {
        for (std::size_t l = 0; l < n_; ++l) multiples_[i][v * n_ + l] = f.mul(v, g.raw(i, l));
      }
    }
  }

  DistanceResult run(const DistanceTask& t) const {
    DistanceResult best;
    std::vector<std::vector<Word>> partial(k_ + 1, std::vector<Word>(n_, 0));
    for (std::size_t l = 0; l < n_; ++l) partial[t.pivot + 1][l] = g_.raw(t.pivot, l);
    std::size_t start = t.pivot + 1;
    if (t.has_lead) {
      const Word* m = &multiples_[start][t.lead * n_];
      for (std::size_t l = 0; l < n_; ++l) partial[start + 1][l] = f_.add(partial[start][l], m[l]);
      ++start;
    }
    descend(start, partial, best);
    return best;
  }

 private:
  void descend(std::size_t level, std::vector<std::vector<Word>>& partial, DistanceResult& best) const {
    const std::vector<Word>& base = partial[level];
    if (level == k_) {
      consider(base.data(), best);
      return;
    }
    const std::uint64_t q = f_.order();
    if (level + 1 == k_) {
      std::vector<Word>& c = partial[level + 1];
      for (Word v = 0; v < q; ++v) {
        const Word* m = &multiples_[level][v * n_];
        for (std::size_t l = 0; l < n_; ++l) c[l] = f_.add(base[l], m[l]);
        consider(c.data(), best);
      }
      return;
    }
    for (Word v = 0; v < q; ++v) {
      const Word* m = &multiples_[level][v * n_];
      std::vector<Word>& next = partial[level + 1];
      for (std::size_t l = 0; l < n_; ++l) next[l] = f_.add(base[l], m[l]);
      descend(level + 1, partial, best);
    }
  }

  void consider(const Word* c, DistanceResult& best) const {
    std::size_t w = 0;
    for (std::size_t l = 0; l < n_; ++l) w += c[l] != 0;
    if (w < best.weight) {
      best.weight = w;
      best.codeword.assign(c, c + n_);
    }
  }

  const Field& f_;
  const MatGF& g_;
  std::size_t k_, n_;
  std::vector<std::vector<Word>> multiples_;
};

std::uint64_t projective_count(std::uint64_t q, std::size_t k) {
  unsigned __int128 total = 0, pw = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += pw;
    pw *= q;
    if (total > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace

CheckReport min_distance(const LinearCode& c, const ScanOptions& opts) {
  const Field& f = c.field();
  const std::size_t k = c.k(), n = c.n();
  if (k == 0) throw Error(ErrorCode::BadDimension, "the zero code has no minimum distance");
  const std::uint64_t total = projective_count(f.order(), k);
  if (total > opts.codeword_budget) {
    std::size_t upper = n - k + 1;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t w = 0;
      for (std::size_t j = 0; j < n; ++j) w += c.generator().raw(i, j) != 0;
      upper = std::min(upper, w);
    }
    throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " projective codewords exceed the budget of " +
                                               std::to_string(opts.codeword_budget) + "; bounds 1 <= d <= " +
                                               std::to_string(upper));
  }
  std::vector<DistanceTask> tasks;
  for (std::size_t j = 0; j < k; ++j) {
    if (j + 1 < k) {
      for (Word v = 0; v < f.order(); ++v) tasks.push_back({j, v, true});
    } else {
      tasks.push_back({j, 0, false});
    }
  }
  DistanceEnumerator en(f, c.generator());
  std::vector<DistanceResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) results[t] = en.run(tasks[t]);
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1 || total < 100000) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  const DistanceResult* best = &results.front();
  for (const auto& r : results) {
    if (r.weight < best->weight) best = &r;
  }
  c.remember_distance(best->weight);
  CheckReport rep;
  rep.check = "min_distance";
  rep.verdict = true;
  rep.basis = "enumeration";
  rep.quantity = std::int64_t(best->weight);
  Witness w;
  w.detail = "minimum-weight codeword";
  for (Word x : best->codeword) w.values.emplace_back(f, x);
  rep.witness = std::move(w);
  const std::string label = distance_label(n, k, best->weight);
  rep.notes.push_back("[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(best->weight) + "]" +
                      (label.empty() ? "" : " " + label));
  return rep;
}

namespace {

std::vector<Element> subset_points(const LinearCode& c, std::span<const std::size_t> idx) {
  std::vector<Element> pts;
  const auto& lam = c.provenance().lambda;
  for (std::size_t i : idx) {
    if (i < lam.size()) pts.push_back(lam[i]);
  }
  return pts;
}

bool minor_nonzero(const Field& f, const MatGF& g, std::span<const std::size_t> idx, std::vector<Word>& buf) {
  const std::size_t k = g.rows();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) buf[i * k + j] = g.raw(i, idx[j]);
  }
  return kernel::det_in_place(f, buf, k) != 0;
}

}  // namespace

CheckReport is_mds_minors(const LinearCode& c, const ScanOptions& opts) {
  const Field& f = c.field();
  const MatGF& g = c.generator();
  const std::size_t k = c.k();
  auto res = scan::scan_subsets(c.n(), k, opts.threads, opts.subset_budget, [&] {
    return [&f, &g, buf = std::vector<Word>(k * k)](std::span<const std::size_t> idx, std::size_t) mutable {
      return minor_nonzero(f, g, idx, buf);
    };
  });
  CheckReport rep;
  rep.check = "mds";
  rep.basis = "minors";
  rep.verdict = res.ok;
  rep.quantity = std::int64_t(res.total);
  if (!res.ok) {
    rep.witness = Witness{res.witness, subset_points(c, res.witness), "singular k x k minor"};
  }
  return rep;
}

CheckReport sample_minors(const LinearCode& c, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = c.n(), k = c.k();
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  std::vector<Word> buf(k * k);
  CheckReport rep;
  rep.check = "mds_sample";
  rep.basis = "minors";
  rep.verdict = true;
  rep.quantity = std::int64_t(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(perm[i], perm[pick(rng)]);
    }
    std::vector<std::size_t> idx(perm.begin(), perm.begin() + std::ptrdiff_t(k));
    std::sort(idx.begin(), idx.end());
    if (!minor_nonzero(c.field(), c.generator(), idx, buf)) {
      rep.verdict = false;
      rep.witness = Witness{idx, subset_points(c, idx), "singular k x k minor"};
      break;
    }
  }
  return rep;
}

CheckReport schur_square_dim(const LinearCode& c) {
  CheckReport rep;
  rep.check = "schur_square_dim";
  rep.verdict = true;
  rep.basis = "rank";
  rep.quantity = std::int64_t(c.schur_square_dim());
  return rep;
}

CheckReport is_grs_by_schur(const LinearCode& c, const ScanOptions& opts, std::optional<bool> known_mds) {
  const std::size_t n = c.n(), k = c.k();
  if (2 * k + 1 > n) {
    throw Error(ErrorCode::Inconclusive, "the Schur-square criterion needs k <= (n-1)/2");
  }
  const bool mds = known_mds ? *known_mds : is_mds_minors(c, opts).verdict;
  if (!mds) throw Error(ErrorCode::NotMDS, "the Schur-square criterion applies to MDS codes only");
  const std::size_t dim = c.schur_square_dim();
  CheckReport rep;
  rep.check = "grs";
  rep.basis = "schur";
  rep.quantity = std::int64_t(dim);
  rep.verdict = dim == 2 * k - 1;
  if (!rep.verdict) {
    rep.witness = Witness{{dim}, {}, "Schur square dimension " + std::to_string(dim) + " != 2k-1"};
  }
  return rep;
}

LinearCode scale_columns(const LinearCode& c, const std::vector<Element>& v) {
  if (v.size() != c.n()) throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from n");
  const Field& f = c.field();
  MatGF g = c.generator();
  for (std::size_t j = 0; j < c.n(); ++j) {
    if (v[j].field_ptr() != &f) throw Error(ErrorCode::FieldMismatch, "multiplier from another field");
    if (v[j].is_zero()) throw Error(ErrorCode::ZeroMultiplier, "column multipliers must be nonzero");
    for (std::size_t i = 0; i < c.k(); ++i) g.raw(i, j) = f.mul(g.raw(i, j), v[j].value());
  }
  Provenance prov = c.provenance();
  if (prov.v.size() == v.size()) {
    for (std::size_t j = 0; j < v.size(); ++j) prov.v[j] = prov.v[j] * v[j];
  } else {
    prov.v = v;
  }
  return LinearCode(std::move(g), std::move(prov));
}

LinearCode extend_columns(const LinearCode& c, const std::vector<std::vector<Element>>& cols) {
  const Field& f = c.field();
  MatGF extra(f, c.k(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != c.k()) throw Error(ErrorCode::DimensionMismatch, "extension column must have k entries");
    for (std::size_t i = 0; i < c.k(); ++i) extra.set(i, j, cols[j][i]);
  }
  Provenance prov = c.provenance();
  prov.extra_columns += cols.size();
  if (!prov.v.empty()) prov.v.clear();
  return LinearCode(hstack(c.generator(), extra), std::move(prov));
}

std::vector<Element> unit_column(const Field& f, std::size_t k, std::size_t i) {
  if (i < 1 || i > k) throw Error(ErrorCode::DimensionMismatch, "unit column index out of range");
  std::vector<Element> col(k, f.zero());
  col[i - 1] = f.one();
  return col;
}

std::optional<WeightingHit> search_square_weighting(const MatGF& constraints, const MatGF& evaluation,
                                                    std::uint64_t budget) {
  const Field& f = evaluation.field();
  const std::size_t dim = evaluation.rows(), n = evaluation.cols();
  if (constraints.cols() != dim) throw Error(ErrorCode::DimensionMismatch, "constraint width differs from coefficient count");
  const MatGF basis = constraints.rows() == 0 ? MatGF::identity(f, dim) : null_space(constraints);
  const std::size_t d = basis.rows();
  if (d == 0 || budget == 0) return std::nullopt;
  // Each basis vector carries an image row w_b = b * evaluation.
  const MatGF images = mat_mul(basis, evaluation);
  std::vector<Word> digits(d, 0), coeff(dim), w(n);
  const std::uint64_t q = f.order();
  for (std::uint64_t tried = 0; tried < budget;) {
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < q) break;
      digits[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    ++tried;
    std::fill(coeff.begin(), coeff.end(), 0);
    std::fill(w.begin(), w.end(), 0);
    for (std::size_t b = 0; b < d; ++b) {
      const Word a = digits[b];
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) coeff[j] = f.add(coeff[j], f.mul(a, basis.raw(b, j)));
      for (std::size_t i = 0; i < n; ++i) w[i] = f.add(w[i], f.mul(a, images.raw(b, i)));
    }
    bool good = true;
    for (Word x : w) {
      if (x == 0 || !f.is_square(x)) {
        good = false;
        break;
      }
    }
    if (!good) continue;
    WeightingHit hit;
    for (Word x : coeff) hit.coeffs.emplace_back(f, x);
    for (Word x : w) hit.weights.emplace_back(f, x);
    return hit;
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> find_self_orthogonal_scaling(const LinearCode& c, std::uint64_t budget) {
  const Field& f = c.field();
  const std::size_t k = c.k(), n = c.n();
  const MatGF& g = c.generator();
  MatGF cons(f, k * (k + 1) / 2, n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b, ++row) {
      for (std::size_t j = 0; j < n; ++j) cons.raw(row, j) = f.mul(g.raw(a, j), g.raw(b, j));
    }
  }
  auto hit = search_square_weighting(cons, MatGF::identity(f, n), budget);
  if (!hit) return std::nullopt;
  return sqrt_all(hit->weights);
}

std::optional<Element> square_class_normalizer(const std::vector<Element>& u) {
  if (u.empty()) return std::nullopt;
  const Field& f = u.front().field();
  bool any_square = false, any_nonsquare = false;
  for (const auto& x : u) {
    if (x.is_zero()) return std::nullopt;
    (x.is_square() ? any_square : any_nonsquare) = true;
  }
  if (any_square && any_nonsquare) return std::nullopt;
  if (!any_nonsquare) return f.one();
  for (Word c = 2; c < f.order(); ++c) {
    if (!f.is_square(c)) return Element(f, c);
  }
  return std::nullopt;
}

std::vector<Element> sqrt_all(const std::vector<Element>& xs) {
  std::vector<Element> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.sqrt());
  return out;
}

std::string matrix_to_text(const MatGF& g, gf::Notation notation) {
  std::ostringstream os;
  os << "field=" << g.field().spec() << " k=" << g.rows() << " n=" << g.cols() << '\n';
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (j) os << ' ';
      os << g.field().format(g.raw(i, j), notation);
    }
    os << '\n';
  }
  return os.str();
}

MatGF matrix_from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorCode::ParseError, "empty matrix text");
  std::istringstream hs(line);
  std::string tok, field_spec;
  long k = -1, n = -1;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "bad header token '" + tok + "'");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    try {
      if (key == "field") field_spec = val;
      else if (key == "k") k = std::stol(val);
      else if (key == "n") n = std::stol(val);
      else throw Error(ErrorCode::ParseError, "unknown header key '" + key + "'");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad header value '" + tok + "'");
    }
  }
  if (field_spec.empty() || k < 0 || n < 0) throw Error(ErrorCode::ParseError, "header needs field=, k= and n=");
  const Field& f = Field::parse(field_spec);
  MatGF g(f, std::size_t(k), std::size_t(n));
  std::size_t i = 0;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (i >= std::size_t(k)) throw Error(ErrorCode::ParseError, "more rows than k");
    std::istringstream rs(line);
    std::size_t j = 0;
    while (rs >> tok) {
      if (j >= std::size_t(n)) throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 1) + " longer than n");
      g.set(i, j++, f.parse_element(tok));
    }
    if (j != std::size_t(n)) throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 1) + " shorter than n");
    ++i;
  }
  if (i != std::size_t(k)) throw Error(ErrorCode::ParseError, "fewer rows than k");
  return g;
}

std::string matrix_to_json(const MatGF& g, gf::Notation notation) {
  nlohmann::json j;
  j["field"] = g.field().spec();
  j["k"] = g.rows();
  j["n"] = g.cols();
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    auto r = nlohmann::json::array();
    for (std::size_t c = 0; c < g.cols(); ++c) r.push_back(g.field().format(g.raw(i, c), notation));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

MatGF matrix_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const Field& f = Field::parse(j.at("field").get<std::string>());
    const auto k = j.at("k").get<std::size_t>(), n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("rows");
    if (rows.size() != k) throw Error(ErrorCode::ParseError, "row count differs from k");
    MatGF g(f, k, n);
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i].size() != n) throw Error(ErrorCode::ParseError, "row length differs from n");
      for (std::size_t c = 0; c < n; ++c) g.set(i, c, f.parse_element(rows[i][c].get<std::string>()));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace mdsforge::codes
