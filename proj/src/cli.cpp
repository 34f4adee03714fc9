#include "mdsforge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdsforge/construct.hpp"
#include "mdsforge/family1.hpp"
#include "mdsforge/family2.hpp"
#include "mdsforge/scan.hpp"

namespace mdsforge::cli {

namespace {

using codes::CheckReport;
using codes::LinearCode;
using gf::Element;
using gf::Field;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------- options

struct CodeArgs {
  std::string field;
  std::string family = "f1";
  std::string lambda;
  std::string v;
  std::string f;
  std::string matrix;
  std::string extend;
  std::size_t k = 0;
  std::optional<std::size_t> r;
  std::optional<std::size_t> h;
};

struct RunArgs {
  std::uint64_t subset_budget = codes::ScanOptions{}.subset_budget;
  std::uint64_t codeword_budget = codes::ScanOptions{}.codeword_budget;
  std::uint64_t search_budget = codes::ScanOptions{}.search_budget;
  unsigned threads = scan::default_threads();
  std::string format = "human";
  std::string notation;
  bool timings = false;
  bool cross_check = false;
  std::uint64_t seed = 0;

  codes::ScanOptions scan() const {
    codes::ScanOptions o;
    o.subset_budget = subset_budget;
    o.codeword_budget = codeword_budget;
    o.search_budget = search_budget;
    o.threads = std::max(1u, threads);
    o.cross_check = cross_check;
    return o;
  }
};

void add_code_options(CLI::App& app, CodeArgs& c, bool need_family_params) {
  app.add_option("--field", c.field, "Field: p, p^m, p^m:c0,c1,...,cm")->required();
  app.add_option("--family", c.family, "Code family: f1, f2 or matrix (with --matrix)")
      ->check(CLI::IsMember({"f1", "f2", "matrix"}));
  app.add_option("--lambda", c.lambda, "Evaluation set: comma list, geom:<g>:<n>, all, allstar");
  app.add_option("--k", c.k, "Dimension");
  if (need_family_params) {
    app.add_option("--r", c.r, "Deleted-row offset (f1) or h-k+1 (f2)");
    app.add_option("--h", c.h, "Top exponent for f2");
  }
  app.add_option("--v", c.v, "Column multipliers, comma list");
  app.add_option("--f", c.f, "Polynomial f, e.g. x^3+21x+18 or coeffs:a0,a1,...");
  app.add_option("--matrix", c.matrix, "Generator matrix file (text or JSON)");
  app.add_option("--extend", c.extend, "Append unit columns e_i, comma list of 1-based i");
}

void add_run_options(CLI::App& app, RunArgs& r, bool with_format = true) {
  app.add_option("--threads", r.threads, "Worker threads (default MDSFORGE_THREADS or 1)");
  app.add_option("--subset-budget", r.subset_budget, "Maximum k-subsets per scan")->check(CLI::PositiveNumber);
  app.add_option("--codeword-budget", r.codeword_budget, "Maximum codewords for min-distance")
      ->check(CLI::PositiveNumber);
  app.add_option("--search-budget", r.search_budget, "Maximum candidates per search");
  app.add_option("--seed", r.seed, "Seed for randomized sampling (default 0)");
  app.add_flag("--timings", r.timings, "Report elapsed_ms per check");
  app.add_flag("--cross-check", r.cross_check, "Compare family criteria with the minors oracle");
  app.add_option("--notation", r.notation, "Element notation: int, vec, pow")
      ->check(CLI::IsMember({"int", "vec", "pow"}));
  if (with_format) {
    app.add_option("--format", r.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
  }
}

gf::Notation notation_for(const Field& f, const RunArgs& r) {
  if (r.notation == "int") return gf::Notation::Integer;
  if (r.notation == "vec") return gf::Notation::Vector;
  if (r.notation == "pow") return gf::Notation::Power;
  return f.default_notation();
}

// ------------------------------------------------------------- parsing

std::vector<Element> parse_list(const Field& f, std::string_view text) {
  std::vector<Element> out;
  for (const auto& tok : gf::split_top_level(text, ',')) {
    if (!tok.empty()) out.push_back(f.parse_element(tok));
  }
  return out;
}

symfun::EvalSet parse_lambda(const Field& f, const std::string& text) {
  if (text.empty()) throw UsageError("--lambda is required");
  if (text == "all") return symfun::EvalSet(f, f.elements());
  if (text == "allstar") {
    auto xs = f.elements();
    xs.erase(std::remove_if(xs.begin(), xs.end(), [](const Element& e) { return e.is_zero(); }), xs.end());
    return symfun::EvalSet(f, std::move(xs));
  }
  if (text.rfind("geom:", 0) == 0) {
    const auto rest = text.substr(5);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "expected geom:<g>:<n>");
    std::size_t n = 0;
    try {
      n = std::stoul(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad length in '" + text + "'");
    }
    return construct::geom_lambda(f, f.parse_element(rest.substr(0, colon)), n);
  }
  return symfun::EvalSet(f, parse_list(f, text));
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& tok : gf::split_top_level(text, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad column index '" + tok + "'");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MatGF load_matrix(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return codes::matrix_from_json(text);
  return codes::matrix_from_text(text);
}

// ------------------------------------------------------------- instances

struct Instance {
  const Field* field = nullptr;
  std::string family;  // "f1", "f2" or "matrix"
  std::optional<family1::Spec> f1;
  std::optional<family2::Spec> f2;
  std::optional<LinearCode> code;
  std::optional<gf::Poly> f;
  std::vector<Element> v;
  bool extended = false;

  bool is_family() const { return !extended && family != "matrix"; }
};

std::size_t f2_height(const CodeArgs& a) {
  if (a.h && a.r && *a.h + 1 != a.k + *a.r) throw UsageError("--h and --r disagree: h must equal k-1+r");
  if (a.h) return *a.h;
  if (a.r) return a.k - 1 + *a.r;
  throw UsageError("family f2 needs --h or --r");
}

Instance build_instance(const CodeArgs& a) {
  Instance inst;
  inst.field = &Field::parse(a.field);
  inst.family = a.family;
  const Field& F = *inst.field;
  if (!a.v.empty()) inst.v = parse_list(F, a.v);
  if (!a.f.empty()) inst.f = gf::parse_poly(F, a.f);

  if (!a.matrix.empty() || a.family == "matrix") {
    if (a.matrix.empty()) throw UsageError("family matrix needs --matrix");
    MatGF g = load_matrix(a.matrix);
    if (&g.field() != &F) throw Error(ErrorCode::FieldMismatch, "matrix file field differs from --field");
    inst.family = "matrix";
    inst.code.emplace(std::move(g));
    if (!inst.v.empty()) inst.code = codes::scale_columns(*inst.code, inst.v);
  } else {
    if (a.k == 0) throw UsageError("--k is required");
    auto lambda = parse_lambda(F, a.lambda);
    std::optional<std::vector<Element>> v;
    if (!inst.v.empty()) v = inst.v;
    if (a.family == "f1") {
      if (a.h) throw UsageError("--h applies to family f2 only");
      inst.f1 = family1::Spec{std::move(lambda), a.k, a.r.value_or(1), v};
      inst.f1->validate();
      inst.code = family1::generator(*inst.f1);
    } else {
      const std::size_t h = f2_height(a);
      inst.f2 = family2::Spec{std::move(lambda), a.k, h, v};
      inst.f2->validate();
      inst.code = family2::generator(*inst.f2);
    }
  }
  if (!a.extend.empty()) {
    std::vector<std::vector<Element>> cols;
    for (auto i : parse_indices(a.extend)) cols.push_back(codes::unit_column(F, inst.code->k(), i));
    inst.code = codes::extend_columns(*inst.code, cols);
    inst.extended = true;
  }
  return inst;
}

// ------------------------------------------------------------- checks

enum class Outcome { True, False, Inconclusive, Budget };

struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::False;
  std::optional<CheckReport> report;
  std::string message;
  double elapsed_ms = 0;
};

CheckReport nongrs_generic(const LinearCode& c, const codes::ScanOptions& opts) {
  CheckReport r = codes::is_grs_by_schur(c, opts);
  r.check = "nongrs";
  r.verdict = !r.verdict;
  return r;
}

CheckReport parity_report(const Instance& inst) {
  const LinearCode& c = *inst.code;
  MatGF h = c.parity_check();
  std::string basis = "null space";
  if (inst.is_family() && inst.f1 && inst.f1->r == 1) {
    h = family1::parity_check(*inst.f1);
    basis = "closed form";
  } else if (inst.is_family() && inst.f2) {
    h = family2::parity_check(*inst.f2);
    basis = "closed form";
  }
  CheckReport r;
  r.check = "parity";
  r.basis = basis;
  const bool orth = mat_mul(c.generator(), transpose(h)).is_zero();
  const auto rk = rank(h);
  r.verdict = orth && rk == c.n() - c.k() && h.rows() == rk;
  r.quantity = std::int64_t(rk);
  r.notes.push_back(std::string("G H^T ") + (orth ? "= 0" : "!= 0") + ", rank H = " + std::to_string(rk));
  return r;
}

CheckReport so_report(const Instance& inst) {
  if (inst.is_family() && inst.f) {
    if (inst.v.empty()) {
      if (inst.f1) return family1::so_check(*inst.f1, *inst.f);
      return family2::so_check(*inst.f2, *inst.f);
    }
    // so_check scales internally; pass the unscaled spec with v.
    if (inst.f1) {
      auto s = *inst.f1;
      s.v.reset();
      return family1::so_check(s, *inst.f, inst.v);
    }
    auto s = *inst.f2;
    s.v.reset();
    return family2::so_check(s, *inst.f, inst.v);
  }
  if (inst.f) throw UsageError("--f needs a family code without --extend or --matrix");
  return codes::is_self_orthogonal(*inst.code);
}

CheckReport sd_report(const Instance& inst, const codes::ScanOptions& opts) {
  if (inst.is_family() && inst.v.empty()) {
    if (inst.f1) {
      if (inst.f1->r != 1) throw Error(ErrorCode::SpecViolation, "self-duality criterion covers r = 1 only");
      return family1::self_dual_check(inst.f1->lambda, inst.f1->k);
    }
    return family2::self_dual_check(inst.f2->lambda, inst.f2->k, inst.f2->h, opts.search_budget);
  }
  return codes::is_self_dual(*inst.code);
}

CheckReport run_check(const std::string& name, const Instance& inst, const codes::ScanOptions& opts) {
  const LinearCode& c = *inst.code;
  if (name == "mds") {
    if (!inst.is_family()) return codes::is_mds_minors(c, opts);
    return inst.f1 ? family1::is_mds(*inst.f1, opts) : family2::is_mds(*inst.f2, opts);
  }
  if (name == "nongrs") {
    if (!inst.is_family()) return nongrs_generic(c, opts);
    return inst.f1 ? family1::is_nongrs(*inst.f1, opts) : family2::is_nongrs(*inst.f2, opts);
  }
  if (name == "so") return so_report(inst);
  if (name == "sd") return sd_report(inst, opts);
  if (name == "dist") return codes::min_distance(c, opts);
  if (name == "parity") return parity_report(inst);
  throw UsageError("unknown check '" + name + "'");
}

CheckResult timed_check(const std::string& name, const Instance& inst, const codes::ScanOptions& opts) {
  CheckResult res;
  res.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    res.report = run_check(name, inst, opts);
    // dist is a measurement; it succeeds whenever it completes.
    res.outcome = (name == "dist" || res.report->verdict) ? Outcome::True : Outcome::False;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::Inconclusive:
        res.outcome = Outcome::Inconclusive;
        break;
      case ErrorCode::BudgetExceeded:
        res.outcome = Outcome::Budget;
        break;
      case ErrorCode::NotMDS:
        res.outcome = Outcome::False;
        break;
      default:
        throw;
    }
    res.message = e.what();
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

// ------------------------------------------------------------- rendering

std::vector<std::string> strs(const std::vector<Element>& xs, gf::Notation nt) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str(nt));
  return out;
}

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? std::string(sep) : "") + xs[i];
  return s;
}

std::string quantity_str(const codes::Quantity& q, gf::Notation nt) {
  if (const auto* i = std::get_if<std::int64_t>(&q)) return std::to_string(*i);
  return std::get<Element>(q).str(nt);
}

json quantity_json(const codes::Quantity& q, gf::Notation nt) {
  if (const auto* i = std::get_if<std::int64_t>(&q)) return *i;
  return std::get<Element>(q).str(nt);
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::True: return "true";
    case Outcome::False: return "false";
    case Outcome::Inconclusive: return "inconclusive";
    case Outcome::Budget: return "budget_exceeded";
  }
  return "?";
}

json code_json(const Instance& inst, gf::Notation nt) {
  json code;
  code["n"] = inst.code->n();
  code["k"] = inst.code->k();
  const auto& prov = inst.code->provenance();
  code["exponents"] = prov.exponents;
  code["lambda"] = strs(prov.lambda, nt);
  if (!prov.v.empty()) code["v"] = strs(prov.v, nt);
  if (prov.extra_columns) code["extra_columns"] = prov.extra_columns;
  return code;
}

json check_json(const CheckResult& r, gf::Notation nt, bool timings) {
  json j;
  if (r.outcome == Outcome::True || r.outcome == Outcome::False) {
    j["verdict"] = r.report ? r.report->verdict : false;
  } else {
    j["verdict"] = nullptr;
  }
  j["outcome"] = outcome_name(r.outcome);
  if (r.report) {
    const auto& rep = *r.report;
    if (!rep.basis.empty()) j["basis"] = rep.basis;
    if (rep.witness) {
      j["witness"] = {{"indices", rep.witness->indices},
                      {"values", strs(rep.witness->values, nt)},
                      {"detail", rep.witness->detail}};
    }
    if (rep.quantity) j["quantity"] = quantity_json(*rep.quantity, nt);
    if (!rep.certificate.empty()) j["certificate"] = strs(rep.certificate, nt);
    if (!rep.notes.empty()) j["notes"] = rep.notes;
  }
  if (!r.message.empty()) j["message"] = r.message;
  if (timings) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

void print_check_human(std::ostream& out, const CheckResult& r, gf::Notation nt, bool timings) {
  out << r.name << ": " << outcome_name(r.outcome);
  if (r.report) {
    const auto& rep = *r.report;
    if (!rep.basis.empty()) out << " (by " << rep.basis << ")";
    if (rep.quantity) out << "  quantity " << quantity_str(*rep.quantity, nt);
  }
  if (timings) out << "  [" << r.elapsed_ms << " ms]";
  out << '\n';
  if (r.report) {
    const auto& rep = *r.report;
    if (rep.witness) {
      out << "  witness {" << join(strs(rep.witness->values, nt), ",") << "}";
      if (!rep.witness->detail.empty()) out << "  " << rep.witness->detail;
      out << '\n';
    }
    if (!rep.certificate.empty()) out << "  certificate (" << join(strs(rep.certificate, nt), ", ") << ")\n";
    for (const auto& n : rep.notes) out << "  note: " << n << '\n';
  }
  if (!r.message.empty()) out << "  " << r.message << '\n';
}

int exit_for(const std::vector<CheckResult>& rs) {
  int code = kOk;
  for (const auto& r : rs) {
    if (r.outcome == Outcome::Budget) return kBudget;
    if (r.outcome != Outcome::True) code = kFalse;
  }
  return code;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void require_format(const RunArgs& r, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed) {
    if (r.format == a) return;
  }
  throw UsageError("--format " + r.format + " is not available for this command");
}

// ------------------------------------------------------------- commands

int cmd_field_info(const std::string& spec, const RunArgs& ra, bool list, std::ostream& out) {
  require_format(ra, {"human", "json"});
  const Field& F = Field::parse(spec);
  const auto nt = notation_for(F, ra);
  std::vector<std::string> mod;
  for (auto c : F.modulus()) mod.push_back(std::to_string(c));
  if (ra.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = F.spec();
    j["p"] = F.characteristic();
    j["m"] = F.degree();
    j["q"] = F.order();
    j["modulus"] = F.modulus();
    if (F.has_generator()) j["generator"] = F.element(F.generator()).str(gf::Notation::Integer);
    if (list) {
      json rows = json::array();
      for (const auto& e : F.elements()) {
        json row{{"int", e.str(gf::Notation::Integer)}, {"vec", e.str(gf::Notation::Vector)}, {"square", e.is_square()}};
        if (!e.is_zero() && F.has_generator()) row["pow"] = e.str(gf::Notation::Power);
        rows.push_back(row);
      }
      j["elements"] = rows;
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "field GF(" << F.order() << ") = GF(" << F.characteristic() << "^" << F.degree() << ")\n";
  out << "spec " << F.spec() << '\n';
  if (F.degree() > 1) out << "modulus coefficients (ascending) " << join(mod, ",") << '\n';
  if (F.has_generator()) out << "primitive element w = " << F.element(F.generator()).str(gf::Notation::Integer) << '\n';
  if (list) {
    for (const auto& e : F.elements()) {
      out << e.str(gf::Notation::Integer) << '\t' << e.str(gf::Notation::Vector);
      if (!e.is_zero() && F.has_generator()) out << '\t' << e.str(gf::Notation::Power);
      out << '\t' << (e.is_square() ? "square" : "nonsquare") << '\n';
    }
  }
  (void)nt;
  return kOk;
}

int cmd_build(const CodeArgs& ca, const RunArgs& ra, std::ostream& out) {
  require_format(ra, {"human", "json"});
  const Instance inst = build_instance(ca);
  const auto nt = notation_for(*inst.field, ra);
  if (ra.format == "json") {
    json j = json::parse(codes::matrix_to_json(inst.code->generator(), nt));
    json top;
    top["schema_version"] = kSchemaVersion;
    top["field"] = inst.field->spec();
    top["code"] = code_json(inst, nt);
    top["generator"] = j;
    out << top.dump(2) << '\n';
  } else {
    out << codes::matrix_to_text(inst.code->generator(), nt);
  }
  return kOk;
}

int cmd_check(const CodeArgs& ca, const RunArgs& ra, const std::vector<std::string>& names, std::ostream& out) {
  require_format(ra, {"human", "json"});
  if (names.empty()) throw UsageError("name at least one check: mds nongrs so sd dist parity");
  const Instance inst = build_instance(ca);
  const auto nt = notation_for(*inst.field, ra);
  const auto opts = ra.scan();
  std::vector<CheckResult> results;
  for (const auto& n : names) results.push_back(timed_check(n, inst, opts));
  if (ra.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = inst.field->spec();
    j["code"] = code_json(inst, nt);
    json checks = json::object();
    for (const auto& r : results) checks[r.name] = check_json(r, nt, ra.timings);
    j["checks"] = checks;
    out << j.dump(2) << '\n';
  } else {
    out << "code [" << inst.code->n() << "," << inst.code->k() << "] over " << inst.field->spec() << " ("
        << inst.family << (inst.extended ? ", extended" : "") << ")\n";
    for (const auto& r : results) print_check_human(out, r, nt, ra.timings);
  }
  return exit_for(results);
}

int cmd_min_distance(const CodeArgs& ca, const RunArgs& ra, std::ostream& out) {
  require_format(ra, {"human", "json"});
  const Instance inst = build_instance(ca);
  const auto nt = notation_for(*inst.field, ra);
  const auto res = timed_check("dist", inst, ra.scan());
  if (ra.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = inst.field->spec();
    j["code"] = code_json(inst, nt);
    j["checks"] = json{{"dist", check_json(res, nt, ra.timings)}};
    out << j.dump(2) << '\n';
  } else {
    print_check_human(out, res, nt, ra.timings);
  }
  return exit_for({res});
}

int cmd_reproduce(const std::vector<std::string>& ids_in, const RunArgs& ra, std::ostream& out) {
  std::vector<std::string> ids;
  for (const auto& id : ids_in) {
    if (id == "all") {
      ids.insert(ids.end(), construct::catalog_ids().begin(), construct::catalog_ids().end());
    } else {
      construct::catalog_title(id);  // UnknownId before any work starts
      ids.push_back(id);
    }
  }
  if (ids.empty()) throw UsageError("name catalog ids or 'all'");
  const auto opts = ra.scan();
  std::vector<construct::Reproduction> reps;
  for (const auto& id : ids) reps.push_back(construct::reproduce(id, opts));

  bool ok = true;
  for (const auto& r : reps) ok = ok && r.ok();
  if (ra.format == "json") {
    json arr = json::array();
    for (const auto& r : reps) {
      json claims = json::array();
      for (const auto& c : r.claims) {
        json cj{{"name", c.name}, {"status", construct::to_string(c.status)}, {"detail", c.detail}};
        if (ra.timings) cj["elapsed_ms"] = c.elapsed_ms;
        claims.push_back(cj);
      }
      arr.push_back(json{{"id", r.id}, {"title", r.title}, {"field", r.field}, {"ok", r.ok()}, {"claims", claims}});
    }
    out << json{{"schema_version", kSchemaVersion}, {"reproductions", arr}}.dump(2) << '\n';
  } else if (ra.format == "csv") {
    out << "id,claim,status,detail\n";
    for (const auto& r : reps) {
      for (const auto& c : r.claims) {
        out << r.id << ',' << csv_quote(c.name) << ',' << construct::to_string(c.status) << ',' << csv_quote(c.detail) << '\n';
      }
    }
  } else {
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : reps) {
      out << "== " << r.id << ": " << r.title << '\n';
      for (const auto& c : r.claims) {
        out << "  " << std::left << std::setw(8) << construct::to_string(c.status) << c.name;
        if (!c.detail.empty()) out << "  -- " << c.detail;
        if (ra.timings) out << "  [" << c.elapsed_ms << " ms]";
        out << '\n';
      }
      pass += r.count(construct::ClaimStatus::Pass);
      fail += r.count(construct::ClaimStatus::Fail);
      skip += r.count(construct::ClaimStatus::Skipped);
    }
    out << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
  }
  return ok ? kOk : kFalse;
}

// Self-dual search: scans n-subsets of a candidate pool and streams hits.
struct SearchHit {
  std::vector<Element> lambda;
  std::vector<Element> v;
  std::optional<gf::Poly> f;
};

int cmd_list(const RunArgs& ra, std::ostream& out) {
  if (ra.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["examples"] = json::array();
    for (const auto& id : construct::catalog_ids()) {
      j["examples"].push_back({{"id", id}, {"title", construct::catalog_title(id)}});
    }
    out << j.dump(2) << '\n';
  } else if (ra.format == "csv") {
    out << "id,title\n";
    for (const auto& id : construct::catalog_ids()) out << id << ',' << csv_quote(construct::catalog_title(id)) << '\n';
  } else {
    for (const auto& id : construct::catalog_ids()) out << id << '\t' << construct::catalog_title(id) << '\n';
  }
  return kOk;
}

void emit_hit(std::ostream& out, const SearchHit& h, gf::Notation nt, const std::string& format) {
  if (format == "csv") {
    out << join(strs(h.lambda, nt), " ") << ',' << join(strs(h.v, nt), " ") << ','
        << (h.f ? gf::format_poly(*h.f, nt) : "") << '\n';
    return;
  }
  json j{{"lambda", strs(h.lambda, nt)}, {"v", strs(h.v, nt)}};
  if (h.f) j["f"] = gf::format_poly(*h.f, nt);
  if (format == "json") {
    out << j.dump() << '\n';
  } else {
    out << "lambda {" << join(strs(h.lambda, nt), ",") << "}  v (" << join(strs(h.v, nt), ",") << ")";
    if (h.f) out << "  f = " << gf::format_poly(*h.f, nt);
    out << '\n';
  }
}

int cmd_search_sd(const CodeArgs& ca, const RunArgs& ra, std::size_t n, std::size_t limit, std::ostream& out) {
  const Field& F = Field::parse(ca.field);
  const auto nt = notation_for(F, ra);
  if (ca.k == 0) throw UsageError("--k is required");
  if (n == 0) n = 2 * ca.k;
  const auto pool = parse_lambda(F, ca.lambda.empty() ? "all" : ca.lambda);
  std::size_t h = 0;
  if (ca.family == "f2") h = f2_height(ca);
  if (ca.family == "matrix") throw UsageError("search needs family f1 or f2");
  if (n > pool.size()) throw Error(ErrorCode::BadLength, "pool smaller than n");
  if (ra.format == "csv") out << "lambda,v,f\n";

  const std::uint64_t total = scan::binomial(pool.size(), n);
  const bool exhaustive = total <= ra.search_budget;
  const std::uint64_t trials = exhaustive ? total : ra.search_budget;
  std::mt19937_64 rng(ra.seed);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::size_t> perm(pool.size());
  std::size_t hits = 0;
  for (std::uint64_t t = 0; t < trials && (limit == 0 || hits < limit); ++t) {
    if (!exhaustive) {
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> d(i, perm.size() - 1);
        std::swap(perm[i], perm[d(rng)]);
      }
      std::copy_n(perm.begin(), n, idx.begin());
      std::sort(idx.begin(), idx.end());
    } else if (t > 0) {
      scan::next_combination(pool.size(), idx);
    }
    std::vector<Element> pts;
    for (auto i : idx) pts.push_back(pool[i]);
    const symfun::EvalSet lam(F, pts);
    CheckReport rep;
    try {
      rep = ca.family == "f1" ? family1::self_dual_check(lam, ca.k) : family2::self_dual_check(lam, ca.k, h);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Inconclusive) continue;
      throw;
    }
    if (!rep.verdict) continue;
    ++hits;
    emit_hit(out, SearchHit{pts, rep.certificate, std::nullopt}, nt, ra.format);
  }
  return kOk;
}

int cmd_search_so(const CodeArgs& ca, const RunArgs& ra, std::ostream& out) {
  const Instance inst = build_instance(ca);
  if (!inst.is_family()) throw UsageError("search so needs family f1 or f2 without --extend");
  const auto nt = notation_for(*inst.field, ra);
  if (ra.format == "csv") out << "lambda,v,f\n";
  if (ra.search_budget == 0) return kOk;
  if (inst.f1) {
    if (auto hit = family1::so_search(*inst.f1, ra.search_budget)) {
      emit_hit(out, SearchHit{inst.f1->lambda.points(), hit->v, hit->f}, nt, ra.format);
    }
  } else if (auto hit = family2::so_search(*inst.f2, ra.search_budget)) {
    emit_hit(out, SearchHit{inst.f2->lambda.points(), hit->v, hit->f}, nt, ra.format);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("MDS code construction and verification over finite fields", "mdsforge");
  app.require_subcommand(1);
  // --h names the top exponent, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  RunArgs ra;
  CodeArgs ca;

  auto* field_info = app.add_subcommand("field-info", "Describe a finite field");
  std::string field_spec;
  bool list_elements = false;
  field_info->add_option("--field", field_spec, "Field spec")->required();
  field_info->add_flag("--elements", list_elements, "List every element");
  add_run_options(*field_info, ra);

  auto* build = app.add_subcommand("build", "Print a generator matrix");
  add_code_options(*build, ca, true);
  add_run_options(*build, ra);

  auto* check = app.add_subcommand("check", "Run checks: mds nongrs so sd dist parity");
  std::vector<std::string> names;
  add_code_options(*check, ca, true);
  add_run_options(*check, ra);
  check->add_option("checks", names, "Checks to run")
      ->check(CLI::IsMember({"mds", "nongrs", "so", "sd", "dist", "parity"}));

  auto* md = app.add_subcommand("min-distance", "Exact minimum distance");
  add_code_options(*md, ca, true);
  add_run_options(*md, ra);

  auto* search = app.add_subcommand("search", "Search for self-dual evaluation sets or self-orthogonal scalings");
  std::string mode;
  std::size_t search_n = 0;
  std::size_t limit = 0;
  search->add_option("mode", mode, "sd or so")->required()->check(CLI::IsMember({"sd", "so"}));
  add_code_options(*search, ca, true);
  add_run_options(*search, ra);
  search->add_option("--n", search_n, "Length for sd search (default 2k)");
  search->add_option("--limit", limit, "Stop after this many hits (0 = no limit)");

  auto* repro = app.add_subcommand("reproduce", "Rebuild catalog examples and re-verify each claim");
  std::vector<std::string> ids;
  repro->add_option("ids", ids, "Catalog ids or 'all'")->required();
  add_run_options(*repro, ra);

  auto* list = app.add_subcommand("list", "List catalog ids");
  list->add_option("--format", ra.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*field_info) return cmd_field_info(field_spec, ra, list_elements, out);
    if (*build) return cmd_build(ca, ra, out);
    if (*check) return cmd_check(ca, ra, names, out);
    if (*md) return cmd_min_distance(ca, ra, out);
    if (*search) {
      if (mode == "sd") return cmd_search_sd(ca, ra, search_n, limit, out);
      return cmd_search_so(ca, ra, out);
    }
    if (*repro) return cmd_reproduce(ids, ra, out);
    if (*list) return cmd_list(ra, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}

}  // namespace mdsforge::cli
