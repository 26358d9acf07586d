#include "insep/job.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "insep/artin.hpp"
#include "insep/curves.hpp"
#include "insep/fermat.hpp"
#include "insep/frobenius.hpp"
#include "insep/groebner.hpp"

namespace insep::cli {
namespace {

const std::set<std::string> kTaskKinds = {"pdegree",          "classify",       "rational-point", "curve-normalize",
                                          "curve-singular",   "curve-conductor", "curve-cohomology", "artin-edim",
                                          "verify-codim",     "verify-all"};

const std::set<std::string> kExpectKeys = {"d",        "verdict", "rational_point", "p_independent", "oracle_empty",
                                           "codim",    "residue_degree", "case",   "h0",            "h1",
                                           "curve",    "regular"};

// ---- validation -----------------------------------------------------------

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

FieldDesc parse_field(const json& j, const std::string& where) {
  if (!j.is_object()) invalid(where, "field must be an object {p, vars}");
  if (!j.contains("p") || !j["p"].is_number_integer()) invalid(where + ".p", "expected an integer");
  if (!j.contains("vars") || !j["vars"].is_array()) invalid(where + ".vars", "expected an array of names");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < j["vars"].size(); ++i) {
    const auto& v = j["vars"][i];
    if (!v.is_string()) invalid(where + ".vars[" + std::to_string(i) + "]", "expected a string");
    vars.push_back(v.get<std::string>());
  }
  try {
    return FieldDesc(j["p"].get<int>(), std::move(vars));
  } catch (const Error& e) {
    invalid(where, e.what());
  }
}

RatFunc parse_at(const json& j, const FieldDesc& K, const std::string& where) {
  if (!j.is_string()) invalid(where, "expected an expression string");
  try {
    return parse_expr(j.get<std::string>(), K);
  } catch (const Error& e) {
    invalid(where, std::string(e.kind()) + ": " + e.what() + " in \"" + j.get<std::string>() + "\"");
  }
}

std::vector<RatFunc> parse_list(const json& parent, const char* key, const FieldDesc& K, const std::string& where,
                                std::size_t min_size, std::size_t max_size = 64) {
  const std::string at = where + "." + key;
  if (!parent.contains(key) || !parent[key].is_array()) invalid(at, "expected an array of expressions");
  const auto& a = parent[key];
  if (a.size() < min_size || a.size() > max_size)
    invalid(at, "expected between " + std::to_string(min_size) + " and " + std::to_string(max_size) + " entries");
  std::vector<RatFunc> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(parse_at(a[i], K, at + "[" + std::to_string(i) + "]"));
  return out;
}

long require_int(const json& parent, const char* key, const std::string& where, long lo, long hi) {
  const std::string at = where + "." + key;
  if (!parent.contains(key) || !parent[key].is_number_integer()) invalid(at, "expected an integer");
  const long v = parent[key].get<long>();
  if (v < lo || v > hi) invalid(at, "expected a value in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

void validate_catalog(const json& catalog, const std::string& where);

void validate_task(const json& t, const FieldDesc* K, const std::string& where, const RunOptions& options) {
  if (!t.is_object()) invalid(where, "task must be an object");
  if (!t.contains("kind") || !t["kind"].is_string()) invalid(where + ".kind", "expected a string");
  const auto kind = t["kind"].get<std::string>();
  if (!kTaskKinds.count(kind)) invalid(where + ".kind", "unknown task kind \"" + kind + "\"");
  if (t.contains("id") && !t["id"].is_string()) invalid(where + ".id", "expected a string");
  if (t.contains("expect") && !t["expect"].is_object()) invalid(where + ".expect", "expected an object");
  if (kind == "verify-all") {
    if (!t.contains("catalog") || !t["catalog"].is_string()) invalid(where + ".catalog", "expected a path");
    validate_catalog(load_json_file(options.base_dir / t["catalog"].get<std::string>()), where + ".catalog");
    return;
  }
  if (!K) invalid(where, "task needs the job's field");
  if (kind == "pdegree") {
    parse_list(t, "gens", *K, where, 0);
  } else if (kind == "classify" || kind == "rational-point" || kind == "verify-codim") {
    parse_list(t, "lambda", *K, where, 2, 8);
  } else if (kind.rfind("curve-", 0) == 0) {
    parse_list(t, "lambda", *K, where, 3, 3);
    if (t.contains("chart")) require_int(t, "chart", where, 0, 2);
  } else if (kind == "artin-edim") {
    const int forms = t.contains("moduli") + t.contains("truncated") + t.contains("adjoin");
    if (forms != 1) invalid(where, "artin-edim needs exactly one of moduli, truncated, adjoin");
    if (t.contains("moduli")) parse_list(t, "moduli", *K, where, 1, 3);
    if (t.contains("truncated")) require_int(t, "truncated", where, 1, 64);
    if (t.contains("adjoin")) {
      const auto& a = t["adjoin"];
      const std::string at = where + ".adjoin";
      if (!a.is_object()) invalid(at, "expected {order, f, r}");
      const long order = require_int(a, "order", at, 1, 32);
      parse_list(a, "f", *K, at, static_cast<std::size_t>(order), static_cast<std::size_t>(order));
      require_int(a, "r", at, 1, 4);
    }
  }
}

void validate_catalog(const json& catalog, const std::string& where) {
  if (!catalog.is_array()) invalid(where, "catalog must be a JSON array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& e = catalog[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!e.is_object()) invalid(at, "entry must be an object");
    if (!e.contains("name") || !e["name"].is_string()) invalid(at + ".name", "expected a string");
    if (!names.insert(e["name"].get<std::string>()).second) invalid(at + ".name", "duplicate entry name");
    const auto K = parse_field(e.contains("field") ? e["field"] : json(), at + ".field");
    parse_list(e, "lambda", K, at, 2, 8);
    if (!e.contains("expect") || !e["expect"].is_object()) invalid(at + ".expect", "expected an object");
    for (const auto& [key, value] : e["expect"].items())
      if (!kExpectKeys.count(key)) invalid(at + ".expect." + key, "unknown expectation");
  }
}

// ---- rendering ------------------------------------------------------------

json render(const RatFunc& r, const FieldDesc& K) { return format(r, K); }

json render(const std::vector<RatFunc>& v, const FieldDesc& K) {
  json a = json::array();
  for (const auto& r : v) a.push_back(render(r, K));
  return a;
}

// Coordinates over the monomial basis of L over K.
json render(const ExtElem& e, const FieldDesc& K) { return render(e.coeffs(), K); }

json render_exp(const UExponent& e, int nvars) {
  json a = json::array();
  for (int i = 0; i < nvars; ++i) a.push_back(e[static_cast<std::size_t>(i)]);
  return a;
}

template <class F>
json render(const Polynomial<F>& f, const FieldDesc& K) {
  json a = json::array();
  for (const auto& t : f.terms()) a.push_back({{"exp", render_exp(t.exp, f.nvars())}, {"coeff", render(t.coeff, K)}});
  return a;
}

json render_optional(const std::optional<KVector>& v, const FieldDesc& K) { return v ? render(*v, K) : json(nullptr); }

json render(const EdimReport& r) {
  return {{"dim", r.dim}, {"residue_dim", r.residue_dim}, {"cotangent_dim", r.cotangent_dim}, {"edim", r.edim}};
}

json render_extension(const HeightOneExtension& L, const FieldDesc& K) {
  return {{"moduli", render(L.moduli(), K)}, {"degree", L.degree()}};
}

// ---- tasks ----------------------------------------------------------------

struct Outcome {
  json result = json::object();
  std::vector<std::string> operations;
  std::vector<std::string> invariants;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& invariant) {
    invariants.push_back(invariant);
    if (!ok) failures.push_back(invariant);
  }
};

bool equation_vanishes(const PFermatHypersurface& X, const std::vector<RatFunc>& point) {
  RatFunc s = X.field().zero();
  for (std::size_t i = 0; i < point.size(); ++i) s = s + point[i].pow(static_cast<unsigned>(X.p())) * X.lambda()[i];
  return s.is_zero();
}

void task_pdegree(const json& t, const FieldDesc& K, Outcome& out) {
  const auto gens = parse_list(t, "gens", K, "task", 0);
  out.operations.push_back("pdegree_generated");
  const auto r = pdegree_generated(gens);
  out.result = {{"d", r.d}, {"selected", r.selected}, {"basis", render(r.basis(), K)}};
  out.check(p_linear_independent(r.basis()), "selected elements are p-independent");
}

void task_classify(const json& t, const FieldDesc& K, Outcome& out) {
  const PFermatHypersurface X(K, parse_list(t, "lambda", K, "task", 2, 8));
  out.operations.push_back("classify");
  const auto c = classify(X);
  out.result = {{"n", X.n()},
                {"d", c.d},
                {"verdict", to_string(c.verdict)},
                {"regular", c.d == X.n()},
                {"rational_point", c.rational_point ? render(*c.rational_point, K) : json(nullptr)},
                {"pth_root_factor", c.pth_root_factor ? render(*c.pth_root_factor, K) : json(nullptr)}};
  if (c.rational_point) out.check(equation_vanishes(X, *c.rational_point), "rational point satisfies the equation");
}

void task_rational_point(const json& t, const FieldDesc& K, Outcome& out) {
  const PFermatHypersurface X(K, parse_list(t, "lambda", K, "task", 2, 8));
  out.operations = {"rational_point", "p_linear_independent"};
  const auto pt = rational_point(X);
  const bool independent = p_linear_independent(X.lambda());
  out.result = {{"point", pt ? render(*pt, K) : json(nullptr)}, {"p_independent", independent}};
  out.check(pt.has_value() != independent, "a point exists iff the coefficients are p-dependent");
  if (pt) out.check(equation_vanishes(X, *pt), "rational point satisfies the equation");
}

json render(const CodimCheck& c) {
  return {{"n", c.n},
          {"predicted_d", c.predicted_d},
          {"oracle_empty", c.oracle_empty},
          {"oracle_codim", c.oracle_codim ? json(*c.oracle_codim) : json(nullptr)},
          {"match", c.match},
          {"basis_size", c.basis_size},
          {"affine_dim", c.dimension.affine_dim},
          {"projective_dim", c.dimension.projective_dim}};
}

void task_verify_codim(const json& t, const FieldDesc& K, Outcome& out) {
  const PFermatHypersurface X(K, parse_list(t, "lambda", K, "task", 2, 8));
  out.operations = {"invariant_d", "buchberger", "ideal_dimension"};
  const auto c = verify_codim(X);
  out.result = render(c);
  out.check(c.match, "oracle codimension equals d");
}

json render(const CurveNormalForm& nf) {
  const auto& K = nf.field;
  return {{"lambda", render(nf.lambda, K)},
          {"c", render(nf.c, K)},
          {"q", render(nf.q, K)},
          {"scale", render(nf.scale, K)},
          {"perm", nf.perm},
          {"equation", render(nf.equation(), K)}};
}

void task_curve_normalize(const json& t, const FieldDesc& K, Outcome& out) {
  const auto nf = normal_form(K, parse_list(t, "lambda", K, "task", 3, 3));
  out.operations = {"normal_form", "normalization"};
  const auto nu = normalization(nf);
  out.result = render(nf);
  out.result["normalization"] = {{"extension", render_extension(*nu.L, K)},
                                 {"images", json::array()},
                                 {"pullback_zero", nu.pullback.is_zero()},
                                 {"divisor_length", nu.divisor_length},
                                 {"preimage_length", nu.preimage_length},
                                 {"degree", nu.degree}};
  for (const auto& img : nu.images) out.result["normalization"]["images"].push_back(render(img, K));
  out.check(nu.pullback.is_zero(), "pullback of the equation vanishes");
  out.check(nu.preimage_length == nf.p(), "preimage of the hyperplane section has length p");
}

void task_curve_singular(const json& t, const FieldDesc& K, Outcome& out) {
  const auto nf = normal_form(K, parse_list(t, "lambda", K, "task", 3, 3));
  out.operations = {"normal_form", "singular_point"};
  const auto sp = singular_point(nf);
  json raw = json::array();
  for (const auto& e : sp.raw_image) raw.push_back(render(e, K));
  out.result = {{"extension", render_extension(*sp.L, K)},
                {"rho", render(sp.rho, K)},
                {"a", {render(sp.a[0], K), render(sp.a[1], K)}},
                {"image", {render(sp.image[0], K), render(sp.image[1], K), render(sp.image[2], K)}},
                {"raw_image", raw},
                {"residue_degree", sp.residue_degree}};
  out.check(sp.residue_degree == 1 || sp.residue_degree == nf.p(), "residue degree is 1 or p");
}

json render(const ConductorProfile& c, const FieldDesc& K) {
  json basis = json::array();
  for (const auto& b : c.basis) basis.push_back(render(b, K));
  return {{"p", c.p},
          {"case", to_string(c.tag)},
          {"truncation", c.truncation},
          {"chart", c.chart},
          {"oa_dim", c.oa_dim},
          {"oa0_dim", c.oa0_dim},
          {"intersection_with_L", c.intersection_with_L},
          {"residue_dim", c.residue_dim},
          {"basis", basis},
          {"witnesses",
           {{"mu_plus_f", render_optional(c.mu_plus_f, K)},
            {"g", render_optional(c.g, K)},
            {"v", render_optional(c.v, K)},
            {"w", render_optional(c.w, K)}}},
          {"check_truncation", c.check_truncation},
          {"exponent_confirmed", c.exponent_confirmed}};
}

void check_conductor(const ConductorProfile& c, Outcome& out) {
  const auto p = static_cast<std::size_t>(c.p);
  out.check(c.oa_dim == p * (p - 1), "dim O_A = p(p-1)");
  out.check(c.oa0_dim == p * (p - 1) / 2, "dim O_A0 = p(p-1)/2");
  out.check(c.intersection_with_L == 1, "O_A0 meets L in K");
  out.check(c.exponent_confirmed, "conductor exponent confirmed at a longer truncation");
}

void task_curve_conductor(const json& t, const FieldDesc& K, Outcome& out) {
  const auto nf = normal_form(K, parse_list(t, "lambda", K, "task", 3, 3));
  out.operations = {"normal_form", "singular_point", "conductor_profile", "subalgebra_closure"};
  const auto c = t.contains("chart") ? conductor_profile(nf, t["chart"].get<int>()) : conductor_profile(nf);
  out.result = render(c, K);
  check_conductor(c, out);
}

void task_curve_cohomology(const json& t, const FieldDesc& K, Outcome& out) {
  const auto nf = normal_form(K, parse_list(t, "lambda", K, "task", 3, 3));
  out.operations = {"normal_form", "conductor_profile", "glueing_cohomology", "multiple_curve_profile"};
  const auto c = conductor_profile(nf);
  const auto h = glueing_cohomology(*c.ring, c.basis);
  const auto m = multiple_curve_profile(nf.p());
  const int p = nf.p();
  out.result = {{"h0", h.h0},
                {"h1", h.h1},
                {"admissible", h.admissible},
                {"genus_one", h.genus_one},
                {"multiple_curve", {{"multiplicity", m.multiplicity}, {"degree", m.degree}, {"chi", m.chi}}}};
  out.check(h.h0 == 1, "h0 = 1");
  out.check(h.h1 == (p - 1) * (p - 2) / 2, "h1 = (p-1)(p-2)/2");
  out.check(m.degree == -1, "deg N/N^2 = -1");
}

void task_artin_edim(const json& t, const FieldDesc& K, Outcome& out) {
  if (t.contains("moduli")) {
    const auto moduli = parse_list(t, "moduli", K, "task", 1, 3);
    out.operations = {"tensor_self", "tensor_self_over_base", "edim"};
    const auto L = HeightOneExtension::make(moduli, K.p, K.nvars());
    const auto e = edim(tensor_self(L));
    const auto eb = edim(tensor_self_over_base(L));
    out.result = render(e);
    out.result["presentation"] = "tensor_self";
    out.result["pdegree"] = moduli.size();
    out.result["over_base"] = render(eb);
    out.check(e.edim == moduli.size(), "edim of L tensor L equals the p-degree");
    out.check(eb.edim == e.edim, "both views agree");
  } else if (t.contains("truncated")) {
    out.operations = {"truncated_algebra", "edim"};
    const auto e = edim(truncated_algebra<RatFunc>(t["truncated"].get<std::size_t>(), K.zero()));
    out.result = render(e);
    out.result["presentation"] = "truncated";
  } else {
    const auto& a = t["adjoin"];
    const auto order = a["order"].get<std::size_t>();
    const auto f = parse_list(a, "f", K, "task", order, order);
    const int r = a["r"].get<int>();
    out.operations = {"truncated_algebra", "adjoin_root", "edim"};
    const auto R = truncated_algebra<RatFunc>(order, K.zero());
    const auto base = edim(R);
    const auto e = edim(adjoin_root(R, f, r));
    out.result = render(e);
    out.result["presentation"] = "adjoin";
    out.result["base_edim"] = base.edim;
    out.check(e.edim == base.edim + 1, "edim grows by one");
  }
}

// ---- catalog entries --------------------------------------------------------

json run_entry(const json& entry) {
  Outcome out;
  const auto K = parse_field(entry["field"], "entry.field");
  const PFermatHypersurface X(K, parse_list(entry, "lambda", K, "entry", 2, 8));
  json& r = out.result;
  r["name"] = entry["name"];

  out.operations.push_back("classify");
  const auto c = classify(X);
  r["n"] = X.n();
  r["d"] = c.d;
  r["verdict"] = to_string(c.verdict);
  r["regular"] = c.d == X.n();

  out.operations.push_back("verify_codim");
  const auto codim = verify_codim(X);
  r["oracle_empty"] = codim.oracle_empty;
  r["codim"] = codim.oracle_codim ? json(*codim.oracle_codim) : json(nullptr);
  out.check(codim.match, "oracle codimension equals d");

  out.operations.push_back("rational_point");
  const auto pt = rational_point(X);
  const bool independent = p_linear_independent(X.lambda());
  r["rational_point"] = pt.has_value();
  r["p_independent"] = independent;
  r["point"] = pt ? render(*pt, K) : json(nullptr);
  out.check(pt.has_value() != independent, "a point exists iff the coefficients are p-dependent");
  if (pt) out.check(equation_vanishes(X, *pt), "rational point satisfies the equation");

  if (c.d == X.n()) {
    out.operations.push_back("geometric_generic_edim");
    const auto g = geometric_generic_edim(X);
    r["geometric_edim"] = g.value;
    out.check(g.value == 1 && g.witness_verified, "geometric generic embedding dimension is 1 with a verified witness");
    out.check(1 < imperfection_degree(K), "regular p-Fermat hypersurfaces need imperfection degree above 1");
  }
  if (K.nvars() == 1 && X.n() == 2) out.check(c.d < X.n(), "no p-Fermat curve is regular over a field of imperfection 1");

  const bool curve = c.d == 1 && X.n() == 2;
  r["curve"] = curve;
  if (curve) {
    out.operations.insert(out.operations.end(), {"normal_form", "normalization", "singular_point"});
    const auto nf = normal_form(K, X.lambda());
    const auto nu = normalization(nf);
    out.check(nu.pullback.is_zero(), "pullback of the equation vanishes");
    out.check(nu.preimage_length == K.p, "preimage of the hyperplane section has length p");
    const auto sp = singular_point(nf);
    r["residue_degree"] = sp.residue_degree;
    if (K.p <= 5) {
      out.operations.insert(out.operations.end(), {"conductor_profile", "glueing_cohomology"});
      const auto prof = conductor_profile(nf);
      check_conductor(prof, out);
      r["case"] = to_string(prof.tag);
      if (K.p == 2)
        out.check(prof.tag == ConductorCase::P2, "p = 2 gives the P2 case");
      else
        out.check((prof.tag == ConductorCase::ResidueK) == (sp.residue_degree == 1),
                  "case tag agrees with the residue degree");
      const auto h = glueing_cohomology(*prof.ring, prof.basis);
      r["h0"] = h.h0;
      r["h1"] = h.h1;
      out.check(h.h0 == 1 && h.h1 == (K.p - 1) * (K.p - 2) / 2, "h0 = 1 and h1 = (p-1)(p-2)/2");
    }
  }
  return json{{"operations", out.operations}, {"invariants", out.invariants}, {"failures", out.failures},
              {"result", std::move(out.result)}};
}

// ---- execution --------------------------------------------------------------

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs work(i) for every i on a pool of threads; slot i of the result is
// work(i)'s value regardless of scheduling. Once a failure is seen under
// fail_fast, unstarted items become {"ok": false, "skipped": true}.
std::vector<json> run_pool(std::size_t count, const RunOptions& options, const std::function<json(std::size_t)>& work) {
  std::vector<json> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      if (stop.load()) {
        results[i] = {{"ok", false}, {"skipped", true}};
        continue;
      }
      results[i] = work(i);
      if (options.fail_fast && !results[i]["ok"].get<bool>()) stop.store(true);
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(options.jobs, count));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

json summarize(const std::vector<json>& items) {
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& it : items) {
    if (it.value("skipped", false))
      ++skipped;
    else if (it["ok"].get<bool>())
      ++passed;
    else
      ++failed;
  }
  return {{"total", items.size()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
}

json error_record(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

void compare_expectations(const json& expect, const json& result, json& record) {
  json mismatches = json::array();
  for (const auto& [key, value] : expect.items()) {
    const json actual = result.contains(key) ? result[key] : json(nullptr);
    if (actual != value) mismatches.push_back({{"key", key}, {"expected", value}, {"actual", actual}});
  }
  if (!mismatches.empty()) {
    record["mismatches"] = mismatches;
    record["ok"] = false;
  }
}

json run_task(const json& t, const std::optional<FieldDesc>& K, const RunOptions& options, std::size_t index) {
  const auto start = Clock::now();
  const auto kind = t["kind"].get<std::string>();
  json record = {{"index", index}, {"kind", kind}};
  if (t.contains("id")) record["id"] = t["id"];
  Outcome out;
  try {
    if (kind == "verify-all") {
      out.operations.push_back("verify_all");
      out.result = verify_all(load_json_file(options.base_dir / t["catalog"].get<std::string>()), options);
      if (!out.result["ok"].get<bool>()) out.failures.push_back("catalog entries failed");
    } else if (kind == "pdegree") {
      task_pdegree(t, *K, out);
    } else if (kind == "classify") {
      task_classify(t, *K, out);
    } else if (kind == "rational-point") {
      task_rational_point(t, *K, out);
    } else if (kind == "verify-codim") {
      task_verify_codim(t, *K, out);
    } else if (kind == "curve-normalize") {
      task_curve_normalize(t, *K, out);
    } else if (kind == "curve-singular") {
      task_curve_singular(t, *K, out);
    } else if (kind == "curve-conductor") {
      task_curve_conductor(t, *K, out);
    } else if (kind == "curve-cohomology") {
      task_curve_cohomology(t, *K, out);
    } else if (kind == "artin-edim") {
      task_artin_edim(t, *K, out);
    }
    record["ok"] = out.failures.empty();
    record["result"] = std::move(out.result);
    if (!out.failures.empty()) record["failures"] = out.failures;
    if (t.contains("expect")) compare_expectations(t["expect"], record["result"], record);
  } catch (const Error& e) {
    record["ok"] = false;
    record["error"] = error_record(e.kind(), e.what());
  } catch (const std::exception& e) {
    record["ok"] = false;
    record["error"] = error_record("InternalError", e.what());
  }
  record["provenance"] = {{"operations", out.operations}, {"invariants", out.invariants}};
  record["wall_ms"] = elapsed_ms(start);
  return record;
}

}  // namespace

json run_job(const json& spec, const RunOptions& options) {
  if (!spec.is_object()) invalid("job", "expected an object {field, tasks}");
  if (!spec.contains("tasks") || !spec["tasks"].is_array()) invalid("job.tasks", "expected an array");
  std::optional<FieldDesc> K;
  if (spec.contains("field")) K = parse_field(spec["field"], "job.field");
  const auto& tasks = spec["tasks"];
  for (std::size_t i = 0; i < tasks.size(); ++i)
    validate_task(tasks[i], K ? &*K : nullptr, "job.tasks[" + std::to_string(i) + "]", options);

  auto results = run_pool(tasks.size(), options, [&](std::size_t i) { return run_task(tasks[i], K, options, i); });
  for (std::size_t i = 0; i < results.size(); ++i)
    if (results[i].value("skipped", false)) {
      results[i]["index"] = i;
      results[i]["kind"] = tasks[i]["kind"];
    }
  json report = {{"summary", summarize(results)}, {"tasks", results}};
  report["ok"] = report["summary"]["failed"] == 0 && report["summary"]["skipped"] == 0;
  return report;
}

json verify_all(const json& catalog, const RunOptions& options) {
  validate_catalog(catalog, "catalog");
  auto entries = run_pool(catalog.size(), options, [&](std::size_t i) {
    const auto start = Clock::now();
    const auto& entry = catalog[i];
    json record = {{"name", entry["name"]}};
    try {
      json run = run_entry(entry);
      record["result"] = std::move(run["result"]);
      record["provenance"] = {{"operations", run["operations"]}, {"invariants", run["invariants"]}};
      record["ok"] = run["failures"].empty();
      if (!run["failures"].empty()) record["failures"] = run["failures"];
      compare_expectations(entry["expect"], record["result"], record);
    } catch (const Error& e) {
      record["ok"] = false;
      record["error"] = error_record(e.kind(), e.what());
    } catch (const std::exception& e) {
      record["ok"] = false;
      record["error"] = error_record("InternalError", e.what());
    }
    record["wall_ms"] = elapsed_ms(start);
    return record;
  });
  json failed = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].value("skipped", false)) entries[i]["name"] = catalog[i]["name"];
    if (!entries[i]["ok"].get<bool>()) failed.push_back(catalog[i]["name"]);
  }
  json report = {{"summary", summarize(entries)}, {"entries", entries}, {"failed_entries", failed}};
  report["ok"] = failed.empty();
  return report;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

json strip_timing(json report) {
  if (report.is_object()) report.erase("wall_ms");
  if (report.is_structured())
    for (auto& value : report) value = strip_timing(std::move(value));
  return report;
}

std::string dump(const json& report) { return report.dump(2) + "\n"; }

}  // namespace insep::cli
