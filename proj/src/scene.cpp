#include "chimukai/scene.hpp"

#include "chimukai/error.hpp"
#include "chimukai/hochschild.hpp"
#include "chimukai/lefschetz.hpp"
#include "chimukai/residue.hpp"
#include "chimukai/serre.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace chimukai {

namespace {

Json int_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

Json rat_json(const Rational& q) { return to_string(q); }

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string text(const Json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  bad(std::string(what) + " must be a string");
}

std::vector<std::string> text_list(const Json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(text(e, what));
  return out;
}

std::vector<int> int_list(const Json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) bad(std::string(what) + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

int int_field(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Ring parse_ring(const Json& j) {
  const Json& r = field(j, "ring");
  auto vars = text_list(field(r, "vars"), "ring.vars");
  if (vars.empty()) bad("ring.vars must not be empty");
  std::vector<int> weights;
  if (r.contains("weights")) weights = int_list(r.at("weights"), "ring.weights");
  return Ring::make(vars, weights);
}

MonomialOrder parse_order(const Json& j) {
  if (!j.contains("order")) return MonomialOrder::grevlex();
  return MonomialOrder(parse_order_kind(text_field(j, "order")));
}

CohRing parse_space(const Json& j, const char* key) {
  auto dims = int_list(field(j, key), key);
  if (dims.empty()) bad(std::string(key) + " needs at least one factor");
  for (int d : dims)
    if (d < 0) bad(std::string(key) + " dimensions must be nonnegative");
  return CohRing(dims);
}

ModulePresentation parse_module(const Ring& ring, const Json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be an object");
  if (j.contains("ideal")) return ModulePresentation::quotient(Ideal::parse(ring, text_list(j.at("ideal"), what)));
  if (j.contains("free")) return ModulePresentation::free(ring, int_list(j.at("free"), what));
  if (j.contains("relations")) {
    std::vector<int> shifts = j.contains("shifts") ? int_list(j.at("shifts"), what) : std::vector<int>{};
    std::vector<std::vector<std::string>> rows;
    if (!j.at("relations").is_array()) bad(std::string(what) + ".relations must be an array of rows");
    for (const auto& row : j.at("relations")) rows.push_back(text_list(row, what));
    if (shifts.empty()) shifts.assign(rows.size(), 0);
    if (shifts.size() != rows.size()) bad(std::string(what) + ": one shift per relation row is required");
    ModulePresentation p{ring, shifts, PolyMatrix::parse(ring, rows)};
    p.column_degrees();
    return p;
  }
  bad(std::string(what) + " needs 'ideal', 'free', or 'relations'");
}

std::vector<Integer> twist_list(const Json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of integers");
  std::vector<Integer> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) bad(std::string(what) + " must be an array of integers");
    out.emplace_back(long(e.get<long long>()));
  }
  return out;
}

class Checks {
public:
  void add(const std::string& name, bool pass, Json lhs, Json rhs) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    c["lhs"] = std::move(lhs);
    c["rhs"] = std::move(rhs);
    arr_.push_back(std::move(c));
  }
  Json& json() { return arr_; }

private:
  Json arr_ = Json::array();
};

struct Outcome {
  Json result = Json::object();
  Checks checks;
  Json flags = Json::array();
};

Json tor_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(int_json(z));
  return a;
}

// ---------------------------------------------------------------- multiplicity

Outcome run_multiplicity(const Json& s, const RunOptions& opts) {
  Ring ring = parse_ring(s);
  SerreOptions so;
  so.algebra.order = parse_order(s);
  so.max_resolution_length = opts.max_resolution_length;
  auto m = parse_module(ring, field(s, "M"), "M");
  auto n = parse_module(ring, field(s, "N"), "N");

  Outcome out;
  auto rep = serre_chi(m, n, so);
  out.result["tor_lengths"] = tor_json(rep.tor_lengths);
  out.result["chi"] = int_json(rep.chi);
  out.result["dim_m"] = rep.dim_m;
  out.result["dim_n"] = rep.dim_n;
  out.result["dim_a"] = rep.dim_a;
  out.result["classification"] = to_string(rep.classification);
  out.result["conjecture_status"] = to_string(rep.conjecture_status);
  Json ranks = Json::array();
  for (auto r : rep.resolution_ranks) ranks.push_back(r);
  out.result["resolution_ranks"] = ranks;
  out.flags.push_back(to_string(rep.classification));
  out.flags.push_back(to_string(rep.conjecture_status));

  Integer alt = 0;
  for (std::size_t i = 0; i < rep.tor_lengths.size(); ++i) alt += (i % 2 ? -1 : 1) * rep.tor_lengths[i];
  out.checks.add("alternating_sum", alt == rep.chi, int_json(alt), int_json(rep.chi));
  out.checks.add("dimension_inequality", rep.dim_m + rep.dim_n <= rep.dim_a, rep.dim_m + rep.dim_n, rep.dim_a);
  out.checks.add("conjecture", rep.conjecture_status != ConjectureStatus::Violation,
                 to_string(rep.conjecture_status), to_string(rep.classification));

  auto swapped = serre_chi(n, m, so);
  out.checks.add("tor_symmetry", swapped.chi == rep.chi, int_json(rep.chi), int_json(swapped.chi));

  auto cc = chi_via_complex(m, n, so);
  out.checks.add("complex_tensor", cc.tensor == rep.chi, int_json(cc.tensor), int_json(rep.chi));
  out.checks.add("complex_signed_dual", cc.signed_dual == rep.chi, int_json(cc.signed_dual), int_json(rep.chi));

  auto t = tensor_presentations(m, n);
  auto len = length(t, so.algebra);
  auto count = standard_monomial_count(t, so.algebra);
  Json count_json = count ? int_json(*count) : Json("INFINITE");
  out.checks.add("hilbert_length_vs_standard_monomials",
                 !len.infinite && count && *count == len.value && len.value == rep.tor_lengths.at(0),
                 len.to_string(), count_json);

  // Alternating sum of the free modules of a resolution recovers HS(M).
  auto e = free_resolution(m, opts.max_resolution_length, so.algebra);
  std::map<int, Integer> alt_hs;
  for (int i = e.lo(); i <= e.hi(); ++i)
    for (int sft : e.shifts(i)) alt_hs[sft] += (i % 2 ? -1 : 1);
  std::erase_if(alt_hs, [](const auto& kv) { return kv.second == 0; });
  auto hs_m = hilbert_series(m, so.algebra);
  HilbertSeries alt_series{alt_hs, hs_m.weights};
  out.checks.add("hilbert_additivity", alt_series == hs_m, alt_series.to_string(), hs_m.to_string());

  bool exact = hilbert_series(homology(e, e.lo(), so.algebra), so.algebra) == hs_m;
  for (int i = e.lo() + 1; i <= e.hi() && exact; ++i) exact = hilbert_series(homology(e, i, so.algebra), so.algebra).is_zero();
  out.checks.add("resolution_exact", exact, "H_0 = M, H_i = 0", exact ? "H_0 = M, H_i = 0" : "nonzero homology");

  Json base = Json::array({krull_dim(m, so.algebra), krull_dim(n, so.algebra), len.to_string()});
  bool same = true;
  Json others = Json::object();
  for (auto kind : {OrderKind::grevlex, OrderKind::grlex, OrderKind::lex}) {
    AlgebraOptions ao;
    ao.order = MonomialOrder(kind);
    Json v = Json::array({krull_dim(m, ao), krull_dim(n, ao), length(t, ao).to_string()});
    same = same && v == base;
    others[to_string(kind)] = v;
  }
  out.checks.add("order_independence", same, base, others);

  if (s.contains("expect")) {
    const Json& ex = s.at("expect");
    if (ex.contains("chi")) {
      Integer want(text(ex.at("chi"), "expect.chi"));
      out.checks.add("expected_chi", want == rep.chi, int_json(rep.chi), int_json(want));
    }
    if (ex.contains("tor_lengths")) {
      auto want = text_list(ex.at("tor_lengths"), "expect.tor_lengths");
      std::size_t k = std::max(want.size(), rep.tor_lengths.size());
      bool ok = true;
      for (std::size_t i = 0; i < k; ++i) {
        Integer a = i < rep.tor_lengths.size() ? rep.tor_lengths[i] : Integer(0);
        Integer b = i < want.size() ? Integer(want[i]) : Integer(0);
        ok = ok && a == b;
      }
      out.checks.add("expected_tor_lengths", ok, tor_json(rep.tor_lengths), ex.at("tor_lengths"));
    }
    if (ex.contains("classification")) {
      std::string want = text(ex.at("classification"), "expect.classification");
      out.checks.add("expected_classification", want == to_string(rep.classification),
                     to_string(rep.classification), want);
    }
  }
  return out;
}

// ---------------------------------------------------------------- hrr

/// Affine chart of each factor with the coordinates of E set to zero first.
Integer bridge_multiplicity(const SheafDescriptor& e, const SheafDescriptor& f, const CohRing& x) {
  std::vector<std::string> vars;
  std::vector<std::vector<std::size_t>> index(x.factors());
  for (std::size_t fac = 0; fac < x.factors(); ++fac)
    for (int k = 0; k < x.dims()[fac]; ++k) {
      index[fac].push_back(vars.size());
      vars.push_back(std::string(1, char('a' + fac)) + std::to_string(k + 1));
    }
  if (vars.empty()) bad("local bridge needs a positive-dimensional space");
  Ring ring = Ring::make(vars);
  std::vector<MultiPoly> ge, gf;
  for (std::size_t fac = 0; fac < x.factors(); ++fac) {
    int ce = e.codims[fac], cf = f.codims[fac];
    if (ce + cf != x.dims()[fac]) bad("local bridge needs complementary codimensions in every factor");
    for (int k = 0; k < ce; ++k) ge.push_back(MultiPoly::var(ring, index[fac][std::size_t(k)]));
    for (int k = ce; k < ce + cf; ++k) gf.push_back(MultiPoly::var(ring, index[fac][std::size_t(k)]));
  }
  auto quotient = [&](const std::vector<MultiPoly>& g) {
    if (g.empty()) return ModulePresentation::free(ring, {0});
    return ModulePresentation::quotient(Ideal(ring, g));
  };
  return serre_chi(quotient(ge), quotient(gf)).chi;
}

GaussClass parse_lambda(const Json& s, const CohRing& x) {
  GaussClass lam = convert<Gaussian>(parse_class(x, text_field(s, "lambda")));
  if (s.contains("lambda_imag")) {
    RatClass im = parse_class(x, text_field(s, "lambda_imag"));
    for (std::size_t i = 0; i < x.size(); ++i) lam[i].im += im[i];
  }
  return lam;
}

Outcome run_hrr(const Json& s, const RunOptions&) {
  CohRing x = parse_space(s, "space");
  auto e = parse_descriptor(field(s, "E"));
  auto f = parse_descriptor(field(s, "F"));
  validate(e, x);
  validate(f, x);

  Outcome out;
  RatClass ve = mukai_vector(e, x), vf = mukai_vector(f, x);
  Rational pairing = mukai_pairing(ve, vf);
  Integer chi = euler_pairing(e, f, x);
  out.result["space"] = x.name();
  out.result["E"] = e.to_string();
  out.result["F"] = f.to_string();
  out.result["v_E"] = ve.to_string();
  out.result["v_F"] = vf.to_string();
  out.result["dual_v_E"] = dual(ve).to_string();
  out.result["mukai_pairing"] = rat_json(pairing);
  out.result["euler_pairing"] = int_json(chi);

  out.checks.add("mukai_vs_euler", pairing == Rational(chi), rat_json(pairing), int_json(chi));
  if (s.contains("expect")) {
    Integer want(text(s.at("expect"), "expect"));
    out.checks.add("expected_pairing", want == chi, int_json(chi), int_json(want));
  }
  for (const auto& [name, d] : {std::pair{"grr_E", &e}, std::pair{"grr_F", &f}}) {
    auto g = grr_check(*d, x);
    out.checks.add(name, g.pass(), rat_json(g.lhs), int_json(g.rhs));
  }
  Rational tdp = td_pairing(tau(sheaf_class(e, x)), sheaf_class(f, x));
  out.checks.add("td_pairing_vs_euler", tdp == Rational(chi), rat_json(tdp), int_json(chi));

  // <w, v> = (-1)^d <v, w ch(ω)>
  RatClass ch_omega = exp(Rational(-1) * first_chern_class(x));
  Rational lhs = mukai_pairing(vf, ve);
  Rational rhs = mukai_pairing(ve, vf * ch_omega);
  if (x.dimension() % 2) rhs = -rhs;
  out.checks.add("serre_duality_symmetry", lhs == rhs, rat_json(lhs), rat_json(rhs));
  RatClass st = sqrt_todd(x);
  out.checks.add("sqrt_todd_squared", st * st == todd_class(x), (st * st).to_string(), todd_class(x).to_string());
  out.checks.add("tau_involution", tau(tau(ve)) == ve, tau(tau(ve)).to_string(), ve.to_string());

  bool both_linear = e.kind == SheafDescriptor::Kind::Linear && f.kind == SheafDescriptor::Kind::Linear;
  if (both_linear) {
    int c = codimension(e);
    Integer inter = c % 2 ? Integer(-chi) : chi;
    out.result["intersection_number"] = int_json(inter);
    if (c % 2)
      out.flags.push_back("SIGN_CONVENTION: raw pairing " + to_string(pairing) + " = (-1)^codim(E) * intersection number " +
                          to_string(inter));
    if (s.value("bridge", false)) {
      Integer local = bridge_multiplicity(e, f, x);
      out.result["serre_multiplicity"] = int_json(local);
      out.checks.add("local_global_bridge", local == inter, int_json(inter), int_json(local));
    }
  } else if (s.value("bridge", false)) {
    bad("local bridge needs linear subvarieties E and F");
  }

  if (s.contains("lambda")) {
    GaussClass lam = parse_lambda(s, x);
    GaussClass me = lambda_twist_vector(e, x, lam), mf = lambda_twist_vector(f, x, lam);
    Gaussian twisted = mukai_pairing(me, mf);
    out.result["lambda"] = lam.to_string();
    out.result["twisted_pairing"] = to_string(twisted);
    out.checks.add("lambda_invariance", twisted == Gaussian(pairing), to_string(twisted), rat_json(pairing));
  }

  if (s.contains("sweep")) {
    const Json& sw = s.at("sweep");
    int lo = int_field(sw, "min", -5), hi = int_field(sw, "max", 5);
    if (lo > hi) bad("sweep.min exceeds sweep.max");
    std::size_t pairs = 0, mismatches = 0;
    std::vector<int> a(x.factors(), lo), b(x.factors(), lo);
    auto advance = [&](std::vector<int>& v) {
      for (auto& c : v) {
        if (++c <= hi) return true;
        c = lo;
      }
      return false;
    };
    auto as_twists = [](const std::vector<int>& v) {
      std::vector<Integer> t;
      for (int c : v) t.emplace_back(c);
      return t;
    };
    std::vector<RatClass> vectors;
    std::vector<std::vector<int>> twists;
    do {
      twists.push_back(a);
      vectors.push_back(mukai_vector(SheafDescriptor::line(as_twists(a)), x));
    } while (advance(a));
    for (std::size_t i = 0; i < twists.size(); ++i)
      for (std::size_t j = 0; j < twists.size(); ++j) {
        ++pairs;
        // χ(O(a), O(b)) = ∏ C(b - a + n, n)
        Integer oracle = 1;
        for (std::size_t fac = 0; fac < x.factors(); ++fac)
          oracle *= signed_binomial(Integer(twists[j][fac] - twists[i][fac] + x.dims()[fac]), x.dims()[fac]);
        Rational p = mukai_pairing(vectors[i], vectors[j]);
        auto sd_a = SheafDescriptor::line(as_twists(twists[i])), sd_b = SheafDescriptor::line(as_twists(twists[j]));
        if (p != Rational(oracle) || euler_pairing(sd_a, sd_b, x) != oracle) ++mismatches;
      }
    out.result["sweep_pairs"] = pairs;
    out.checks.add("twist_sweep", mismatches == 0, mismatches, 0);
  }
  return out;
}

// ---------------------------------------------------------------- gamma

Outcome run_gamma(const Json& s, const RunOptions& opts) {
  int order = int_field(s, "order", 12);
  if (order < 1 || order > 16) bad("gamma order must lie in 1..16");
  double tol = opts.tol ? *opts.tol : s.value("tol", 1e-9);
  Outcome out;
  auto res = gamma_identity_check(order);
  out.result["order"] = order;
  out.result["tol"] = tol;
  out.result["max_error"] = res.max_error;
  out.checks.add("identity_max_error", res.max_error < tol, res.max_error, tol);
  if (s.contains("space")) {
    CohRing x = parse_space(s, "space");
    FloatClass g = gamma_class(x, x.dimension());
    out.result["space"] = x.name();
    out.result["gamma_class"] = g.to_string();
    for (std::size_t fac = 0; fac < x.factors(); ++fac) {
      if (x.dims()[fac] == 0) continue;
      std::vector<int> e(x.factors(), 0);
      e[fac] = 1;
      double got = g[x.index(e)];
      double want = (x.dims()[fac] + 1) * kEulerGamma;
      std::string name = x.factors() == 1 ? "linear_coefficient" : "linear_coefficient_h" + std::to_string(fac + 1);
      out.checks.add(name, std::abs(got - want) < 1e-12, got, want);
    }
    out.checks.add("constant_term", g.constant_term() == 1.0, g.constant_term(), 1.0);
  }
  return out;
}

// ---------------------------------------------------------------- lefschetz

std::vector<RatClass> monomial_basis(const CohRing& x) {
  std::vector<RatClass> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(RatClass::monomial(x, x.exponents(i), Rational(1)));
  return out;
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Outcome run_lefschetz(const Json& s, const RunOptions&) {
  CohRing x = parse_space(s, "space");
  std::vector<Rational> coefficients;
  if (s.contains("ample"))
    for (const auto& c : text_list(s.at("ample"), "ample")) coefficients.push_back(parse_rational(c));
  LefschetzContext ctx(x, coefficients);
  const int d = ctx.dimension();
  Outcome out;
  out.result["space"] = x.name();
  out.result["ample"] = ctx.ample().to_string();
  Json betti = Json::array();
  std::size_t total = 0;
  for (int p = 0; p <= d; ++p) {
    betti.push_back(x.basis(p).size());
    total += x.basis(p).size();
  }
  out.result["betti"] = betti;

  bool hl = true;
  for (int p = 0; p <= d; ++p) hl = hl && ctx.hard_lefschetz(p);
  out.checks.add("hard_lefschetz", hl, hl, true);

  std::size_t bad_reassembly = 0;
  for (const auto& m : monomial_basis(x))
    if (reassemble(primitive_decomposition(m, ctx), ctx) != m) ++bad_reassembly;
  out.checks.add("primitive_reassembly", bad_reassembly == 0, bad_reassembly, 0);

  Json hodge = Json::array();
  for (int j = 0; 2 * j <= d; ++j) {
    auto h = hodge_form(j, ctx);
    Json hj;
    hj["j"] = j;
    hj["gram"] = matrix_json(h.gram);
    Json minors = Json::array();
    for (const auto& q : h.minors) minors.push_back(rat_json(q));
    hj["minors"] = minors;
    hj["positive_definite"] = h.positive_definite;
    hodge.push_back(hj);
    out.checks.add("hodge_positive_j" + std::to_string(j), h.positive_definite, minors, "all > 0");
  }
  out.result["hodge_forms"] = hodge;
  out.checks.add("commutator", commutator_check(ctx), true, true);

  std::size_t star_bad = 0;
  for (const auto& m : monomial_basis(x))
    if (star(star(m, ctx), ctx) != m) ++star_bad;
  out.checks.add("star_squared_identity", star_bad == 0, star_bad, 0);

  RatClass diag = diagonal_class(x);
  Rational tr = trace_form(diag, ctx);
  out.result["trace_diagonal"] = rat_json(tr);
  out.checks.add("trace_diagonal_vs_betti", tr == Rational(long(total)), rat_json(tr), total);

  auto proj = kunneth_projectors(ctx);
  CohRing xx = CohRing::product(x, x);
  RatClass sum(xx);
  bool idempotent = true;
  for (const auto& p : proj) {
    sum += p;
    idempotent = idempotent && compose(p, p, ctx) == p;
  }
  out.checks.add("kunneth_projectors", idempotent && sum == diag, sum.to_string(), diag.to_string());

  int count = int_field(s, "random", 0);
  if (count > 0) {
    std::mt19937_64 rng(std::uint64_t(int_field(s, "seed", 1)));
    auto top = xx.basis(d);
    std::size_t positive = 0, zero_action = 0, failures = 0, transpose_bad = 0;
    Json traces = Json::array();
    for (int k = 0; k < count; ++k) {
      RatClass lam(xx);
      for (auto i : top) lam[i] = Rational(long(rng() % 7) - 3);
      if (lam.is_zero()) lam[top.front()] = 1;
      Rational t = trace_form(lam, ctx);
      traces.push_back(rat_json(t));
      if (t > 0) ++positive;
      else if (action_matrix(lam, ctx).is_zero()) ++zero_action;
      else ++failures;
      if (transpose(transpose(lam, ctx), ctx) != lam) ++transpose_bad;
    }
    out.result["random_traces"] = traces;
    out.checks.add("random_trace_positive", failures == 0, positive + zero_action, count);
    out.checks.add("transpose_involution", transpose_bad == 0, transpose_bad, 0);
  }
  return out;
}

// ---------------------------------------------------------------- residue

std::string monomial_text(const Ring& ring, const Exponents& e) { return MultiPoly(ring, e, 1).to_string(); }

/// Res for f = Σ c_i x_i^{k_i+1}: ∏ δ(j_i, k_i - 1) / (c_i (k_i + 1)).
std::optional<Rational> separable_residue(const MultiPoly& f, const MultiPoly& g) {
  const Ring& ring = f.ring();
  const std::size_t n = ring.nvars();
  if (f.size() != n) return std::nullopt;
  std::vector<int> power(n, -1);
  std::vector<Rational> coef(n);
  for (const auto& [e, c] : f.terms()) {
    std::size_t nz = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) {
        ++nz;
        var = i;
      }
    if (nz != 1 || power[var] != -1 || e[var] < 2) return std::nullopt;
    power[var] = e[var];
    coef[var] = c;
  }
  Rational total = 0;
  for (const auto& [e, c] : g.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < n && term != 0; ++i) {
      if (e[i] != power[i] - 2) term = 0;
      else term /= coef[i] * power[i];
    }
    total += term;
  }
  return total;
}

Outcome run_residue(const Json& s, const RunOptions&) {
  Ring ring = parse_ring(s);
  MultiPoly f = MultiPoly::parse(ring, text_field(s, "f"));
  JacobiRing jr(f);
  Outcome out;
  out.result["f"] = f.to_string();
  out.result["milnor_number"] = jr.milnor_number();
  out.result["product_formula"] = rat_json(jr.product_formula());
  Json basis = Json::array();
  for (const auto& e : jr.basis()) basis.push_back(monomial_text(ring, e));
  out.result["basis"] = basis;
  out.result["hessian"] = jr.hessian().to_string();
  out.result["socle_degree"] = jr.socle_degree();
  out.result["socle_monomial"] = monomial_text(ring, jr.socle_monomial());

  Rational mu(long(jr.milnor_number()));
  out.checks.add("milnor_vs_product_formula", mu == jr.product_formula(), rat_json(mu), rat_json(jr.product_formula()));
  Rational rh = grothendieck_residue(jr.hessian(), jr);
  out.checks.add("hessian_residue", rh == mu, rat_json(rh), rat_json(mu));

  RatMatrix gram = residue_gram(jr);
  Rational det = determinant(gram);
  out.result["gram_determinant"] = rat_json(det);
  out.checks.add("gram_nondegenerate", det != 0, rat_json(det), "nonzero");
  bool symmetric = true, orthogonal = true;
  const auto& b = jr.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      symmetric = symmetric && gram(i, j) == gram(j, i);
      if (ring.degree(b[i]) + ring.degree(b[j]) != jr.socle_degree()) orthogonal = orthogonal && gram(i, j) == 0;
    }
  out.checks.add("gram_symmetric", symmetric, symmetric, true);
  out.checks.add("degree_orthogonality", orthogonal, orthogonal, true);

  std::vector<MultiPoly> gs;
  if (s.contains("g"))
    for (const auto& g : text_list(s.at("g"), "g")) gs.push_back(MultiPoly::parse(ring, g));
  Json residues = Json::array();
  for (const auto& g : gs) {
    Json r;
    r["g"] = g.to_string();
    r["residue"] = rat_json(grothendieck_residue(g, jr));
    residues.push_back(r);
  }
  out.result["residues"] = residues;

  if (separable_residue(f, MultiPoly(ring, 1))) {
    std::vector<MultiPoly> probes = gs;
    for (const auto& e : b) probes.push_back(MultiPoly(ring, e, 1));
    std::size_t mismatches = 0;
    for (const auto& g : probes)
      if (*separable_residue(f, jr.normal_form(g)) != grothendieck_residue(g, jr)) ++mismatches;
    out.checks.add("separable_oracle", mismatches == 0, mismatches, 0);
  }

  if (s.contains("expect")) {
    auto want = text_list(s.at("expect"), "expect");
    if (want.size() != gs.size()) bad("expect needs one value per entry of g");
    for (std::size_t i = 0; i < gs.size(); ++i) {
      Rational got = grothendieck_residue(gs[i], jr), w = parse_rational(want[i]);
      out.checks.add("expected_residue_" + gs[i].to_string(), got == w, rat_json(got), rat_json(w));
    }
  }
  return out;
}

// ---------------------------------------------------------------- transform

Outcome run_transform(const Json& s, const RunOptions&) {
  CohRing x = parse_space(s, "X");
  CohRing y = s.contains("Y") ? parse_space(s, "Y") : x;
  CohRing xy = CohRing::product(x, y);
  std::string mu_text = text_field(s, "mu");
  bool diagonal = mu_text == "diagonal";
  if (diagonal && x != y) bad("diagonal correspondence needs X = Y");
  RatClass mu = diagonal ? diagonal_class(x) : parse_class(xy, mu_text);

  std::vector<RatClass> classes;
  if (s.contains("classes"))
    for (const auto& c : text_list(s.at("classes"), "classes")) classes.push_back(parse_class(x, c));
  else
    classes = monomial_basis(x);

  Outcome out;
  out.result["X"] = x.name();
  out.result["Y"] = y.name();
  out.result["mu"] = mu.to_string();
  Json images = Json::array();
  for (const auto& a : classes) {
    Json im;
    im["class"] = a.to_string();
    im["image"] = integral_transform(mu, x, y, a).to_string();
    images.push_back(im);
  }
  out.result["images"] = images;

  if (diagonal) {
    std::size_t bad_count = 0;
    for (const auto& a : classes)
      if (integral_transform(mu, x, x, a) != a) ++bad_count;
    out.checks.add("diagonal_identity", bad_count == 0, bad_count, 0);
  }

  // π_X*(π_X^* a · π_Y^*[pt]) = a
  RatClass pt = RatClass::monomial(y, y.dims(), Rational(1));
  std::size_t proj_bad = 0;
  for (const auto& a : classes)
    if (pushforward(pullback(a, x, y, true) * pullback(pt, x, y, false), x, y, true) != a) ++proj_bad;
  out.checks.add("projection_formula", proj_bad == 0, proj_bad, 0);

  if (s.contains("nu")) {
    CohRing z = s.contains("Z") ? parse_space(s, "Z") : x;
    RatClass nu = parse_class(CohRing::product(y, z), text_field(s, "nu"));
    RatClass comp = compose_correspondences(mu, nu, x, y, z);
    out.result["composition"] = comp.to_string();
    std::size_t bad_count = 0;
    for (const auto& a : classes)
      if (integral_transform(comp, x, z, a) != integral_transform(nu, y, z, integral_transform(mu, x, y, a)))
        ++bad_count;
    out.checks.add("functoriality", bad_count == 0, bad_count, 0);
  }
  return out;
}

// ---------------------------------------------------------------- denis

Outcome run_denis(const Json& s, const RunOptions&) {
  Ring ring = parse_ring(s);
  std::shared_ptr<const Ideal> quotient;
  if (s.contains("quotient"))
    quotient = std::make_shared<const Ideal>(
        Ideal::parse(ring, text_list(s.at("quotient"), "quotient")).with_basis(MonomialOrder::grevlex()));
  const Json& mj = field(s, "matrix");
  if (!mj.is_array() || mj.empty()) bad("matrix must be a nonempty array of rows");
  std::vector<std::vector<MultiPoly>> entries;
  for (const auto& row : mj) {
    std::vector<MultiPoly> r;
    for (const auto& t : text_list(row, "matrix")) r.push_back(MultiPoly::parse(ring, t));
    entries.push_back(std::move(r));
  }
  bool constant = true;
  for (const auto& r : entries)
    for (const auto& e : r) constant = constant && e.is_constant();
  IdempotentMatrix e(entries, quotient);
  int order = int_field(s, "max_order", int((ring.nvars() + 1) / 2));
  if (order < 0) bad("max_order must be nonnegative");
  DifferentialForm tr = denis_trace(e, order);

  Outcome out;
  out.result["size"] = e.size();
  out.result["max_order"] = order;
  out.result["trace"] = tr.to_string();
  DifferentialForm f0 = DifferentialForm::function(e.trace(), quotient);
  out.checks.add("degree_zero_is_trace", (tr.part(0) - f0).is_zero(), tr.part(0).to_string(), f0.to_string());
  DifferentialForm dtr = exterior_d(tr);
  out.checks.add("closed", dtr.is_zero(), dtr.to_string(), "0");
  if (constant) {
    Rational rank = e.trace().constant_term();
    DifferentialForm want = DifferentialForm::function(MultiPoly(ring, rank), quotient);
    out.checks.add("constant_rank", (tr - want).is_zero(), tr.to_string(), to_string(rank));
  }
  if (s.contains("expect")) {
    DifferentialForm want = DifferentialForm::function(MultiPoly::parse(ring, text_field(s, "expect")), quotient);
    out.checks.add("expected_trace", (tr - want).is_zero(), tr.to_string(), want.to_string());
  }
  return out;
}

// ---------------------------------------------------------------- hochschild

HochschildChain parse_chain(const Ring& ring, const Json& j) {
  int degree = int_field(j, "degree", -1);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("chain terms must be an array");
  for (const auto& t : terms) {
    auto entries = text_list(field(t, "entries"), "entries");
    if (degree < 0) degree = int(entries.size()) - 1;
  }
  if (degree < 0) bad("chain needs a degree or at least one term");
  HochschildChain c(ring, degree);
  for (const auto& t : terms) {
    auto entries = text_list(t.at("entries"), "entries");
    if (int(entries.size()) != degree + 1) bad("chain term has the wrong number of tensor factors");
    std::vector<MultiPoly> polys;
    for (const auto& e : entries) polys.push_back(MultiPoly::parse(ring, e));
    Rational w = t.contains("weight") ? parse_rational(text(t.at("weight"), "weight")) : Rational(1);
    c.add(polys, w);
  }
  return c;
}

HochschildChain random_chain(const Ring& ring, int degree, std::mt19937_64& rng) {
  HochschildChain c(ring, degree);
  const std::size_t n = ring.nvars();
  int tensors = 1 + int(rng() % 2);
  for (int t = 0; t < tensors; ++t) {
    std::vector<MultiPoly> entries;
    for (int k = 0; k <= degree; ++k) {
      MultiPoly p(ring);
      int terms = 1 + int(rng() % 2);
      for (int m = 0; m < terms; ++m) {
        Exponents e(n, 0);
        for (auto& x : e) x = int(rng() % 3);
        p += MultiPoly(ring, e, Rational(long(rng() % 5) - 2));
      }
      entries.push_back(p);
    }
    c.add(entries, Rational(long(rng() % 3) + 1));
  }
  return c;
}

Outcome run_hochschild(const Json& s, const RunOptions&) {
  Ring ring = parse_ring(s);
  std::vector<HochschildChain> chains;
  if (s.contains("chains")) {
    if (!s.at("chains").is_array()) bad("chains must be an array");
    for (const auto& c : s.at("chains")) chains.push_back(parse_chain(ring, c));
  }
  Outcome out;
  Json listed = Json::array();
  for (const auto& c : chains) {
    Json j;
    j["chain"] = c.to_string();
    j["boundary"] = c.degree() > 0 ? boundary(c).to_string() : "0";
    j["hkr"] = hkr(c).to_string();
    listed.push_back(j);
  }
  out.result["chains"] = listed;

  std::size_t explicit_count = chains.size();
  int count = 0, max_degree = 3;
  if (s.contains("random")) {
    const Json& r = s.at("random");
    count = int_field(r, "count", 200);
    max_degree = int_field(r, "max_degree", 3);
    if (count < 0 || max_degree < 0) bad("random.count and random.max_degree must be nonnegative");
    std::mt19937_64 rng(std::uint64_t(int_field(r, "seed", 1)));
    for (int k = 0; k < count; ++k) chains.push_back(random_chain(ring, int(rng() % std::uint64_t(max_degree + 1)), rng));
  }
  out.result["random_chains"] = count;

  std::size_t b2 = 0, hb = 0, sh = 0, pairs = 0;
  for (const auto& c : chains) {
    if (c.degree() >= 1) {
      auto bc = boundary(c);
      if (c.degree() >= 2 && !boundary(bc).is_zero()) ++b2;
      if (!hkr(bc).is_zero()) ++hb;
    }
  }
  for (std::size_t i = 0; i + 1 < chains.size(); ++i) {
    const auto& a = chains[i];
    const auto& b = chains[i + 1];
    if (a.degree() + b.degree() > max_degree && i >= explicit_count) continue;
    ++pairs;
    if (!(hkr(shuffle(a, b)) == wedge(hkr(a), hkr(b)))) ++sh;
  }
  out.result["shuffle_pairs"] = pairs;
  out.checks.add("boundary_squared", b2 == 0, b2, 0);
  out.checks.add("hkr_boundary", hb == 0, hb, 0);
  out.checks.add("hkr_shuffle_wedge", sh == 0, sh, 0);
  return out;
}

// ---------------------------------------------------------------- dispatch

struct KindSpec {
  std::vector<const char*> required;
  std::vector<const char*> optional;
  Outcome (*run)(const Json&, const RunOptions&);
  const char* formulas;
};

const std::map<std::string, KindSpec>& kinds() {
  static const std::map<std::string, KindSpec> table = {
      {"multiplicity",
       {{"ring", "M", "N"},
        {"order", "expect"},
        run_multiplicity,
        "[Serre intersection multiplicity] chi(M, N) = sum_i (-1)^i length Tor_i(M, N)\n"
        "[Tor via resolutions] Tor_i(M, N) = H_i(E ⊗ N), E a minimal free resolution of M\n"
        "[Signed complexes] chi(M, N) = chi(E ⊗ F) = (-1)^{codim M} chi(E^* ⊗ F)\n"
        "[Dimension inequality] dim M + dim N <= dim A; chi = 0 below, chi > 0 at equality\n"
        "[Hilbert series] HS(M) = N(t) / prod(1 - t^{w_i}); dim = pole order at t = 1\n"}},
      {"hrr",
       {{"space", "E", "F"},
        {"lambda", "lambda_imag", "sweep", "bridge", "expect"},
        run_hrr,
        "[Mukai vector] v(E) = ch(E) sqrt(td X)\n"
        "[Mukai pairing] <v, w> = int_X v^dual w, v^dual = tau(v) exp(c_1 / 2), tau = (-1)^p on H^{2p}\n"
        "[Hirzebruch-Riemann-Roch] chi(E, F) = int_X ch(E)^dual ch(F) td X = <v(E), v(F)>\n"
        "[Euler pairing oracle] chi(O(a), O(b)) = prod_i binom(b_i - a_i + n_i, n_i)\n"
        "[Twisted Mukai vector] mu_Lambda(E) = v(E) exp(i Lambda) with tau(Lambda) = -Lambda\n"
        "[Local-global bridge] (-1)^{codim Y} chi(O_Y, O_Z) = Serre multiplicity at Y ∩ Z\n"}},
      {"gamma",
       {{},
        {"order", "tol", "space"},
        run_gamma,
        "[Gamma class] Gamma(X) = exp(gamma ch_1(T_X) + sum_{n>=2} zeta(n) / n ch_n(T_X))\n"
        "[Gamma identity] z / (1 - e^{-z}) = e^{i pi q} Gamma(1 + q) Gamma(1 - q), z = 2 pi i q\n"}},
      {"lefschetz",
       {{"space"},
        {"ample", "random", "seed"},
        run_lefschetz,
        "[Hard Lefschetz] L^{d-2p} : H^{2p} -> H^{2(d-p)} is bijective\n"
        "[Lefschetz decomposition] a = sum_k L^k p_k, p_k primitive: L^{d-2q+1} p = 0 on H^{2q}\n"
        "[Lambda operator] Lambda(L^k m) = L^{k-1} m\n"
        "[Hodge star] *(L^k m) = (-1)^q L^{d-2q-k} m\n"
        "[Hodge-Riemann form] (a, b) = (-1)^j int L^{d-2j} a b on primitive classes of degree 2j\n"
        "[Transpose of correspondences] adjoint of the action for (m, n) -> int m *n; trace form Tr(lambda' lambda)\n"}},
      {"residue",
       {{"ring", "f"},
        {"g", "expect"},
        run_residue,
        "[Jacobi ring] Jac(f) = Q[x] / (df/dx_1, ..., df/dx_n), mu = dim Jac(f)\n"
        "[Milnor number] mu = prod_i (d / w_i - 1) for quasi-homogeneous f of degree d\n"
        "[Grothendieck residue] Res(g) = mu * c(g) / c(hess f), c = socle coefficient\n"
        "[Residue pairing] (a, b) = Res(a b), nondegenerate on Jac(f)\n"}},
      {"transform",
       {{"X", "mu"},
        {"Y", "Z", "nu", "classes"},
        run_transform,
        "[Integral transform] phi^mu(a) = pi_Y*(pi_X^* a . mu)\n"
        "[Composition] nu o mu = pi_XZ*(pi_XY^* mu . pi_YZ^* nu)\n"
        "[Diagonal] Delta = sum_a e_a^dual ⊗ e_a acts as the identity\n"}},
      {"denis",
       {{"ring", "matrix"},
        {"quotient", "max_order", "expect"},
        run_denis,
        "[Denis trace] Tr(e^) with e^ = e + sum_{n>=1} (2n)! / (n!)^2 (e - 1/2)(de)^{2n}\n"
        "[Closedness] d Tr(e^) = 0 for idempotent e\n"}},
      {"hochschild",
       {{"ring"},
        {"chains", "random"},
        run_hochschild,
        "[Hochschild boundary] b(b_0 ⊗ ... ⊗ b_r) = sum_i (-1)^i ... b_i b_{i+1} ... + (-1)^r b_r b_0 ⊗ ...\n"
        "[HKR map] b_0 ⊗ ... ⊗ b_r -> (1/r!) b_0 db_1 ∧ ... ∧ db_r\n"
        "[Shuffle product] (a_0 ⊗ a')(b_0 ⊗ b') = a_0 b_0 ⊗ sum_sigma sign(sigma) sigma(a' ⊗ b')\n"}},
  };
  return table;
}

const KindSpec& kind_spec(const std::string& kind) {
  auto it = kinds().find(kind);
  if (it == kinds().end()) bad("unknown scene kind '" + kind + "'");
  return it->second;
}

void validate_scene(const Json& j) {
  if (!j.is_object()) bad("scene must be a JSON object");
  std::string id = text_field(j, "id");
  if (id.empty()) bad("scene id must not be empty");
  std::string kind = text_field(j, "kind");
  const KindSpec& spec = kind_spec(kind);
  for (const char* key : spec.required)
    if (!j.contains(key)) bad("scene '" + id + "': missing field '" + key + "'");
  for (const auto& [key, _] : j.items()) {
    if (key == "id" || key == "kind" || key == "description") continue;
    auto known = [&](const std::vector<const char*>& keys) {
      return std::any_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; });
    };
    if (!known(spec.required) && !known(spec.optional))
      bad("scene '" + id + "': unexpected field '" + key + "' for kind " + kind);
  }
}

Json timed_report(const Scene& scene, const RunOptions& opts) {
  Json report;
  report["id"] = scene.id;
  report["kind"] = scene.kind;
  Json inputs = scene.doc;
  inputs.erase("id");
  inputs.erase("kind");
  report["inputs"] = inputs;
  auto start = std::chrono::steady_clock::now();
  Json error;
  Outcome out;
  std::string status;
  try {
    out = kind_spec(scene.kind).run(scene.doc, opts);
    bool pass = std::all_of(out.checks.json().begin(), out.checks.json().end(),
                            [](const Json& c) { return c.at("pass").get<bool>(); });
    status = pass ? "PASS" : "FAIL";
  } catch (const Error& e) {
    error["kind"] = to_string(e.kind());
    error["message"] = e.what();
    status = e.kind() == ErrorKind::Internal ? "FAIL" : "ERROR";
  } catch (const nlohmann::json::exception& e) {
    error["kind"] = to_string(ErrorKind::InvalidInput);
    error["message"] = e.what();
    status = "ERROR";
  } catch (const std::exception& e) {
    error["kind"] = to_string(ErrorKind::Internal);
    error["message"] = e.what();
    status = "FAIL";
  }
  auto stop = std::chrono::steady_clock::now();
  report["result"] = out.result;
  report["checks"] = out.checks.json();
  report["flags"] = out.flags;
  if (!error.is_null()) report["error"] = error;
  report["status"] = status;
  report["timing_ms"] = std::round(std::chrono::duration<double, std::milli>(stop - start).count() * 1000.0) / 1000.0;
  return report;
}

std::string headline(const Json& r) {
  if (r.contains("error")) return r["error"]["kind"].get<std::string>() + ": " + r["error"]["message"].get<std::string>();
  const Json& res = r.at("result");
  const std::string kind = r.at("kind");
  auto str = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (kind == "multiplicity") return "chi=" + str(res.at("chi")) + " " + str(res.at("classification"));
  if (kind == "hrr") return "pairing=" + str(res.at("mukai_pairing")) + " euler=" + str(res.at("euler_pairing"));
  if (kind == "gamma") {
    std::ostringstream os;
    os.precision(3);
    os << "max_error=" << res.at("max_error").get<double>();
    return os.str();
  }
  if (kind == "lefschetz") return "betti=" + res.at("betti").dump() + " trace=" + str(res.at("trace_diagonal"));
  if (kind == "residue") return "mu=" + str(res.at("milnor_number"));
  if (kind == "transform") return "images=" + std::to_string(res.at("images").size());
  if (kind == "denis") return "Tr=" + str(res.at("trace"));
  if (kind == "hochschild")
    return "chains=" + std::to_string(res.at("chains").size() + res.at("random_chains").get<std::size_t>());
  return "";
}

}  // namespace

RatClass parse_class(const CohRing& ring, const std::string& textv) {
  std::vector<std::string> vars;
  if (ring.factors() == 1) vars.push_back("h");
  else
    for (std::size_t f = 0; f < ring.factors(); ++f) vars.push_back("h" + std::to_string(f + 1));
  Ring pr = Ring::make(vars);
  MultiPoly p = MultiPoly::parse(pr, textv);
  RatClass out(ring);
  for (const auto& [e, c] : p.terms()) out += RatClass::monomial(ring, e, c);
  return out;
}

SheafDescriptor parse_descriptor(const Json& j) {
  if (!j.is_object() || j.size() != 1) bad("sheaf descriptor must be an object with exactly one key");
  if (j.contains("line")) return SheafDescriptor::line(twist_list(j.at("line"), "line"));
  if (j.contains("linear")) {
    const Json& l = j.at("linear");
    auto codims = int_list(field(l, "codim"), "linear.codim");
    std::vector<Integer> twists;
    if (l.contains("twist")) twists = twist_list(l.at("twist"), "linear.twist");
    return SheafDescriptor::linear(codims, twists);
  }
  if (j.contains("sum")) {
    if (!j.at("sum").is_array()) bad("sum must be an array of descriptors");
    std::vector<SheafDescriptor> parts;
    for (const auto& p : j.at("sum")) parts.push_back(parse_descriptor(p));
    return SheafDescriptor::sum(parts);
  }
  if (j.contains("shift")) return SheafDescriptor::shift(parse_descriptor(j.at("shift")));
  bad("sheaf descriptor needs 'line', 'linear', 'sum', or 'shift'");
}

std::vector<Scene> parse_scenes(const Json& doc) {
  std::vector<Scene> out;
  auto add = [&](const Json& j) {
    validate_scene(j);
    out.push_back({j.at("id").get<std::string>(), j.at("kind").get<std::string>(), j});
  };
  if (doc.is_object() && doc.contains("scenes")) {
    if (!doc.at("scenes").is_array()) bad("'scenes' must be an array");
    for (const auto& j : doc.at("scenes")) add(j);
  } else {
    add(doc);
  }
  std::set<std::string> ids;
  for (const auto& s : out)
    if (!ids.insert(s.id).second) bad("duplicate scene id '" + s.id + "'");
  return out;
}

std::vector<Scene> load_scenes(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
  return parse_scenes(doc);
}

Json run_scene(const Scene& scene, const RunOptions& opts) { return timed_report(scene, opts); }

bool report_passed(const Json& report) { return report.at("status") == "PASS"; }

Json without_timing(const Json& report) {
  Json r = report;
  r.erase("timing_ms");
  return r;
}

int exit_code(const std::vector<Json>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.at("status") == "ERROR") return 2;
    if (!report_passed(r)) code = 1;
  }
  return code;
}

std::vector<Json> run_scenes(const std::vector<Scene>& scenes, const RunOptions& opts) {
  std::vector<Json> reports(scenes.size());
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = unsigned(std::min<std::size_t>(jobs, scenes.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < scenes.size();) reports[i] = run_scene(scenes[i], opts);
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  }
  return reports;
}

std::string explain(const Scene& scene) {
  std::string out = "scene " + scene.id + " (" + scene.kind + ")\n";
  return out + kind_spec(scene.kind).formulas;
}

namespace {

/// Exact match except for floating-point leaves, which may differ in the last digits.
bool golden_equal(const Json& a, const Json& b) {
  if (a.is_number_float() || b.is_number_float()) {
    if (!a.is_number() || !b.is_number()) return false;
    double x = a.get<double>(), y = b.get<double>();
    return std::abs(x - y) <= 1e-12 + 1e-9 * std::max(std::abs(x), std::abs(y));
  }
  if (a.is_number() || b.is_number()) return a == b;
  if (a.type() != b.type() || a.size() != b.size()) return false;
  if (a.is_object()) {
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
      if (ia.key() != ib.key() || !golden_equal(*ia, *ib)) return false;
    return true;
  }
  if (a.is_array()) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!golden_equal(a[i], b[i])) return false;
    return true;
  }
  return a == b;
}

}  // namespace

CorpusResult run_corpus(const std::string& path, const RunOptions& opts, bool write_golden) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path root(path);
  std::vector<fs::path> files;
  fs::path expected;
  if (fs::is_directory(root, ec)) {
    for (const auto& entry : fs::directory_iterator(root, ec))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    if (ec) bad("cannot list " + path);
    std::sort(files.begin(), files.end());
    expected = root / "expected";
  } else if (fs::is_regular_file(root, ec)) {
    files.push_back(root);
    expected = root.parent_path() / "expected";
  } else {
    bad("corpus path " + path + " is not readable");
  }
  std::vector<Scene> scenes;
  std::set<std::string> ids;
  for (const auto& f : files)
    for (auto& s : load_scenes(f.string())) {
      if (!ids.insert(s.id).second) bad("duplicate scene id '" + s.id + "' in " + f.string());
      scenes.push_back(std::move(s));
    }

  CorpusResult result;
  result.reports = run_scenes(scenes, opts);
  for (auto& r : result.reports) {
    fs::path golden = expected / (r.at("id").get<std::string>() + ".json");
    Json plain = without_timing(r);
    if (write_golden) {
      fs::create_directories(expected, ec);
      std::ofstream out(golden);
      if (!out) bad("cannot write " + golden.string());
      out << plain.dump(2) << "\n";
      continue;
    }
    if (!fs::exists(golden, ec)) continue;
    std::ifstream in(golden);
    Json want;
    try {
      want = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      bad(golden.string() + ": " + e.what());
    }
    bool same = golden_equal(want, plain);
    Json check;
    check["name"] = "golden";
    check["pass"] = same;
    check["lhs"] = same ? "report matches" : "report differs";
    check["rhs"] = golden.filename().string();
    r["checks"].push_back(check);
    if (!same && r.at("status") == "PASS") r["status"] = "FAIL";
  }
  result.exit_code = exit_code(result.reports);
  return result;
}

std::string summary_table(const std::vector<Json>& reports) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"ID", "KIND", "STATUS", "CHECKS", "RESULT"});
  std::size_t pass = 0, fail = 0, error = 0;
  for (const auto& r : reports) {
    std::size_t ok = 0, total = r.at("checks").size();
    for (const auto& c : r.at("checks")) ok += c.at("pass").get<bool>();
    std::string status = r.at("status");
    if (status == "PASS") ++pass;
    else if (status == "ERROR") ++error;
    else ++fail;
    rows.push_back({r.at("id").get<std::string>(), r.at("kind").get<std::string>(), status,
                    std::to_string(ok) + "/" + std::to_string(total), headline(r)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) os << row[c] << std::string(width[c] - row[c].size() + 2, ' ');
    os << row[4] << "\n";
  }
  os << reports.size() << " scenes: " << pass << " passed, " << fail << " failed, " << error << " errors\n";
  return os.str();
}

}  // namespace chimukai
