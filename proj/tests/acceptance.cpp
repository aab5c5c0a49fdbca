#include "chimukai/cohomology.hpp"
#include "chimukai/hochschild.hpp"
#include "chimukai/lefschetz.hpp"
#include "chimukai/residue.hpp"
#include "chimukai/scene.hpp"
#include "chimukai/serre.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace chimukai;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<Verdict()>& body) {
  auto t0 = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  double s = seconds_since(t0);
  if (!v.pass) ++failures;
  std::printf("%s criterion %2d  %-28s %8.3fs%s%s\n", v.pass ? "PASS" : "FAIL", n, title, s,
              v.detail.empty() ? "" : "  ", v.detail.c_str());
  std::fflush(stdout);
}

ModulePresentation quotient(const Ring& r, std::vector<std::string> gens) {
  return ModulePresentation::quotient(Ideal::parse(r, gens));
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return "(" + s + ")";
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), unsigned(n), unsigned(k));
  return out;
}

/// χ(O(a), O(b)) on P^n = binom(b - a + n, n) as a polynomial in b - a.
Integer chi_projective(int n, long m) {
  Integer num = 1, den = 1;
  for (int k = 1; k <= n; ++k) {
    num *= Integer(m + k);
    den *= k;
  }
  return num / den;
}

std::vector<Json> scenes_report(const std::string& file) {
  RunOptions o;
  return run_scenes(load_scenes(std::string(CHIMUKAI_CORPUS_DIR) + "/" + file), o);
}

const Json* find_check(const Json& report, const std::string& name) {
  for (const auto& c : report.at("checks"))
    if (c.at("name") == name) return &c;
  return nullptr;
}

HochschildChain random_chain(const Ring& r, std::mt19937_64& rng, int degree) {
  HochschildChain c(r, degree);
  for (int t = 0; t < 2; ++t) {
    std::vector<MultiPoly> entries;
    for (int k = 0; k <= degree; ++k) {
      MultiPoly p(r);
      for (int u = 0; u < 2; ++u) {
        Exponents e(r.nvars());
        for (auto& x : e) x = int(rng() % 3);
        p += MultiPoly(r, e, Rational(long(rng() % 7) - 3));
      }
      entries.push_back(p);
    }
    c.add(entries, Rational(long(rng() % 5) + 1));
  }
  return c;
}

}  // namespace

int main() {
  criterion(1, "Koszul vanishing", [] {
    Verdict v;
    std::vector<std::string> names{"x1", "x2", "x3", "x4"};
    for (int n = 1; n <= 4; ++n) {
      auto t0 = Clock::now();
      Ring r = Ring::make({names.begin(), names.begin() + n});
      std::vector<std::string> m(names.begin(), names.begin() + n);
      auto rep = serre_chi(quotient(r, m), quotient(r, m));
      double s = seconds_since(t0);
      std::vector<Integer> want;
      for (int i = 0; i <= n; ++i) want.push_back(binomial(n, i));
      std::string tag = "n=" + std::to_string(n);
      v.require(rep.tor_lengths == want, tag + " tor " + join(rep.tor_lengths));
      v.require(rep.chi == 0, tag + " chi " + rep.chi.get_str());
      v.require(rep.classification == Classification::NonProper, tag + " classified PROPER");
      v.require(s < 1.0, tag + " took " + std::to_string(s) + "s");
    }
    return v;
  });

  criterion(2, "proper positivity", [] {
    Verdict v;
    Ring xy = Ring::make({"x", "y"});
    v.require(serre_chi(quotient(xy, {"x"}), quotient(xy, {"y"})).chi == 1, "transverse lines");
    Ring w = Ring::make({"x", "y"}, {1, 2});
    v.require(serre_chi(quotient(w, {"y"}), quotient(w, {"y - x^2"})).chi == 2, "tangent parabola");
    int ci = 0;
    for (const auto& r : scenes_report("multiplicity.json")) {
      std::string id = r.at("id");
      if (id.find("-ci3-") == std::string::npos) continue;
      ++ci;
      v.require(r.at("result").at("classification") == "PROPER", id + " not proper");
      v.require(r.at("result").at("chi").get<long>() > 0, id + " chi not positive");
    }
    v.require(ci >= 3, "too few complete-intersection scenes");
    return v;
  });

  criterion(3, "vanishing clause", [] {
    Verdict v;
    Ring r = Ring::make({"x", "y", "z", "w"});
    auto rep = serre_chi(quotient(r, {"x", "y"}), quotient(r, {"x + y", "z", "w"}));
    auto tor = rep.tor_lengths;
    tor.resize(std::max<std::size_t>(tor.size(), 4), 0);
    v.require(rep.chi == 0, "chi " + rep.chi.get_str());
    v.require(tor == std::vector<Integer>{1, 1, 0, 0}, "tor " + join(rep.tor_lengths));
    return v;
  });

  criterion(4, "signed complexes", [] {
    Verdict v;
    int pairs = 0;
    for (const auto& r : scenes_report("multiplicity.json")) {
      if (r.at("status") == "ERROR") continue;
      ++pairs;
      std::string id = r.at("id");
      for (const char* name : {"complex_tensor", "complex_signed_dual"}) {
        const Json* c = find_check(r, name);
        v.require(c && c->at("pass").get<bool>(), id + " " + name);
      }
    }
    v.require(pairs > 0, "no corpus pairs");
    return v;
  });

  criterion(5, "HRR isometry sweep", [] {
    Verdict v;
    auto t0 = Clock::now();
    for (int n = 1; n <= 4; ++n) {
      CohRing x = CohRing::projective_space(n);
      for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b) {
          auto s = SheafDescriptor::line({Integer(a)}), t = SheafDescriptor::line({Integer(b)});
          Rational m = mukai_pairing(mukai_vector(s, x), mukai_vector(t, x));
          Integer e = euler_pairing(s, t, x);
          Integer oracle = chi_projective(n, b - a);
          v.require(m == Rational(e) && e == oracle,
                    "P^" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    }
    CohRing q({1, 1});
    for (long a1 = -5; a1 <= 5; ++a1)
      for (long a2 = -5; a2 <= 5; ++a2)
        for (long b1 = -5; b1 <= 5; ++b1)
          for (long b2 = -5; b2 <= 5; ++b2) {
            auto s = SheafDescriptor::line({Integer(a1), Integer(a2)});
            auto t = SheafDescriptor::line({Integer(b1), Integer(b2)});
            Rational m = mukai_pairing(mukai_vector(s, q), mukai_vector(t, q));
            Integer e = euler_pairing(s, t, q);
            Integer oracle = chi_projective(1, b1 - a1) * chi_projective(1, b2 - a2);
            v.require(m == Rational(e) && e == oracle, "P1xP1 mismatch");
          }
    double s = seconds_since(t0);
    v.require(s < 30.0, "sweep took " + std::to_string(s) + "s");
    return v;
  });

  criterion(6, "local-global bridge", [] {
    Verdict v;
    CohRing p2 = CohRing::projective_space(2);
    auto line = SheafDescriptor::linear({1});
    Integer e = euler_pairing(line, line, p2);
    v.require(e == -1, "raw euler pairing " + e.get_str());
    v.require(mukai_pairing(mukai_vector(line, p2), mukai_vector(line, p2)) == -1, "raw mukai pairing");
    Ring xy = Ring::make({"x", "y"});
    Integer serre = serre_chi(quotient(xy, {"x"}), quotient(xy, {"y"})).chi;
    v.require(Integer(-1) * e == serre && serre == 1, "signed pairing vs serre multiplicity");
    bool flagged = false;
    for (const auto& r : scenes_report("hrr.json")) {
      if (r.at("id") != "hrr-p2-lines-bridge") continue;
      v.require(r.at("status") == "PASS", "bridge scene failed");
      v.require(r.at("result").at("serre_multiplicity") == 1, "bridge scene multiplicity");
      for (const auto& f : r.at("flags"))
        flagged = flagged || f.get<std::string>().rfind("SIGN_CONVENTION", 0) == 0;
    }
    v.require(flagged, "sign-convention flag missing");
    return v;
  });

  criterion(7, "gamma identity", [] {
    Verdict v;
    auto t0 = Clock::now();
    auto res = gamma_identity_check(12);
    v.require(res.max_error < 1e-9, "max error " + std::to_string(res.max_error));
    CohRing p1 = CohRing::projective_space(1);
    double lin = gamma_class(p1, 1)[1];
    v.require(std::abs(lin - 2 * kEulerGamma) < 1e-12, "linear coefficient " + std::to_string(lin));
    v.require(seconds_since(t0) < 1.0, "slow");
    return v;
  });

  criterion(8, "lambda invariance", [] {
    Verdict v;
    std::mt19937_64 rng(8);
    auto coef = [&] { return Gaussian(Rational(long(rng() % 7) - 3) / Rational(long(rng() % 3) + 1), Rational(long(rng() % 7) - 3)); };
    for (auto dims : std::vector<std::vector<int>>{{3}, {1, 1}}) {
      CohRing x(dims);
      std::vector<SheafDescriptor> sheaves;
      if (dims.size() == 1) {
        for (long a : {-2L, 0L, 1L, 3L}) sheaves.push_back(SheafDescriptor::line({Integer(a)}));
        sheaves.push_back(SheafDescriptor::linear({1}, {Integer(1)}));
        sheaves.push_back(SheafDescriptor::linear({2}));
      } else {
        for (long a : {-1L, 0L, 2L}) sheaves.push_back(SheafDescriptor::line({Integer(a), Integer(1 - a)}));
        sheaves.push_back(SheafDescriptor::linear({1, 0}));
        sheaves.push_back(SheafDescriptor::linear({1, 1}, {Integer(0), Integer(2)}));
      }
      for (int k = 0; k < 20; ++k) {
        GaussClass lam(x);
        for (std::size_t i = 0; i < x.size(); ++i) {
          int deg = 0;
          for (int e : x.exponents(i)) deg += e;
          if (deg % 2 == 1) lam[i] = coef();
        }
        v.require(tau(lam) == Gaussian(-1) * lam, "lambda not anti-invariant");
        for (const auto& s : sheaves)
          for (const auto& t : sheaves) {
            Gaussian twisted = mukai_pairing(lambda_twist_vector(s, x, lam), lambda_twist_vector(t, x, lam));
            Gaussian plain = Gaussian(mukai_pairing(mukai_vector(s, x), mukai_vector(t, x)));
            v.require(twisted == plain, s.to_string() + " vs " + t.to_string());
          }
      }
    }
    return v;
  });

  criterion(9, "HKR suite", [] {
    Verdict v;
    std::mt19937_64 rng(9);
    std::vector<std::string> names{"x", "y", "z"};
    for (int k = 0; k < 200; ++k) {
      int nv = 1 + int(rng() % 3);
      Ring r = Ring::make({names.begin(), names.begin() + nv});
      int deg = 1 + int(rng() % 3);
      auto c = random_chain(r, rng, deg);
      auto bc = boundary(c);
      if (deg >= 2) v.require(boundary(bc).is_zero(), "b^2 on chain " + std::to_string(k));
      v.require(hkr(bc).is_zero(), "hkr b on chain " + std::to_string(k));
      int p = 1 + int(rng() % 2);
      auto a = random_chain(r, rng, p), b = random_chain(r, rng, deg + p > 3 ? 1 : deg);
      v.require(hkr(shuffle(a, b)) == wedge(hkr(a), hkr(b)), "shuffle on chain " + std::to_string(k));
    }
    return v;
  });

  criterion(10, "Denis trace", [] {
    Verdict v;
    Ring r = Ring::make({"x"});
    auto P = [&](const char* s) { return MultiPoly::parse(r, s); };
    for (int rank = 0; rank <= 3; ++rank) {
      std::vector<std::vector<MultiPoly>> m(3, std::vector<MultiPoly>(3, P("0")));
      for (int i = 0; i < rank; ++i) m[i][i] = P("1");
      auto t = denis_trace(IdempotentMatrix(m), 2);
      v.require((t - DifferentialForm::function(MultiPoly(r, Exponents{0}, Rational(rank)))).is_zero(),
                "constant rank " + std::to_string(rank));
    }
    IdempotentMatrix e({{P("x"), P("x*(1 - x)")}, {P("1"), P("1 - x")}});
    v.require((denis_trace(e, 2) - DifferentialForm::function(P("1"))).is_zero(), "2x2 idempotent over k[x]");
    int n = 0;
    for (const auto& rep : scenes_report("denis.json")) {
      ++n;
      const Json* c = find_check(rep, "closed");
      v.require(c && c->at("pass").get<bool>(), rep.at("id").get<std::string>() + " not closed");
    }
    v.require(n > 0, "no denis scenes");
    return v;
  });

  criterion(11, "Lefschetz suite", [] {
    Verdict v;
    auto t0 = Clock::now();
    int n = 0;
    for (const auto& rep : scenes_report("lefschetz.json")) {
      ++n;
      std::string id = rep.at("id");
      for (const char* name : {"hard_lefschetz", "primitive_reassembly", "random_trace_positive"}) {
        const Json* c = find_check(rep, name);
        v.require(c && c->at("pass").get<bool>(), id + " " + name);
      }
      bool hodge = false;
      for (const auto& c : rep.at("checks")) {
        std::string cn = c.at("name");
        if (cn.rfind("hodge_positive", 0) == 0) {
          hodge = true;
          v.require(c.at("pass").get<bool>(), id + " " + cn);
        }
      }
      v.require(hodge, id + " has no hodge checks");
    }
    v.require(n > 0, "no lefschetz scenes");
    for (int d = 1; d <= 4; ++d) {
      LefschetzContext ctx(CohRing::projective_space(d));
      v.require(trace_form(diagonal_class(ctx.ring()), ctx) == d + 1, "trace of diagonal on P^" + std::to_string(d));
    }
    double s = seconds_since(t0);
    v.require(s < 60.0, "took " + std::to_string(s) + "s");
    return v;
  });

  criterion(12, "residue suite", [] {
    Verdict v;
    Ring x = Ring::make({"x"});
    Ring xy = Ring::make({"x", "y"});
    v.require(grothendieck_residue(MultiPoly::parse(x, "x"), JacobiRing(MultiPoly::parse(x, "x^3"))) == Rational(1, 3),
              "x^3");
    v.require(grothendieck_residue(MultiPoly::parse(xy, "1"), JacobiRing(MultiPoly::parse(xy, "x^2 + y^2"))) ==
                  Rational(1, 4),
              "x^2 + y^2");
    v.require(grothendieck_residue(MultiPoly::parse(xy, "x*y"), JacobiRing(MultiPoly::parse(xy, "x^3 + y^3"))) ==
                  Rational(1, 9),
              "x^3 + y^3");
    struct Case {
      const char* name;
      std::vector<int> weights;
      const char* f;
      std::size_t mu;
    };
    std::vector<Case> cases{{"A1", {1, 1}, "x^2 + y^2", 1}, {"A2", {2, 3}, "x^3 + y^2", 2},
                            {"A3", {1, 2}, "x^4 + y^2", 3}, {"A4", {2, 5}, "x^5 + y^2", 4},
                            {"A5", {1, 3}, "x^6 + y^2", 5}, {"D4", {1, 1}, "x^2*y + y^3", 4}};
    for (const auto& c : cases) {
      Ring r = Ring::make({"x", "y"}, c.weights);
      JacobiRing jr(MultiPoly::parse(r, c.f));
      v.require(jr.milnor_number() == c.mu && jr.product_formula() == Rational(long(c.mu)),
                std::string(c.name) + " milnor");
      auto g = residue_gram(jr);
      v.require(determinant(g) != 0, std::string(c.name) + " degenerate");
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.rows(); ++j) {
          int d = r.degree(jr.basis()[i]) + r.degree(jr.basis()[j]);
          if (d != jr.socle_degree() && g(i, j) != 0) v.require(false, std::string(c.name) + " not orthogonal");
        }
      v.require(grothendieck_residue(jr.hessian(), jr) == Rational(long(c.mu)), std::string(c.name) + " Res(hess)");
    }
    for (const auto& rep : scenes_report("residue.json"))
      v.require(rep.at("status") == "PASS", rep.at("id").get<std::string>() + " failed");
    return v;
  });

  criterion(13, "determinism", [] {
    Verdict v;
    RunOptions serial, wide;
    serial.jobs = 1;
    wide.jobs = 4;
    auto a = run_corpus(CHIMUKAI_CORPUS_DIR, serial), b = run_corpus(CHIMUKAI_CORPUS_DIR, wide);
    v.require(a.exit_code == 0 && b.exit_code == 0, "corpus exit code");
    v.require(a.reports.size() == b.reports.size(), "report count");
    for (std::size_t i = 0; i < std::min(a.reports.size(), b.reports.size()); ++i)
      v.require(without_timing(a.reports[i]).dump(2) == without_timing(b.reports[i]).dump(2),
                "report " + a.reports[i].at("id").get<std::string>() + " differs");
    auto bad = parse_scenes(Json::parse(
        R"({"id":"f","kind":"multiplicity","ring":{"vars":["x","y"]},"M":{"ideal":["x"]},"N":{"ideal":["y"]},"expect":{"chi":"2"}})"));
    v.require(exit_code({run_scene(bad[0])}) == 1, "failing scene exit code");
    auto err = parse_scenes(Json::parse(R"({"id":"e","kind":"residue","ring":{"vars":["x","y"]},"f":"x^2"})"));
    v.require(exit_code({run_scene(err[0])}) == 2, "input error exit code");
    return v;
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
