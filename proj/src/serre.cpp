#include "chimukai/serre.hpp"

#include "chimukai/error.hpp"

namespace chimukai {

const char* to_string(Classification c) {
  return c == Classification::Proper ? "PROPER" : "NON_PROPER";
}

const char* to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::VanishesAsConjectured: return "VANISHES_AS_CONJECTURED";
    case ConjectureStatus::PositiveAsConjectured: return "POSITIVE_AS_CONJECTURED";
    case ConjectureStatus::Violation: return "VIOLATION";
  }
  return "?";
}

namespace {

void check_pair(const ModulePresentation& m, const ModulePresentation& n) {
  require_same_ring(m.ring, n.ring, "serre");
  m.column_degrees();
  n.column_degrees();
}

Integer finite_length(const ModulePresentation& h, const AlgebraOptions& opts, const char* what) {
  auto l = length(h, opts);
  if (l.infinite) throw Error(ErrorKind::Inadmissible, std::string(what) + " has infinite length");
  return l.value;
}

int parity_sign(int i) { return (i % 2 == 0) ? 1 : -1; }

}  // namespace

Admissibility admissible(const ModulePresentation& m, const ModulePresentation& n, const SerreOptions& opts) {
  check_pair(m, n);
  Admissibility a;
  auto hs = hilbert_series(tensor_presentations(m, n), opts.algebra);
  a.support_dim = hs.krull_dim();
  a.admissible = a.support_dim == 0;
  if (!a.admissible)
    a.diagnostic = "M ⊗ N has support of dimension " + std::to_string(a.support_dim) +
                   "; Hilbert series " + hs.to_string();
  return a;
}

Integer complex_euler_characteristic(const FreeComplex& c, const AlgebraOptions& opts) {
  Integer chi = 0;
  for (int i = c.lo(); i <= c.hi(); ++i) chi += parity_sign(i) * finite_length(homology(c, i, opts), opts, "homology");
  return chi;
}

MultiplicityReport serre_chi(const ModulePresentation& m, const ModulePresentation& n, const SerreOptions& opts) {
  auto adm = admissible(m, n, opts);
  if (!adm.admissible) throw Error(ErrorKind::Inadmissible, "inadmissible pair: " + adm.diagnostic);
  auto mc = canonicalize(m), nc = canonicalize(n);
  if (hilbert_series(mc, opts.algebra).is_zero() || hilbert_series(nc, opts.algebra).is_zero())
    throw Error(ErrorKind::InvalidInput, "intersection multiplicity with the zero module is not defined");

  MultiplicityReport r;
  r.dim_a = int(m.ring.nvars());
  r.dim_m = krull_dim(mc, opts.algebra);
  r.dim_n = krull_dim(nc, opts.algebra);
  if (r.dim_m + r.dim_n > r.dim_a)
    throw Error(ErrorKind::Internal, "dimension inequality dim M + dim N <= dim A failed");

  FreeComplex e = free_resolution(mc, opts.max_resolution_length, opts.algebra);
  r.resolution_ranks = e.ranks();
  for (int i = e.lo(); i <= e.hi(); ++i) {
    auto tor = homology_with_coefficients(e, nc, i, opts.algebra);
    r.tor_lengths.push_back(finite_length(tor, opts.algebra, "Tor"));
    r.chi += parity_sign(i) * r.tor_lengths.back();
  }
  r.classification = r.dim_m + r.dim_n == r.dim_a ? Classification::Proper : Classification::NonProper;
  if (r.classification == Classification::NonProper)
    r.conjecture_status = r.chi == 0 ? ConjectureStatus::VanishesAsConjectured : ConjectureStatus::Violation;
  else
    r.conjecture_status = r.chi > 0 ? ConjectureStatus::PositiveAsConjectured : ConjectureStatus::Violation;
  return r;
}

ComplexChi chi_via_complex(const ModulePresentation& m, const ModulePresentation& n, const SerreOptions& opts) {
  auto adm = admissible(m, n, opts);
  if (!adm.admissible) throw Error(ErrorKind::Inadmissible, "inadmissible pair: " + adm.diagnostic);
  auto mc = canonicalize(m), nc = canonicalize(n);
  FreeComplex e = free_resolution(mc, opts.max_resolution_length, opts.algebra);
  FreeComplex f = free_resolution(nc, opts.max_resolution_length, opts.algebra);
  ComplexChi out;
  out.tensor = complex_euler_characteristic(tensor_complexes(e, f), opts.algebra);
  int codim = int(m.ring.nvars()) - krull_dim(mc, opts.algebra);
  out.signed_dual = parity_sign(codim) * complex_euler_characteristic(tensor_complexes(dual_complex(e), f), opts.algebra);
  return out;
}

}  // namespace chimukai
