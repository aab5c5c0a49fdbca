#pragma once

#include "chimukai/resolutions.hpp"

#include <string>
#include <vector>

namespace chimukai {

enum class Classification { Proper, NonProper };
enum class ConjectureStatus { VanishesAsConjectured, PositiveAsConjectured, Violation };

const char* to_string(Classification c);
const char* to_string(ConjectureStatus s);

struct SerreOptions {
  AlgebraOptions algebra;
  std::size_t max_resolution_length = 16;
};

struct Admissibility {
  bool admissible = false;
  /// Krull dimension of M ⊗ N.
  int support_dim = 0;
  std::string diagnostic;
};

/// Whether M ⊗ N has finite length.
Admissibility admissible(const ModulePresentation& m, const ModulePresentation& n, const SerreOptions& opts = {});

struct MultiplicityReport {
  std::vector<Integer> tor_lengths;
  Integer chi = 0;
  int dim_m = 0;
  int dim_n = 0;
  int dim_a = 0;
  Classification classification = Classification::NonProper;
  ConjectureStatus conjecture_status = ConjectureStatus::Violation;
  /// Ranks of the resolution of M.
  std::vector<std::size_t> resolution_ranks;
};

/// χ(M, N) = Σ (-1)^i length Tor_i(M, N), with Tor taken from a resolution of M.
MultiplicityReport serre_chi(const ModulePresentation& m, const ModulePresentation& n, const SerreOptions& opts = {});

struct ComplexChi {
  Integer tensor;       ///< χ(E ⊗ F)
  Integer signed_dual;  ///< (-1)^{codim M} χ(E^* ⊗ F)
};

/// Euler characteristics of E ⊗ F and E^* ⊗ F for resolutions E of M and F of N.
ComplexChi chi_via_complex(const ModulePresentation& m, const ModulePresentation& n, const SerreOptions& opts = {});

/// Σ (-1)^i length H_i(C); throws when some homology has infinite length.
Integer complex_euler_characteristic(const FreeComplex& c, const AlgebraOptions& opts = {});

}  // namespace chimukai
