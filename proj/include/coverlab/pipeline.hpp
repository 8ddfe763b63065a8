#pragma once

#include <optional>
#include <string>

#include "coverlab/covering.hpp"
#include "coverlab/family_lab.hpp"
#include "coverlab/threshold.hpp"

namespace coverlab {

// Exact derivative vs. central finite difference, plus the influence lower
// bound, on an up-set family in cover space.
struct RussoCheckReport {
  Rat t, h;
  Rat derivative;
  Rat finite_difference_exact;  // (mu_{t+h} - mu_{t-h}) / 2h in exact arithmetic
  double finite_difference = 0.0;
  double relative_error = 0.0;  // |fd - derivative| / |derivative|, absolute when derivative = 0
  double tolerance = 0.0;
  Rat kappa;
  Rat total_influence;
  Rat kappa_times_total_influence;
  bool lower_bound_holds = false;
  bool within_tolerance = false;

  bool pass() const { return lower_bound_holds && within_tolerance; }
};

RussoCheckReport russo_check(const ProductFamily& cover_fam, const Rat& t, const Rat& h,
                             double tolerance, std::uint64_t budget = kDefaultBudget);

// Full pipeline on a symmetric intersecting base family: up-closure in the
// cover space, the uniform-measure bound on the closure, then the empirical
// threshold constant at p = 0, q = 1/2, eps = base density, kappa = 1/k.
struct BoundChainReport {
  int k = 0;
  int n = 0;
  std::uint64_t family_size = 0;
  SymmetryCheck base_symmetry;
  std::uint64_t closure_size = 0;
  bool closure_invariant = false;    // closure invariant under the same generators
  HalfMeasureCheck half;
  Rat eps;                           // = mu0^n(closure) = |A| / k^n
  Rat p, q, kappa;
  std::optional<double> empirical_C; // absent when n < 2
  std::string warning;
};

BoundChainReport bound_chain(const ProductFamily& base_fam, const PermutationGroupSpec& group,
                             std::uint64_t budget = kDefaultBudget);

}  // namespace coverlab
