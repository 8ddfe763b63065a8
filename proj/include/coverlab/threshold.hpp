#pragma once

#include <optional>
#include <vector>

#include "coverlab/family.hpp"
#include "coverlab/measure.hpp"
#include "coverlab/rational.hpp"

namespace coverlab {

// Exact mu^n(fam): sum over points of the product of coordinate masses.
Rat product_measure(const Measure& mu, const ProductFamily& fam);

// Probability over the other n-1 coordinates that the slice of the family at
// coordinate `coord` (0-based) is neither empty nor the whole poset. The slice
// never depends on the coordinate itself, so enumeration runs over W^{n-1}.
Rat coordinate_influence(const ProductFamily& fam, const Measure& mu, int coord,
                         std::uint64_t budget = kDefaultBudget);

struct InfluenceReport {
  std::optional<Rat> t;          // set when the measure came from an interpolation
  std::vector<Rat> per_coordinate;
  Rat total;
  Rat family_measure;
};

InfluenceReport influence_report(const ProductFamily& fam, const Measure& mu,
                                 std::optional<Rat> t = std::nullopt,
                                 std::uint64_t budget = kDefaultBudget);

// d/dt mu_t^n(fam), evaluated exactly as the sum over coordinates of the
// product measure with the signed difference mu1 - mu0 in that coordinate.
// Requires an up-set unless allow_non_up_set; the derivative formula itself
// is plain calculus, but the monotonicity guarantees downstream are not.
Rat russo_derivative(const ProductFamily& fam, const Interpolation& interp, const Rat& t,
                     bool allow_non_up_set = false);

struct DerivativeBound {
  Rat derivative;
  Rat kappa;                 // domination strength of the endpoints
  Rat total_influence;       // at mu_t
  Rat kappa_times_total_influence;
  bool holds = false;        // derivative >= kappa * total influence, exact
};

DerivativeBound derivative_lower_bound_check(const ProductFamily& fam, const Interpolation& interp,
                                             const Rat& t, std::uint64_t budget = kDefaultBudget);

// Total influence divided by min(mu, 1-mu) * ln n. Diagnostic only; no
// constant is asserted. Undefined for trivial families or n < 2.
double bkkkl_ratio(const ProductFamily& fam, const Measure& mu,
                   std::uint64_t budget = kDefaultBudget);

struct ThresholdReport {
  Rat p, q, eps, kappa;
  long n = 0;
  double empirical_C = 0.0;  // (q-p) * kappa * ln n / ln(1/(2 eps))
};

// The smallest constant making "q - p <= C kappa^{-1} log(1/2eps) / log n"
// tight for these inputs. Natural logarithms throughout.
ThresholdReport threshold_constant(const Rat& p, const Rat& q, const Rat& eps, const Rat& kappa,
                                   long n);

}  // namespace coverlab
