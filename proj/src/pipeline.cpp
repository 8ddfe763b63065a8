#include "coverlab/pipeline.hpp"

#include <cmath>

namespace coverlab {

RussoCheckReport russo_check(const ProductFamily& cover_fam, const Rat& t, const Rat& h,
                             double tolerance, std::uint64_t budget) {
  if (cover_fam.space() != Space::cover)
    throw ValidationError("derivative check expects a cover-space family");
  if (h <= 0) throw ValidationError("finite-difference step must be positive");
  if (t - h < 0 || t + h > 1)
    throw ValidationError("finite-difference stencil leaves [0,1]; shrink h or move t");
  if (!family_is_up_set(cover_fam))
    throw ValidationError("family is not an up-set in the product order");

  CoveringPoset cov = build_covering(cover_fam.k());
  Interpolation interp = cov.interpolation();

  RussoCheckReport report;
  report.t = t;
  report.h = h;
  report.tolerance = tolerance;
  report.derivative = russo_derivative(cover_fam, interp, t);

  const Rat plus = product_measure(interp.at(t + h), cover_fam);
  const Rat minus = product_measure(interp.at(t - h), cover_fam);
  report.finite_difference_exact = (plus - minus) / (2 * h);
  report.finite_difference = rat_double(report.finite_difference_exact);

  const Rat diff = abs(report.finite_difference_exact - report.derivative);
  report.relative_error = report.derivative == 0
                              ? rat_double(diff)
                              : rat_double(diff / abs(report.derivative));
  report.within_tolerance = report.relative_error <= tolerance;

  DerivativeBound bound = derivative_lower_bound_check(cover_fam, interp, t, budget);
  report.kappa = bound.kappa;
  report.total_influence = bound.total_influence;
  report.kappa_times_total_influence = bound.kappa_times_total_influence;
  report.lower_bound_holds = bound.holds;
  return report;
}

BoundChainReport bound_chain(const ProductFamily& base_fam, const PermutationGroupSpec& group,
                             std::uint64_t budget) {
  if (base_fam.space() != Space::base)
    throw ValidationError("bound chain expects a base-space family");
  if (base_fam.empty()) throw ValidationError("bound chain needs a nonempty family");

  BoundChainReport report;
  report.k = base_fam.k();
  report.n = base_fam.n();
  report.family_size = base_fam.size();

  report.base_symmetry = is_symmetric(base_fam, group);
  if (!report.base_symmetry.invariant)
    throw ValidationError("family is not invariant under the supplied generators");
  if (!report.base_symmetry.transitive)
    throw ValidationError("supplied generators do not generate a transitive group");
  if (!is_intersecting_family(base_fam))
    throw ValidationError("family is not intersecting");

  CoveringPoset cov = build_covering(base_fam.k());

  // stage 1: closure
  ProductFamily closure = family_up_closure(embed(cov, base_fam), budget);
  report.closure_size = closure.size();
  report.closure_invariant = is_symmetric(closure, group).invariant;

  // stage 2: half-measure
  report.half = half_measure_check(closure, budget);

  // stage 3: bound
  report.eps = product_measure(cov.mu0, closure);
  const auto [size, density] = family_size_and_density(base_fam);
  if (report.eps != density)
    throw Error("internal: mu0 of the closure disagrees with the base density");
  report.p = rat(0);
  report.q = rat(1, 2);
  report.kappa = domination_strength(cov.poset, cov.mu0, cov.mu1, budget).strength;
  if (report.n < 2) {
    report.warning = "log n = 0 at n = 1; empirical constant undefined";
  } else if (report.eps <= 0 || report.eps >= rat(1, 2)) {
    report.warning = "eps outside (0, 1/2); empirical constant undefined";
  } else {
    report.empirical_C =
        threshold_constant(report.p, report.q, report.eps, report.kappa, report.n).empirical_C;
  }
  return report;
}

}  // namespace coverlab
