#include "coverlab/threshold.hpp"

#include <cmath>

namespace coverlab {

Rat product_measure(const Measure& mu, const ProductFamily& fam) {
  if (mu.host() != fam.host())
    throw ValidationError("product measure: measure and family live on different posets");
  const std::vector<Rat>& mass = mu.masses();
  Rat total = 0;
  for (std::uint64_t code : fam.codes()) {
    Rat term = 1;
    for (int i = 0; i < fam.n(); ++i) term *= mass[fam.coord_index(code, i)];
    total += term;
  }
  return total;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t budget, const char* what) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > budget)
      throw BudgetError(std::string(what) + " exceeds budget " + std::to_string(budget));
  }
  return out;
}

}  // namespace

Rat coordinate_influence(const ProductFamily& fam, const Measure& mu, int coord,
                         std::uint64_t budget) {
  if (mu.host() != fam.host())
    throw ValidationError("influence: measure and family live on different posets");
  if (coord < 0 || coord >= fam.n()) throw ValidationError("influence coordinate out of range");
  const int m = fam.host().size();
  const int n = fam.n();
  checked_pow(static_cast<std::uint64_t>(m), n - 1, budget, "influence enumeration of W^{n-1}");

  const std::vector<Rat>& mass = mu.masses();
  Rat influence = 0;
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  // odometer over the n-1 free coordinates; the slice at `coord` is scanned
  // for properness and weighted by the product mass of the free coordinates
  while (true) {
    Rat weight = 1;
    for (int i = 0; i < n; ++i)
      if (i != coord) weight *= mass[tuple[i]];
    if (weight != 0) {
      int members = 0;
      for (int w = 0; w < m; ++w) {
        tuple[coord] = w;
        if (fam.contains(fam.encode(tuple))) ++members;
      }
      tuple[coord] = 0;
      if (members != 0 && members != m) influence += weight;
    }
    int pos = n - 1;
    if (pos == coord) --pos;
    while (pos >= 0) {
      if (++tuple[pos] < m) break;
      tuple[pos] = 0;
      --pos;
      if (pos == coord) --pos;
    }
    if (pos < 0) break;
  }
  return influence;
}

InfluenceReport influence_report(const ProductFamily& fam, const Measure& mu, std::optional<Rat> t,
                                 std::uint64_t budget) {
  InfluenceReport report;
  report.t = std::move(t);
  report.total = 0;
  for (int i = 0; i < fam.n(); ++i) {
    report.per_coordinate.push_back(coordinate_influence(fam, mu, i, budget));
    report.total += report.per_coordinate.back();
  }
  report.family_measure = product_measure(mu, fam);
  return report;
}

Rat russo_derivative(const ProductFamily& fam, const Interpolation& interp, const Rat& t,
                     bool allow_non_up_set) {
  if (interp.host() != fam.host())
    throw ValidationError("derivative: interpolation and family live on different posets");
  if (!allow_non_up_set && !family_is_up_set(fam))
    throw ValidationError("derivative requires an up-set family (pass the override to force)");
  const Measure mu_t = interp.at(t);
  const std::vector<Rat>& mass = mu_t.masses();
  const std::vector<Rat> delta = interp.delta();
  const int n = fam.n();

  Rat total = 0;
  std::vector<Rat> prefix(static_cast<std::size_t>(n) + 1);
  std::vector<Rat> suffix(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t code : fam.codes()) {
    prefix[0] = 1;
    suffix[n] = 1;
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * mass[fam.coord_index(code, i)];
    for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] * mass[fam.coord_index(code, i)];
    for (int i = 0; i < n; ++i) total += prefix[i] * delta[fam.coord_index(code, i)] * suffix[i + 1];
  }
  return total;
}

DerivativeBound derivative_lower_bound_check(const ProductFamily& fam, const Interpolation& interp,
                                             const Rat& t, std::uint64_t budget) {
  DerivativeBound out;
  out.derivative = russo_derivative(fam, interp, t);
  out.kappa = domination_strength(interp.host(), interp.mu0(), interp.mu1(), budget).strength;
  const Measure mu_t = interp.at(t);
  out.total_influence = 0;
  for (int i = 0; i < fam.n(); ++i) out.total_influence += coordinate_influence(fam, mu_t, i, budget);
  out.kappa_times_total_influence = out.kappa * out.total_influence;
  out.holds = out.derivative >= out.kappa_times_total_influence;
  return out;
}

double bkkkl_ratio(const ProductFamily& fam, const Measure& mu, std::uint64_t budget) {
  if (fam.n() < 2)
    throw ValidationError("total-influence ratio needs n >= 2 (log n vanishes at n = 1)");
  const Rat measure = product_measure(mu, fam);
  if (measure == 0 || measure == 1)
    throw ValidationError("total-influence ratio undefined for trivial families");
  Rat total = 0;
  for (int i = 0; i < fam.n(); ++i) total += coordinate_influence(fam, mu, i, budget);
  const Rat small_side = measure <= rat(1, 2) ? measure : Rat(1) - measure;
  return rat_double(total) / (rat_double(small_side) * std::log(static_cast<double>(fam.n())));
}

ThresholdReport threshold_constant(const Rat& p, const Rat& q, const Rat& eps, const Rat& kappa,
                                   long n) {
  if (p < 0 || q > 1 || p >= q) throw ValidationError("need 0 <= p < q <= 1");
  if (eps <= 0 || eps >= rat(1, 2))
    throw ValidationError("need 0 < eps < 1/2 (log(1/2eps) must be positive)");
  if (kappa <= 0) throw ValidationError("need kappa > 0");
  if (n < 2) throw ValidationError("need n >= 2 (log n vanishes)");
  ThresholdReport report{p, q, eps, kappa, n, 0.0};
  const double log_eps_term = std::log(1.0 / (2.0 * rat_double(eps)));
  report.empirical_C =
      rat_double((q - p) * kappa) * std::log(static_cast<double>(n)) / log_eps_term;
  return report;
}

}  // namespace coverlab
