#pragma once

#include <string>
#include <vector>

#include "coverlab/poset.hpp"
#include "coverlab/rational.hpp"

namespace coverlab {

// Probability measure on a finite poset: exact nonnegative rational point
// masses summing to 1. The host poset is held by value; compatibility between
// measures, posets and families is structural equality.
class Measure {
 public:
  Measure(Poset host, std::vector<Rat> mass_by_index);

  static Measure uniform_on(const Poset& host, std::uint64_t support_bits);
  static Measure point_mass(const Poset& host, int id);

  const Poset& host() const { return host_; }
  int size() const { return host_.size(); }
  const Rat& mass_at(int index) const;
  Rat mass_of_id(int id) const { return mass_at(host_.index_of(id)); }
  Rat mass_of_subset(std::uint64_t bits) const;
  const std::vector<Rat>& masses() const { return mass_; }

  bool operator==(const Measure& other) const {
    return host_ == other.host_ && mass_ == other.mass_;
  }

 private:
  Poset host_;
  std::vector<Rat> mass_;
};

// The convex path mu_t = (1-t) mu0 + t mu1 between two measures on one host.
class Interpolation {
 public:
  Interpolation(Measure mu0, Measure mu1);

  const Measure& mu0() const { return mu0_; }
  const Measure& mu1() const { return mu1_; }
  const Poset& host() const { return mu0_.host(); }

  // Exact pointwise combination; t outside [0,1] is a ValidationError.
  Measure at(const Rat& t) const;

  // Signed difference mu1 - mu0 by element index.
  std::vector<Rat> delta() const;

 private:
  Measure mu0_;
  Measure mu1_;
};

struct DominationReport {
  // min over proper nontrivial up-sets A of (mu1 - mu0)(A)
  Rat strength;
  // first minimiser in ascending subset-mask order
  std::uint64_t witness_bits = 0;
  std::vector<int> witness_ids;
  std::uint64_t count_proper_nontrivial = 0;
};

// Exhaustive minimum of (mu1 - mu0) over all proper nontrivial up-sets.
// DegenerateError when the poset has none (e.g. a single element).
DominationReport domination_strength(const Poset& poset, const Measure& mu0, const Measure& mu1,
                                     std::uint64_t budget = kDefaultBudget);

// Text format, semicolon-separated fields: "measure <poset-file> ; <id>=<p/q> ; ...".
// The poset path is resolved relative to the measure file. Fields may also be
// split across lines. Ids not mentioned get mass zero.
Measure load_measure(const std::string& path, const Poset* expected_host = nullptr);
void save_measure(const Measure& mu, const std::string& path, const std::string& poset_path);

}  // namespace coverlab
