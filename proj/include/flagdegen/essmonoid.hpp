#pragma once

#include "flagdegen/polyhedra.hpp"
#include "flagdegen/repengine.hpp"

#include <compare>
#include <map>
#include <string>

namespace flagdegen {

/// Ψ(m) = Σ ψ_i m_i with nonnegative integer coefficients.
struct WeightFunction {
  std::vector<std::int64_t> coeffs;

  WeightFunction() = default;
  explicit WeightFunction(std::vector<std::int64_t> c);
  static WeightFunction homogeneous(std::size_t n);
  /// m ↦ Σ m_i ht(β_i).
  static WeightFunction height(const RootDatum& rd, const BirationalSequence& seq);

  std::size_t size() const { return coeffs.size(); }
  std::int64_t operator()(const MultiExponent& m) const;
  bool strictly_positive() const;
  WeightFunction scaled(std::int64_t k) const;
  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

enum class Tiebreak { lex, rlex, opp_lex, opp_rlex };

std::string to_string(Tiebreak t);
Tiebreak parse_tiebreak(const std::string& name);

/// Ψ-weighted (right, opposite) lexicographic order on ℕ^N.
struct MonomialOrder {
  WeightFunction weight;
  Tiebreak tiebreak = Tiebreak::lex;

  /// Throws ConfigurationError if an opposite variant has a zero coefficient.
  void validate() const;
  std::strong_ordering compare(const MultiExponent& a, const MultiExponent& b) const;
  bool less(const MultiExponent& a, const MultiExponent& b) const { return compare(a, b) < 0; }
};

std::strong_ordering compare(const MonomialOrder& order, const MultiExponent& a, const MultiExponent& b);

struct EssentialSet {
  Weight lambda;
  LatticePointSet points;
};

/// All m with Σ m_i β_i equal to the given depth, sorted lexicographically.
std::vector<MultiExponent> exponents_of_depth(const RootDatum& rd, const BirationalSequence& seq, const Depth& nu,
                                              std::int64_t cap);

EssentialSet essential_set(HWModule& M, const BirationalSequence& seq, const MonomialOrder& order,
                           const Budget& budget = Budget::from_env());
EssentialSet essential_set(const RootDatum& rd, const Weight& lambda, const BirationalSequence& seq,
                           const MonomialOrder& order, const Budget& budget = Budget::from_env());

/// es(nλ) together with its points scaled by 1/n.
struct EssentialLevel {
  int level;
  EssentialSet set;
  std::vector<RatVec> scaled;
};

EssentialLevel essential_polytope_level(const RootDatum& rd, const Weight& lambda, const BirationalSequence& seq,
                                        const MonomialOrder& order, int level,
                                        const Budget& budget = Budget::from_env());

/// Lattice points of the Lusztig polytope: PBW sequence of a reduced word,
/// height weights, opposite right lexicographic order.
EssentialSet lusztig_essential(const RootDatum& rd, const Weight& lambda, const WeylWord& word,
                               const Budget& budget = Budget::from_env());

/// A root system with a birational sequence and a monomial order.
struct Setup {
  RootDatum rd;
  BirationalSequence sequence;
  MonomialOrder order;
};

/// Good ordering of Φ⁺ for SL_n (decreasing height), homogeneous weights,
/// opposite right lexicographic order.
Setup fflv_setup(int n);
/// Simple roots of a reduced word, height weights, opposite lexicographic order.
Setup string_setup(const RootDatum& rd, const WeylWord& word);
Setup lusztig_setup(const RootDatum& rd, const WeylWord& word);

std::vector<std::string> preset_names();
/// Throws DomainError for an unknown name.
Setup preset(const std::string& name);

/// Levels es(λ) of the global essential monoid for one setup.
class GradedMonoid {
 public:
  GradedMonoid(Setup setup, Budget budget = Budget::from_env());

  const Setup& setup() const { return setup_; }
  const EssentialSet& compute(const Weight& lambda);
  /// Computes es(kλ) for k = 1, …, levels; up to `threads` weights at a time.
  void compute_ray(const Weight& lambda, int levels, int threads = 1);
  /// Adopts a level computed elsewhere; replaces an existing one.
  void insert(EssentialSet es) { levels_.insert_or_assign(es.lambda, std::move(es)); }
  bool has(const Weight& lambda) const { return levels_.count(lambda) > 0; }
  /// Throws DomainError if the level is missing.
  const EssentialSet& at(const Weight& lambda) const;
  const std::map<Weight, EssentialSet>& levels() const { return levels_; }

 private:
  Setup setup_;
  Budget budget_;
  std::map<Weight, EssentialSet> levels_;
};

struct ClosureViolation {
  Weight lambda;
  Weight mu;
  MultiExponent a;
  MultiExponent b;
};

struct ClosureReport {
  std::int64_t sums_checked = 0;
  std::vector<ClosureViolation> violations;
  bool closed() const { return violations.empty(); }
};

/// Checks es(λ) + es(μ) ⊆ es(λ + μ) for each pair.
ClosureReport monoid_closure_check(const GradedMonoid& gamma, const std::vector<std::pair<Weight, Weight>>& pairs);

struct LevelPoint {
  int level;
  MultiExponent point;
};

struct SaturationReport {
  Weight lambda;
  int generators_from;
  int test_to;
  /// Points of es(kλ) outside the monoid generated by levels ≤ generators_from.
  std::vector<LevelPoint> not_generated;
  /// Lattice points of the cone over the computed levels that are missing from Γ(λ).
  std::vector<LevelPoint> not_saturated;
  bool generated() const { return not_generated.empty(); }
  bool saturated() const { return not_saturated.empty(); }
};

/// Evidence for finite generation and saturation of Γ(λ) = ⋃ {k} × es(kλ),
/// using the levels k = 1, …, test_to.
SaturationReport saturation_check(const GradedMonoid& gamma, const Weight& lambda, int generators_from, int test_to);

struct GlobalSaturationReport {
  std::size_t facets = 0;
  /// Lattice points of the cone over every computed level, in the fibers over
  /// the tested weights, that are missing from Γ.
  std::vector<std::pair<Weight, MultiExponent>> missing;
  bool saturated() const { return missing.empty(); }
};

/// Saturation evidence for the global monoid Γ = ⋃ {λ} × es(λ).
GlobalSaturationReport global_saturation_check(const GradedMonoid& gamma, const std::vector<Weight>& weights);

}  // namespace flagdegen
