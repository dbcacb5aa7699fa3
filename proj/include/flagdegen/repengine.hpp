#pragma once

#include "flagdegen/module.hpp"
#include "flagdegen/rootdata.hpp"

#include <map>
#include <memory>

namespace flagdegen {

/// Ordered positive roots (β_1, …, β_N), stored as reference-order indices.
struct BirationalSequence {
  std::vector<int> roots;

  std::size_t size() const { return roots.size(); }
  friend bool operator==(const BirationalSequence&, const BirationalSequence&) = default;
};

BirationalSequence sequence_from_coords(const RootDatum& rd, const std::vector<Eigen::VectorXi>& coords);
BirationalSequence sequence_from_word(const RootDatum& rd, const WeylWord& word);

/// Σ m_i β_i in simple-root coordinates.
Depth exponent_depth(const RootDatum& rd, const BirationalSequence& seq, const MultiExponent& m);

/// Vector of the Verma module in PBW coordinates: exponents over the positive
/// roots in reference order, lowest root leftmost.
struct ModuleVector {
  Depth depth;
  std::map<IntPoint, Rational> coords;

  bool is_zero() const { return coords.empty(); }
  ModuleVector& operator+=(const ModuleVector& other);
  friend ModuleVector operator*(const Rational& c, ModuleVector v);
};

/// Workspace for V(λ). Two routes share it: a literal Verma-module calculus
/// (normal ordering, raising operators, Shapovalov form) and the irreducible
/// quotient with per-weight bases, root-vector blocks and Gram matrices.
class HWModule {
 public:
  HWModule(RootDatum rd, Weight lambda);

  const RootDatum& root_datum() const { return rd_; }
  const Weight& highest_weight() const { return lambda_; }

  // Verma route.
  ModuleVector highest_weight_vector() const;
  /// f_β · x, normal ordered.
  ModuleVector lower(int root, const ModuleVector& x);
  /// e_β · x.
  ModuleVector raise(int root, const ModuleVector& x);

  // Quotient route.
  IrreducibleModule& irreducible() { return *irreducible_; }
  Eigen::Index dim(const Depth& nu) { return irreducible_->dim(nu); }
  /// F_β : V(λ)_ν → V(λ)_{ν+β}.
  const RatMat& root_block(int root, const Depth& source);
  const RatMat& gram(const Depth& nu) { return irreducible_->space(nu).gram; }
  /// Image of a Verma vector in V(λ).
  RatVec project(const ModuleVector& x);
  /// f^{(m)} v_λ in V(λ), with memoized suffix products.
  RatVec image(const BirationalSequence& seq, const MultiExponent& m);

  /// Freudenthal multiplicity of a weight.
  std::int64_t multiplicity(const Weight& mu);
  /// Depth of μ, if λ − μ is a nonnegative integral combination of simple roots.
  std::optional<Depth> depth_of(const Weight& mu) const;

 private:
  using Monomial = IntPoint;
  Depth monomial_depth(const Monomial& q) const;
  const ModuleVector& lower_monomial(int root, const Monomial& q);
  const ModuleVector& raise_monomial(int root, const Monomial& q);
  RatVec apply_block(int root, const Depth& source, const RatVec& x);
  Rational form(const Weight& a, const Weight& b) const;
  Weight dominant_conjugate(Weight mu) const;

  RootDatum rd_;
  Weight lambda_;
  std::unique_ptr<IrreducibleModule> irreducible_;
  std::map<std::pair<int, Monomial>, ModuleVector> pbw_cache_;
  std::map<std::pair<int, Monomial>, ModuleVector> raise_cache_;
  std::map<std::pair<int, Depth>, RatMat> block_cache_;
  std::map<std::vector<int>, std::map<std::pair<std::size_t, IntPoint>, RatVec>> suffix_cache_;
  std::map<Weight, std::int64_t> multiplicity_cache_;
  RatMat weight_form_;
  RatMat to_root_coords_;
};

ModuleVector apply_monomial(HWModule& M, const BirationalSequence& seq, const MultiExponent& m);

/// Shapovalov form on the Verma module, ⟨v_λ, v_λ⟩ = 1.
Rational contravariant_pairing(HWModule& M, const ModuleVector& u, const ModuleVector& w);

/// Whether f^{(candidate)} v_λ leaves the span of the accepted images in V(λ).
bool is_essential_step(HWModule& M, const BirationalSequence& seq, const std::vector<MultiExponent>& accepted,
                       const MultiExponent& candidate);

std::int64_t weight_multiplicity(HWModule& M, const Weight& mu);

/// Rank of a family of vectors in one weight space of V(λ), tracked through
/// their contravariant pairings with fraction-free integer elimination.
class GramRankTracker {
 public:
  GramRankTracker(HWModule& M, Depth nu);
  /// Adds x if it raises the rank.
  bool offer(const RatVec& x);
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

 private:
  const RatMat* gram_;
  std::vector<IntVec> rows_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace flagdegen
