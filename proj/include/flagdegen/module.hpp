#pragma once

#include "flagdegen/core.hpp"

#include <map>

namespace flagdegen {

/// Simple-root coordinates of λ − μ for a weight μ of V(λ).
using Depth = std::vector<int>;

/// The irreducible module V(λ) built from the Cartan matrix alone, one weight
/// space at a time. A vector of weight μ ≠ λ vanishes iff every e_i kills it,
/// so each space is spanned by f_i-images of shallower spaces and is embedded
/// through its e_i-images. Bases are chosen greedily among those images.
class IrreducibleModule {
 public:
  struct WeightSpace {
    Eigen::Index dim = 0;
    /// Basis vector k equals f_{origin[k].first} applied to basis vector
    /// origin[k].second of the space one step shallower.
    std::vector<std::pair<int, Eigen::Index>> origin;
    /// e[i] maps this space to depth ν − α_i.
    std::vector<RatMat> e;
    /// f_into[i] maps depth ν − α_i into this space.
    std::vector<RatMat> f_into;
    /// Contravariant form with ⟨v_λ, v_λ⟩ = 1.
    RatMat gram;
  };

  IrreducibleModule(Eigen::MatrixXi cartan, Eigen::VectorXi highest_weight);

  int rank() const { return static_cast<int>(cartan_.rows()); }
  const Eigen::VectorXi& highest_weight() const { return lambda_; }
  const Eigen::MatrixXi& cartan() const { return cartan_; }

  /// Builds lazily; depths with a negative entry give the zero space.
  const WeightSpace& space(const Depth& nu);
  Eigen::Index dim(const Depth& nu) { return space(nu).dim; }

  /// f_i : V_ν → V_{ν+α_i}.
  const RatMat& f_block(int i, const Depth& source);
  /// e_i : V_ν → V_{ν−α_i}.
  const RatMat& e_block(int i, const Depth& source);

  /// ⟨λ − ν, α_i∨⟩.
  int coroot_pairing(const Depth& nu, int i) const;

  /// All depths with a nonzero weight space, in breadth-first order.
  std::vector<Depth> support();

 private:
  void build(const Depth& nu);

  Eigen::MatrixXi cartan_;
  Eigen::VectorXi lambda_;
  std::map<Depth, WeightSpace> spaces_;
  WeightSpace zero_;
  RatMat empty_;
};

Depth shifted(Depth nu, int i, int by);

}  // namespace flagdegen
