#pragma once

#include "flagdegen/rootdata.hpp"

#include <optional>

namespace flagdegen {

/// i = (i₁ < … < i_d) ⊆ [1, n], the index of a Plücker coordinate p_i.
struct TabIndex {
  int n = 0;
  std::vector<int> entries;

  TabIndex() = default;
  /// Throws DomainError unless the entries increase strictly within [1, n].
  TabIndex(int n, std::vector<int> entries);

  int d() const { return static_cast<int>(entries.size()); }
  friend bool operator==(const TabIndex&, const TabIndex&) = default;
  friend auto operator<=>(const TabIndex&, const TabIndex&) = default;
};

/// "[14]" for small n, "[1,4]" otherwise.
std::string to_string(const TabIndex& i);

/// I_{d,n} in lexicographic order.
std::vector<TabIndex> tab_indices(int d, int n);

/// i ≤ j iff i_t ≤ j_t for all t. Throws DomainError on a shape mismatch.
bool tab_leq(const TabIndex& a, const TabIndex& b);
bool comparable(const TabIndex& a, const TabIndex& b);

/// Maximal chains of I_{d,n} from [1…d] to [n−d+1…n], bottom first.
std::vector<std::vector<TabIndex>> maximal_chains(int d, int n);

/// Product of Plücker coordinates; factors sorted decreasingly.
struct PlueckerMonomial {
  std::vector<TabIndex> factors;

  PlueckerMonomial() = default;
  explicit PlueckerMonomial(std::vector<TabIndex> f);
  int degree() const { return static_cast<int>(factors.size()); }
  /// The factors form a chain i¹ ≥ … ≥ i^r.
  bool is_standard() const;
  friend bool operator==(const PlueckerMonomial&, const PlueckerMonomial&) = default;
  friend auto operator<=>(const PlueckerMonomial&, const PlueckerMonomial&) = default;
};

std::string to_string(const PlueckerMonomial& m);

/// Weakly decreasing r-tuples in I_{d,n}.
std::vector<PlueckerMonomial> standard_monomials(int d, int n, int r);

/// Product in the degenerate (Hodge) algebra: the merged monomial if it is
/// still a chain, zero otherwise.
std::optional<PlueckerMonomial> hodge_product(const PlueckerMonomial& a, const PlueckerMonomial& b);

/// LS-path π = ((τ₁ > … > τ_k), (0 < a₁ < … < a_k = 1)); a direction τ ∈ W/W_λ
/// is stored as the orbit point τ(λ).
struct LSPath {
  Weight lambda;
  std::vector<Weight> directions;
  std::vector<Rational> breaks;

  Weight initial_direction() const { return directions.front(); }
  Weight final_direction() const { return directions.back(); }
  /// π(1) = Σ (a_i − a_{i−1}) τ_i(λ).
  Weight endpoint() const;
  friend bool operator==(const LSPath&, const LSPath&) = default;
};

/// Reduced word of the minimal representative of the coset sending λ to μ.
WeylWord coset_word(const RootDatum& rd, const Weight& lambda, const Weight& mu);

/// Bruhat order on W/W_λ through orbit points.
bool coset_leq(const RootDatum& rd, const Weight& lambda, const Weight& mu, const Weight& nu);

std::vector<LSPath> ls_paths(const RootDatum& rd, const Weight& lambda, const Budget& budget = Budget::from_env());

/// Maximal chain w₀ > w₁ > … > id in W/W_λ with 0 ≤ a₀ ≤ … ≤ a_N = 1.
struct LSChain {
  std::vector<WeylWord> chain;
  std::vector<Rational> a;
};

/// Validates the chain and its integrality condition, then keeps the entries where a jumps.
LSPath path_of_chain(const RootDatum& rd, const Weight& lambda, const LSChain& chain);

/// e(π₁) ≥ i(π₂), e(π₂) ≥ i(π₃), … in the Bruhat order on W/W_λ.
bool is_standard_path_monomial(const RootDatum& rd, const std::vector<LSPath>& paths);

}  // namespace flagdegen
