#pragma once

#include "flagdegen/essmonoid.hpp"
#include "flagdegen/lspaths.hpp"

namespace flagdegen {

/// Smallest nonzero |⟨λ, β∨⟩| over positive coroots; zero for λ = 0.
Rational gromov_width(const RootDatum& rd, const Weight& lambda);

/// Whether the closed simplex {x ≥ 0, Σ x_j ≤ k} lies in P. Throws DomainError for k < 0.
bool simplex_fits(const RationalPolytope& P, const Rational& k);

struct PlueckerEntry {
  int sign = 1;
  MultiExponent exponent;
};

/// Plücker coordinates of Gr(d, n) attached to the points of es(ω_d).
struct PlueckerWeighting {
  MonomialOrder order;
  std::map<TabIndex, PlueckerEntry> entries;

  /// Ψ-degree; throws DomainError if the coordinate is missing.
  std::int64_t degree(const TabIndex& i) const;
  const PlueckerEntry& at(const TabIndex& i) const;
};

/// Coordinate p_i of the weight ε_{i₁} + … + ε_{i_d} of Λ^d ℂⁿ, as a fundamental-weight vector.
Weight plucker_weight(const TabIndex& i);

/// Matches each point of es(ω_d) for SL_n with the Plücker coordinate of the same weight.
PlueckerWeighting plucker_weighting(const Setup& setup, const EssentialSet& es);
PlueckerWeighting plucker_weighting(const Setup& setup, int d, const Budget& budget = Budget::from_env());

/// Weighting for one of the gr24 presets, with the conventional signs of its dictionary.
PlueckerWeighting gr24_weighting(const std::string& preset_name);

struct QuadraticTerm {
  int coeff;
  TabIndex a;
  TabIndex b;
  std::int64_t degree = 0;
  MultiExponent exponent;
};

/// Sum of quadratic Plücker monomials, terms sorted by their first factor.
struct QuadraticForm {
  std::vector<QuadraticTerm> terms;

  bool has_term(const TabIndex& a, const TabIndex& b) const;
};

/// "p[12]p[34] - p[13]p[24]", normalized so the first coefficient is positive.
std::string to_string(const QuadraticForm& f);

/// p[14]p[23] − p[13]p[24] + p[12]p[34].
QuadraticForm gr24_relation();

/// Terms of the Gr(2,4) relation of least valuation: least Ψ-degree first, then
/// least exponent sum in the monomial order.
QuadraticForm plucker_initial_form(const PlueckerWeighting& w);

struct Binomial {
  std::pair<int, int> left;
  std::pair<int, int> right;
  MultiExponent sum;
};

/// Generators are the points of es in sorted order, numbered from 0. One
/// binomial per extra pair in each collision class of degree-two sums.
std::vector<Binomial> degree2_binomials(const EssentialSet& es);

/// The binomial in Plücker coordinates, using the weighting to name the generators.
QuadraticForm binomial_form(const PlueckerWeighting& w, const EssentialSet& es, const Binomial& b);

/// Relabeling of I_{2,4} carrying every binomial of the first ideal onto one of
/// the second; nullopt if there is none.
std::optional<std::map<TabIndex, TabIndex>> find_relabeling(const std::vector<QuadraticForm>& first,
                                                             const std::vector<QuadraticForm>& second);

}  // namespace flagdegen
