#pragma once

#include "flagdegen/core.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>

namespace flagdegen {

/// Integral weight in the basis of fundamental weights.
struct Weight {
  Eigen::VectorXi coords;

  Weight() = default;
  explicit Weight(Eigen::VectorXi c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c);
  static Weight zero(int rank) { return Weight(Eigen::VectorXi::Zero(rank)); }

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](int i) const { return coords[i]; }
  bool is_dominant() const { return (coords.array() >= 0).all(); }
  bool is_zero() const { return (coords.array() == 0).all(); }

  friend Weight operator+(const Weight& a, const Weight& b) { return Weight(a.coords + b.coords); }
  friend Weight operator-(const Weight& a, const Weight& b) { return Weight(a.coords - b.coords); }
  friend Weight operator*(int k, const Weight& a) { return Weight(k * a.coords); }
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend bool operator<(const Weight& a, const Weight& b);
};

std::string to_string(const Weight& w);

/// Sequence of simple reflections, letters numbered from 1.
struct WeylWord {
  std::vector<int> letters;

  WeylWord() = default;
  explicit WeylWord(std::vector<int> l) : letters(std::move(l)) {}
  WeylWord(std::initializer_list<int> l) : letters(l) {}
  static WeylWord parse(const std::string& digits_or_csv);

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend auto operator<=>(const WeylWord&, const WeylWord&) = default;
};

std::string to_string(const WeylWord& w);

/// Weyl group element as a permutation of Φ. Index k < N is the k-th positive
/// root in reference order, N + k is its negative.
struct WeylElement {
  std::vector<int> perm;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

/// [e_a, f_b] for a ≠ b in terms of a single root vector.
struct RaisingBracket {
  enum class Kind { zero, lowering, raising } kind = Kind::zero;
  int root = -1;
  int coeff = 0;
};

/// f_k = [f_{α_i}, f_γ] / divisor, with α_i the first simple root splitting off.
struct ExtraspecialPair {
  int simple = -1;
  int rest = -1;
  int divisor = 1;
};

class RootDatum {
 public:
  /// Supported: (A, n ≥ 1), (C, 2), (G, 2).
  static RootDatum build(char type, int rank);
  static RootDatum from_cartan(std::string label, Eigen::MatrixXi cartan);

  const std::string& type_label() const { return data_->label; }
  int rank() const { return static_cast<int>(data_->cartan.rows()); }
  /// cartan(i, j) = ⟨α_i, α_j∨⟩.
  const Eigen::MatrixXi& cartan() const { return data_->cartan; }

  int num_positive_roots() const { return static_cast<int>(data_->roots.size()); }
  /// Reference order: by height, then simple-root coordinates in decreasing lexicographic order.
  const std::vector<Eigen::VectorXi>& positive_roots() const { return data_->roots; }
  const Eigen::VectorXi& root(int k) const { return data_->roots.at(k); }
  const Eigen::VectorXi& coroot(int k) const { return data_->coroots.at(k); }
  int height(int k) const { return data_->roots.at(k).sum(); }
  std::optional<int> root_index(const Eigen::VectorXi& coords) const;
  int simple_root_index(int i) const { return data_->simple_index.at(i); }
  /// Index of a + b if it is a positive root.
  std::optional<int> sum_index(int a, int b) const;
  int highest_root_index() const { return num_positive_roots() - 1; }

  /// Half the squared length of α_i, normalized so the short simple roots give 1.
  int root_length(int i) const { return data_->lengths[i]; }
  /// (α_i, α_j) with the same normalization.
  const Eigen::MatrixXi& symmetric_form() const { return data_->form; }

  Weight fundamental_weight(int i) const;
  Weight rho() const;
  /// Fundamental-weight coordinates of β_k.
  Weight root_weight(int k) const;
  /// ⟨λ, β_k∨⟩.
  int pairing(const Weight& lambda, int k) const;

  /// [f_a, f_b] = N f_{a+b}; zero when a + b is not a root.
  int structure_constant(int a, int b) const { return data_->f_bracket[a][b]; }
  const RaisingBracket& raising_bracket(int a, int b) const { return data_->ef_bracket[a][b]; }
  const ExtraspecialPair& extraspecial(int k) const { return data_->extraspecial.at(k); }

  WeylElement identity() const;
  const WeylElement& simple_reflection(int letter) const { return data_->reflections.at(letter - 1); }
  WeylElement element(const WeylWord& w) const;
  WeylElement longest_element() const;
  int length(const WeylElement& w) const;
  bool is_left_descent(const WeylElement& w, int letter) const;
  bool is_right_descent(const WeylElement& w, int letter) const;
  WeylElement compose(const WeylElement& u, const WeylElement& v) const;
  WeylElement inverse(const WeylElement& w) const;
  /// Lexicographically least reduced word.
  WeylWord canonical_word(const WeylElement& w) const;
  WeylWord canonical_word(const WeylWord& w) const { return canonical_word(element(w)); }
  bool is_reduced(const WeylWord& w) const { return length(element(w)) == static_cast<int>(w.length()); }

  /// w(μ) for a weight μ.
  Weight act(const WeylWord& w, const Weight& mu) const;
  Weight reflect(int letter, const Weight& mu) const;
  Weight reflect_root(int k, const Weight& mu) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.data_ == b.data_ || a.data_->cartan == b.data_->cartan; }

 private:
  struct Data {
    std::string label;
    Eigen::MatrixXi cartan;
    Eigen::MatrixXi form;
    std::vector<int> lengths;
    std::vector<Eigen::VectorXi> roots;
    std::vector<Eigen::VectorXi> coroots;
    std::vector<int> simple_index;
    std::vector<std::vector<int>> sum_table;
    std::vector<std::vector<int>> f_bracket;
    std::vector<std::vector<RaisingBracket>> ef_bracket;
    std::vector<ExtraspecialPair> extraspecial;
    std::vector<WeylElement> reflections;
  };
  explicit RootDatum(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

RootDatum build_root_system(char type, int rank);

/// Dimension of V(λ) by the Weyl product formula.
Integer weyl_dim(const RootDatum& rd, const Weight& lambda);

/// All reduced expressions of the element represented by w, sorted.
std::vector<WeylWord> reduced_words(const RootDatum& rd, const WeylWord& w);

bool bruhat_leq(const RootDatum& rd, const WeylWord& u, const WeylWord& v);
bool bruhat_leq(const RootDatum& rd, const WeylElement& u, const WeylElement& v);

/// β_k = s_{i_1}⋯s_{i_{k−1}}(α_{i_k}) for 1 ≤ k ≤ length; returns a root index.
int root_from_word(const RootDatum& rd, const WeylWord& word, int k);

/// Positive-root indices of the convex order of a reduced word.
std::vector<int> roots_of_word(const RootDatum& rd, const WeylWord& word);

/// Short tag such as "A3".
std::string describe(const RootDatum& rd);

}  // namespace flagdegen
