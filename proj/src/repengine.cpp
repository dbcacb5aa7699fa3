#include "flagdegen/repengine.hpp"

#include "flagdegen/linalg.hpp"

#include <functional>

namespace flagdegen {

namespace {

RatMat product(const RatMat& a, const RatMat& b) {
  if (a.rows() == 0 || a.cols() == 0 || b.cols() == 0) return RatMat::Zero(a.rows(), b.cols());
  return a * b;
}

RatVec product(const RatMat& a, const RatVec& x) {
  if (a.rows() == 0 || a.cols() == 0) return RatVec::Zero(a.rows());
  return a * x;
}

Depth add_root(Depth d, const Eigen::VectorXi& root, int times = 1) {
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += times * root[static_cast<Eigen::Index>(i)];
  return d;
}

bool is_zero_vector(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

BirationalSequence sequence_from_coords(const RootDatum& rd, const std::vector<Eigen::VectorXi>& coords) {
  BirationalSequence seq;
  for (const auto& c : coords) {
    if (c.size() != rd.rank()) throw DomainError("root has wrong rank");
    auto k = rd.root_index(c);
    if (!k) throw DomainError("not a positive root");
    seq.roots.push_back(*k);
  }
  return seq;
}

BirationalSequence sequence_from_word(const RootDatum& rd, const WeylWord& word) {
  return BirationalSequence{roots_of_word(rd, word)};
}

Depth exponent_depth(const RootDatum& rd, const BirationalSequence& seq, const MultiExponent& m) {
  if (m.size() != seq.size()) throw DomainError("exponent length does not match the sequence");
  Depth d(rd.rank(), 0);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] < 0) throw DomainError("exponents must be nonnegative");
    d = add_root(std::move(d), rd.root(seq.roots[k]), static_cast<int>(m[k]));
  }
  return d;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  for (const auto& [q, c] : other.coords) {
    auto [it, fresh] = coords.emplace(q, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coords.erase(it);
    }
  }
  return *this;
}

ModuleVector operator*(const Rational& c, ModuleVector v) {
  if (c == 0) {
    v.coords.clear();
    return v;
  }
  for (auto& [q, x] : v.coords) x *= c;
  return v;
}

HWModule::HWModule(RootDatum rd, Weight lambda) : rd_(std::move(rd)), lambda_(std::move(lambda)) {
  if (lambda_.rank() != rd_.rank()) throw DomainError("weight has wrong rank");
  if (!lambda_.is_dominant()) throw DomainError("highest weight must be dominant");
  irreducible_ = std::make_unique<IrreducibleModule>(rd_.cartan(), lambda_.coords);
  to_root_coords_ = *inverse_of<Rational>(cast_matrix<Rational, int>(Eigen::MatrixXi(rd_.cartan().transpose())));
  weight_form_ = to_root_coords_.transpose() * cast_matrix<Rational, int>(rd_.symmetric_form()) * to_root_coords_;
}

ModuleVector HWModule::highest_weight_vector() const {
  ModuleVector v;
  v.depth = Depth(rd_.rank(), 0);
  v.coords[Monomial(rd_.num_positive_roots(), 0)] = 1;
  return v;
}

Depth HWModule::monomial_depth(const Monomial& q) const {
  Depth d(rd_.rank(), 0);
  for (std::size_t k = 0; k < q.size(); ++k)
    if (q[k]) d = add_root(std::move(d), rd_.root(static_cast<int>(k)), static_cast<int>(q[k]));
  return d;
}

const ModuleVector& HWModule::lower_monomial(int root, const Monomial& q) {
  auto key = std::make_pair(root, q);
  if (auto it = pbw_cache_.find(key); it != pbw_cache_.end()) return it->second;
  ModuleVector out;
  out.depth = add_root(monomial_depth(q), rd_.root(root));
  std::size_t lead = 0;
  while (lead < q.size() && q[lead] == 0) ++lead;
  if (static_cast<std::size_t>(root) <= lead) {
    Monomial r = q;
    ++r[root];
    out.coords[r] = 1;
  } else {
    // f_β f_γ X = f_γ (f_β X) + [f_β, f_γ] X with γ the leading root
    Monomial rest = q;
    --rest[lead];
    ModuleVector inner = lower_monomial(root, rest);
    out += lower(static_cast<int>(lead), inner);
    if (auto s = rd_.sum_index(root, static_cast<int>(lead))) {
      ModuleVector extra = lower_monomial(*s, rest);
      out += Rational(rd_.structure_constant(root, static_cast<int>(lead))) * extra;
    }
  }
  return pbw_cache_.emplace(key, std::move(out)).first->second;
}

ModuleVector HWModule::lower(int root, const ModuleVector& x) {
  if (root < 0 || root >= rd_.num_positive_roots()) throw DomainError("not a positive root index");
  ModuleVector out;
  out.depth = add_root(x.depth, rd_.root(root));
  for (const auto& [q, c] : x.coords) {
    ModuleVector term = lower_monomial(root, q);
    out += c * term;
  }
  return out;
}

const ModuleVector& HWModule::raise_monomial(int root, const Monomial& q) {
  auto key = std::make_pair(root, q);
  if (auto it = raise_cache_.find(key); it != raise_cache_.end()) return it->second;
  ModuleVector out;
  out.depth = add_root(monomial_depth(q), rd_.root(root), -1);
  std::size_t lead = 0;
  while (lead < q.size() && q[lead] == 0) ++lead;
  if (lead < q.size()) {
    const int gamma = static_cast<int>(lead);
    Monomial rest = q;
    --rest[lead];
    // e_α f_γ Y = f_γ (e_α Y) + [e_α, f_γ] Y
    ModuleVector inner = raise_monomial(root, rest);
    out += lower(gamma, inner);
    if (root == gamma) {
      Weight wt = lambda_;
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (rest[k]) wt = wt - static_cast<int>(rest[k]) * rd_.root_weight(static_cast<int>(k));
      ModuleVector y;
      y.depth = monomial_depth(rest);
      y.coords[rest] = 1;
      out += Rational(rd_.pairing(wt, root)) * y;
    } else {
      const RaisingBracket& b = rd_.raising_bracket(root, gamma);
      if (b.kind == RaisingBracket::Kind::lowering) {
        ModuleVector t = lower_monomial(b.root, rest);
        out += Rational(b.coeff) * t;
      } else if (b.kind == RaisingBracket::Kind::raising) {
        ModuleVector t = raise_monomial(b.root, rest);
        out += Rational(b.coeff) * t;
      }
    }
  }
  return raise_cache_.emplace(key, std::move(out)).first->second;
}

ModuleVector HWModule::raise(int root, const ModuleVector& x) {
  if (root < 0 || root >= rd_.num_positive_roots()) throw DomainError("not a positive root index");
  ModuleVector out;
  out.depth = add_root(x.depth, rd_.root(root), -1);
  for (const auto& [q, c] : x.coords) {
    ModuleVector term = raise_monomial(root, q);
    out += c * term;
  }
  return out;
}

const RatMat& HWModule::root_block(int root, const Depth& source) {
  auto key = std::make_pair(root, source);
  if (auto it = block_cache_.find(key); it != block_cache_.end()) return it->second;
  const ExtraspecialPair& ex = rd_.extraspecial(root);
  RatMat block;
  if (ex.rest < 0) {
    block = irreducible_->f_block(ex.simple, source);
  } else {
    const int simple_root = rd_.simple_root_index(ex.simple);
    const RatMat& g_low = root_block(ex.rest, source);
    const RatMat& i_high = root_block(simple_root, add_root(source, rd_.root(ex.rest)));
    const RatMat& i_low = root_block(simple_root, source);
    const RatMat& g_high = root_block(ex.rest, add_root(source, rd_.root(simple_root)));
    block = (product(i_high, g_low) - product(g_high, i_low)) / Rational(ex.divisor);
  }
  return block_cache_.emplace(key, std::move(block)).first->second;
}

RatVec HWModule::apply_block(int root, const Depth& source, const RatVec& x) {
  return product(root_block(root, source), x);
}

RatVec HWModule::project(const ModuleVector& x) {
  RatVec out = RatVec::Zero(dim(x.depth));
  for (const auto& [q, c] : x.coords) {
    RatVec v = RatVec::Ones(1);
    Depth d(rd_.rank(), 0);
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k)
      for (std::int64_t t = 0; t < q[k]; ++t) {
        v = apply_block(k, d, v);
        d = add_root(std::move(d), rd_.root(k));
      }
    if (v.size() > 0) out += c * v;
  }
  return out;
}

RatVec HWModule::image(const BirationalSequence& seq, const MultiExponent& m) {
  if (m.size() != seq.size()) throw DomainError("exponent length does not match the sequence");
  auto& cache = suffix_cache_[seq.roots];
  std::function<const RatVec&(std::size_t, const Depth&)> suffix = [&](std::size_t k, const Depth& d) -> const RatVec& {
    auto key = std::make_pair(k, IntPoint(m.begin() + static_cast<std::ptrdiff_t>(k), m.end()));
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    RatVec x;
    if (k == m.size()) {
      x = RatVec::Ones(1);
    } else {
      const int root = seq.roots[k];
      Depth below = add_root(d, rd_.root(root), -static_cast<int>(m[k]));
      x = suffix(k + 1, below);
      Depth at = below;
      for (std::int64_t t = 1; t <= m[k]; ++t) {
        x = apply_block(root, at, x) / Rational(t);
        at = add_root(std::move(at), rd_.root(root));
      }
    }
    return cache.emplace(key, std::move(x)).first->second;
  };
  return suffix(0, exponent_depth(rd_, seq, m));
}

Rational HWModule::form(const Weight& a, const Weight& b) const {
  RatVec x(a.rank()), y(b.rank());
  for (int i = 0; i < a.rank(); ++i) {
    x[i] = a[i];
    y[i] = b[i];
  }
  return x.dot(weight_form_ * y);
}

Weight HWModule::dominant_conjugate(Weight mu) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < mu.rank(); ++i)
      if (mu[i] < 0) {
        mu = rd_.reflect(i + 1, mu);
        moved = true;
      }
  }
  return mu;
}

std::optional<Depth> HWModule::depth_of(const Weight& mu) const {
  if (mu.rank() != rd_.rank()) throw DomainError("weight has wrong rank");
  Depth d(rd_.rank());
  for (int i = 0; i < rd_.rank(); ++i) {
    Rational r = 0;
    for (int j = 0; j < rd_.rank(); ++j) r += to_root_coords_(i, j) * (lambda_[j] - mu[j]);
    if (denominator(r) != 1 || r < 0) return std::nullopt;
    d[i] = numerator(r).convert_to<int>();
  }
  return d;
}

std::int64_t HWModule::multiplicity(const Weight& mu) {
  const Weight top = dominant_conjugate(mu);
  if (!depth_of(top)) return 0;
  if (top == lambda_) return 1;
  if (auto it = multiplicity_cache_.find(top); it != multiplicity_cache_.end()) return it->second;
  const Weight rho = rd_.rho();
  Rational denom = form(lambda_ + rho, lambda_ + rho) - form(top + rho, top + rho);
  Rational sum = 0;
  for (int a = 0; a < rd_.num_positive_roots(); ++a) {
    const Weight alpha = rd_.root_weight(a);
    Weight up = top + alpha;
    while (true) {
      std::int64_t m = multiplicity(up);
      if (m == 0) break;
      sum += m * form(up, alpha);
      up = up + alpha;
    }
  }
  std::int64_t result = 0;
  if (denom != 0) {
    Rational value = 2 * sum / denom;
    if (denominator(value) != 1) throw std::logic_error("Freudenthal recursion produced a fraction");
    result = numerator(value).convert_to<std::int64_t>();
  }
  multiplicity_cache_[top] = result;
  return result;
}

ModuleVector apply_monomial(HWModule& M, const BirationalSequence& seq, const MultiExponent& m) {
  const RootDatum& rd = M.root_datum();
  if (m.size() != seq.size()) throw DomainError("exponent length does not match the sequence");
  for (int r : seq.roots)
    if (r < 0 || r >= rd.num_positive_roots()) throw DomainError("sequence entry is not a positive root");
  ModuleVector x = M.highest_weight_vector();
  Rational scale = 1;
  for (int k = static_cast<int>(m.size()) - 1; k >= 0; --k)
    for (std::int64_t t = 1; t <= m[k]; ++t) {
      x = M.lower(seq.roots[k], x);
      scale /= t;
    }
  return scale * x;
}

Rational contravariant_pairing(HWModule& M, const ModuleVector& u, const ModuleVector& w) {
  if (u.depth != w.depth) return 0;
  Rational total = 0;
  for (const auto& [q, c] : u.coords) {
    // σ(f_{r_1}^{q_1}⋯f_{r_N}^{q_N}) = e_{r_N}^{q_N}⋯e_{r_1}^{q_1}
    ModuleVector x = w;
    for (std::size_t k = 0; k < q.size() && !x.is_zero(); ++k)
      for (std::int64_t t = 0; t < q[k]; ++t) x = M.raise(static_cast<int>(k), x);
    auto it = x.coords.find(IntPoint(q.size(), 0));
    if (it != x.coords.end()) total += c * it->second;
  }
  return total;
}

bool is_essential_step(HWModule& M, const BirationalSequence& seq, const std::vector<MultiExponent>& accepted,
                       const MultiExponent& candidate) {
  const RootDatum& rd = M.root_datum();
  const Depth nu = exponent_depth(rd, seq, candidate);
  for (const auto& a : accepted)
    if (exponent_depth(rd, seq, a) != nu) throw DomainError("exponents of different weights");
  std::vector<RatVec> images;
  for (const auto& a : accepted) images.push_back(M.image(seq, a));
  images.push_back(M.image(seq, candidate));
  const RatMat& g = M.gram(nu);
  const auto k = static_cast<Eigen::Index>(images.size());
  if (g.rows() == 0) return false;
  RatMat pairings(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) pairings(i, j) = images[i].dot(g * images[j]);
  IntMat all = integer_rows(pairings);
  IntMat before = all.topLeftCorner(k - 1, k - 1);
  return rank_fraction_free(all) > rank_fraction_free(before);
}

std::int64_t weight_multiplicity(HWModule& M, const Weight& mu) { return M.multiplicity(mu); }

GramRankTracker::GramRankTracker(HWModule& M, Depth nu) : gram_(&M.gram(nu)) {}

bool GramRankTracker::offer(const RatVec& x) {
  if (gram_->rows() == 0 || is_zero_vector(x)) return false;
  RatVec paired = *gram_ * x;
  IntVec r = clear_denominators(paired);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Integer& c = r[pivots_[k]];
    if (c == 0) continue;
    r = primitive(IntVec(rows_[k][pivots_[k]] * r - c * rows_[k]));
  }
  Eigen::Index pivot = -1;
  for (Eigen::Index i = 0; i < r.size() && pivot < 0; ++i)
    if (r[i] != 0) pivot = i;
  if (pivot < 0) return false;
  rows_.push_back(primitive(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace flagdegen
