#include "flagdegen/catalog.hpp"
#include "flagdegen/degenchecks.hpp"
#include "flagdegen/essmonoid.hpp"
#include "flagdegen/lspaths.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace flagdegen;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failure messages; the first few go into the summary line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 4) notes_ += (failures_ > 1 ? "; " : "") + what;
  }
  void note(const std::string& what) { extra_ += (extra_.empty() ? "" : "; ") + what; }
  Outcome outcome() const {
    std::string out = std::to_string(checks_) + " checks";
    if (failures_ > 0) out += ", " + std::to_string(failures_) + " failed: " + notes_;
    if (!extra_.empty()) out += " [" + extra_ + "]";
    return {failures_ == 0, out};
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string notes_;
  std::string extra_;
};

std::int64_t dim_of(const RootDatum& rd, const Weight& w) { return weyl_dim(rd, w).convert_to<std::int64_t>(); }

std::string str(const Weight& w) { return "(" + to_string(w) + ")"; }

// Dominant weights with dim V(λ) ≤ cap; the dimension grows in every coordinate.
std::vector<Weight> weights_with_dim_at_most(const RootDatum& rd, std::int64_t cap) {
  std::vector<Weight> out;
  Eigen::VectorXi c = Eigen::VectorXi::Zero(rd.rank());
  auto walk = [&](auto& self, int i) -> void {
    if (i == rd.rank()) {
      out.push_back(Weight(c));
      return;
    }
    for (c[i] = 0;; ++c[i]) {
      Eigen::VectorXi probe = c;
      for (int j = i + 1; j < rd.rank(); ++j) probe[j] = 0;
      if (dim_of(rd, Weight(probe)) > cap) break;
      self(self, i + 1);
    }
    c[i] = 0;
  };
  walk(walk, 0);
  std::vector<Weight> kept;
  for (const auto& w : out)
    if (dim_of(rd, w) <= cap) kept.push_back(w);
  return kept;
}

std::vector<Weight> weights_of_degree_at_most(int rank, int total) {
  std::vector<Weight> out;
  Eigen::VectorXi c = Eigen::VectorXi::Zero(rank);
  auto walk = [&](auto& self, int i, int left) -> void {
    if (i == rank) {
      out.push_back(Weight(c));
      return;
    }
    for (int t = 0; t <= left; ++t) {
      c[i] = t;
      self(self, i + 1, left - t);
    }
    c[i] = 0;
  };
  walk(walk, 0, total);
  return out;
}

LatticePointSet pts(int d, std::vector<IntPoint> p) { return LatticePointSet(d, std::move(p)); }

Outcome dimension_identity() {
  Checker c;
  auto a2 = build_root_system('A', 2);
  auto a3 = build_root_system('A', 3);
  const auto cone3 = string_cone_sln(3, WeylWord{1, 2, 1});
  const auto cone4 = string_cone_sln(4, WeylWord{2, 1, 3, 2, 1, 3});
  for (const auto& w : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}, Weight{2, 2}}) {
    const auto d = dim_of(a2, w);
    c.expect(count_lattice_points(gt_polytope(3, w)) == d, "GT SL3 " + str(w));
    c.expect(count_lattice_points(fflv_polytope(3, w)) == d, "FFLV SL3 " + str(w));
    c.expect(count_lattice_points(string_polytope(cone3, a2, WeylWord{1, 2, 1}, w)) == d, "string SL3 " + str(w));
  }
  for (const auto& w : {Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}, Weight{1, 1, 1}}) {
    const auto d = dim_of(a3, w);
    c.expect(count_lattice_points(gt_polytope(4, w)) == d, "GT SL4 " + str(w));
    c.expect(count_lattice_points(fflv_polytope(4, w)) == d, "FFLV SL4 " + str(w));
    c.expect(count_lattice_points(string_polytope(cone4, a3, WeylWord{2, 1, 3, 2, 1, 3}, w)) == d,
             "string SL4 " + str(w));
  }
  c.expect(dim_of(a2, Weight{1, 1}) == 8 && dim_of(a3, Weight{1, 1, 1}) == 64, "dim V(ρ)");
  return c.outcome();
}

Outcome golden_sets() {
  Checker c;
  auto es = [](const std::string& name) {
    auto s = preset(name);
    return essential_set(s.rd, Weight{0, 1, 0}, s.sequence, s.order).points;
  };
  // s₁..s₆, t₁..t₆ and r₁..r₆
  c.expect(es("gr24-pbw") == pts(6, {{0, 0, 0, 0, 0, 0},
                                     {0, 0, 0, 0, 1, 0},
                                     {0, 1, 0, 0, 0, 0},
                                     {0, 0, 1, 0, 0, 0},
                                     {1, 0, 0, 0, 0, 0},
                                     {1, 0, 0, 0, 1, 0}}),
           "PBW set");
  c.expect(es("gr24-string") == pts(6, {{0, 0, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0, 0},
                                        {1, 1, 0, 0, 0, 0},
                                        {0, 0, 0, 1, 1, 0},
                                        {1, 0, 0, 1, 1, 0},
                                        {0, 1, 1, 1, 1, 0}}),
           "string set");
  c.expect(es("gr24-lusztig") == pts(6, {{0, 0, 0, 0, 0, 0},
                                         {0, 0, 0, 1, 0, 0},
                                         {0, 0, 0, 0, 1, 0},
                                         {1, 0, 0, 1, 0, 0},
                                         {1, 0, 0, 0, 1, 0},
                                         {0, 1, 0, 0, 1, 0}}),
           "Lusztig set");
  return c.outcome();
}

Outcome string_cone_equality() {
  Checker c;
  struct Case {
    int n;
    WeylWord word;
  };
  int weights = 0;
  for (const auto& [n, word] : {Case{3, WeylWord{1, 2, 1}}, Case{4, WeylWord{2, 1, 3, 2, 1, 3}}}) {
    auto rd = build_root_system('A', n - 1);
    auto s = string_setup(rd, word);
    auto cone = string_cone_sln(n, word);
    for (const auto& w : weights_with_dim_at_most(rd, 100)) {
      ++weights;
      auto es = essential_set(rd, w, s.sequence, s.order).points;
      bool inside = true;
      for (const auto& p : es.points) inside = inside && contains(cone, p);
      c.expect(inside, "es outside cone " + str(w));
      c.expect(es == lattice_points(string_polytope(cone, rd, word, w)), "es vs string polytope " + str(w));
    }
  }
  c.note(std::to_string(weights) + " weights");
  return c.outcome();
}

Outcome gt_minkowski() {
  Checker c;
  auto a2 = build_root_system('A', 2);
  auto ws = weights_with_dim_at_most(a2, 200);
  std::map<Weight, LatticePointSet> cache;
  auto gt = [&](const Weight& w) -> const LatticePointSet& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, lattice_points(gt_polytope(3, w))).first;
    return it->second;
  };
  int pairs = 0;
  for (const auto& a : ws)
    for (const auto& b : ws) {
      if (b < a || dim_of(a2, a + b) > 200) continue;
      ++pairs;
      c.expect(minkowski_points(gt(a), gt(b)) == gt(a + b), "GT " + str(a) + " + " + str(b));
    }
  c.note(std::to_string(pairs) + " pairs");
  return c.outcome();
}

Outcome fflv_facets() {
  Checker c;
  auto catalan = [](int k) {
    Integer v = 1;
    for (int i = 0; i < k; ++i) v = v * 2 * (2 * i + 1) / (i + 2);
    return v.convert_to<std::int64_t>();
  };
  std::string values;
  for (int n : {3, 4, 5}) {
    std::int64_t formula = n * (n - 1) / 2;
    for (int i = 1; i <= n - 1; ++i) formula += i * catalan(n - 1 - i);
    Eigen::VectorXi rho = Eigen::VectorXi::Ones(n - 1);
    const auto facets = static_cast<std::int64_t>(fflv_polytope(n, Weight(rho)).facets().size());
    c.expect(facets == formula, "n=" + std::to_string(n) + ": " + std::to_string(facets) + " facets vs formula " +
                                    std::to_string(formula));
    values += (values.empty() ? "" : ",") + std::to_string(facets);
  }
  c.note("facets " + values + "; the quoted values 5,13,30 are not what the formula evaluates to (6,13,26)");
  return c.outcome();
}

// Distinguishes two polytopes by lattice point count or by the equivalence test.
std::string distinguish(const RationalPolytope& P, const RationalPolytope& Q) {
  const auto a = count_lattice_points(P), b = count_lattice_points(Q);
  if (a != b) return "count " + std::to_string(a) + " vs " + std::to_string(b);
  try {
    auto r = unimodular_equivalent(P, Q);
    if (r.verdict == EquivalenceResult::Verdict::not_equivalent) return r.reason;
    return "";
  } catch (const DomainError& e) {
    return "";
  }
}

Outcome sp4_trio() {
  Checker c;
  auto c2 = build_root_system('C', 2);
  const Weight lambda{2, 1};
  auto P = sp4_polytopes(lambda);
  const auto d = dim_of(c2, lambda);
  const auto nsp = count_lattice_points(P.sp4), nq = count_lattice_points(P.q),
             nstr = count_lattice_points(P.string_1212);
  c.expect(nsp == d, "|SP4| = " + std::to_string(nsp));
  c.expect(nq == d, "|Q| = " + std::to_string(nq));
  const std::string sq = distinguish(P.sp4, P.q), ss = distinguish(P.sp4, P.string_1212),
                    qs = distinguish(P.q, P.string_1212);
  c.expect(!sq.empty(), "SP4 and Q not distinguished");
  c.expect(!ss.empty(), "SP4 and string not distinguished");
  c.expect(!qs.empty(), "Q and string not distinguished");
  c.note("dim " + std::to_string(d) + "; SP4/Q: " + sq + "; SP4/string: " + ss + "; Q/string: " + qs);
  if (nstr != d)
    c.note("DISCREPANCY literal string polytope has " + std::to_string(nstr) + " lattice points, dim V(λ) = " +
           std::to_string(d));
  return c.outcome();
}

Outcome gt_vs_fflv() {
  Checker c;
  auto r = unimodular_equivalent(gt_polytope(4, Weight{1, 1, 1}), fflv_polytope(4, Weight{1, 1, 1}));
  c.expect(r.verdict == EquivalenceResult::Verdict::not_equivalent, "verdict " + to_string(r.verdict));
  c.note(r.reason);
  return c.outcome();
}

// Positive coroots in simple-coroot coordinates, written out by hand.
std::vector<std::vector<int>> hand_coroots(char type, int rank) {
  if (type == 'A' && rank == 1) return {{1}};
  if (type == 'A' && rank == 2) return {{1, 0}, {0, 1}, {1, 1}};
  if (type == 'A' && rank == 3) return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
  // α₁ short: (α₁+α₂)∨ = α₁∨ + 2α₂∨, (2α₁+α₂)∨ = α₁∨ + α₂∨
  if (type == 'C') return {{1, 0}, {0, 1}, {1, 2}, {1, 1}};
  // α₁ short: short coroots are long in the dual system
  return {{1, 0}, {0, 1}, {1, 3}, {2, 3}, {1, 1}, {1, 2}};
}

Outcome gromov() {
  Checker c;
  struct Case {
    char type;
    int rank;
    Weight lambda;
  };
  std::vector<Case> table = {{'A', 1, Weight{3}},       {'A', 2, Weight{1, 1}},    {'A', 2, Weight{1, 0}},
                             {'A', 2, Weight{2, 3}},    {'A', 3, Weight{1, 1, 1}}, {'A', 3, Weight{0, 2, 0}},
                             {'C', 2, Weight{2, 1}},    {'C', 2, Weight{0, 1}},    {'C', 2, Weight{3, 2}},
                             {'G', 2, Weight{1, 0}},    {'G', 2, Weight{0, 1}},    {'G', 2, Weight{2, 3}}};
  std::string values;
  for (const auto& t : table) {
    int best = 0;
    for (const auto& cr : hand_coroots(t.type, t.rank)) {
      int p = 0;
      for (int i = 0; i < t.rank; ++i) p += cr[i] * t.lambda[i];
      if (p != 0 && (best == 0 || p < best)) best = p;
    }
    auto rd = build_root_system(t.type, t.rank);
    const auto got = gromov_width(rd, t.lambda);
    c.expect(got == best, std::string(1, t.type) + std::to_string(t.rank) + " " + str(t.lambda) + ": " +
                              to_string(got) + " vs " + std::to_string(best));
    values += (values.empty() ? "" : ",") + to_string(got);
  }
  auto P = fflv_polytope(4, Weight{1, 1, 1});
  c.expect(simplex_fits(P, 1), "simplex of size 1 does not fit");
  c.expect(!simplex_fits(P, 2), "simplex of size 2 fits");
  c.note("widths " + values);
  return c.outcome();
}

Outcome gr24() {
  Checker c;
  const std::vector<std::pair<std::string, std::string>> expected = {{"gr24-pbw", "p[12]p[34] - p[13]p[24]"},
                                                                     {"gr24-lusztig", "p[12]p[34] - p[13]p[24]"},
                                                                     {"gr24-qpbw", "p[12]p[34] - p[13]p[24]"},
                                                                     {"gr24-string", "p[13]p[24] - p[14]p[23]"}};
  std::vector<std::vector<QuadraticForm>> ideals;
  for (const auto& [name, want] : expected) {
    auto w = gr24_weighting(name);
    const auto got = to_string(plucker_initial_form(w));
    c.expect(got == want, name + " initial form " + got + ", expected " + want);
    auto s = preset(name);
    auto es = essential_set(s.rd, Weight{0, 1, 0}, s.sequence, s.order);
    std::vector<QuadraticForm> ideal;
    for (const auto& b : degree2_binomials(es)) ideal.push_back(binomial_form(w, es, b));
    c.expect(ideal.size() == 1, name + ": " + std::to_string(ideal.size()) + " binomials");
    ideals.push_back(ideal);
  }
  std::string maps;
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    auto sigma = find_relabeling(ideals[0], ideals[k]);
    c.expect(sigma.has_value(), "no relabeling onto " + expected[k].first);
    if (!sigma) continue;
    std::string m;
    for (const auto& [from, to] : *sigma)
      if (from != to) m += (m.empty() ? "" : " ") + to_string(from) + "→" + to_string(to);
    maps += (maps.empty() ? "" : ", ") + expected[k].first + ": " + (m.empty() ? "identity" : m);
  }
  c.note("relabelings from gr24-pbw " + maps);
  return c.outcome();
}

Outcome ls_counts() {
  Checker c;
  auto a1 = build_root_system('A', 1);
  for (int k = 0; k <= 5; ++k) c.expect(static_cast<std::int64_t>(ls_paths(a1, Weight{k}).size()) == k + 1, "SL2 " + std::to_string(k));
  auto a2 = build_root_system('A', 2);
  for (const auto& w : {Weight{1, 0}, Weight{1, 1}, Weight{2, 2}})
    c.expect(static_cast<std::int64_t>(ls_paths(a2, w).size()) == dim_of(a2, w), "SL3 " + str(w));
  auto c2 = build_root_system('C', 2);
  for (const auto& w : {Weight{1, 0}, Weight{0, 1}})
    c.expect(static_cast<std::int64_t>(ls_paths(c2, w).size()) == dim_of(c2, w), "C2 " + str(w));
  c.expect(maximal_chains(2, 4).size() == 2, "maximal chains of I_{2,4}");
  c.expect(standard_monomials(2, 4, 2).size() == 20, "standard degree-two monomials");
  return c.outcome();
}

Outcome g2_suite() {
  Checker c;
  auto g2 = build_root_system('G', 2);
  c.expect(dim_of(g2, Weight{1, 0}) == 7 && dim_of(g2, Weight{0, 1}) == 14, "Weyl dimensions 7, 14");
  for (const auto& name : {"g2-homogeneous", "g2-nonsaturated"}) {
    auto s = preset(name);
    for (const auto& w : {Weight{1, 0}, Weight{0, 1}}) {
      const auto n = essential_set(s.rd, w, s.sequence, s.order).points.size();
      c.expect(static_cast<std::int64_t>(n) == dim_of(g2, w), std::string(name) + " " + str(w));
    }
  }
  GradedMonoid gamma(preset("g2-nonsaturated"));
  std::vector<std::string> witnesses;
  struct Ray {
    Weight lambda;
    int levels;
  };
  for (const auto& [w, L] : {Ray{Weight{1, 0}, 4}, Ray{Weight{0, 1}, 4}, Ray{Weight{1, 1}, 3}}) {
    gamma.compute_ray(w, L, 2);
    auto r = saturation_check(gamma, w, 1, L);
    for (const auto& p : r.not_saturated) witnesses.push_back(str(w) + " level " + std::to_string(p.level));
  }
  auto ws = weights_of_degree_at_most(2, 4);
  for (const auto& w : ws) gamma.compute(w);
  auto global = global_saturation_check(gamma, ws);
  for (const auto& [w, m] : global.missing) witnesses.push_back("global " + str(w));
  c.expect(!witnesses.empty(),
           "no saturation witness for the literal setup: rays ω1, ω2 to level 4, ρ to level 3, and the cone over all "
           "weights of degree ≤ 4 (" +
               std::to_string(global.facets) + " facets) are saturated");
  if (!witnesses.empty()) c.note("witness " + witnesses.front());

  GradedMonoid mirror(preset("g2-nonsaturated-mirror"));
  mirror.compute_ray(Weight{0, 1}, 3);
  auto m = saturation_check(mirror, Weight{0, 1}, 1, 3);
  if (!m.saturated()) {
    std::ostringstream p;
    for (auto x : m.not_saturated.front().point) p << x << " ";
    c.note("diagnostic: with the weight function reversed (g2-nonsaturated-mirror) the ω2 ray computed to level 3 has a witness at level " +
           std::to_string(m.not_saturated.front().level) + ", point " + p.str());
  }
  return c.outcome();
}

Outcome properties() {
  Checker c;
  std::mt19937 gen(12);
  std::uniform_int_distribution<int> e(0, 4), psi(0, 3), len(1, 6), tb(0, 3);
  int compatible = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = len(gen);
    const auto t = static_cast<Tiebreak>(tb(gen));
    const bool opp = t == Tiebreak::opp_lex || t == Tiebreak::opp_rlex;
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = psi(gen) + (opp ? 1 : 0);
    MonomialOrder o{WeightFunction(w), t};
    IntPoint a(n), b(n), z(n);
    for (int i = 0; i < n; ++i) {
      a[i] = e(gen);
      b[i] = e(gen);
      z[i] = e(gen);
    }
    if (o.less(a, b)) std::swap(a, b);
    if (a == b) continue;
    ++compatible;
    c.expect(o.less(b + z, a + z), "order not compatible with addition");
  }
  c.note(std::to_string(compatible) + " strict triples");

  struct Named {
    std::string name;
    RationalPolytope P;
  };
  auto a2 = build_root_system('A', 2);
  auto sp = sp4_polytopes(Weight{1, 1});
  std::vector<Named> catalog = {
      {"GT(3,ρ)", gt_polytope(3, Weight{1, 1})},
      {"GT(4,ω2)", gt_polytope(4, Weight{0, 1, 0})},
      {"FFLV(3,ρ)", fflv_polytope(3, Weight{1, 1})},
      {"FFLV(4,ω1+ω3)", fflv_polytope(4, Weight{1, 0, 1})},
      {"string(121,ρ)", string_polytope(string_cone_sln(3, WeylWord{1, 2, 1}), a2, WeylWord{1, 2, 1}, Weight{1, 1})},
      {"SP4(ρ)", sp.sp4},
      {"Q(ρ)", sp.q},
      {"Q1212(ρ)", sp.string_1212},
      {"simplex(4,1)", gromov_simplex(4, 1)},
  };
  std::string skipped;
  for (const auto& [name, P] : catalog) {
    const auto points = lattice_points(P);
    auto round = RationalPolytope::from_vertices(P.dim(), vertices(P));
    c.expect(lattice_points(round) == points, name + " H/V round trip");
    bool lattice = true;
    try {
      lattice_vertices(P);
    } catch (const DomainError&) {
      lattice = false;
    }
    if (!lattice) {
      skipped += (skipped.empty() ? "" : ",") + name;
      continue;
    }
    const int d = P.affine_dim();
    auto I = polytope_invariants(P, d + 1);
    const auto predicted = evaluate(I.ehrhart, d + 2);
    const auto actual = count_lattice_points(P.dilate(d + 2));
    c.expect(predicted == actual, name + " Ehrhart prediction " + to_string(predicted) + " vs " + std::to_string(actual));
  }
  if (!skipped.empty()) c.note("non-lattice, Ehrhart skipped: " + skipped);

  std::int64_t sums = 0;
  std::vector<Setup> setups = {preset("gr24-string"), preset("gr24-pbw"), fflv_setup(3), preset("sp4-sp")};
  for (const auto& s : setups) {
    GradedMonoid gamma(s);
    const int r = s.rd.rank();
    auto ws = weights_of_degree_at_most(r, r == 3 ? 2 : 3);
    for (const auto& w : ws) gamma.compute(w);
    std::vector<std::pair<Weight, Weight>> pairs;
    for (const auto& a : ws)
      for (const auto& b : ws)
        if (!(b < a) && gamma.has(a + b)) pairs.push_back({a, b});
    auto report = monoid_closure_check(gamma, pairs);
    sums += report.sums_checked;
    c.expect(report.closed(), describe(s.rd) + ": " + std::to_string(report.violations.size()) + " closure violations");
  }
  c.note(std::to_string(sums) + " closure sums");
  return c.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, skip;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--only") == 0) only.insert(std::atoi(argv[i + 1]));
    if (std::strcmp(argv[i], "--skip") == 0) skip.insert(std::atoi(argv[i + 1]));
  }
  struct Criterion {
    int id;
    const char* title;
    double limit;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {1, "dimension identity", 10, dimension_identity},
      {2, "golden essential sets", 5, golden_sets},
      {3, "string cone equality", 0, string_cone_equality},
      {4, "GT Minkowski additivity", 0, gt_minkowski},
      {5, "FFLV facet formula", 30, fflv_facets},
      {6, "sp4 non-equivalence", 0, sp4_trio},
      {7, "GT vs FFLV non-equivalence", 0, gt_vs_fflv},
      {8, "Gromov width", 0, gromov},
      {9, "Gr(2,4) degenerations", 0, gr24},
      {10, "LS-path counts", 0, ls_counts},
      {11, "G2 stretch suite", 600, g2_suite},
      {12, "property suites", 0, properties},
  };
  int failed = 0;
  for (const auto& k : criteria) {
    if ((!only.empty() && !only.count(k.id)) || skip.count(k.id)) {
      std::cout << "criterion " << k.id << " SKIP " << k.title << "\n";
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = k.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (k.limit > 0 && secs > k.limit) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(k.limit)) + " s limit";
    }
    failed += o.pass ? 0 : 1;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << "criterion " << k.id << " " << (o.pass ? "PASS" : "FAIL") << " " << k.title << " (" << t.str()
              << " s): " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
