#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flagdegen/lspaths.hpp"
#include "flagdegen/repengine.hpp"

#include <map>
#include <random>

using namespace flagdegen;

namespace {

TabIndex ti(int n, std::vector<int> e) { return TabIndex(n, std::move(e)); }

std::int64_t dim_of(const RootDatum& rd, const Weight& w) { return weyl_dim(rd, w).convert_to<std::int64_t>(); }

// Standard Young tableaux of a rectangle by the hook length formula.
std::int64_t rectangle_tableaux(int rows, int cols) {
  Integer num = 1, den = 1;
  for (int k = 2; k <= rows * cols; ++k) num *= k;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) den *= (rows - i) + (cols - j) - 1;
  return Integer(num / den).convert_to<std::int64_t>();
}

}  // namespace

TEST_CASE("tableau order") {
  CHECK(tab_leq(ti(4, {1, 2}), ti(4, {3, 4})));
  CHECK_FALSE(tab_leq(ti(4, {1, 4}), ti(4, {2, 3})));
  CHECK_FALSE(tab_leq(ti(4, {2, 3}), ti(4, {1, 4})));
  CHECK_FALSE(comparable(ti(4, {1, 4}), ti(4, {2, 3})));
  CHECK(tab_leq(ti(4, {1, 3}), ti(4, {1, 3})));
  CHECK_THROWS_AS(tab_leq(ti(4, {1, 3}), ti(5, {1, 3})), DomainError);
  CHECK_THROWS_AS(tab_leq(ti(4, {1}), ti(4, {1, 3})), DomainError);
  CHECK_THROWS_AS(ti(4, {2, 2}), DomainError);
  CHECK_THROWS_AS(ti(4, {1, 5}), DomainError);
  CHECK(to_string(ti(4, {1, 4})) == "[14]");
  CHECK(tab_indices(2, 4).size() == 6);
}

TEST_CASE("maximal chains") {
  CHECK(maximal_chains(1, 5).size() == 1);
  CHECK(maximal_chains(2, 3).size() == 1);
  auto c = maximal_chains(2, 4);
  REQUIRE(c.size() == 2);
  for (const auto& chain : c) {
    CHECK(chain.front() == ti(4, {1, 2}));
    CHECK(chain.back() == ti(4, {3, 4}));
    CHECK(chain.size() == 5);
  }
  CHECK(c[0][2] != c[1][2]);
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n; ++d) CHECK(static_cast<std::int64_t>(maximal_chains(d, n).size()) == rectangle_tableaux(d, n - d));
}

TEST_CASE("standard monomials") {
  CHECK(standard_monomials(2, 4, 1).size() == 6);
  CHECK(standard_monomials(2, 4, 0).size() == 1);
  auto two = standard_monomials(2, 4, 2);
  CHECK(two.size() == 20);
  PlueckerMonomial bad({ti(4, {1, 4}), ti(4, {2, 3})});
  CHECK_FALSE(bad.is_standard());
  CHECK(std::find(two.begin(), two.end(), bad) == two.end());
  for (int n = 2; n <= 6; ++n) {
    auto rd = build_root_system('A', n - 1);
    for (int d = 1; d <= std::min(3, n); ++d)
      for (int r = 0; r <= 3; ++r) {
        Weight w = Weight::zero(n - 1);
        if (d < n) w = r * rd.fundamental_weight(d - 1);
        CHECK(static_cast<std::int64_t>(standard_monomials(d, n, r).size()) == dim_of(rd, w));
      }
  }
}

TEST_CASE("degenerate product") {
  PlueckerMonomial p12({ti(4, {1, 2})}), p34({ti(4, {3, 4})}), p14({ti(4, {1, 4})}), p23({ti(4, {2, 3})});
  auto a = hodge_product(p12, p34);
  REQUIRE(a);
  CHECK(to_string(*a) == "p[34]p[12]");
  CHECK_FALSE(hodge_product(p14, p23));
  CHECK(hodge_product(p12, PlueckerMonomial{}) == p12);

  auto all = standard_monomials(2, 5, 1);
  std::mt19937 gen(3);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    auto x = all[pick(gen)], y = all[pick(gen)], z = all[pick(gen)];
    CHECK(hodge_product(x, y) == hodge_product(y, x));
    auto xy = hodge_product(x, y);
    auto yz = hodge_product(y, z);
    if (xy && yz) {
      auto left = hodge_product(*xy, z);
      auto right = hodge_product(x, *yz);
      CHECK(left == right);
    }
  }
}

TEST_CASE("minuscule paths") {
  auto a1 = build_root_system('A', 1);
  auto p = ls_paths(a1, Weight{1});
  REQUIRE(p.size() == 2);
  for (const auto& x : p) {
    CHECK(x.directions.size() == 1);
    CHECK(x.breaks == std::vector<Rational>{1});
  }
  CHECK(ls_paths(a1, Weight{0}).size() == 1);
  CHECK_THROWS_AS(ls_paths(a1, Weight{-1}), DomainError);
  Budget tight;
  tight.max_weyl_dim = 3;
  CHECK_THROWS_AS(ls_paths(a1, Weight{5}, tight), ResourceError);
}

TEST_CASE("chains collapse to one path") {
  auto a2 = build_root_system('A', 2);
  const Weight rho{1, 1};
  std::vector<Rational> a{1, 1, 1, 1};
  std::vector<LSChain> chains = {
      {{WeylWord{1, 2, 1}, WeylWord{2, 1}, WeylWord{1}, WeylWord{}}, a},
      {{WeylWord{1, 2, 1}, WeylWord{2, 1}, WeylWord{2}, WeylWord{}}, a},
      {{WeylWord{1, 2, 1}, WeylWord{1, 2}, WeylWord{1}, WeylWord{}}, a},
      {{WeylWord{1, 2, 1}, WeylWord{1, 2}, WeylWord{2}, WeylWord{}}, a},
  };
  const Weight w0rho = a2.act(WeylWord{1, 2, 1}, rho);
  for (const auto& c : chains) {
    auto p = path_of_chain(a2, rho, c);
    CHECK(p.directions == std::vector<Weight>{w0rho});
    CHECK(p.breaks == std::vector<Rational>{1});
    CHECK(p.endpoint() == w0rho);
  }
  auto all = ls_paths(a2, rho);
  CHECK(all.size() == 8);
  CHECK(std::count(all.begin(), all.end(), path_of_chain(a2, rho, chains[0])) == 1);

  // a break at 1/2 needs an even pairing along the cover
  LSChain even{{WeylWord{1, 2, 1}, WeylWord{2, 1}, WeylWord{1}, WeylWord{}}, {0, Rational(1, 2), 1, 1}};
  auto p = path_of_chain(a2, rho, even);
  CHECK(p.breaks == std::vector<Rational>{Rational(1, 2), 1});
  CHECK(std::count(all.begin(), all.end(), p) == 1);
  LSChain odd{{WeylWord{1, 2, 1}, WeylWord{2, 1}, WeylWord{1}, WeylWord{}}, {0, 0, Rational(1, 2), 1}};
  CHECK_THROWS_AS(path_of_chain(a2, rho, odd), DomainError);
  LSChain broken{{WeylWord{1, 2, 1}, WeylWord{1}, WeylWord{}}, {1, 1, 1}};
  CHECK_THROWS_AS(path_of_chain(a2, rho, broken), DomainError);
}

TEST_CASE("path counts equal dimensions") {
  struct Case {
    char type;
    int rank;
    int bound;
  };
  for (const auto& c : {Case{'A', 1, 6}, Case{'A', 2, 4}, Case{'A', 3, 2}, Case{'C', 2, 3}, Case{'G', 2, 2}}) {
    auto rd = build_root_system(c.type, c.rank);
    Eigen::VectorXi v = Eigen::VectorXi::Zero(c.rank);
    auto walk = [&](auto& self, int i, int left) -> void {
      if (i == c.rank) {
        Weight w(v);
        if (dim_of(rd, w) > 300) return;
        auto paths = ls_paths(rd, w);
        CHECK(static_cast<std::int64_t>(paths.size()) == dim_of(rd, w));
        return;
      }
      for (int t = 0; t <= left; ++t) {
        v[i] = t;
        self(self, i + 1, left - t);
      }
      v[i] = 0;
    };
    walk(walk, 0, c.bound);
  }
}

TEST_CASE("endpoints give the character") {
  struct Case {
    char type;
    int rank;
    Weight lambda;
  };
  for (const auto& c : {Case{'A', 2, Weight{2, 1}}, Case{'A', 2, Weight{2, 2}}, Case{'A', 3, Weight{1, 1, 0}},
                        Case{'C', 2, Weight{1, 1}}, Case{'C', 2, Weight{0, 2}}, Case{'G', 2, Weight{1, 0}},
                        Case{'G', 2, Weight{0, 1}}}) {
    auto rd = build_root_system(c.type, c.rank);
    HWModule M(rd, c.lambda);
    std::map<Weight, std::int64_t> ends;
    for (const auto& p : ls_paths(rd, c.lambda)) {
      for (std::size_t i = 1; i < p.directions.size(); ++i) {
        CHECK(p.breaks[i - 1] < p.breaks[i]);
        CHECK(coset_leq(rd, c.lambda, p.directions[i], p.directions[i - 1]));
        CHECK_FALSE(p.directions[i] == p.directions[i - 1]);
      }
      ++ends[p.endpoint()];
    }
    for (const auto& [mu, count] : ends) CHECK(M.multiplicity(mu) == count);
  }
}

TEST_CASE("standard path monomials") {
  auto a2 = build_root_system('A', 2);
  const Weight rho{1, 1};
  const Weight w0rho = a2.act(WeylWord{1, 2, 1}, rho);
  LSPath top{rho, {w0rho}, {1}}, bottom{rho, {rho}, {1}};
  CHECK(is_standard_path_monomial(a2, {top}));
  CHECK(is_standard_path_monomial(a2, {top, bottom}));
  CHECK_FALSE(is_standard_path_monomial(a2, {bottom, top}));
  LSPath other{Weight{1, 0}, {Weight{1, 0}}, {1}};
  CHECK_THROWS_AS(is_standard_path_monomial(a2, {top, other}), DomainError);
  CHECK(coset_word(a2, rho, w0rho).length() == 3);
  CHECK(coset_word(a2, Weight{1, 0}, Weight{1, 0}).length() == 0);
}
