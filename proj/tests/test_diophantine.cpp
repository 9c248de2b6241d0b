#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "subalg/diophantine.hpp"

using namespace subalg;

namespace {

Monomial M(std::vector<Exponent> e) { return Monomial(std::move(e)); }

// Full-grid oracle: enumerate every assignment within the per-coordinate
// bounds and keep the exact matches.
std::set<Monomial> grid_oracle(const std::vector<Monomial>& cols, const Monomial& target) {
  std::set<Monomial> out;
  size_t m = cols.size();
  std::vector<Exponent> bounds(m, 0);
  for (size_t i = 0; i < m; ++i) {
    unsigned long cd = cols[i].total_degree();
    bounds[i] = cd == 0 ? 0 : static_cast<Exponent>(target.total_degree() / cd);
  }
  std::vector<Exponent> cur(m, 0);
  while (true) {
    std::vector<Exponent> sum(target.arity(), 0);
    for (size_t i = 0; i < m; ++i)
      for (int v = 0; v < target.arity(); ++v) sum[v] += cur[i] * cols[i][v];
    if (Monomial(sum) == target) out.insert(Monomial(cur));
    size_t k = 0;
    while (k < m && cur[k] == bounds[k]) cur[k++] = 0;
    if (k == m) break;
    ++cur[k];
  }
  return out;
}

}  // namespace

TEST_CASE("factorizations of x^2y^2 over the example leading monomials") {
  std::vector<Monomial> cols{M({2, 2}), M({2, 0}), M({0, 2}), M({1, 1})};
  auto sols = nonneg_solutions({cols, M({2, 2})});
  std::set<Monomial> got(sols.begin(), sols.end());
  std::set<Monomial> expect{M({1, 0, 0, 0}), M({0, 1, 1, 0}), M({0, 0, 0, 2})};
  CHECK(got == expect);
  CHECK(sols.size() == got.size());  // duplicate-free
}

TEST_CASE("xy is not a product of x^2 and y^2") {
  CHECK(nonneg_solutions({{M({2, 0}), M({0, 2})}, M({1, 1})}).empty());
}

TEST_CASE("the zero target has exactly the empty product") {
  auto sols = nonneg_solutions({{M({2, 0}), M({0, 2})}, M({0, 0})});
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == M({0, 0}));
}

TEST_CASE("zero-degree columns are rejected") {
  CHECK_THROWS_AS(nonneg_solutions({{M({0, 0})}, M({1, 0})}), std::invalid_argument);
}

TEST_CASE("output is lexicographically ascending and replays") {
  std::vector<Monomial> cols{M({1, 0}), M({0, 1}), M({1, 1})};
  auto sols = nonneg_solutions({cols, M({3, 3})});
  CHECK(std::is_sorted(sols.begin(), sols.end()));
  for (const Monomial& e : sols) {
    std::vector<Exponent> sum(2, 0);
    for (size_t i = 0; i < cols.size(); ++i)
      for (int v = 0; v < 2; ++v) sum[v] += e[i] * cols[i][v];
    CHECK(Monomial(sum) == M({3, 3}));
  }
}

TEST_CASE("duplicate columns emit every factorization") {
  std::vector<Monomial> cols{M({1, 0}), M({1, 0})};
  auto sols = nonneg_solutions({cols, M({2, 0})});
  CHECK(sols.size() == 3);  // (0,2), (1,1), (2,0)
}

TEST_CASE("solver equals the grid oracle over a degree sweep") {
  std::vector<std::vector<Monomial>> column_sets{
      {M({2, 2}), M({2, 0}), M({0, 2}), M({1, 1})},
      {M({2, 0}), M({0, 2})},
      {M({1, 0}), M({0, 1}), M({1, 1})},
      {M({1, 1}), M({1, 1})},
      {M({3, 0}), M({1, 2}), M({0, 3}), M({2, 1})},
  };
  for (const auto& cols : column_sets) {
    for (Exponent a = 0; a <= 8; ++a) {
      for (Exponent b = 0; a + b <= 8; ++b) {
        Monomial target = M({a, b});
        auto sols = nonneg_solutions({cols, target});
        std::set<Monomial> got(sols.begin(), sols.end());
        CHECK(got == grid_oracle(cols, target));
        CHECK(sols.size() == got.size());
      }
    }
  }
}

TEST_CASE("quotient membership divides first") {
  std::vector<Monomial> lpf{M({2, 0}), M({0, 2}), M({1, 1})};
  SUBCASE("divisible case reduces to the difference system") {
    auto sols = quotient_memberships(M({2, 4}), M({2, 2}), lpf);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == M({0, 1, 0}));
  }
  SUBCASE("equality gives the empty product") {
    auto sols = quotient_memberships(M({2, 2}), M({2, 2}), lpf);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].is_unit());
  }
  SUBCASE("non-divisible gives nothing") {
    CHECK(quotient_memberships(M({1, 1}), M({2, 0}), lpf).empty());
  }
}
