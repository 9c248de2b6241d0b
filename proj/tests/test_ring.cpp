#include <doctest.h>

#include "subalg/ring.hpp"

using namespace subalg;

namespace {

Coeff replay(const std::vector<Coeff>& w, const std::vector<Coeff>& gens) {
  Coeff acc(0);
  for (size_t i = 0; i < w.size(); ++i) acc += w[i] * gens[i];
  return acc;
}

}  // namespace

TEST_CASE("membership witness over the integers replays") {
  std::vector<Coeff> gens{Coeff(4), Coeff(10)};
  auto w = ideal_membership_witness(Domain::Integers, Coeff(6), gens);
  REQUIRE(w.has_value());
  CHECK(replay(*w, gens) == Coeff(6));
}

TEST_CASE("zero target always has the zero witness") {
  std::vector<Coeff> gens{Coeff(4), Coeff(10)};
  auto w = ideal_membership_witness(Domain::Integers, Coeff(0), gens);
  REQUIRE(w.has_value());
  CHECK(replay(*w, gens) == Coeff(0));
  for (const Coeff& c : *w) CHECK(c == 0);
}

TEST_CASE("witness absent when the gcd does not divide") {
  auto w = ideal_membership_witness(Domain::Integers, Coeff(5), {Coeff(2), Coeff(4)});
  CHECK_FALSE(w.has_value());
}

TEST_CASE("witness presence matches gcd divisibility on random inputs") {
  // Deterministic LCG; the artifact itself has no randomness.
  unsigned long state = 12345;
  auto next = [&]() {
    state = state * 6364136223846793005ul + 1442695040888963407ul;
    return static_cast<long>((state >> 33) % 41) - 20;
  };
  for (int round = 0; round < 500; ++round) {
    int n = 1 + static_cast<int>(state % 4);
    std::vector<Coeff> gens;
    for (int i = 0; i < n; ++i) gens.push_back(Coeff(next()));
    Coeff c = Coeff(next());
    Int g = 0;
    for (const Coeff& a : gens) g = int_gcd(g, to_int(a));
    bool expected = g == 0 ? c == 0 : to_int(c) % g == 0;
    auto w = ideal_membership_witness(Domain::Integers, c, gens);
    CHECK(w.has_value() == expected);
    if (w) CHECK(replay(*w, gens) == c);
  }
}

TEST_CASE("rational witness exists unless all generators vanish") {
  auto w = ideal_membership_witness(Domain::Rationals, Coeff(7), {Coeff(0), Coeff(3)});
  REQUIRE(w.has_value());
  CHECK(replay(*w, {Coeff(0), Coeff(3)}) == Coeff(7));
  CHECK_FALSE(ideal_membership_witness(Domain::Rationals, Coeff(7), {Coeff(0)}).has_value());
  CHECK(ideal_membership_witness(Domain::Rationals, Coeff(0), {Coeff(0)}).has_value());
}

TEST_CASE("constant syzygies annihilate their input") {
  SUBCASE("equal entries") {
    auto s = constant_syzygy_generators(Domain::Integers, {Coeff(2), Coeff(2)});
    REQUIRE(s.size() == 1);
    CHECK(s[0][0] * 2 + s[0][1] * 2 == 0);
    CHECK(s[0] == std::vector<Coeff>{Coeff(1), Coeff(-1)});
  }
  SUBCASE("coprime pair") {
    auto s = constant_syzygy_generators(Domain::Integers, {Coeff(9), Coeff(-4)});
    REQUIRE(s.size() == 1);
    CHECK(s[0][0] * 9 + s[0][1] * -4 == 0);
  }
  SUBCASE("single nonzero element") {
    CHECK(constant_syzygy_generators(Domain::Integers, {Coeff(5)}).empty());
  }
  SUBCASE("zero entries give unit syzygies") {
    auto s = constant_syzygy_generators(Domain::Integers, {Coeff(0), Coeff(3), Coeff(0)});
    REQUIRE(s.size() == 2);
    for (const auto& v : s) CHECK(v[0] * 0 + v[1] * 3 + v[2] * 0 == 0);
  }
  SUBCASE("rationals") {
    auto s = constant_syzygy_generators(Domain::Rationals, {Coeff(3), Coeff(5), Coeff(0)});
    REQUIRE(s.size() == 2);
    for (const auto& v : s) CHECK(v[0] * 3 + v[1] * 5 + v[2] * 0 == 0);
  }
}
