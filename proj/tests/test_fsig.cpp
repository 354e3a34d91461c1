#include <doctest.h>

#include "frobmf/fsig.hpp"
#include "support.hpp"

using namespace frobmf;
using frobmf::testing::P;

namespace {

Rational R_(long num, long den = 1) { return Rational(num) / Rational(den); }

}  // namespace

TEST_CASE("rational formatting") {
  CHECK(to_string(R_(5, 12)) == "5/12");
  CHECK(to_string(R_(4, 2)) == "2");
  CHECK(to_string(R_(-1, 3)) == "-1/3");
}

TEST_CASE("w_values") {
  const auto t = w_values({2, 1});
  CHECK(t.values == std::vector<Rational>{2, 2, 0});
  CHECK(w_values({1, 1, 1}).values == std::vector<Rational>{1, 0, 0, 0});
  CHECK(w_values({3, 2}).values == std::vector<Rational>{6, 3, 0});
  CHECK_THROWS_AS(w_values({}), std::invalid_argument);

  // recurrence = definition for n <= 6, d_j <= 5
  std::mt19937_64 rng(43);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int it = 0; it < 20; ++it) {
      std::vector<std::uint32_t> dv(n);
      for (auto& x : dv) x = static_cast<std::uint32_t>(1 + rng() % 5);
      const auto direct = w_direct(dv);
      CHECK(direct == w_recurrence(dv));
      Rational prod = 1, prod_gap = 1;
      const auto d = *std::max_element(dv.begin(), dv.end());
      for (auto x : dv) {
        prod *= x;
        prod_gap *= d - x;
      }
      CHECK(direct.front() == prod);
      CHECK(direct.back() == prod_gap);
      CHECK(direct.back() == 0);
    }
}

TEST_CASE("uv closed form") {
  CHECK(fsignature_uv_closed({1}) == 1);
  CHECK(fsignature_uv_closed({2}) == R_(1, 2));
  for (std::uint32_t d = 1; d <= 6; ++d) CHECK(fsignature_uv_closed({d}) == R_(1, d));
  CHECK(fsignature_uv_closed({1, 1}) == R_(2, 3));
  CHECK(fsignature_uv_closed({2, 1}) == R_(5, 12));

  // bounds: 0 < S <= 1
  std::mt19937_64 rng(47);
  for (int it = 0; it < 50; ++it) {
    std::vector<std::uint32_t> dv(1 + rng() % 4);
    for (auto& x : dv) x = static_cast<std::uint32_t>(1 + rng() % 5);
    const auto s = fsignature_uv_closed(dv);
    CHECK(s > 0);
    CHECK(s <= 1);
  }
}

TEST_CASE("z2 closed form") {
  CHECK(fsignature_z2_closed({1, 1}) == R_(1, 2));
  CHECK(fsignature_z2_closed({2, 1}) == 0);
  CHECK(fsignature_z2_closed({1}) == 1);
  CHECK(fsignature_z2_closed({1, 1, 1, 1, 1}) == R_(1, 16));
}

TEST_CASE("Bernoulli numbers and power sums") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == R_(-1, 2));
  CHECK(bernoulli(2) == R_(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == R_(-1, 30));
  CHECK(bernoulli(12) == R_(-691, 2730));
  CHECK(sum_powers(3, 2) == 14);
  CHECK(sum_powers(0, 5) == 0);
  CHECK(sum_powers(10, 3) == 3025);
  for (std::uint64_t delta : {1u, 7u, 50u})
    for (std::uint32_t s = 0; s <= 8; ++s) {
      boost::multiprecision::cpp_int naive = 0;
      for (std::uint64_t r = 1; r <= delta; ++r) naive += boost::multiprecision::pow(boost::multiprecision::cpp_int(r), s);
      CHECK(sum_powers(delta, s) == Rational(naive));
    }
}

TEST_CASE("expansion check") {
  CHECK(expansion_check({2, 1}, {0, 0}));
  CHECK(expansion_check({3}, {R_(5, 7)}));
  CHECK(expansion_check({3, 2, 2}, {R_(1, 2), R_(1, 3), 0}));
  CHECK_THROWS_AS(expansion_check({2, 1}, {0}), std::invalid_argument);
}

TEST_CASE("empirical sequences: hand values") {
  const auto R1 = PolyRing::make(5, 1);
  const auto s = empirical_sequence(P("x1^2", R1), 1, 1, TargetType::kUV);
  REQUIRE(s.empirical.size() == 1);
  CHECK(s.empirical[0].s == R_(13, 25));
  CHECK(s.closed_form == R_(1, 2));
  CHECK(*s.empirical[0].gap == R_(1, 50));

  const auto R3 = PolyRing::make(3, 1);
  CHECK(empirical_sequence(P("x1", R3), 1, 1, TargetType::kUV).empirical[0].s == 1);
  CHECK(empirical_sequence(P("x1", R3), 1, 1, TargetType::kZ2).empirical[0].s == 1);

  const auto seq = empirical_sequence(P("x1^2", R3), 1, 2, TargetType::kUV);
  CHECK(seq.empirical[0].s == R_(5, 9));
  CHECK(seq.empirical[1].s == R_(41, 81));

  const auto R32 = PolyRing::make(3, 2);
  const auto xy = empirical_sequence(P("x1*x2", R32), 1, 2, TargetType::kUV);
  CHECK(xy.empirical[0].s == R_(19, 27));
  CHECK(xy.empirical[1].s == R_(489, 729));
  const auto x2y = empirical_sequence(P("x1^2*x2", R32), 1, 2, TargetType::kUV);
  CHECK(x2y.empirical[0].s == R_(13, 27));
  CHECK(x2y.empirical[1].s == R_(309, 729));

  // non-monomial input: no closed form
  const auto gen = empirical_sequence(P("x1^2 + x2^3", R32), 1, 1, TargetType::kUV);
  CHECK_FALSE(gen.closed_form.has_value());
  CHECK_FALSE(gen.empirical[0].gap.has_value());
  CHECK_THROWS_AS(empirical_sequence(P("x1", R3), 2, 1, TargetType::kUV), std::invalid_argument);
  CHECK_THROWS_AS(empirical_sequence(P("x1*x2", R32), 1, 9, TargetType::kUV, 1000), ResourceLimitError);
}

TEST_CASE("monomial_dvec and targets") {
  const auto R = PolyRing::make(3, 2);
  CHECK(monomial_dvec(P("x1^2*x2", R)) == std::vector<std::uint32_t>{2, 1});
  CHECK_FALSE(monomial_dvec(P("x1^2", R)).has_value());
  CHECK_FALSE(monomial_dvec(P("x1 + x2", R)).has_value());
  CHECK(parse_target("z2") == TargetType::kZ2);
  CHECK_THROWS_AS(parse_target("zz"), std::invalid_argument);
}
