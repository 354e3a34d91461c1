#include <doctest.h>

#include "frobmf/frobenius.hpp"
#include "frobmf/matfac.hpp"
#include "support.hpp"

using namespace frobmf;
using frobmf::testing::P;

namespace {

PolyMatrix one_by_one(const SparsePoly& s) { return PolyMatrix::scalar(s, 1); }

// Random unit upper-triangular matrix (ones on the diagonal).
PolyMatrix random_unitriangular(std::mt19937_64& rng, const RingPtr& R, std::size_t n, bool lower) {
  auto m = PolyMatrix::identity(R, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() % 2) {
        auto v = frobmf::testing::random_poly(rng, R, 2, 2);
        if (lower)
          m.set(j, i, v);
        else
          m.set(i, j, v);
      }
  return m;
}

}  // namespace

TEST_CASE("verify_matfac") {
  const auto R = PolyRing::make(3, 1);
  const FrobBasis basis(R, 1);
  const auto x = P("x1", R);
  CHECK(verify_matfac(matrix_power(x, 2, basis), matrix_power(x, 1, basis), x));
  const auto f = P("x1^2 + x1", R);
  CHECK(verify_matfac(one_by_one(f), one_by_one(SparsePoly::one(R)), f));
  const auto R2 = PolyRing::make(3, 2);
  CHECK_FALSE(verify_matfac(one_by_one(P("x1", R2)), one_by_one(P("x2", R2)), P("x1^2", R2)));
  CHECK_THROWS_AS(verify_matfac(PolyMatrix::identity(R, 2), PolyMatrix::identity(R, 3), x), std::invalid_argument);
  CHECK_THROWS_AS(MatFac(one_by_one(x), one_by_one(x), x), std::invalid_argument);
}

TEST_CASE("maltese and sharp") {
  const auto R = PolyRing::make(3, 1);
  const auto x = P("x1", R);
  const MatFac mf(one_by_one(x), one_by_one(x), P("x1^2", R));

  const auto m = maltese(mf);
  const auto& L = m.ring();
  CHECK(L->names() == std::vector<std::string>{"x1", "u", "v"});
  CHECK(m.phi() == frobmf::testing::matrix_from_strings(L, {{"x1", "-v"}, {"u", "x1"}}));
  CHECK(m.psi() == frobmf::testing::matrix_from_strings(L, {{"x1", "v"}, {"-u", "x1"}}));
  CHECK(m.f() == P("x1^2 + u*v", L));
  CHECK(m.verify());

  const auto s = sharp(mf);
  CHECK(s.f() == P("x1^2 + z^2", s.ring()));
  CHECK(s.verify());
  CHECK(s.phi() == frobmf::testing::matrix_from_strings(s.ring(), {{"x1", "-z"}, {"z", "x1"}}));

  const auto R2 = PolyRing::make(2, 1);
  CHECK_THROWS_AS(sharp(MatFac(one_by_one(P("x1", R2)), one_by_one(P("x1", R2)), P("x1^2", R2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(maltese(m), std::invalid_argument);  // u, v already present
}

TEST_CASE("constructions distribute over direct sums up to block permutation") {
  const auto R = PolyRing::make(5, 2);
  const FrobBasis basis(R, 1);
  const auto f = P("x1^2 + x2^3", R);
  const MatFac a(matrix_power(f, 1, basis), matrix_power(f, 4, basis), f);
  const MatFac b(matrix_power(f, 2, basis), matrix_power(f, 3, basis), f);
  const auto lhs = maltese(direct_sum(a, b));
  const auto rhs = direct_sum(maltese(a), maltese(b));
  CHECK(lhs.verify());
  CHECK(rhs.verify());
  // permutation [a1 b1 a2 b2] -> [a1 a2 b1 b2] on both rows and columns
  const std::size_t n = basis.size();
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i) perm.push_back(i);
  for (std::size_t i = 0; i < n; ++i) perm.push_back(2 * n + i);
  for (std::size_t i = 0; i < n; ++i) perm.push_back(n + i);
  for (std::size_t i = 0; i < n; ++i) perm.push_back(3 * n + i);
  for (std::size_t i = 0; i < 4 * n; ++i)
    for (std::size_t j = 0; j < 4 * n; ++j) REQUIRE(rhs.phi().get(i, j) == lhs.phi().get(perm[i], perm[j]));

  const auto sl = sharp(direct_sum(a, b)), sr = direct_sum(sharp(a), sharp(b));
  for (std::size_t i = 0; i < 4 * n; ++i)
    for (std::size_t j = 0; j < 4 * n; ++j) REQUIRE(sr.psi().get(i, j) == sl.psi().get(perm[i], perm[j]));
}

TEST_CASE("trivial summand counts") {
  const auto R = PolyRing::make(3, 1);
  const FrobBasis basis(R, 1);
  const auto f = P("x1^2", R);
  const auto one = SparsePoly::one(R);

  const MatFac f1(one_by_one(f), one_by_one(one), f);
  CHECK(trivial_summand_counts(f1) == SummandCount{1, 0, 0});
  const MatFac onef(one_by_one(one), one_by_one(f), f);
  CHECK(trivial_summand_counts(direct_sum(f1, onef)) == SummandCount{1, 1, 0});

  const auto A = matrix_power(f, 1, basis), A2 = matrix_power(f, 2, basis);
  CHECK(trivial_summand_counts(MatFac(A2, A, f)) == SummandCount{1, 0, 2});
  CHECK(trivial_summand_counts(MatFac(A, A2, f)) == SummandCount{0, 1, 2});

  // maltese of (f,1): both phi and psi have a unit at the origin
  CHECK(trivial_summand_counts(maltese(f1)) == SummandCount{1, 1, 0});

  CHECK_THROWS_AS(trivial_summand_counts(MatFac(one_by_one(one), one_by_one(P("1 + x1", R)), P("1 + x1", R))),
                  std::domain_error);
}

TEST_CASE("counts are equivalence invariants and additive") {
  std::mt19937_64 rng(29);
  const auto R = PolyRing::make(3, 2);
  const FrobBasis basis(R, 1);
  for (int it = 0; it < 10; ++it) {
    const auto f = frobmf::testing::random_nonunit(rng, R, 3, 3);
    const auto k = static_cast<std::uint32_t>(1 + rng() % 2);
    const MatFac mf(matrix_power(f, k, basis), matrix_power(f, 3 - k, basis), f);
    const auto base = trivial_summand_counts(mf);

    // U, V are invertible over the polynomial ring, so the ranks at 0 of
    // U phi V and V psi U are those of the equivalent pair
    const auto n = mf.size();
    const auto U = random_unitriangular(rng, R, n, false) * random_unitriangular(rng, R, n, true);
    const auto V = random_unitriangular(rng, R, n, true) * random_unitriangular(rng, R, n, false);
    const auto phi2 = U * mf.phi() * V;
    CHECK(rank_mod_p(phi2.at_origin()) == base.r);
    const auto psi2 = V * mf.psi() * U;
    CHECK(rank_mod_p(psi2.at_origin()) == base.t);

    const auto sum = trivial_summand_counts(direct_sum(mf, mf));
    CHECK(sum.t == 2 * base.t);
    CHECK(sum.r == 2 * base.r);
  }
}
