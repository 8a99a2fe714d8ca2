#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgman/hg.hpp"
#include "hgman/kahler.hpp"

using namespace hgman;

namespace {

Rational eps(int a) { return a == 0 ? Rational(1) : Rational(-1); }

// independent re-verification that t satisfies every imposed constraint
void verify_member(const Tensor& t, int n, const std::array<bool, 3>& impose_j) {
  const auto J = standard_hypercomplex(n);
  const int d = 4 * n;
  REQUIRE(t.dim() == d);
  REQUIRE(t.rank() == 4);
  CHECK_FALSE(t.is_zero());

  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        for (int w = 0; w < d; ++w) {
          CHECK(t(x, y, z, w) == -t(y, x, z, w));
          CHECK(t(x, y, z, w) == -t(x, y, w, z));
          CHECK(t(x, y, z, w) == t(z, w, x, y));
        }
  CHECK(cyclic_sum_first3(t).is_zero());
  for (int a = 0; a < 3; ++a) {
    if (!impose_j[static_cast<std::size_t>(a)]) continue;
    CHECK(compose_last_pair(t, J[a]) == eps(a) * t);
    CHECK(compose_first_pair(t, J[a]) == eps(a) * t);
  }
}

}  // namespace

TEST_CASE("triple reflection constraints leave only the zero tensor in dim 4") {
  const KahlerlikeNullspace ns = kahlerlike_nullspace(1);
  CHECK(ns.dim == 4);
  CHECK(ns.variables == 256);
  CHECK(ns.rank == 256);
  CHECK(ns.nullity == 0);
  CHECK(ns.basis.empty());
}

TEST_CASE("curvature-type constraints alone leave a 20-dimensional space") {
  const KahlerlikeNullspace ns = kahlerlike_nullspace(1, {false, false, false});
  CHECK(ns.variables == 256);
  CHECK(ns.rank == 236);
  CHECK(ns.nullity == 20);
  REQUIRE(ns.basis.size() == 20);
  for (const Tensor& t : ns.basis) verify_member(t, 1, {false, false, false});
}

TEST_CASE("single reflection constraint leaves a 9-dimensional space") {
  const KahlerlikeNullspace ns = kahlerlike_nullspace(1, {true, false, false});
  CHECK(ns.variables == 256);
  CHECK(ns.rank == 247);
  CHECK(ns.nullity == 9);
  REQUIRE(ns.basis.size() == 9);
  for (const Tensor& t : ns.basis) verify_member(t, 1, {true, false, false});
}

TEST_CASE("triple reflection constraints leave only zero in dim 8") {
  const KahlerlikeNullspace ns = kahlerlike_nullspace(2);
  CHECK(ns.dim == 8);
  CHECK(ns.variables == 4096);
  CHECK(ns.rank == 4096);
  CHECK(ns.nullity == 0);
}

TEST_CASE("curvature-type count in dim 8 matches the closed-form dimension") {
  // d^2 (d^2 - 1) / 12 algebraically independent components at d = 8
  const KahlerlikeNullspace ns =
      kahlerlike_nullspace(2, {false, false, false}, false);
  CHECK(ns.variables == 4096);
  CHECK(ns.nullity == 336);
  CHECK(ns.rank == 3760);
  CHECK(ns.basis.empty());  // basis construction was not requested
}

TEST_CASE("basis construction can be disabled without changing the counts") {
  const KahlerlikeNullspace with = kahlerlike_nullspace(1, {false, false, false}, true);
  const KahlerlikeNullspace without =
      kahlerlike_nullspace(1, {false, false, false}, false);
  CHECK(with.rank == without.rank);
  CHECK(with.nullity == without.nullity);
  CHECK(without.basis.empty());
}

TEST_CASE("unsupported frame sizes are rejected") {
  CHECK_THROWS_AS(kahlerlike_nullspace(0), PreconditionError);
  CHECK_THROWS_AS(kahlerlike_nullspace(3), PreconditionError);
  CHECK_THROWS_AS(kahlerlike_nullspace(-1), PreconditionError);
}
