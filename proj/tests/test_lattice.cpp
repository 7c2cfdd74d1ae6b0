#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dp1/lattice.hpp"

using namespace dp1;

namespace {

PicClass s_class(long d, std::array<long, 8> m) {
  std::array<Int, 9> c{};
  c[0] = d;
  for (int i = 0; i < 8; ++i) c[static_cast<std::size_t>(i) + 1] = m[i];
  return PicClass(Basis::S, std::move(c));
}

std::mt19937_64 rng(12345);

PicClass random_class(Basis b, long radius = 20) {
  std::array<Int, 9> c{};
  for (auto& x : c)
    x = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * radius + 1)) -
        radius;
  return PicClass(b, std::move(c));
}

} // namespace

TEST_CASE("intersection form on the surface basis") {
  CHECK(pair(h_class(), h_class()) == 1);
  for (int i = 1; i <= 8; ++i) {
    CHECK(pair(h_class(), e_class(i)) == 0);
    for (int j = 1; j <= 8; ++j)
      CHECK(pair(e_class(i), e_class(j)) == (i == j ? -1 : 0));
  }
  const PicClass K = canonical_class(Basis::S);
  CHECK(K == s_class(-3, {-1, -1, -1, -1, -1, -1, -1, -1}));
  CHECK(self_intersection(K) == 1);
  CHECK(minus_K(Basis::S) == -K);
  CHECK(anticanonical_degree(h_class()) == 3);
  CHECK(anticanonical_degree(e_class(1)) == 1);
}

TEST_CASE("Dolgachev form on the blow-up basis") {
  CHECK(pair(H_class(), H_class()) == 3);
  for (int i = 1; i <= 8; ++i) {
    CHECK(pair(H_class(), E_class(i)) == 0);
    CHECK(pair(E_class(i), E_class(i)) == -1);
  }
  const PicClass KX = canonical_class(Basis::X);
  CHECK(KX.d() == -5);
  for (int i = 1; i <= 8; ++i) CHECK(KX.m(i) == -3);
  // K_X^2 = 75 - 72 = 3 under the Dolgachev pairing.
  CHECK(self_intersection(KX) == 3);
  CHECK(pairing_head_weight(Basis::S, Basis::S) == 1);
  CHECK(pairing_head_weight(Basis::X, Basis::X) == 3);
  CHECK(pairing_head_weight(Basis::X, Basis::XCurve) == 1);
}

TEST_CASE("mixed divisor/curve pairing on the blow-up") {
  CHECK(pair(H_class(), Htilde_class()) == 1);
  for (int i = 1; i <= 8; ++i) {
    CHECK(pair(H_class(), Etilde_class(i)) == 0);
    CHECK(pair(E_class(i), Htilde_class()) == 0);
    for (int j = 1; j <= 8; ++j)
      CHECK(pair(E_class(i), Etilde_class(j)) == (i == j ? -1 : 0));
  }
  // Curve x curve and cross-surface pairings are undefined.
  CHECK_THROWS_AS((void)pair(Htilde_class(), Htilde_class()), domain_error);
  CHECK_THROWS_AS((void)pair(h_class(), H_class()), domain_error);
  CHECK_THROWS_AS((void)pair(h_class(), Htilde_class()), domain_error);
}

TEST_CASE("class arithmetic and canonical order") {
  const PicClass a = s_class(1, {1, 0, 0, 0, 0, 0, 0, 0});
  const PicClass b = s_class(0, {-1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(a + b == s_class(1, {0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(a - a == PicClass(Basis::S, {}));
  CHECK((a - a).is_zero());
  CHECK(Int(3) * b == s_class(0, {-3, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(cmp(b, a) < 0); // lex on (d, m1..m8)
  CHECK(cmp(a, a) == 0);
  CHECK(b < a);
  // Basis tag dominates the order.
  CHECK(cmp(PicClass(Basis::S, {9, 9, 9, 9, 9, 9, 9, 9, 9}),
            PicClass(Basis::X, {0, 0, 0, 0, 0, 0, 0, 0, 0})) < 0);
}

TEST_CASE("rational classes, integrality and primitive rays") {
  RatClass r(Basis::S, {Rat(1, 2), 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(to_integral(r).has_value());
  CHECK(to_integral(Rat(2) * r).has_value());
  CHECK(*to_integral(Rat(2) * r) == h_class());

  CHECK(primitive_ray(s_class(4, {2, 2, 0, 0, 0, 0, 0, 0})) ==
        s_class(2, {1, 1, 0, 0, 0, 0, 0, 0}));
  // Orientation is normalized: the first nonzero coefficient comes out
  // positive, so both generators of a line map to the same ray.
  CHECK(primitive_ray(s_class(-4, {-2, -2, 0, 0, 0, 0, 0, 0})) ==
        s_class(2, {1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(primitive_ray(RatClass(Basis::S, {Rat(1, 2), Rat(1, 3), 0, 0, 0, 0, 0,
                                          0, 0})) ==
        s_class(3, {2, 0, 0, 0, 0, 0, 0, 0}));
  CHECK_THROWS_AS(primitive_ray(PicClass(Basis::S, {})), domain_error);
}

TEST_CASE("adjoint twist") {
  CHECK(adjoint_twist(h_class()) == s_class(10, {3, 3, 3, 3, 3, 3, 3, 3}));
  CHECK(adjoint_twist(s_class(1, {1, 0, 0, 0, 0, 0, 0, 0})) ==
        s_class(7, {3, 2, 2, 2, 2, 2, 2, 2}));
  // gamma + (gamma . K) K is the identity on K-orthogonal classes.
  const PicClass root = s_class(0, {-1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(adjoint_twist(root) == root);
}

TEST_CASE("Bertini pullback is a form-preserving involution fixing K") {
  const PicClass K = canonical_class(Basis::S);
  CHECK(bertini_pullback(K) == K);
  CHECK(bertini_pullback(h_class()) == s_class(17, {6, 6, 6, 6, 6, 6, 6, 6}));
  CHECK(bertini_pullback(e_class(1)) == s_class(6, {3, 2, 2, 2, 2, 2, 2, 2}));
  CHECK(bertini_pullback(s_class(1, {1, 1, 0, 0, 0, 0, 0, 0})) ==
        s_class(5, {1, 1, 2, 2, 2, 2, 2, 2}));
  CHECK(bertini_pullback(s_class(1, {1, 0, 0, 0, 0, 0, 0, 0})) ==
        s_class(11, {3, 4, 4, 4, 4, 4, 4, 4}));
  for (int trial = 0; trial < 64; ++trial) {
    const PicClass x = random_class(Basis::S);
    const PicClass y = random_class(Basis::S);
    CHECK(bertini_pullback(bertini_pullback(x)) == x);
    CHECK(pair(bertini_pullback(x), bertini_pullback(y)) == pair(x, y));
    // iota* gamma = 2 (gamma . K) K - gamma.
    CHECK(bertini_pullback(x) == Int(2) * pair(x, K) * K - x);
  }
}

TEST_CASE("fixed subspace of the involution is the canonical line") {
  const FixedSubspace fs = involution_fixed_subspace();
  CHECK(fs.plus_eigenvalue_count == 1);
  CHECK(fs.minus_eigenvalue_count == 8);
  CHECK(fs.rank_iota_minus_id == 8);
  REQUIRE(fs.basis.size() == 1);
  const PicClass prim = primitive_ray(fs.basis.front());
  CHECK((prim == canonical_class(Basis::S) || prim == minus_K(Basis::S)));
}

TEST_CASE("exact linear algebra helpers") {
  QMat m = {{Rat(2), Rat(4)}, {Rat(1), Rat(3)}};
  CHECK(det(m) == 2);
  CHECK(rank_of(m) == 2);
  int rank = 0;
  QMat red = rref(m, &rank);
  CHECK(rank == 2);
  CHECK(red == QMat{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(rref(red) == red);

  QMat sing = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(det(sing) == 0);
  CHECK(rank_of(sing) == 1);
}

TEST_CASE("string rendering") {
  CHECK(to_string(Rat(1, 2)) == "1/2");
  CHECK(to_string(Rat(-7)) == "-7");
  CHECK_FALSE(to_string(h_class()).empty());
  CHECK_FALSE(to_string(RatClass(h_class())).empty());
  CHECK(std::string(basis_name(Basis::S)) == "S");
  CHECK(std::string(basis_name(Basis::X)) == "X");
  CHECK(std::string(basis_name(Basis::XCurve)) == "XCurve");
}
