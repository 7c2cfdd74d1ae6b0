#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "dp1/bridge.hpp"
#include "dp1/classes.hpp"
#include "dp1/lattice.hpp"

using namespace dp1;

namespace {

// (d; m1..m8): d*head - sum_i m_i exc_i.
PicClass make(Basis b, long d, std::array<long, 8> m) {
  std::array<Int, 9> c{};
  c[0] = d;
  for (std::size_t i = 0; i < 8; ++i) c[i + 1] = m[i];
  return PicClass(b, std::move(c));
}

PicClass s_class(long d, std::array<long, 8> m) { return make(Basis::S, d, m); }

std::mt19937_64 rng(424242);

PicClass random_s(long radius = 9) {
  std::array<Int, 9> c{};
  for (auto& x : c)
    x = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * radius + 1)) -
        radius;
  return PicClass(Basis::S, std::move(c));
}

} // namespace

TEST_CASE("rho on the generators") {
  CHECK(rho(h_class()) == make(Basis::X, -1, {-1, -1, -1, -1, -1, -1, -1, -1}));
  CHECK(rho(e_class(1)) == make(Basis::X, -1, {1, -1, -1, -1, -1, -1, -1, -1}));
  CHECK(rho(minus_K(Basis::S)) == minus_K(Basis::X));
  CHECK(rho(canonical_class(Basis::S)) == canonical_class(Basis::X));
  for (int i = 1; i <= 8; ++i)
    CHECK(rho(h_class() - e_class(i)) == Int(2) * E_class(i));
  CHECK_THROWS_AS((void)rho(minus_K(Basis::X)), domain_error);
}

TEST_CASE("rho satisfies the bridge pairing identity and has an exact inverse") {
  // On all of Pic(S): (rho a . rho b)_X = 4 (a . b)_S - (a . K_S)(b . K_S),
  // so rho/2 restricts to an isometry of K_S-perp onto its image.
  const PicClass kS = canonical_class(Basis::S);
  for (int trial = 0; trial < 200; ++trial) {
    const PicClass a = random_s(), b = random_s();
    CHECK(pair(rho(a), rho(b)) == 4 * pair(a, b) - pair(a, kS) * pair(b, kS));
    CHECK(rho_inverse(RatClass(rho(a))) == RatClass(a));
  }
  const auto& alphas = simple_roots();
  for (const PicClass& alpha : alphas)
    for (const PicClass& beta : alphas)
      CHECK(pair(rho_tilde(alpha), rho_tilde(beta)) == pair(alpha, beta));
  // rho^{-1} also accepts classes outside the image lattice.
  const RatClass back = rho_inverse(RatClass(E_class(1)));
  CHECK(rho(back) == RatClass(E_class(1)));
}

TEST_CASE("half-integrality of rho is governed by K_S parity") {
  CHECK(rho_tilde_integral(h_class() - e_class(1)));       // K.C = -2
  CHECK(rho_tilde_integral(minus_K(Basis::S) + e_class(1))); // K.(-K+l) = -2
  CHECK_FALSE(rho_tilde_integral(h_class()));              // K.h = -3
  CHECK_FALSE(rho_tilde_integral(e_class(1)));
  CHECK(rho_tilde(h_class() - e_class(1)) == E_class(1));
  CHECK_THROWS_AS((void)rho_tilde(h_class()), domain_error);
}

TEST_CASE("zeta is the exact adjoint of rho") {
  CHECK(zeta(Htilde_class()) ==
        Int(2) * h_class() + canonical_class(Basis::S));
  for (int i = 1; i <= 8; ++i)
    CHECK(zeta(Etilde_class(i)) ==
          Int(2) * (h_class() - e_class(i)) + canonical_class(Basis::S));

  // R = 5 H~ - sum E~_i maps to -K_S.
  const PicClass R = make(Basis::XCurve, 5, {1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(zeta(R) == minus_K(Basis::S));

  for (int trial = 0; trial < 200; ++trial) {
    const PicClass g = random_s();
    std::array<Int, 9> c{};
    for (auto& x : c)
      x = static_cast<long>(rng() % 19) - 9;
    const PicClass curve(Basis::XCurve, std::move(c));
    CHECK(pair(rho(g), curve) == pair(g, zeta(curve)));
  }
  CHECK_THROWS_AS((void)zeta(h_class()), domain_error); // wrong basis
}

TEST_CASE("conjugated Weyl action on the blow-up lattice") {
  const WeylElement w =
      WeylElement::reflection(e_class(1) - e_class(2))
          .compose(WeylElement::reflection(
              h_class() - e_class(1) - e_class(2) - e_class(3)));
  const Mat9 M = weyl_transfer(w);
  CHECK(mat9_preserves_X_form(M));
  CHECK(apply_mat9(M, canonical_class(Basis::X)) == canonical_class(Basis::X));
  for (int trial = 0; trial < 100; ++trial) {
    const PicClass x = random_s();
    CHECK(apply_mat9(M, rho(x)) == rho(w.apply(x)));
  }
}

TEST_CASE("involution transported to the blow-up") {
  CHECK(bertini_on_X(H_class()) ==
        make(Basis::X, 49, {30, 30, 30, 30, 30, 30, 30, 30}));
  for (int trial = 0; trial < 100; ++trial) {
    const PicClass x = random_s();
    const PicClass y = rho(x);
    CHECK(bertini_on_X(y) == rho(bertini_pullback(x)));
    CHECK(bertini_on_X(bertini_on_X(y)) == y);
  }
  CHECK(verify_bianticanonical_involution());
}

TEST_CASE("fixed divisor classes of conic pencils") {
  CHECK(fixed_divisor_class(h_class() - e_class(1)) == E_class(1));
  CHECK(fixed_divisor_class(s_class(2, {1, 1, 1, 1, 0, 0, 0, 0})) ==
        make(Basis::X, 1, {0, 0, 0, 0, 1, 1, 1, 1})); // H - E5..E8
  CHECK(fixed_divisor_class(s_class(4, {3, 1, 1, 1, 1, 1, 1, 1})) ==
        make(Basis::X, 3, {0, 2, 2, 2, 2, 2, 2, 2})); // 3H - 2(E2+..+E8)
  CHECK_THROWS_AS((void)fixed_divisor_class(e_class(1)), domain_error);
}

TEST_CASE("divisors attached to exceptional classes and cubic markings") {
  CHECK(d_ell_class(e_class(1)) == make(Basis::X, 2, {2, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(h_Y_class(h_class()) == H_class());
  CHECK(h_Y_class(bertini_pullback(h_class())) ==
        make(Basis::X, 49, {30, 30, 30, 30, 30, 30, 30, 30}));
  CHECK_THROWS_AS((void)d_ell_class(h_class()), domain_error);
  CHECK_THROWS_AS((void)h_Y_class(e_class(1)), domain_error);
}

TEST_CASE("effective semigroup generators") {
  const auto& gens = effective_semigroup_generators();
  CHECK(gens.size() == 2401);
  const std::set<PicClass> all(gens.begin(), gens.end());
  CHECK(all.size() == 2401);
  CHECK(all.count(minus_K(Basis::X)) == 1);
  CHECK(all.count(E_class(1)) == 1);
  CHECK(all.count(make(Basis::X, 2, {2, 1, 1, 1, 1, 1, 1, 1})) == 1);
  for (const auto& g : gens) {
    CHECK(g.basis == Basis::X);
    CHECK(pair(minus_K(Basis::X), g) == 3);
  }
}

TEST_CASE("transported inequality normals") {
  const PicClass kS = canonical_class(Basis::S);
  // The conic wall normal 2(h - e_i) + K_S transports to the functional of
  // the fiber curve E~_i, represented by the divisor class E_i.
  for (int i = 1; i <= 8; ++i)
    CHECK(transport_normal_S_to_X(Int(2) * (h_class() - e_class(i)) + kS) ==
          E_class(i));
  // The curve wall through h - e_1 - e_2, oriented toward the h-marked
  // chamber, matches the functional of H~ - E~_1 - E~_2.
  CHECK(transport_normal_S_to_X(Int(-1) *
                                (Int(2) * (h_class() - e_class(1) - e_class(2)) + kS)) ==
        make(Basis::X, 1, {3, 3, 0, 0, 0, 0, 0, 0}));
  // A normal not proportional to any rho image still transports exactly.
  CHECK(transport_normal_S_to_X(h_class() - e_class(1)) ==
        make(Basis::X, 5, {0, 3, 3, 3, 3, 3, 3, 3}));
  const PicClass w = transport_normal_S_to_X(minus_K(Basis::S));
  CHECK(w == primitive_ray(minus_K(Basis::X)));
  for (int trial = 0; trial < 50; ++trial) {
    PicClass x = random_s();
    while (x.is_zero()) x = random_s();
    const PicClass n = transport_normal_S_to_X(x);
    // Same functional on the image of rho, up to a positive scale factor:
    // cross-multiplying two probes must agree exactly, and signs must match.
    const PicClass p1 = random_s(), p2 = random_s();
    CHECK(pair(n, rho(p1)) * pair(x, p2) == pair(n, rho(p2)) * pair(x, p1));
    CHECK(sign_of(pair(n, rho(p1))) == sign_of(pair(x, p1)));
  }
}

TEST_CASE("adapted bases of cubic markings") {
  const auto basic = adapted_minus_ones(h_class());
  REQUIRE(basic.size() == 8);
  for (int i = 1; i <= 8; ++i) CHECK(basic[static_cast<std::size_t>(i - 1)] == e_class(i));

  const PicClass hp = bertini_pullback(h_class());
  const auto mirrored = adapted_minus_ones(hp);
  REQUIRE(mirrored.size() == 8);
  for (const auto& ell : mirrored) {
    CHECK(classify(ell) == ClassKind::MinusOne);
    CHECK(pair(ell, hp) == 0);
  }
  CHECK_THROWS_AS((void)adapted_minus_ones(e_class(1)), domain_error);
}

TEST_CASE("marked transforms of exceptional classes") {
  CHECK(gamma_tilde_class(s_class(2, {0, 0, 0, 1, 1, 1, 1, 1}), h_class()) ==
        s_class(2, {1, 1, 1, 0, 0, 0, 0, 0}));
  CHECK(gamma_tilde_class(s_class(3, {2, 1, 1, 1, 1, 1, 1, 0}), h_class()) ==
        s_class(5, {0, 1, 1, 1, 1, 1, 1, 2}));
  CHECK(gamma_tilde_class(s_class(6, {3, 2, 2, 2, 2, 2, 2, 2}), h_class()) ==
        s_class(14, {2, 3, 3, 3, 3, 3, 3, 3}));
  // Degree below two against the marking is rejected.
  CHECK_THROWS_AS((void)gamma_tilde_class(e_class(1), h_class()), domain_error);
  CHECK_THROWS_AS(
      (void)gamma_tilde_class(s_class(1, {1, 1, 0, 0, 0, 0, 0, 0}), h_class()),
      domain_error);
}

TEST_CASE("cone dictionary on the blow-up side") {
  const auto& dict = cone_dictionary();
  CHECK(dict.eff_x_rays.size() == 2160);
  CHECK(dict.mov_x_normals.size() == 2400);
  CHECK(dict.nef_x_curve_normals.size() == 36);
  CHECK(dict.nef_y_rays.size() == 19440);

  const std::set<PicClass> eff(dict.eff_x_rays.begin(), dict.eff_x_rays.end());
  CHECK(eff.count(E_class(1)) == 1);

  for (const auto& c : dict.nef_x_curve_normals) CHECK(c.basis == Basis::XCurve);
  for (const auto& r : dict.nef_y_rays) CHECK(r.basis == Basis::X);

  // E_1 is effective but not movable; -K_X is interior to the movable side.
  bool e1_cut = false;
  for (const auto& n : dict.mov_x_normals) {
    if (pair(n, E_class(1)) < 0) e1_cut = true;
    CHECK(pair(n, minus_K(Basis::X)) > 0);
  }
  CHECK(e1_cut);

  CHECK(verify_nef_x_facets());
}
