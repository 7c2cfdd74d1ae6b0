#pragma once

#include <array>
#include <vector>

#include "dp1/classes.hpp"
#include "dp1/cones.hpp"

namespace dp1 {

// The determinant-line correspondence between Pic(S) and the divisor/curve
// lattices of X (the blow-up of P^4 at the eight Gale-dual points).
//
//   rho : Pic(S) -> H^2(X, Z),  rho(h)   = -H + sum E_j,
//                               rho(e_i) = -H + sum E_j - 2 E_i.
//   rho~ = rho / 2, integral exactly when K_S . L is even.
//   zeta : curve classes on X -> Pic(S), adjoint to rho:
//          pair_X(rho(g), c) = pair_S(g, zeta(c));
//          zeta(H~) = 2h + K_S, zeta(E~_i) = 2(h - e_i) + K_S.

PicClass rho(const PicClass& g);    // basis S -> basis X
RatClass rho(const RatClass& g);
RatClass rho_inverse(const RatClass& x); // basis X -> basis S
bool rho_tilde_integral(const PicClass& g); // K_S . g even
PicClass rho_tilde(const PicClass& g);      // rho/2; domain_error when odd
PicClass zeta(const PicClass& curve);       // basis XCurve -> basis S

// Conjugated Weyl action on H^2(X): rho w rho^{-1}, always integral.
using Mat9 = std::array<std::array<Int, 9>, 9>;
Mat9 weyl_transfer(const WeylElement& w);
PicClass apply_mat9(const Mat9& m, const PicClass& x);
bool mat9_preserves_X_form(const Mat9& m);

// Pullback along the involution of X induced by the Bertini involution:
// rho . iota_S^* . rho^{-1}; integral on integral classes.
PicClass bertini_on_X(const PicClass& d);
RatClass bertini_on_X(const RatClass& d);

// The fixed-divisor class E_C = rho~(C) of a conic class C.
PicClass fixed_divisor_class(const PicClass& conic);
// The divisor D_l = rho~(-K_S + l) attached to a (-1)-class l.
PicClass d_ell_class(const PicClass& ell);
// The hyperplane-type class h_Y = rho~(-K_S + 3 h~) of a cubic marking.
PicClass h_Y_class(const PicClass& cubic);

// Generators of the effective semigroup on X: -K_X, the 2160 E_C and the
// 240 D_l; 2401 distinct classes, all of anticanonical degree 3.
std::vector<PicClass> effective_semigroup_generators();

// rho~(iota_S^* C) == -2 K_X - rho~(C) for every conic class C.
bool verify_bianticanonical_involution();

// Transport of an inequality normal: the unique (up to positive scale)
// w' in the X lattice with pair_X(w', rho(x)) = pair_S(w, x) for all x,
// scaled to a primitive integral class without flipping orientation.
PicClass transport_normal_S_to_X(const PicClass& w);

// The eight (-1)-classes orthogonal to a cubic marking, sorted.
std::vector<PicClass> adapted_minus_ones(const PicClass& cubic);

// Class of the marked transform attached to a (-1)-class l of degree
// d' = l . hmark >= 2 against a cubic marking hmark:
//   (6d' - 5 - sum m'_i) hmark - sum (d' - m'_i - 1) e'_i
// over the adapted basis e'_i, with m'_i = l . e'_i.
PicClass gamma_tilde_class(const PicClass& ell, const PicClass& hmark);

// X-side cone dictionary under rho.
struct XConeDictionary {
  std::vector<PicClass> eff_x_rays;          // 2160 E_C, basis X
  std::vector<PicClass> mov_x_normals;       // 2400 transported normals, basis X
  std::vector<PicClass> nef_x_curve_normals; // 36 curve classes, basis XCurve
  std::vector<PicClass> nef_y_rays;          // 19440 primitive rho-images of N
};
const XConeDictionary& cone_dictionary();

// The 36 transported facet normals of Nef(X) coincide (up to positive scale)
// with the mixed-pairing functionals of the 36 curve classes.
bool verify_nef_x_facets();

} // namespace dp1
