#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dp1/arith.hpp"

namespace dp1 {

// Which lattice a class lives in.
//   S      : Pic of the degree-1 del Pezzo surface, basis h, e1..e8,
//            intersection form diag(1, -1^8).
//   X      : divisor classes on the blow-up of P^4 at eight points, basis
//            H, E1..E8, Dolgachev pairing diag(3, -1^8).
//   XCurve : curve classes on X, basis Htilde, Etilde1..Etilde8.  There is
//            no intersection form on XCurve x XCurve; curves pair against
//            divisors only.
enum class Basis : std::uint8_t { S, X, XCurve };

const char* basis_name(Basis b);

// A lattice class stored in the (d; m1..m8) convention:
//   class = d * head  -  sum_i m_i * exceptional_i
// so the raw coefficient of e_i (resp. E_i) is -m_i.
// coeffs() returns (d, m1, ..., m8) in that order.
struct PicClass {
  Basis basis{Basis::S};
  std::array<Int, 9> c{};

  PicClass() = default;
  PicClass(Basis b, std::array<Int, 9> coeffs) : basis(b), c(std::move(coeffs)) {}

  const Int& d() const { return c[0]; }
  const Int& m(int i) const { return c.at(static_cast<std::size_t>(i)); } // i in 1..8

  bool is_zero() const;
  bool operator==(const PicClass&) const = default;
};

// Canonical total order: basis tag first, then lexicographic on (d, m1..m8).
int cmp(const PicClass& a, const PicClass& b);
inline bool operator<(const PicClass& a, const PicClass& b) { return cmp(a, b) < 0; }

PicClass operator+(const PicClass& a, const PicClass& b);
PicClass operator-(const PicClass& a, const PicClass& b);
PicClass operator-(const PicClass& a);
PicClass operator*(const Int& k, const PicClass& a);

// Rational classes (used for polarizations, interior points, midpoints).
struct RatClass {
  Basis basis{Basis::S};
  std::array<Rat, 9> c{};

  RatClass() = default;
  RatClass(Basis b, std::array<Rat, 9> coeffs) : basis(b), c(std::move(coeffs)) {}
  RatClass(const PicClass& p); // implicit widening is intentional

  bool is_zero() const;
  bool operator==(const RatClass&) const = default;
};

RatClass operator+(const RatClass& a, const RatClass& b);
RatClass operator-(const RatClass& a, const RatClass& b);
RatClass operator-(const RatClass& a);
RatClass operator*(const Rat& k, const RatClass& a);

// Exact conversion back to an integral class; nullopt if any denominator != 1.
std::optional<PicClass> to_integral(const RatClass& r);

// Clear denominators and divide by content, keeping the first nonzero
// coefficient positive: the canonical primitive representative of the ray
// through r.  Errors on the zero class.
PicClass primitive_ray(const RatClass& r);
PicClass primitive_ray(const PicClass& p);

// The intersection / Dolgachev pairing.
//   S x S           : d*d' - sum m_i m_i'
//   X x X           : 3*d*d' - sum m_i m_i'
//   X x XCurve      : d*a - sum m_i b_i   (divisor . curve; symmetric in
//                     argument order)
// Any other combination raises domain_error naming both basis tags.
Int pair(const PicClass& a, const PicClass& b);
Rat pair(const RatClass& a, const RatClass& b);

// Head weight of the pairing between these bases (1 or 3); domain_error if
// the pairing is undefined.  pair(a, b) = weight*a0*b0 - sum_i a_i b_i.
Int pairing_head_weight(Basis a, Basis b);
inline Rat pair(const PicClass& a, const RatClass& b) { return pair(RatClass(a), b); }
inline Rat pair(const RatClass& a, const PicClass& b) { return pair(a, RatClass(b)); }

inline Int self_intersection(const PicClass& a) { return pair(a, a); }

// Named generators.
PicClass h_class();                  // h on S
PicClass e_class(int i);             // e_i on S, i in 1..8
PicClass H_class();                  // H on X
PicClass E_class(int i);             // E_i on X
PicClass Htilde_class();             // curve class of a line transform on X
PicClass Etilde_class(int i);        // curve class of a line in E_i
PicClass e_sum();                    // e1 + ... + e8 on S

// Canonical classes: K_S = -3h + sum e_i, K_X = -5H + 3 sum E_i.
// XCurve has no canonical class (domain_error).
PicClass canonical_class(Basis b);
PicClass minus_K(Basis b);

// Anticanonical degree helper: -K . x (basis S or X).
Int anticanonical_degree(const PicClass& x);

// Pullback along the Bertini involution on S:  g  ->  2 (g.K_S) K_S - g.
// Defined for basis S only.
PicClass bertini_pullback(const PicClass& g);
RatClass bertini_pullback(const RatClass& g);

// The adjoint twist  g -> g + (g.K_S) K_S  (projection-shift used when
// passing between the nef cone and the movable-side cone N).  Basis S only.
PicClass adjoint_twist(const PicClass& g);
RatClass adjoint_twist(const RatClass& g);

// Fixed subspace of the Bertini involution acting on Pic(S) (x) Q.
struct FixedSubspace {
  std::vector<PicClass> basis;   // basis of the +1 eigenspace
  int rank_iota_minus_id;        // rank of (iota* - id), expected 8
  int plus_eigenvalue_count;     // multiplicity of +1, expected 1
  int minus_eigenvalue_count;    // multiplicity of -1, expected 8
};
FixedSubspace involution_fixed_subspace();

// Diagnostic formatting: "(d; m1,...,m8)@S" style, exact integers.
std::string to_string(const PicClass& p);
std::string to_string(const RatClass& r);
std::string to_string(const Rat& r);

// Small dense exact linear algebra over Q used across the library.
// Matrices are row-major vectors of rows.
using QRow = std::vector<Rat>;
using QMat = std::vector<QRow>;

// Reduced row echelon form (in place copy); returns the RREF and the rank.
QMat rref(QMat m, int* rank_out = nullptr);
int rank_of(const QMat& m);
Rat det(QMat m); // square matrices only

} // namespace dp1
