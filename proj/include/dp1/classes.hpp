#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "dp1/kernels.hpp"
#include "dp1/lattice.hpp"

namespace dp1 {

// The four class families on the degree-1 del Pezzo surface.  Each family
// is a single Weyl orbit, pinned down by the numerical signature
// (x.x, x.K_S) together with primitivity of the K_S-orthogonal part of x:
//   Root     : (-2,  0)   roots of the E8 lattice K_S-perp        (240)
//   MinusOne : (-1, -1)   exceptional curve classes               (240)
//   Conic    : ( 0, -2)   conic-bundle classes                    (2160)
//   Cubic    : ( 1, -3)   "cubic" polarization classes h~         (17280)
// For the first three families primitivity is automatic (their orthogonal
// parts have norm -2 or -4, and K_S-perp is an even lattice), but norm -8
// also admits the 240 doubled roots: the classes -3K + 2 alpha satisfy the
// Cubic signature while lying outside the orbit of h, and are excluded.
enum class ClassKind { Root, MinusOne, Conic, Cubic };

const char* kind_name(ClassKind k);

struct KindTraits {
  Int self;                  // x.x
  Int k_degree;              // x.K_S
  int head_window;           // enumeration scans |d| <= head_window
  PicClass orbit_seed;       // Weyl-orbit seed for the cross-check
  std::size_t expected_count;
};
const KindTraits& kind_traits(ClassKind k);

// Classify by numerical signature and primitivity; nullopt if no family
// matches.  Basis S.
std::optional<ClassKind> classify(const PicClass& x);

// All classes of the family, lexicographically sorted.  On first use the
// list is produced twice independently (Diophantine enumeration over the
// window, and Weyl orbit of the seed) and the two results are compared;
// a mismatch raises verification_error listing the symmetric difference.
const std::vector<PicClass>& enumerate_classes(ClassKind k);

// The same family packed for batched pairing queries.
const PackedClasses& packed_classes(ClassKind k);

// Simple roots: e_i - e_{i+1} for i = 1..7, and h - e1 - e2 - e3.
const std::array<PicClass, 8>& simple_roots();

// Reflection s_alpha(x) = x + (x.alpha) alpha.  alpha must be a Root.
PicClass reflect(const PicClass& alpha, const PicClass& x);

// Weyl orbit of seed under the simple reflections (breadth-first, lex-sorted
// output).  Raises domain_error if the orbit exceeds cap elements.
std::vector<PicClass> weyl_orbit(const PicClass& seed, std::size_t cap = 1000000);

// An element of W(E8) as an exact 9x9 matrix acting on (d; m) coefficient
// vectors of Pic(S).
struct WeylElement {
  std::array<std::array<Int, 9>, 9> m{};

  static WeylElement identity();
  static WeylElement reflection(const PicClass& root);

  PicClass apply(const PicClass& x) const;
  WeylElement compose(const WeylElement& rhs) const; // this ∘ rhs
  bool is_identity() const;
  bool preserves_form() const; // M^T G M == G for G = diag(1, -1^8)
  bool fixes_canonical() const;
};

// Product s_{w[0]} ∘ s_{w[1]} ∘ ... of simple reflections (indices 0..7).
WeylElement weyl_from_word(std::span<const int> word);

// The 126 conic classes disjoint from a given (-1)-class.
std::vector<PicClass> conics_disjoint_from(const PicClass& ell);

// The 14 (-1)-classes orthogonal to a conic class C: the components of the
// reducible members of the pencil |C| (7 pairs summing to C).
std::vector<PicClass> minus_one_components_of(const PicClass& conic);

// Intersection count of the special loci attached to two distinct
// (-1)-classes.  Pairings 0 and 1 give disjoint loci; pairing 2 gives one
// common point; pairing 3 (which forces ell2 = bertini_pullback(ell1)) gives
// three, assuming general position of the eight points.
struct LocusIntersection {
  int count;
  bool generality_assumed;
};
LocusIntersection locus_intersection_count(const PicClass& ell1, const PicClass& ell2);

// All integral nef classes L on S with -K_S . L = 2, classified exactly:
// the expected value is {-2K_S} ∪ {2160 conics} ∪ {-K_S + ell} (2401 total).
std::vector<PicClass> nef_classes_of_anticanonical_degree_two();

} // namespace dp1
