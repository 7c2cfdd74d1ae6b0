#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dp1/classes.hpp"

namespace dp1 {

// The cone tower inside Pic(S) (x) Q and its duals:
//   NE     : curve cone, generated by the 240 (-1)-classes
//   Nef    : its dual, generated by the 2160 conics and 17280 cubics
//   E      : polarizations with nonempty moduli  (Nef cut by 2h~+K >= 0)
//   Pi     : movable-side subcone (Nef cut by 2C+K >= 0)
//   N      : adjoint-twisted nef cone, cut out by 2l+K >= 0
//   EDual, PiDual, NDual : the dual cones of E, Pi, N
// Chain: N ⊂ Pi ⊂ E ⊂ Nef.
enum class ConeName { NE, Nef, E, Pi, N, EDual, PiDual, NDual };

const char* cone_name_str(ConeName n);
std::optional<ConeName> cone_from_string(std::string_view s);

enum class ConeRep { Generators, Inequalities, Both };

struct ConeSpec {
  ConeName name;
  std::vector<PicClass> generators;
  std::vector<PicClass> inequality_normals;
  ConeRep authoritative;
  // Extra membership constraints inherited from an enclosing cone whose own
  // inequality list is not repeated here (E inherits the Nef inequalities).
  std::optional<ConeName> ambient;
  PackedClasses packed_generators;
  PackedClasses packed_normals;
};

const ConeSpec& build_cone(ConeName n);

// Closed membership.  Uses the inequality description when present
// (including the ambient chain), otherwise exact rational linear programming
// over the generators.
bool contains(const ConeSpec& cone, const RatClass& x);
bool contains(ConeName cone, const RatClass& x);

// All inequalities strictly positive (the topological interior for the
// full-dimensional cones treated here).  Requires an inequality description.
bool strictly_contains(const ConeSpec& cone, const RatClass& x);
bool strictly_contains(ConeName cone, const RatClass& x);

// Exact Farkas feasibility: x in cone(gens)?
bool in_generated_cone(std::span<const PicClass> gens, const RatClass& x);

// Ample <=> strictly positive against all 240 (-1)-classes.
bool is_ample(const RatClass& L);
bool is_ample(const PicClass& L);

// --- cone-level verification -------------------------------------------

struct DualPairReport {
  ConeName cone, dual;
  bool ok = false;
  std::size_t cross_pairings = 0;     // generator x generator products checked >= 0
  std::size_t cone_extremal_rays = 0; // cone generators certified extremal
  std::size_t dual_extremal_rays = 0;
  std::size_t facet_normals_checked = 0; // inequality normals tight on rank-8 sets
  std::vector<std::string> failures;
};

// Full cross-check of a cone/dual pair: every generator pairing nonnegative,
// every generator ray extremal (the other side's generators vanishing on it
// span rank 8), every stored inequality normal supports a rank-8 face.
DualPairReport verify_dual_pair(ConeName cone);
ConeName dual_of(ConeName n);

struct ChainReport {
  bool ok = false;
  bool n_in_pi = false;       // N generators satisfy the Pi inequalities
  bool pi_in_e = false;       // every EDual generator certified inside PiDual
  bool e_in_nef = false;      // E generators satisfy the Nef inequalities
  bool n_all_nef = false;     // N generators satisfy the NE-side nef test
  bool nef_witness_identity = false; // 2 e1 = (2e2+K) + (2l'+K) decomposition
  std::size_t pi_in_e_witnesses = 0; // cubics with certified 2h~+K in PiDual
};
ChainReport verify_chain();

struct PiInteriorReport {
  bool ok = false;
  std::size_t rays_checked = 0;     // 17280 classes -K + 3h~
  bool all_extremal = false;        // tight Pi-inequalities have rank 8
  bool all_strictly_in_E = false;   // every cubic pairing against them positive
  Int min_cubic_pairing_with_h{0};  // min over cubics h~' of h~'.h (expected 1)
};
PiInteriorReport verify_pi_interior_rays();

struct FacetReport {
  bool ok = false;
  bool tau_h_simplicial = false;        // conics tight on 2h+K are exactly {h-e_i}
  std::size_t ell_facets_checked = 0;   // 240
  bool ell_facets_all_rank8 = false;    // 126 tight conics of rank 8 for each l
};
FacetReport verify_E_facets();

// adjoint_twist maps the Nef generators bijectively onto the N generators.
bool verify_adjoint_twist_bijection();

// --- walls and chambers --------------------------------------------------

enum class WallKind { Curve, Conic, Cubic };
const char* wall_kind_name(WallKind k);

struct Wall {
  WallKind kind;
  PicClass center; // the class D the wall is named after (l, C or h~)
  PicClass normal; // 2D + K_S
};

// All 19680 walls in canonical order: Curve walls (240, centers lex), then
// Conic (2160), then Cubic (17280).  Pairwise non-proportionality of the
// normals is verified on first use.
const std::vector<Wall>& all_walls();
const PackedClasses& packed_wall_normals(); // aligned with all_walls()

// Indices into all_walls() of the walls containing L.  Requires an ample L.
std::vector<std::size_t> walls_through(const RatClass& L);

struct Chamber {
  std::vector<std::int8_t> signs;          // per wall, +1 or -1, zeros resolved
  RatClass representative;                 // interior point realizing signs
  std::vector<std::size_t> active_walls;   // walls L itself lies on
};

// The chamber of the wall-and-chamber decomposition containing L (zeros are
// resolved toward -K_S, i.e. to the chamber whose closure contains L on the
// -K_S side).  Requires an ample L.
Chamber chamber_of(const RatClass& L);

struct ChamberLabel {
  std::string name;             // "C", "B", "F" or "CENTRAL"
  std::optional<PicClass> mark; // the cubic h' for C/B/F
};

// Recognize the named chambers: C_{h'}, B_{h'}, F_{h'} and the central
// chamber.  The candidate label is reconstructed from the negative walls and
// then verified by exact sign-vector equality against the label's canonical
// representative polarization; anything else returns nullopt.
std::optional<ChamberLabel> label_chamber(const Chamber& chamber);

// --- paths and moduli ------------------------------------------------------

enum class CrossingKind {
  FlipContract,          // curve wall, + -> -: P_l (a P^2) flips to Z_l (a P^1)
  FlipExtract,           // curve wall, - -> +
  DivisorialContract,    // conic wall, + -> -: E_C contracts to a point
  DivisorialExtract,     // conic wall, - -> +
  ExitModuli,            // cubic wall, + -> -: leaves the nonempty-moduli region
  EnterModuli            // cubic wall, - -> +
};
const char* crossing_kind_name(CrossingKind k);
CrossingKind crossing_kind(WallKind kind, int from_sign);

struct WallCrossing {
  std::size_t wall_index;
  int from_sign; // sign on the L0 side
  int to_sign;
};

struct CrossingEvent {
  Rat t;                              // in (0, 1) along L0 + t (L1 - L0)
  RatClass point;
  std::vector<WallCrossing> crossings; // all walls met at this t
};

// Exact wall-crossing schedule along the segment from L0 to L1.  Both
// endpoints must lie on no wall (otherwise domain_error; this also excludes
// segments contained in a wall).  Events are sorted by increasing t and
// simultaneous crossings are bundled.
std::vector<CrossingEvent> cross_path(const RatClass& L0, const RatClass& L1);

enum class ModuliKind { Empty, P4, Smooth4Fold };
const char* moduli_kind_name(ModuliKind k);

struct SpecialLocusNote {
  WallKind kind;    // Curve -> a plane P_l, Conic -> a divisor E_C
  PicClass center;
};

struct ModuliStatus {
  ModuliKind kind;
  std::vector<SpecialLocusNote> loci;  // nonempty only for Smooth4Fold on walls
  std::optional<ChamberLabel> label;
  std::string note;
};

// Status of the moduli space for an ample polarization L: Empty outside E,
// P4 when the canonical chamber is a C-chamber (including L in the relative
// interior of a boundary facet of E), otherwise a smooth 4-fold whose
// special loci are listed per active wall.
ModuliStatus moduli_status(const RatClass& L);

} // namespace dp1
