#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dp1/bridge.hpp"
#include "dp1/cones.hpp"

namespace dp1 {

// ---------------------------------------------------------------------------
// Special loci living over wall centers.

enum class SpecialLocusKind { PEll, ZEll, EC, FCPoint };
const char* special_locus_kind_name(SpecialLocusKind k);

struct SpecialLocus {
  SpecialLocusKind kind{};
  PicClass center;            // the defining (-1)-class or conic class on S
  std::string geometry;       // model and normal-bundle type
  std::pair<int, int> ext_h1; // the two h^1 values attached to the center
};
SpecialLocus make_special_locus(SpecialLocusKind kind, const PicClass& center);

// ---------------------------------------------------------------------------
// Running numerical invariants of the birational models.

struct FourfoldInvariants {
  Int b2{0};
  Int b3{0};
  Int b4{0}; // = h^{2,2}
  Int K4{0}; // bookkept (-K)^4
  Int h0_minusK{0};
  Int h12{0};
  Int h13{0};
  bool h0_certified{false}; // certified at the P^4 / blow-up / Y chambers only

  bool same_numbers(const FourfoldInvariants& o) const {
    return b2 == o.b2 && b3 == o.b3 && b4 == o.b4 && K4 == o.K4 &&
           h0_minusK == o.h0_minusK && h12 == o.h12 && h13 == o.h13;
  }
};

// 27 - 5 h0 + K4 + 3 b2 - h12 - b4 + 3 h13 (with b4 = h^{2,2}).
Int chi_tangent(const FourfoldInvariants& inv);

FourfoldInvariants p4_invariants();        // (1,0,1,625,126), certified
FourfoldInvariants x_blowup_invariants();  // (9,0,9,-23,6), certified
FourfoldInvariants y_invariants();         // (9,0,45,13,6), certified
FourfoldInvariants f_chamber_invariants(); // (9,0,37,5,6), bookkept only

// Invariants frozen for a chamber label name ("C","B","F","CENTRAL").
std::optional<FourfoldInvariants> label_invariants(const std::string& label_name);

// ---------------------------------------------------------------------------
// Surgery walk.

enum class SurgeryKind {
  Blowup,    // conic wall, - to +: b2+1, b4+1, K4-81, h0-15
  Blowdown,  // conic wall, + to -
  FlipToP2,  // curve wall, - to +: b4+1, K4+1
  FlipToP1,  // curve wall, + to -
  ExitEmpty, // cubic wall, + to -
  EnterModuli // cubic wall, - to +; re-seeds P^4 invariants
};
const char* surgery_kind_name(SurgeryKind k);
SurgeryKind surgery_kind(WallKind wall, int from_sign);

struct SurgeryEvent {
  Rat t;
  RatClass point;
  WallKind wall_kind{};
  PicClass center;
  SurgeryKind surgery{};
  // Running invariants after this event; empty while outside the stability
  // region or before any absolute seed is available.
  std::optional<FourfoldInvariants> after;
};

struct WalkResult {
  bool absolute{}; // invariants are absolute rather than relative deltas
  std::optional<ChamberLabel> start_label, end_label;
  std::optional<FourfoldInvariants> start, end;
  std::vector<SurgeryEvent> events;
};

// Replays the wall crossings of the straight path from L0 to L1, applying the
// surgery deltas. Seeds absolute invariants whenever the starting chamber
// carries one of the four labels; otherwise tracks relative deltas from zero.
// End-of-walk invariants are re-verified against the frozen label values.
WalkResult walk(const RatClass& L0, const RatClass& L1);

// ---------------------------------------------------------------------------
// Special-surface profiles.

enum class SingularityTag { OneThird11, TripleCurve, ConeVertex };
const char* singularity_tag_name(SingularityTag t);

struct SingularityNote {
  SingularityTag tag{};
  int count{};
  std::string descriptor;
};

struct SurfaceProfile {
  Int marking_degree; // d' = hmark . ell, in 2..6
  Int degree;         // 1, 4, 6, 10, 15
  std::string description;
  std::vector<SingularityNote> singularities;
  // Degree ledger (head coefficient; exceptional multiplicities), present for
  // d' = 4, 5, 6 where the surface degree is computed as a^2 - sum b_i^2.
  std::optional<std::pair<Int, std::vector<Int>>> ledger;
};

SurfaceProfile special_surface_profile(const PicClass& hmark, const PicClass& ell);

// a^2 - sum of squared multiplicities.
Int surface_degree_ledger(const Int& line_coeff, const std::vector<Int>& mults);

// ---------------------------------------------------------------------------
// The Bertini factorization ledger (the iota_X route).

struct FactorizationRecord {
  std::vector<PicClass> first_flip_centers;  // 8 classes 6h - 2e - e_i
  std::vector<PicClass> second_flip_centers; // 28 classes 5h - 2e + e_i + e_j
  std::vector<PicClass> contracted_classes;  // 8 classes on X: 10H - 6 sum E - E_i
  Int map_degree;         // 49
  Int multiplicity;       // 30
  int linear_system_dim;  // 4
  Int contracted_degree;  // 10
  struct BaseSurfaceFamily {
    int count{};
    Int degree;
  };
  std::vector<BaseSurfaceFamily> base_surfaces; // 28 of degree 10, 8 of degree 15
};
FactorizationRecord bertini_factorization();

// ---------------------------------------------------------------------------
// Special curve classes on X.

struct CurveCensusEntry {
  PicClass curve;  // basis XCurve
  Int degree;      // -K_X . curve
};
// All classes a H~ - sum_{i in I} E~_i with a = 1..5 and |I| bounded by
// (2, 3, 4, 7, 8) respectively; 804 entries.
std::vector<CurveCensusEntry> curve_census();
// The entries of non-positive anticanonical degree: the 28 L_ij and 8 Gamma_k.
std::vector<PicClass> negative_special_curves();

PicClass l_ij_curve(int i, int j); // H~ - E~_i - E~_j
PicClass gamma_k_curve(int k);     // 4 H~ - sum_{j != k} E~_j
PicClass r_curve();                // 5 H~ - sum E~_j

} // namespace dp1
