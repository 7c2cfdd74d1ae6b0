#include "dp1/walk.hpp"

#include <algorithm>
#include <bit>

namespace dp1 {

// ---------------------------------------------------------------------------
// Special loci.

const char* special_locus_kind_name(SpecialLocusKind k) {
  switch (k) {
    case SpecialLocusKind::PEll: return "P_ELL";
    case SpecialLocusKind::ZEll: return "Z_ELL";
    case SpecialLocusKind::EC: return "E_C";
    case SpecialLocusKind::FCPoint: return "F_C_POINT";
  }
  throw domain_error("unknown special locus kind");
}

SpecialLocus make_special_locus(SpecialLocusKind kind, const PicClass& center) {
  SpecialLocus s;
  s.kind = kind;
  s.center = center;
  switch (kind) {
    case SpecialLocusKind::PEll:
    case SpecialLocusKind::ZEll:
      if (classify(center) != ClassKind::MinusOne)
        throw domain_error("P_ell / Z_ell loci require a (-1)-class center");
      s.ext_h1 = {2, 3};
      s.geometry = (kind == SpecialLocusKind::PEll)
                       ? "P^2 with normal bundle O(-1) + O(-1)"
                       : "P^1 with normal bundle O(-1)^3";
      break;
    case SpecialLocusKind::EC:
    case SpecialLocusKind::FCPoint:
      if (classify(center) != ClassKind::Conic)
        throw domain_error("E_C / point loci require a conic class center");
      s.ext_h1 = {1, 4};
      s.geometry = (kind == SpecialLocusKind::EC)
                       ? "P^3 with normal bundle O(-1)"
                       : "point";
      break;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Invariants.

Int chi_tangent(const FourfoldInvariants& inv) {
  return 27 - 5 * inv.h0_minusK + inv.K4 + 3 * inv.b2 - inv.h12 - inv.b4 +
         3 * inv.h13;
}

FourfoldInvariants p4_invariants() {
  return FourfoldInvariants{1, 0, 1, 625, 126, 0, 0, true};
}
FourfoldInvariants x_blowup_invariants() {
  return FourfoldInvariants{9, 0, 9, -23, 6, 0, 0, true};
}
FourfoldInvariants y_invariants() {
  return FourfoldInvariants{9, 0, 45, 13, 6, 0, 0, true};
}
FourfoldInvariants f_chamber_invariants() {
  return FourfoldInvariants{9, 0, 37, 5, 6, 0, 0, false};
}

std::optional<FourfoldInvariants> label_invariants(const std::string& label_name) {
  if (label_name == "C") return p4_invariants();
  if (label_name == "B") return x_blowup_invariants();
  if (label_name == "F") return f_chamber_invariants();
  if (label_name == "CENTRAL") return y_invariants();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Surgeries.

const char* surgery_kind_name(SurgeryKind k) {
  switch (k) {
    case SurgeryKind::Blowup: return "BLOWUP";
    case SurgeryKind::Blowdown: return "BLOWDOWN";
    case SurgeryKind::FlipToP2: return "FLIP_TO_P2";
    case SurgeryKind::FlipToP1: return "FLIP_TO_P1";
    case SurgeryKind::ExitEmpty: return "EXIT_EMPTY";
    case SurgeryKind::EnterModuli: return "ENTER_MODULI";
  }
  throw domain_error("unknown surgery kind");
}

SurgeryKind surgery_kind(WallKind wall, int from_sign) {
  switch (wall) {
    case WallKind::Curve:
      return from_sign > 0 ? SurgeryKind::FlipToP1 : SurgeryKind::FlipToP2;
    case WallKind::Conic:
      return from_sign > 0 ? SurgeryKind::Blowdown : SurgeryKind::Blowup;
    case WallKind::Cubic:
      return from_sign > 0 ? SurgeryKind::ExitEmpty : SurgeryKind::EnterModuli;
  }
  throw domain_error("unknown wall kind");
}

namespace {

void apply_delta(FourfoldInvariants& inv, SurgeryKind k) {
  switch (k) {
    case SurgeryKind::Blowup:
      inv.b2 += 1; inv.b4 += 1; inv.K4 -= 81; inv.h0_minusK -= 15;
      break;
    case SurgeryKind::Blowdown:
      inv.b2 -= 1; inv.b4 -= 1; inv.K4 += 81; inv.h0_minusK += 15;
      break;
    case SurgeryKind::FlipToP2:
      inv.b4 += 1; inv.K4 += 1;
      break;
    case SurgeryKind::FlipToP1:
      inv.b4 -= 1; inv.K4 -= 1;
      break;
    case SurgeryKind::ExitEmpty:
    case SurgeryKind::EnterModuli:
      throw domain_error("boundary surgeries carry no invariant delta");
  }
  inv.h0_certified = false; // intermediate values are bookkept, not certified
}

bool certified_label(const std::optional<ChamberLabel>& lbl) {
  return lbl && (lbl->name == "C" || lbl->name == "B" || lbl->name == "CENTRAL");
}

} // namespace

WalkResult walk(const RatClass& L0, const RatClass& L1) {
  WalkResult res;
  const auto& walls = all_walls();

  ModuliStatus st0 = moduli_status(L0);
  std::optional<FourfoldInvariants> cur;
  if (st0.kind == ModuliKind::Empty) {
    res.absolute = true; // known empty; invariants re-seed on entry
  } else {
    Chamber ch = chamber_of(L0);
    res.start_label = label_chamber(ch);
    if (res.start_label) {
      cur = label_invariants(res.start_label->name);
      res.absolute = true;
    } else {
      cur = FourfoldInvariants{}; // relative deltas from zero
      res.absolute = false;
    }
  }
  res.start = cur;

  for (const CrossingEvent& ev : cross_path(L0, L1)) {
    std::size_t cubics = 0;
    for (const WallCrossing& c : ev.crossings)
      if (walls[c.wall_index].kind == WallKind::Cubic) ++cubics;
    if (cubics > 1 || (cubics == 1 && ev.crossings.size() > 1))
      throw domain_error("path crosses the stability boundary at a corner; "
                         "perturb the endpoints");

    for (const WallCrossing& c : ev.crossings) {
      const Wall& w = walls[c.wall_index];
      SurgeryKind sk = surgery_kind(w.kind, c.from_sign);
      if (sk == SurgeryKind::ExitEmpty) {
        cur.reset();
      } else if (sk == SurgeryKind::EnterModuli) {
        cur = p4_invariants();
        cur->h0_certified = false; // certified again only at a labeled endpoint
        res.absolute = true;
      } else if (cur) {
        apply_delta(*cur, sk);
      }
      res.events.push_back(SurgeryEvent{ev.t, ev.point, w.kind, w.center, sk, cur});
    }
  }

  ModuliStatus st1 = moduli_status(L1);
  if (st1.kind == ModuliKind::Empty) {
    if (cur)
      throw verification_error("walk: sign bookkeeping claims an empty endpoint "
                               "is inside the stability region");
    res.end = std::nullopt;
    return res;
  }
  if (!cur && res.absolute)
    throw verification_error("walk: endpoint inside the stability region but "
                             "invariants were dropped");

  res.end_label = label_chamber(chamber_of(L1));
  if (cur && res.absolute && res.end_label) {
    std::optional<FourfoldInvariants> frozen = label_invariants(res.end_label->name);
    if (frozen && !cur->same_numbers(*frozen))
      throw verification_error("walk: running invariants disagree with the "
                               "frozen values of the endpoint chamber");
    cur->h0_certified = certified_label(res.end_label);
  }
  res.end = cur;
  return res;
}

// ---------------------------------------------------------------------------
// Special-surface profiles.

const char* singularity_tag_name(SingularityTag t) {
  switch (t) {
    case SingularityTag::OneThird11: return "ONE_THIRD_1_1";
    case SingularityTag::TripleCurve: return "TRIPLE_CURVE";
    case SingularityTag::ConeVertex: return "CONE_VERTEX";
  }
  throw domain_error("unknown singularity tag");
}

Int surface_degree_ledger(const Int& line_coeff, const std::vector<Int>& mults) {
  Int acc = line_coeff * line_coeff;
  for (const Int& b : mults) acc -= b * b;
  return acc;
}

SurfaceProfile special_surface_profile(const PicClass& hmark, const PicClass& ell) {
  if (classify(hmark) != ClassKind::Cubic)
    throw domain_error("special_surface_profile expects a cubic marking");
  if (classify(ell) != ClassKind::MinusOne)
    throw domain_error("special_surface_profile expects a (-1)-class");
  Int dp = pair(hmark, ell);
  if (dp <= 1)
    throw domain_error("special_surface_profile requires marking degree >= 2");
  if (dp > 6)
    throw verification_error("marking degree above 6 contradicts the class "
                             "enumeration");

  SurfaceProfile prof;
  prof.marking_degree = dp;

  auto ledger_for = [&](int mult4_count, int mult1_count) {
    // Head coefficient of the marked transform: 6d' - 5 - sum m'_i over the
    // adapted basis.
    std::vector<PicClass> adapted = adapted_minus_ones(hmark);
    Int msum = 0;
    for (const PicClass& e : adapted) msum += pair(ell, e);
    Int a = 6 * dp - 5 - msum;
    std::vector<Int> mults;
    mults.insert(mults.end(), mult4_count, Int(4));
    mults.insert(mults.end(), mult1_count, Int(1));
    prof.ledger = {a, mults};
    prof.degree = surface_degree_ledger(a, mults);
  };

  if (dp == 2) {
    prof.degree = 1;
    prof.description = "plane";
  } else if (dp == 3) {
    prof.degree = 4;
    prof.description = "cone over a rational normal quartic curve";
    prof.singularities.push_back({SingularityTag::ConeVertex, 1, "cone vertex"});
  } else if (dp == 4) {
    ledger_for(3, 10);
    prof.description = "normal surface of degree 6";
    prof.singularities.push_back(
        {SingularityTag::OneThird11, 3, "1/3(1,1) points"});
  } else if (dp == 5) {
    ledger_for(6, 15);
    prof.description = "normal surface of degree 10";
    prof.singularities.push_back(
        {SingularityTag::OneThird11, 6, "1/3(1,1) points"});
    prof.singularities.push_back(
        {SingularityTag::TripleCurve, 1,
         "line of multiplicity 3 at its general point"});
  } else { // dp == 6
    ledger_for(10, 21);
    prof.description = "normal surface of degree 15";
    prof.singularities.push_back(
        {SingularityTag::OneThird11, 1, "1/3(1,1) point"});
    prof.singularities.push_back(
        {SingularityTag::TripleCurve, 1, "quartic curve of multiplicity 3"});
  }
  return prof;
}

// ---------------------------------------------------------------------------
// Bertini factorization.

FactorizationRecord bertini_factorization() {
  FactorizationRecord rec;

  for (int i = 1; i <= 8; ++i)
    rec.first_flip_centers.push_back(bertini_pullback(e_class(i)));
  std::sort(rec.first_flip_centers.begin(), rec.first_flip_centers.end());

  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      rec.second_flip_centers.push_back(
          bertini_pullback(h_class() - e_class(i) - e_class(j)));
  std::sort(rec.second_flip_centers.begin(), rec.second_flip_centers.end());

  const PicClass m2kx = 2 * minus_K(Basis::X);
  for (int i = 1; i <= 8; ++i) {
    PicClass conic = h_class() - e_class(i);
    PicClass cls = fixed_divisor_class(bertini_pullback(conic));
    if (!(cls == m2kx - fixed_divisor_class(conic)))
      throw verification_error("contracted divisor classes violate the "
                               "bianticanonical relation");
    rec.contracted_classes.push_back(cls);
  }
  std::sort(rec.contracted_classes.begin(), rec.contracted_classes.end());

  PicClass img = bertini_on_X(H_class());
  rec.map_degree = img.c[0];
  rec.multiplicity = img.c[1];
  for (int i = 1; i <= 8; ++i)
    if (img.c[i] != rec.multiplicity)
      throw verification_error("base-point multiplicities of the involution "
                               "system are not equal");
  rec.linear_system_dim = 4;

  rec.contracted_degree = rec.contracted_classes.front().c[0];
  for (const PicClass& cls : rec.contracted_classes)
    if (cls.c[0] != rec.contracted_degree)
      throw verification_error("contracted divisors have unequal degrees");

  // Base locus: the transforms of the special surfaces over the flip centers.
  Int deg_second =
      special_surface_profile(h_class(), rec.second_flip_centers.front()).degree;
  Int deg_first =
      special_surface_profile(h_class(), rec.first_flip_centers.front()).degree;
  for (const PicClass& l : rec.second_flip_centers)
    if (special_surface_profile(h_class(), l).degree != deg_second)
      throw verification_error("second-batch surface degrees disagree");
  for (const PicClass& l : rec.first_flip_centers)
    if (special_surface_profile(h_class(), l).degree != deg_first)
      throw verification_error("first-batch surface degrees disagree");
  rec.base_surfaces.push_back(
      {static_cast<int>(rec.second_flip_centers.size()), deg_second});
  rec.base_surfaces.push_back(
      {static_cast<int>(rec.first_flip_centers.size()), deg_first});
  return rec;
}

// ---------------------------------------------------------------------------
// Curve census.

PicClass l_ij_curve(int i, int j) {
  if (i < 1 || i > 8 || j < 1 || j > 8 || i == j)
    throw domain_error("l_ij_curve requires distinct indices in 1..8");
  return Htilde_class() - Etilde_class(i) - Etilde_class(j);
}

PicClass gamma_k_curve(int k) {
  if (k < 1 || k > 8) throw domain_error("gamma_k_curve requires an index in 1..8");
  PicClass c = 4 * Htilde_class();
  for (int j = 1; j <= 8; ++j)
    if (j != k) c = c - Etilde_class(j);
  return c;
}

PicClass r_curve() {
  PicClass c = 5 * Htilde_class();
  for (int j = 1; j <= 8; ++j) c = c - Etilde_class(j);
  return c;
}

std::vector<CurveCensusEntry> curve_census() {
  static const int kmax[6] = {0, 2, 3, 4, 7, 8};
  std::vector<CurveCensusEntry> out;
  const PicClass mkx = minus_K(Basis::X);
  for (int a = 1; a <= 5; ++a) {
    for (unsigned mask = 0; mask < 256; ++mask) {
      if (std::popcount(mask) > kmax[a]) continue;
      PicClass c = a * Htilde_class();
      for (int i = 1; i <= 8; ++i)
        if (mask & (1u << (i - 1))) c = c - Etilde_class(i);
      out.push_back({c, pair(mkx, c)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CurveCensusEntry& x, const CurveCensusEntry& y) {
              return x.curve < y.curve;
            });
  return out;
}

std::vector<PicClass> negative_special_curves() {
  std::vector<PicClass> neg;
  for (const CurveCensusEntry& e : curve_census())
    if (e.degree <= 0) neg.push_back(e.curve);
  std::sort(neg.begin(), neg.end());

  std::vector<PicClass> expected;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) expected.push_back(l_ij_curve(i, j));
  for (int k = 1; k <= 8; ++k) expected.push_back(gamma_k_curve(k));
  std::sort(expected.begin(), expected.end());

  if (neg != expected)
    throw verification_error("negative special curves are not exactly the "
                             "L_ij and Gamma_k classes");
  return neg;
}

} // namespace dp1
