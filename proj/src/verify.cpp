#include "dp1/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "dp1/bridge.hpp"
#include "dp1/classes.hpp"
#include "dp1/cones.hpp"
#include "dp1/gale.hpp"
#include "dp1/lattice.hpp"
#include "dp1/walk.hpp"

namespace dp1 {
namespace {

void req(bool cond, const std::string& what) {
  if (!cond) throw verification_error(what);
}

PicClass make_s(long d, std::array<long, 8> m) {
  std::array<Int, 9> c{};
  c[0] = d;
  for (int i = 0; i < 8; ++i) c[static_cast<std::size_t>(i) + 1] = m[i];
  return PicClass(Basis::S, std::move(c));
}

std::vector<PicClass> sorted(std::vector<PicClass> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string count_list(std::initializer_list<std::size_t> xs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t x : xs) {
    if (!first) os << "/";
    os << x;
    first = false;
  }
  return os.str();
}

// --- criterion 1 -----------------------------------------------------------

std::string criterion_counts() {
  const struct {
    ClassKind kind;
    std::size_t expected;
    PicClass seed;
  } rows[] = {
      {ClassKind::Root, 240, make_s(0, {-1, 1, 0, 0, 0, 0, 0, 0})}, // e1 - e2
      {ClassKind::MinusOne, 240, e_class(1)},
      {ClassKind::Conic, 2160, make_s(1, {1, 0, 0, 0, 0, 0, 0, 0})}, // h - e1
      {ClassKind::Cubic, 17280, h_class()},
  };
  for (const auto& row : rows) {
    const auto& dio = enumerate_classes(row.kind);
    req(dio.size() == row.expected,
        std::string(kind_name(row.kind)) + ": Diophantine count " +
            std::to_string(dio.size()) + " != " + std::to_string(row.expected));
    req(classify(row.seed) == row.kind, "orbit seed misclassified");
    const auto orbit = sorted(weyl_orbit(row.seed));
    req(orbit == sorted(dio),
        std::string(kind_name(row.kind)) +
            ": Weyl orbit differs from the Diophantine set");
  }
  return "roots 240, (-1)-classes 240, conics 2160, cubics 17280; "
         "Weyl orbit = Diophantine set for all four kinds";
}

// --- criterion 2 -----------------------------------------------------------

std::vector<std::pair<Rat, std::vector<PicClass>>> expected_schedule() {
  std::vector<std::pair<Rat, std::vector<PicClass>>> sched;
  auto add = [&sched](long p, long q, std::vector<PicClass> centers) {
    sched.emplace_back(Rat(p) / q, sorted(std::move(centers)));
  };
  std::vector<PicClass> v;

  add(1, 32, {h_class()});

  v.clear();
  for (int i = 0; i < 8; ++i) {
    std::array<long, 8> m{};
    m[i] = 1;
    v.push_back(make_s(1, m)); // h - e_i
  }
  add(1, 20, v);

  v.clear();
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      std::array<long, 8> m{};
      m[i] = 1;
      m[j] = 1;
      v.push_back(make_s(1, m)); // h - e_i - e_j
    }
  add(1, 8, v);

  v.clear();
  for (int i = 1; i <= 8; ++i) v.push_back(e_class(i));
  add(1, 4, v);

  v.clear();
  for (int i = 0; i < 8; ++i) {
    std::array<long, 8> m{2, 2, 2, 2, 2, 2, 2, 2};
    m[i] = 3;
    v.push_back(make_s(6, m)); // 6h - 2 sum e - e_i
  }
  add(3, 4, v);

  v.clear();
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      std::array<long, 8> m{2, 2, 2, 2, 2, 2, 2, 2};
      m[i] = 1;
      m[j] = 1;
      v.push_back(make_s(5, m)); // 5h - 2 sum e + e_i + e_j
    }
  add(7, 8, v);

  v.clear();
  for (int i = 0; i < 8; ++i) {
    std::array<long, 8> m{4, 4, 4, 4, 4, 4, 4, 4};
    m[i] = 3;
    v.push_back(make_s(11, m)); // 11h - 4 sum e + e_i
  }
  add(19, 20, v);

  add(31, 32, {make_s(17, {6, 6, 6, 6, 6, 6, 6, 6})}); // 17h - 6 sum e
  return sched;
}

std::string criterion_walls() {
  const auto& walls = all_walls();
  req(walls.size() == 19680,
      "wall count " + std::to_string(walls.size()) + " != 19680");
  std::size_t by_kind[3] = {0, 0, 0};
  for (const Wall& w : walls) by_kind[static_cast<int>(w.kind)]++;
  req(by_kind[0] == 240 && by_kind[1] == 2160 && by_kind[2] == 17280,
      "wall counts by kind are not 240/2160/17280");

  // Pairwise non-proportionality: every normal is primitive, so two normals
  // are proportional iff they agree up to an overall sign.
  std::vector<PicClass> canon;
  canon.reserve(walls.size());
  for (const Wall& w : walls) {
    PicClass n = w.normal;
    for (const Int& x : n.c) {
      if (x == 0) continue;
      if (x < 0) n = -n;
      break;
    }
    // primitive_ray returns the same canonical orientation, so after the
    // sign flip above it is the identity exactly when the normal is primitive.
    req(primitive_ray(n) == n, "wall normal is not primitive");
    canon.push_back(std::move(n));
  }
  std::sort(canon.begin(), canon.end());
  req(std::adjacent_find(canon.begin(), canon.end()) == canon.end(),
      "two walls have proportional normals");

  // The anticanonical sweep L_t = (1 - t) h + t iota*h.
  const RatClass L0{h_class()};
  const RatClass L1{bertini_pullback(h_class())};
  const auto sched = expected_schedule();

  for (const auto& [t, centers] : sched) {
    RatClass Lt = L0 + t * (L1 - L0);
    req(is_ample(Lt), "L_t not ample at t = " + to_string(t));
    std::vector<PicClass> found;
    for (std::size_t idx : walls_through(Lt)) found.push_back(walls[idx].center);
    req(sorted(std::move(found)) == centers,
        "walls through L_t at t = " + to_string(t) +
            " differ from the expected centers");
  }

  const auto events = cross_path(L0, L1);
  req(events.size() == sched.size(),
      "path event count " + std::to_string(events.size()) + " != 8");
  for (std::size_t k = 0; k < events.size(); ++k) {
    req(events[k].t == sched[k].first,
        "path event " + std::to_string(k) + " at t = " + to_string(events[k].t) +
            ", expected " + to_string(sched[k].first));
    std::vector<PicClass> found;
    for (const WallCrossing& cr : events[k].crossings)
      found.push_back(walls[cr.wall_index].center);
    req(sorted(std::move(found)) == sched[k].second,
        "path event " + std::to_string(k) + " crosses unexpected walls");
  }
  return "19680 pairwise non-proportional walls (240/2160/17280); sweep hits "
         "t = 1/32, 1/20, 1/8, 1/4, 3/4, 7/8, 19/20, 31/32 with the expected "
         "centers, 1/8/28/8/8/28/8/1 at a time";
}

// --- criterion 3 -----------------------------------------------------------

std::string criterion_cones() {
  const ChainReport chain = verify_chain();
  req(chain.ok, "cone chain N < Pi < E < Nef failed");

  auto check_pair = [](ConeName name, std::size_t rays, std::size_t dual_rays) {
    const DualPairReport rep = verify_dual_pair(name);
    req(rep.ok, std::string(cone_name_str(name)) + " dual pair: " +
                    (rep.failures.empty() ? "failed" : rep.failures.front()));
    req(rep.cone_extremal_rays == rays,
        std::string(cone_name_str(name)) + " extremal rays " +
            std::to_string(rep.cone_extremal_rays) + " != " + std::to_string(rays));
    req(rep.dual_extremal_rays == dual_rays,
        std::string(cone_name_str(rep.dual)) + " extremal rays " +
            std::to_string(rep.dual_extremal_rays) + " != " +
            std::to_string(dual_rays));
  };
  check_pair(ConeName::NE, 240, 19440);   // NE and Nef
  check_pair(ConeName::E, 2160, 17520);   // E and its dual
  check_pair(ConeName::NDual, 240, 19440); // N-dual and N

  const FacetReport fr = verify_E_facets();
  req(fr.ok && fr.tau_h_simplicial, "facet (2h+K)-perp of E is not simplicial on {h-e_i}");
  req(fr.ell_facets_checked == 240 && fr.ell_facets_all_rank8,
      "some ell-perp facet of E is not spanned by its 126 conics");

  req(verify_adjoint_twist_bijection(),
      "adjoint twist is not a bijection Nef generators -> N generators");
  return "chain verified; extremal rays: NE 240, Nef 19440, E 2160, E-dual "
         "17520, N-dual 240; (2h+K)-facet simplicial, 240 ell-facets of 126 "
         "conics each";
}

// --- criterion 4 -----------------------------------------------------------

std::string criterion_incidence() {
  const auto& mones = enumerate_classes(ClassKind::MinusOne);
  for (const PicClass& ell : mones)
    req(conics_disjoint_from(ell).size() == 126,
        "conics disjoint from " + to_string(ell) + " != 126");

  const auto& conics = enumerate_classes(ClassKind::Conic);
  for (const PicClass& c : conics)
    req(minus_one_components_of(c).size() == 14,
        "(-1)-classes orthogonal to " + to_string(c) + " != 14");

  const PicClass h = h_class();
  const PicClass partner = bertini_pullback(h);
  Int best = 0;
  std::size_t attained = 0;
  PicClass arg;
  for (const PicClass& hp : enumerate_classes(ClassKind::Cubic)) {
    const Int v = pair(hp, h);
    if (v > best) {
      best = v;
      attained = 1;
      arg = hp;
    } else if (v == best) {
      ++attained;
    }
  }
  req(best == 17, "max cubic pairing with h is " + to_string(Rat(best)) + " != 17");
  req(attained == 1, "max cubic pairing 17 attained " + std::to_string(attained) +
                         " times, expected once");
  req(arg == partner, "max cubic pairing attained by " + to_string(arg) +
                          " instead of iota*h");
  return "126 conics disjoint from each of the 240 (-1)-classes; 14 "
         "(-1)-classes orthogonal to each conic; max cubic pairing with h is "
         "17, attained only by iota*h";
}

// --- criterion 5 -----------------------------------------------------------

std::string criterion_bridge() {
  req(rho(minus_K(Basis::S)) == minus_K(Basis::X), "rho(-K_S) != -K_X");
  for (int i = 1; i <= 8; ++i) {
    std::array<long, 8> m{};
    m[i - 1] = 1;
    req(rho(make_s(1, m)) == Int(2) * E_class(i),
        "rho(h - e_" + std::to_string(i) + ") != 2 E_" + std::to_string(i));
  }

  const auto& roots = enumerate_classes(ClassKind::Root);
  std::vector<PicClass> half;
  half.reserve(roots.size());
  for (const PicClass& r : roots) half.push_back(rho_tilde(r));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i; j < roots.size(); ++j)
      req(pair(half[i], half[j]) == pair(roots[i], roots[j]),
          "rho~ is not an isometry on the root pair (" + std::to_string(i) +
              ", " + std::to_string(j) + ")");

  // Deterministic portable draws (raw mt19937_64 output, no distribution
  // adapters) with coefficients in [-50, 50].
  std::mt19937_64 gen(20260814ULL);
  auto draw = [&gen]() { return static_cast<long>(gen() % 101) - 50; };
  auto random_class = [&draw](Basis b) {
    std::array<Int, 9> c{};
    for (auto& x : c) x = draw();
    return PicClass(b, std::move(c));
  };

  const PicClass KS = canonical_class(Basis::S);
  for (int trial = 0; trial < 1000; ++trial) {
    const PicClass L = random_class(Basis::S);
    const bool parity_even = (pair(KS, L) % 2) == 0;
    const PicClass image = rho(L);
    bool image_even = true;
    for (const Int& x : image.c)
      if ((x % 2) != 0) image_even = false;
    req(image_even == parity_even && rho_tilde_integral(L) == parity_even,
        "integrality of rho/2 disagrees with the parity of K_S . L on " +
            to_string(L));
  }

  for (int trial = 0; trial < 1000; ++trial) {
    const PicClass D = random_class(Basis::S);
    const PicClass gamma = random_class(Basis::XCurve);
    req(pair(rho(D), gamma) == pair(D, zeta(gamma)),
        "adjointness <rho D, gamma> = <D, zeta gamma> fails");
  }
  return "rho(-K_S) = -K_X and rho(h - e_i) = 2 E_i; rho~ isometric on all "
         "28920 root pairs; integrality <=> even K_S-degree on 1000 random "
         "classes; rho/zeta adjoint on 1000 random pairs";
}

// --- criterion 6 -----------------------------------------------------------

std::string criterion_bertini() {
  req(bertini_on_X(H_class()) ==
          PicClass(Basis::X, {49, 30, 30, 30, 30, 30, 30, 30, 30}),
      "iota_X* H != 49 H - 30 sum E_i");

  // Assemble the matrix of iota_X* in coefficient coordinates.
  Mat9 M{};
  for (int j = 0; j < 9; ++j) {
    std::array<Rat, 9> c{};
    c[static_cast<std::size_t>(j)] = 1;
    const auto img = to_integral(bertini_on_X(RatClass(Basis::X, std::move(c))));
    req(img.has_value(), "iota_X* is not integral on the coefficient basis");
    for (int i = 0; i < 9; ++i) M[i][j] = img->c[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < 9; ++j) {
    std::array<Int, 9> c{};
    c[static_cast<std::size_t>(j)] = 1;
    const PicClass x(Basis::X, std::move(c));
    req(apply_mat9(M, apply_mat9(M, x)) == x, "iota_X* is not an involution");
  }
  req(mat9_preserves_X_form(M), "iota_X* does not preserve the Dolgachev form");

  const FixedSubspace fs = involution_fixed_subspace();
  req(fs.plus_eigenvalue_count == 1 && fs.minus_eigenvalue_count == 8 &&
          fs.rank_iota_minus_id == 8 && fs.basis.size() == 1,
      "iota_S* eigenvalue profile is not (+1 once, -1 eight times)");
  const PicClass fixed = primitive_ray(fs.basis.front());
  req(fixed == canonical_class(Basis::S) || fixed == minus_K(Basis::S),
      "the fixed line of iota_S* is not the canonical line");

  req(apply_mat9(M, canonical_class(Basis::X)) == canonical_class(Basis::X),
      "iota_X* does not fix K_X");
  QMat m_minus_id(9, QRow(9, Rat(0)));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      m_minus_id[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Rat(M[i][j] - Int(i == j ? 1 : 0));
  req(rank_of(m_minus_id) == 8,
      "the fixed subspace of iota_X* is not a line");

  req(verify_bianticanonical_involution(),
      "E_C + E_{iota*C} != -2 K_X for some conic");
  return "iota_X* H = 49 H - 30 sum E_i; involutive, form-preserving, fixed "
         "line = canonical line on both sides; E_C + E_{iota*C} = -2 K_X for "
         "all 2160 conics";
}

// --- criterion 7 -----------------------------------------------------------

std::string criterion_fixed_divisors() {
  // The coefficient formula for E_C, computed here directly:
  // E_C = s (H - sum E) + sum m_i E_i with s = (sum m - d) / 2.
  for (const PicClass& c : enumerate_classes(ClassKind::Conic)) {
    Int msum = 0;
    for (int i = 1; i <= 8; ++i) msum += c.m(i);
    const Int twice_s = msum - c.d();
    req((twice_s % 2) == 0, "E_C formula: sum m - d is odd for " + to_string(c));
    const Int s = twice_s / 2;
    std::array<Int, 9> coeffs{};
    coeffs[0] = s;
    for (int i = 1; i <= 8; ++i) coeffs[static_cast<std::size_t>(i)] = s - c.m(i);
    const PicClass by_formula(Basis::X, std::move(coeffs));
    req(by_formula == rho_tilde(c) && by_formula == fixed_divisor_class(c),
        "E_C formula disagrees with rho(C)/2 for " + to_string(c));
  }

  const auto& gens = effective_semigroup_generators();
  req(gens.size() == 2401, "effective semigroup generator count " +
                               std::to_string(gens.size()) + " != 2401");
  const PicClass mk = minus_K(Basis::X);
  for (const PicClass& g : gens)
    req(pair(mk, g) == 3, "generator " + to_string(g) + " has -K_X degree != 3");

  // Cross-check: the generators are exactly rho/2 of the integral nef classes
  // of anticanonical degree two on S.
  std::vector<PicClass> transported;
  for (const PicClass& L : nef_classes_of_anticanonical_degree_two())
    transported.push_back(rho_tilde(L));
  req(sorted(std::move(transported)) == gens,
      "semigroup generators differ from rho/2 of the degree-two nef classes");
  return "E_C coefficient formula = rho(C)/2 on all 2160 conics; 2401 "
         "semigroup generators, each of Dolgachev degree 3 against -K_X, "
         "matching rho/2 of the degree-two nef classes";
}

// --- criterion 8 -----------------------------------------------------------

std::string criterion_surgery() {
  // The straight walk from the blow-up chamber to the central chamber.
  const RatClass L0{minus_K(Basis::S) + Int(2) * h_class()}; // (5; 1^8)
  const RatClass L1{minus_K(Basis::S)};
  const WalkResult res = walk(L0, L1);

  req(res.absolute && res.start_label && res.start_label->name == "B",
      "walk does not start in a B chamber");
  req(res.end_label && res.end_label->name == "CENTRAL",
      "walk does not end in the central chamber");
  req(res.start && res.start->same_numbers(x_blowup_invariants()),
      "start invariants != (9, 0, 9, -23, 6)");
  req(res.end && res.end->same_numbers(y_invariants()),
      "end invariants != (9, 0, 45, 13, 6)");
  req(res.events.size() == 36, "walk crosses " +
                                   std::to_string(res.events.size()) +
                                   " walls, expected 36");

  std::vector<PicClass> first, second;
  for (std::size_t k = 0; k < res.events.size(); ++k) {
    const SurgeryEvent& ev = res.events[k];
    req(ev.wall_kind == WallKind::Curve && ev.surgery == SurgeryKind::FlipToP2,
        "walk event is not a flip at a curve wall");
    if (k < 28) {
      req(ev.t == Rat(1) / 2, "first flip batch not at t = 1/2");
      first.push_back(ev.center);
    } else {
      req(ev.t == Rat(5) / 6, "second flip batch not at t = 5/6");
      second.push_back(ev.center);
    }
  }
  std::vector<PicClass> lines, points;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      std::array<long, 8> m{};
      m[i] = 1;
      m[j] = 1;
      lines.push_back(make_s(1, m));
    }
  for (int i = 1; i <= 8; ++i) points.push_back(e_class(i));
  req(sorted(std::move(first)) == sorted(std::move(lines)),
      "the 28 flip centers are not the classes h - e_i - e_j");
  req(sorted(std::move(second)) == sorted(std::move(points)),
      "the 8 flip centers are not the classes e_i");

  req(chi_tangent(y_invariants()) == -8, "chi_tangent(Y) != -8");
  req(chi_tangent(*res.end) == -8, "chi_tangent at the walk end != -8");

  // Bertini factorization ledger, with the contraction classes re-derived
  // from two independent identities.
  const FactorizationRecord rec = bertini_factorization();
  req(rec.first_flip_centers.size() == 8 && rec.second_flip_centers.size() == 28,
      "factorization does not emit 8 + 28 flips");
  req(rec.contracted_classes.size() == 8,
      "factorization does not emit 8 contractions");
  std::vector<PicClass> expected;
  for (int i = 1; i <= 8; ++i) {
    std::array<long, 8> m{};
    m[i - 1] = 1;
    const PicClass conic = make_s(1, m); // h - e_i
    const PicClass via_involution = fixed_divisor_class(bertini_pullback(conic));
    const PicClass via_pairing =
        Int(-2) * canonical_class(Basis::X) - fixed_divisor_class(conic);
    req(via_involution == via_pairing,
        "the two derivations of the contracted class disagree at i = " +
            std::to_string(i));
    expected.push_back(via_involution);
  }
  req(sorted(std::move(expected)) == sorted(rec.contracted_classes),
      "contracted divisor classes are not 10 H - 6 sum E - E_i");
  req(rec.map_degree == 49 && rec.multiplicity == 30 &&
          rec.linear_system_dim == 4 && rec.contracted_degree == 10,
      "factorization summary numbers are not (49, 30, 4, 10)");
  return "X -> Y log: 28 flips at h - e_i - e_j (t = 1/2), then 8 flips at "
         "e_i (t = 5/6); invariants (9,0,9,-23,6) -> (9,0,45,13,6); "
         "chi_tangent(Y) = -8; factorization emits 8 + 28 flips and 8 "
         "contractions with classes 10 H - 6 sum E - E_i";
}

// --- criterion 9 -----------------------------------------------------------

std::string criterion_surfaces() {
  const struct {
    PicClass ell;
    long degree;
  } rows[] = {
      {make_s(2, {1, 1, 1, 1, 1, 0, 0, 0}), 1},
      {make_s(3, {2, 1, 1, 1, 1, 1, 1, 0}), 4},
      {make_s(4, {2, 2, 2, 1, 1, 1, 1, 1}), 6},
      {make_s(5, {2, 2, 2, 2, 2, 2, 1, 1}), 10},
      {make_s(6, {3, 2, 2, 2, 2, 2, 2, 2}), 15},
  };
  const PicClass h = h_class();
  long dprime = 2;
  for (const auto& row : rows) {
    req(classify(row.ell) == ClassKind::MinusOne, "profile input is not a (-1)-class");
    req(pair(h, row.ell) == dprime, "marking degree of the test class is off");
    const SurfaceProfile prof = special_surface_profile(h, row.ell);
    req(prof.marking_degree == dprime && prof.degree == row.degree,
        "profile degree at d' = " + std::to_string(dprime) + " is " +
            to_string(Rat(prof.degree)) + ", expected " +
            std::to_string(row.degree));
    if (dprime >= 4) {
      req(prof.ledger.has_value(), "missing degree ledger at d' = " +
                                       std::to_string(dprime));
      const auto& [a, mults] = *prof.ledger;
      req(surface_degree_ledger(a, mults) == prof.degree,
          "degree ledger does not reproduce the profile degree");
    }
    ++dprime;
  }

  // The displayed decompositions, entered literally.
  auto mults = [](int fours, int ones) {
    std::vector<Int> v(static_cast<std::size_t>(fours), Int(4));
    v.insert(v.end(), static_cast<std::size_t>(ones), Int(1));
    return v;
  };
  req(surface_degree_ledger(8, mults(3, 10)) == 6,
      "ledger (8; 4^3, 1^10) != 6");
  req(surface_degree_ledger(11, mults(6, 15)) == 10,
      "ledger (11; 4^6, 1^15) != 10");
  req(surface_degree_ledger(14, mults(10, 21)) == 15,
      "reconstructed ledger (14; 4^10, 1^21) != 15");
  return "profile degrees (1, 4, 6, 10, 15) for d' = 2..6; ledgers (8; 4^3, "
         "1^10) = 6, (11; 4^6, 1^15) = 10, (14; 4^10, 1^21) = 15";
}

// --- criterion 10 ----------------------------------------------------------

std::string criterion_gale() {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const PointConfiguration q = random_del_pezzo_config(seed);
    const Correspondence corr = build_correspondence(q);
    const MinorIdentityReport rep = verify_minor_identity(q, corr.p);
    req(rep.orthogonality_violations == 0,
        "seed " + std::to_string(seed) + ": A . B^t != 0");
    req(rep.ok && rep.signed_violations == 0 && rep.pairs_checked == 840 &&
            rep.plus_violations == 0 && rep.plus_pairs_checked == 480 &&
            rep.duality_constant_ok && rep.vanishing_mismatches == 0,
        "seed " + std::to_string(seed) + ": minor exchange identity failed");
    req(general_linear_position(q),
        "seed " + std::to_string(seed) + ": P^2 side not in general position");
    req(general_linear_position(corr.p),
        "seed " + std::to_string(seed) +
            ": general position did not propagate to the P^4 side");
    const PointConfiguration back = associate(corr.p);
    req(back.k == q.k && back.n == q.n && back.m == rref(q.m),
        "seed " + std::to_string(seed) +
            ": double association does not recover the row space");
  }
  return "50 seeded configurations: A . B^t = 0 exactly; 840 exchange pairs "
         "each (480 plus-form); general position propagates; double "
         "association = row-space reduction";
}

// --- criterion 11 ----------------------------------------------------------

std::string criterion_loci() {
  const auto& mones = enumerate_classes(ClassKind::MinusOne);
  // Expected count by pairing value, and the exact tallies forced by the
  // transitive Weyl action: per class, 56 / 126 / 56 / 1 partners.
  const int expected_count[4] = {0, 0, 1, 3};
  std::size_t tally[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < mones.size(); ++i)
    for (std::size_t j = i + 1; j < mones.size(); ++j) {
      const Int p = pair(mones[i], mones[j]);
      req(p >= 0 && p <= 3, "unexpected pairing " + to_string(Rat(p)) +
                                " between distinct (-1)-classes");
      const int pi = static_cast<int>(p);
      const LocusIntersection li = locus_intersection_count(mones[i], mones[j]);
      req(li.count == expected_count[pi],
          "locus intersection count " + std::to_string(li.count) +
              " at pairing " + std::to_string(pi) + ", expected " +
              std::to_string(expected_count[pi]));
      if (pi == 3)
        req(mones[j] == bertini_pullback(mones[i]) &&
                mones[i] == bertini_pullback(mones[j]),
            "pairing 3 does not identify a Bertini pair");
      tally[pi]++;
    }
  req(tally[0] == 6720 && tally[1] == 15120 && tally[2] == 6720 &&
          tally[3] == 120,
      "pairing distribution over the 28680 pairs is not 6720/15120/6720/120");
  return "28680 unordered pairs: counts (0, 0, 1, 3) for pairings (0, 1, 2, "
         "3); distribution " +
         count_list({6720, 15120, 6720, 120}) +
         "; every pairing-3 partner is the Bertini image";
}

// ---------------------------------------------------------------------------

CriterionResult run_one(int number, std::string name,
                        const std::function<std::string()>& body) {
  CriterionResult r;
  r.number = number;
  r.name = std::move(name);
  try {
    r.detail = body();
    r.passed = true;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance_suite() {
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "class enumeration counts", criterion_counts));
  out.push_back(run_one(2, "wall inventory and the anticanonical sweep",
                        criterion_walls));
  out.push_back(run_one(3, "cone chain and dual pairs", criterion_cones));
  out.push_back(run_one(4, "incidence counts", criterion_incidence));
  out.push_back(run_one(5, "determinant line bridge", criterion_bridge));
  out.push_back(run_one(6, "Bertini involution transport", criterion_bertini));
  out.push_back(
      run_one(7, "fixed divisors and the degree-two semigroup",
              criterion_fixed_divisors));
  out.push_back(run_one(8, "surgery ledgers and factorization", criterion_surgery));
  out.push_back(run_one(9, "special surface profiles", criterion_surfaces));
  out.push_back(run_one(10, "Gale association", criterion_gale));
  out.push_back(run_one(11, "special locus intersections", criterion_loci));
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

std::string format_acceptance_table(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const CriterionResult& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.number
       << "  " << r.name << "\n";
    os << "      " << r.detail << "\n";
    if (r.passed) ++passed;
  }
  os << (passed == results.size() ? "ALL PASSED" : "FAILURES PRESENT") << "  ("
     << passed << "/" << results.size() << ")\n";
  return os.str();
}

} // namespace dp1
