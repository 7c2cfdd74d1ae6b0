#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "dp1/cones.hpp"
#include "dp1/lattice.hpp"

using namespace dp1;

namespace {

// (d; m1..m8): d*h - sum_i m_i e_i.
PicClass s_class(long d, std::array<long, 8> m) {
  std::array<Int, 9> c{};
  c[0] = d;
  for (std::size_t i = 0; i < 8; ++i) c[i + 1] = m[i];
  return PicClass(Basis::S, std::move(c));
}

RatClass ratpoint(Rat d, Rat m) {
  std::array<Rat, 9> c{};
  c[0] = std::move(d);
  for (std::size_t i = 1; i < 9; ++i) c[i] = m;
  return RatClass(Basis::S, std::move(c));
}

} // namespace

TEST_CASE("cone tower descriptions") {
  const struct {
    ConeName name;
    std::size_t gens, normals;
    ConeRep rep;
    std::optional<ConeName> ambient;
  } rows[] = {
      {ConeName::NE, 240, 19440, ConeRep::Both, std::nullopt},
      {ConeName::Nef, 19440, 240, ConeRep::Both, std::nullopt},
      {ConeName::E, 2160, 17280, ConeRep::Both, ConeName::Nef},
      {ConeName::EDual, 17520, 2160, ConeRep::Both, std::nullopt},
      {ConeName::Pi, 0, 2400, ConeRep::Inequalities, std::nullopt},
      {ConeName::PiDual, 2400, 0, ConeRep::Generators, std::nullopt},
      {ConeName::N, 19440, 240, ConeRep::Both, std::nullopt},
      {ConeName::NDual, 240, 19440, ConeRep::Both, std::nullopt},
  };
  for (const auto& row : rows) {
    const ConeSpec& spec = build_cone(row.name);
    CHECK(spec.name == row.name);
    CHECK(spec.generators.size() == row.gens);
    CHECK(spec.inequality_normals.size() == row.normals);
    CHECK(spec.authoritative == row.rep);
    CHECK(spec.ambient == row.ambient);
    CHECK(spec.packed_generators.size() == row.gens);
    CHECK(spec.packed_normals.size() == row.normals);
    CHECK(dual_of(dual_of(row.name)) == row.name);
  }
  CHECK(dual_of(ConeName::NE) == ConeName::Nef);
  CHECK(dual_of(ConeName::E) == ConeName::EDual);
  CHECK(dual_of(ConeName::Pi) == ConeName::PiDual);
  CHECK(dual_of(ConeName::N) == ConeName::NDual);
  CHECK(cone_from_string("NEF") == ConeName::Nef);
  CHECK(cone_from_string("E_DUAL") == ConeName::EDual);
  CHECK(cone_from_string("bogus") == std::nullopt);
}

TEST_CASE("membership along the chain at -K and at h") {
  const RatClass mk(minus_K(Basis::S));
  for (ConeName n : {ConeName::N, ConeName::Pi, ConeName::E, ConeName::Nef}) {
    CHECK(contains(n, mk));
    CHECK(strictly_contains(n, mk));
  }
  const RatClass h(h_class());
  CHECK(contains(ConeName::Nef, h));
  CHECK_FALSE(strictly_contains(ConeName::Nef, h)); // h . e_i = 0
  CHECK_FALSE(contains(ConeName::E, h));            // (2h + K) . h = -1
  CHECK_FALSE(contains(ConeName::Nef, RatClass(e_class(1) - e_class(2))));

  // (28; 3^8) is ample but already outside E.
  const RatClass far(s_class(28, {3, 3, 3, 3, 3, 3, 3, 3}));
  CHECK(is_ample(far));
  CHECK_FALSE(contains(ConeName::E, far));
  CHECK(contains(ConeName::Nef, far));
}

TEST_CASE("ampleness") {
  CHECK(is_ample(minus_K(Basis::S)));
  CHECK(is_ample(s_class(7, {1, 1, 1, 1, 1, 1, 1, 1})));
  CHECK_FALSE(is_ample(h_class()));
  CHECK_FALSE(is_ample(canonical_class(Basis::S)));
  CHECK_FALSE(is_ample(e_class(1)));
  CHECK_THROWS_AS((void)is_ample(minus_K(Basis::X)), domain_error);
}

TEST_CASE("generated-cone membership by exact feasibility") {
  const std::vector<PicClass> gens{h_class() - e_class(1), e_class(1)};
  CHECK(in_generated_cone(gens, RatClass(h_class())));
  CHECK(in_generated_cone(gens, RatClass(e_class(1))));
  CHECK(in_generated_cone(gens, ratpoint(Rat(1, 2), Rat(0)) -
                                    Rat(1, 2) * RatClass(e_class(1))));
  CHECK_FALSE(in_generated_cone(gens, RatClass(h_class() - Int(2) * e_class(1))));
  CHECK_FALSE(in_generated_cone(gens, RatClass(e_class(2))));
  CHECK_FALSE(in_generated_cone(gens, -RatClass(h_class())));
}

TEST_CASE("wall table") {
  const auto& walls = all_walls();
  REQUIRE(walls.size() == 19680);
  std::size_t curve = 0, conic = 0, cubic = 0;
  for (const auto& w : walls) {
    switch (w.kind) {
      case WallKind::Curve: ++curve; break;
      case WallKind::Conic: ++conic; break;
      case WallKind::Cubic: ++cubic; break;
    }
    CHECK(w.normal == Int(2) * w.center + canonical_class(Basis::S));
  }
  CHECK(curve == 240);
  CHECK(conic == 2160);
  CHECK(cubic == 17280);
  CHECK(packed_wall_normals().size() == 19680);
  // Canonical order: curve block, then conic, then cubic, each lex by center.
  CHECK(walls.front().kind == WallKind::Curve);
  CHECK(walls.back().kind == WallKind::Cubic);
  for (std::size_t i = 1; i < 240; ++i)
    CHECK(walls[i - 1].center < walls[i].center);
}

TEST_CASE("walls through a polarization") {
  CHECK(walls_through(RatClass(minus_K(Basis::S))).empty());

  // (36; 12^7, 8) is ample and lies on exactly one wall, the curve wall of
  // e_8: a wall through L means 2 D.L = -K.L = 16, and D.L = 36 + 4 m_8(D)
  // for any D with fixed anticanonical degree, which pins D = e_8.
  const RatClass on_wall(s_class(36, {12, 12, 12, 12, 12, 12, 12, 8}));
  CHECK(is_ample(on_wall));
  const auto idx = walls_through(on_wall);
  REQUIRE(idx.size() == 1);
  const auto& walls = all_walls();
  CHECK(walls[idx.front()].kind == WallKind::Curve);
  CHECK(walls[idx.front()].center == e_class(8));

  CHECK_THROWS_AS((void)walls_through(RatClass(h_class())), domain_error);
}

TEST_CASE("chambers and labels") {
  const auto central = chamber_of(RatClass(minus_K(Basis::S)));
  CHECK(central.active_walls.empty());
  const auto central_label = label_chamber(central);
  REQUIRE(central_label.has_value());
  CHECK(central_label->name == "CENTRAL");
  CHECK_FALSE(central_label->mark.has_value());

  const struct {
    PicClass rep;
    const char* name;
  } rows[] = {
      {s_class(7, {1, 1, 1, 1, 1, 1, 1, 1}), "C"},
      {s_class(5, {1, 1, 1, 1, 1, 1, 1, 1}), "B"},
      {s_class(7, {2, 2, 2, 2, 2, 2, 2, 2}), "F"},
  };
  for (const auto& row : rows) {
    const auto chamber = chamber_of(RatClass(row.rep));
    CHECK(chamber.active_walls.empty());
    const auto label = label_chamber(chamber);
    REQUIRE(label.has_value());
    CHECK(label->name == row.name);
    REQUIRE(label->mark.has_value());
    CHECK(*label->mark == h_class());
    CHECK(to_integral(chamber.representative).has_value());
  }

  // A chamber next to the Bertini mirror: C_{iota* h}.
  const auto mirror =
      chamber_of(RatClass(bertini_pullback(s_class(7, {1, 1, 1, 1, 1, 1, 1, 1}))));
  const auto mirror_label = label_chamber(mirror);
  REQUIRE(mirror_label.has_value());
  CHECK(mirror_label->name == "C");
  CHECK(*mirror_label->mark == bertini_pullback(h_class()));

  CHECK_THROWS_AS((void)chamber_of(RatClass(h_class())), domain_error);
}

TEST_CASE("wall-crossing schedule from the central chamber to B_h") {
  const auto events =
      cross_path(RatClass(minus_K(Basis::S)),
                 RatClass(s_class(5, {1, 1, 1, 1, 1, 1, 1, 1})));
  REQUIRE(events.size() == 2);

  CHECK(events[0].t == Rat(1, 6));
  CHECK(events[0].crossings.size() == 8);
  CHECK(events[1].t == Rat(1, 2));
  CHECK(events[1].crossings.size() == 28);

  const auto& walls = all_walls();
  for (const auto& c : events[0].crossings) {
    const auto& w = walls[c.wall_index];
    CHECK(w.kind == WallKind::Curve);
    CHECK(w.center.d() == 0); // an e_i
    CHECK(c.from_sign == 1);
    CHECK(c.to_sign == -1);
    CHECK(crossing_kind(w.kind, c.from_sign) == CrossingKind::FlipContract);
  }
  for (const auto& c : events[1].crossings) {
    const auto& w = walls[c.wall_index];
    CHECK(w.kind == WallKind::Curve);
    CHECK(w.center.d() == 1); // an h - e_i - e_j
  }

  // The reverse path sees the same walls at mirrored times with flipped signs.
  const auto rev =
      cross_path(RatClass(s_class(5, {1, 1, 1, 1, 1, 1, 1, 1})),
                 RatClass(minus_K(Basis::S)));
  REQUIRE(rev.size() == 2);
  CHECK(rev[0].t == Rat(1, 2));
  CHECK(rev[0].crossings.size() == 28);
  CHECK(rev[1].t == Rat(5, 6));
  CHECK(rev[1].crossings.front().from_sign == -1);

  // Endpoints may not sit on a wall ((4; 2,1^6,0) lies on the e_1 wall).
  CHECK_THROWS_AS((void)cross_path(RatClass(s_class(4, {2, 1, 1, 1, 1, 1, 1, 0})),
                                   RatClass(minus_K(Basis::S))),
                  domain_error);
}

TEST_CASE("crossing kinds") {
  CHECK(crossing_kind(WallKind::Curve, 1) == CrossingKind::FlipContract);
  CHECK(crossing_kind(WallKind::Curve, -1) == CrossingKind::FlipExtract);
  CHECK(crossing_kind(WallKind::Conic, 1) == CrossingKind::DivisorialContract);
  CHECK(crossing_kind(WallKind::Conic, -1) == CrossingKind::DivisorialExtract);
  CHECK(crossing_kind(WallKind::Cubic, 1) == CrossingKind::ExitModuli);
  CHECK(crossing_kind(WallKind::Cubic, -1) == CrossingKind::EnterModuli);
  CHECK(std::string(crossing_kind_name(CrossingKind::EnterModuli)) ==
        "ENTER_MODULI");
  CHECK(std::string(wall_kind_name(WallKind::Conic)) == "CONIC");
}

TEST_CASE("moduli status per polarization") {
  const auto central = moduli_status(RatClass(minus_K(Basis::S)));
  CHECK(central.kind == ModuliKind::Smooth4Fold);
  CHECK(central.loci.empty());
  REQUIRE(central.label.has_value());
  CHECK(central.label->name == "CENTRAL");

  const auto c_chamber = moduli_status(RatClass(s_class(7, {1, 1, 1, 1, 1, 1, 1, 1})));
  CHECK(c_chamber.kind == ModuliKind::P4);
  REQUIRE(c_chamber.label.has_value());
  CHECK(c_chamber.label->name == "C");

  const auto outside = moduli_status(RatClass(s_class(28, {3, 3, 3, 3, 3, 3, 3, 3})));
  CHECK(outside.kind == ModuliKind::Empty);

  // On the single curve wall through (36; 12^7, 8): still a smooth 4-fold,
  // with the special plane of e_8 recorded.
  const auto on_wall =
      moduli_status(RatClass(s_class(36, {12, 12, 12, 12, 12, 12, 12, 8})));
  CHECK(on_wall.kind == ModuliKind::Smooth4Fold);
  REQUIRE(on_wall.loci.size() == 1);
  CHECK(on_wall.loci.front().kind == WallKind::Curve);
  CHECK(on_wall.loci.front().center == e_class(8));

  CHECK_THROWS_AS((void)moduli_status(RatClass(h_class())), domain_error);
  CHECK(std::string(moduli_kind_name(ModuliKind::Empty)) == "EMPTY");
  CHECK(std::string(moduli_kind_name(ModuliKind::P4)) == "P4");
  CHECK(std::string(moduli_kind_name(ModuliKind::Smooth4Fold)) == "SMOOTH_4FOLD");
}
