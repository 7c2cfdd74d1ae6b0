// Command-line frontend for the del Pezzo / P^4 blow-up lattice toolkit.
//
// Exit codes: 0 success, 1 domain error (bad input, unknown subcommand,
// malformed literal or file), 2 verification failure (an internal exact
// cross-check did not hold).  Output is deterministic for fixed arguments
// and seed; JSON is the canonical format, CSV is available for the tabular
// subcommands (enumerate, walls, fixed-divisors).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dp1/bridge.hpp"
#include "dp1/classes.hpp"
#include "dp1/cones.hpp"
#include "dp1/gale.hpp"
#include "dp1/json_io.hpp"
#include "dp1/lattice.hpp"
#include "dp1/verify.hpp"
#include "dp1/walk.hpp"

namespace {

using namespace dp1;

Json intv(const Int& v) { return rat_to_json(Rat(v)); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void require_json(const std::string& format, const char* sub) {
  if (format != "json")
    throw domain_error(std::string(sub) +
                       ": csv output is only available for the tabular "
                       "subcommands (enumerate, walls, fixed-divisors)");
}

std::string csv_class_fields(const PicClass& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 9; ++i) {
    if (i) os << ",";
    os << c.c[i];
  }
  return os.str();
}

ClassKind kind_from_flag(const std::string& s) {
  if (s == "roots") return ClassKind::Root;
  if (s == "minus-ones") return ClassKind::MinusOne;
  if (s == "conics") return ClassKind::Conic;
  if (s == "cubics") return ClassKind::Cubic;
  throw domain_error("enumerate: unknown kind '" + s +
                     "' (expected roots, minus-ones, conics or cubics)");
}

PicClass orbit_seed(ClassKind k) {
  switch (k) {
    case ClassKind::Root:
      return PicClass(Basis::S, {0, -1, 1, 0, 0, 0, 0, 0, 0}); // e1 - e2
    case ClassKind::MinusOne:
      return e_class(1);
    case ClassKind::Conic:
      return PicClass(Basis::S, {1, 1, 0, 0, 0, 0, 0, 0, 0}); // h - e1
    case ClassKind::Cubic:
      return h_class();
  }
  throw domain_error("enumerate: unknown class kind");
}

Json label_to_json(const std::optional<ChamberLabel>& label) {
  if (!label) return nullptr;
  Json j;
  j["name"] = label->name;
  j["mark"] = label->mark ? class_to_json(*label->mark) : Json(nullptr);
  return j;
}

Json invariants_to_json(const FourfoldInvariants& inv) {
  Json j;
  j["b2"] = intv(inv.b2);
  j["b3"] = intv(inv.b3);
  j["b4"] = intv(inv.b4);
  j["K4"] = intv(inv.K4);
  j["h0_minusK"] = intv(inv.h0_minusK);
  j["h12"] = intv(inv.h12);
  j["h13"] = intv(inv.h13);
  j["chi_tangent"] = intv(chi_tangent(inv));
  j["h0_certified"] = inv.h0_certified;
  return j;
}

Json report_to_json(const MinorIdentityReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  j["orthogonality_violations"] = rep.orthogonality_violations;
  j["pairs_checked"] = rep.pairs_checked;
  j["signed_violations"] = rep.signed_violations;
  j["plus_pairs_checked"] = rep.plus_pairs_checked;
  j["plus_violations"] = rep.plus_violations;
  j["duality_constant_ok"] = rep.duality_constant_ok;
  j["vanishing_mismatches"] = rep.vanishing_mismatches;
  return j;
}

Basis parse_basis_flag(const std::string& flag, Basis fallback) {
  if (flag.empty()) return fallback;
  return basis_from_string(flag);
}

void check_basis_is(const std::string& flag, Basis wanted, const char* sub) {
  if (flag.empty()) return;
  if (basis_from_string(flag) != wanted)
    throw domain_error(std::string(sub) + ": classes for this subcommand live "
                       "in basis " + basis_name(wanted));
}

// --- subcommand bodies ------------------------------------------------------

void cmd_enumerate(const std::string& kind_flag, const std::string& format,
                   std::size_t orbit_cap) {
  const ClassKind kind = kind_from_flag(kind_flag);
  std::vector<PicClass> classes;
  const char* source = "diophantine";
  if (orbit_cap > 0) {
    classes = weyl_orbit(orbit_seed(kind), orbit_cap);
    std::sort(classes.begin(), classes.end());
    source = "weyl-orbit";
  } else {
    classes = enumerate_classes(kind);
  }
  if (format == "csv") {
    std::cout << "d,m1,m2,m3,m4,m5,m6,m7,m8\n";
    for (const PicClass& c : classes) std::cout << csv_class_fields(c) << "\n";
    return;
  }
  Json j;
  j["kind"] = kind_name(kind);
  j["source"] = source;
  j["count"] = classes.size();
  Json rows = Json::array();
  for (const PicClass& c : classes) rows.push_back(class_to_json(c));
  j["classes"] = std::move(rows);
  emit(j);
}

void cmd_walls(const std::string& format) {
  const auto& walls = all_walls();
  if (format == "csv") {
    std::cout << "kind,center_d,center_m1,center_m2,center_m3,center_m4,"
                 "center_m5,center_m6,center_m7,center_m8,normal_d,normal_m1,"
                 "normal_m2,normal_m3,normal_m4,normal_m5,normal_m6,normal_m7,"
                 "normal_m8\n";
    for (const Wall& w : walls)
      std::cout << wall_kind_name(w.kind) << "," << csv_class_fields(w.center)
                << "," << csv_class_fields(w.normal) << "\n";
    return;
  }
  Json j;
  j["count"] = walls.size();
  Json rows = Json::array();
  for (const Wall& w : walls) {
    Json row;
    row["kind"] = wall_kind_name(w.kind);
    row["center"] = class_to_json(w.center);
    row["normal"] = class_to_json(w.normal);
    rows.push_back(std::move(row));
  }
  j["walls"] = std::move(rows);
  emit(j);
}

void cmd_chamber(const std::string& literal, const std::string& basis_flag,
                 const std::string& format) {
  require_json(format, "chamber");
  check_basis_is(basis_flag, Basis::S, "chamber");
  const RatClass L = parse_rat_class_literal(literal, Basis::S);
  if (!is_ample(L)) {
    if (is_ample(-L)) {
      const auto label = label_chamber(chamber_of(-L));
      std::string hint = "chamber: the given class is anti-ample; its negation "
                         "is ample";
      if (label) hint += " with chamber label " + label->name;
      throw domain_error(hint + " (pass the ample representative)");
    }
    throw domain_error("chamber: the class is not ample");
  }
  const Chamber ch = chamber_of(L);
  const auto label = label_chamber(ch);
  const ModuliStatus st = moduli_status(L);
  const auto& walls = all_walls();

  Json j;
  j["input"] = class_to_json(L);
  j["label"] = label_to_json(label);
  std::size_t plus = 0, minus = 0;
  for (std::int8_t s : ch.signs) (s > 0 ? plus : minus)++;
  Json signs;
  signs["plus"] = plus;
  signs["minus"] = minus;
  signs["active"] = ch.active_walls.size();
  j["wall_signs"] = std::move(signs);
  Json active = Json::array();
  for (std::size_t idx : ch.active_walls) {
    Json row;
    row["kind"] = wall_kind_name(walls[idx].kind);
    row["center"] = class_to_json(walls[idx].center);
    active.push_back(std::move(row));
  }
  j["active_walls"] = std::move(active);
  Json moduli;
  moduli["kind"] = moduli_kind_name(st.kind);
  Json loci = Json::array();
  for (const SpecialLocusNote& note : st.loci) {
    Json row;
    row["kind"] = wall_kind_name(note.kind);
    row["center"] = class_to_json(note.center);
    loci.push_back(std::move(row));
  }
  moduli["loci"] = std::move(loci);
  moduli["note"] = st.note;
  j["moduli"] = std::move(moduli);
  emit(j);
}

void cmd_path(const std::string& lit0, const std::string& lit1,
              const std::string& basis_flag, const std::string& format) {
  require_json(format, "path");
  check_basis_is(basis_flag, Basis::S, "path");
  const RatClass L0 = parse_rat_class_literal(lit0, Basis::S);
  const RatClass L1 = parse_rat_class_literal(lit1, Basis::S);
  const auto events = cross_path(L0, L1);
  const auto& walls = all_walls();
  Json j;
  j["from"] = class_to_json(L0);
  j["to"] = class_to_json(L1);
  j["event_count"] = events.size();
  Json evs = Json::array();
  for (const CrossingEvent& ev : events) {
    Json row;
    row["t"] = rat_to_json(ev.t);
    row["point"] = class_to_json(ev.point);
    Json crossings = Json::array();
    for (const WallCrossing& cr : ev.crossings) {
      Json c;
      c["wall_kind"] = wall_kind_name(walls[cr.wall_index].kind);
      c["center"] = class_to_json(walls[cr.wall_index].center);
      c["crossing"] = crossing_kind_name(
          crossing_kind(walls[cr.wall_index].kind, cr.from_sign));
      c["from_sign"] = cr.from_sign;
      c["to_sign"] = cr.to_sign;
      crossings.push_back(std::move(c));
    }
    row["crossings"] = std::move(crossings);
    evs.push_back(std::move(row));
  }
  j["events"] = std::move(evs);
  emit(j);
}

void cmd_walk(const std::string& lit0, const std::string& lit1,
              const std::string& basis_flag, const std::string& format) {
  require_json(format, "walk");
  check_basis_is(basis_flag, Basis::S, "walk");
  const RatClass L0 = parse_rat_class_literal(lit0, Basis::S);
  const RatClass L1 = parse_rat_class_literal(lit1, Basis::S);
  const WalkResult res = walk(L0, L1);
  Json j;
  j["absolute"] = res.absolute;
  j["start_label"] = label_to_json(res.start_label);
  j["end_label"] = label_to_json(res.end_label);
  j["start"] = res.start ? invariants_to_json(*res.start) : Json(nullptr);
  j["end"] = res.end ? invariants_to_json(*res.end) : Json(nullptr);
  Json evs = Json::array();
  for (const SurgeryEvent& ev : res.events) {
    Json row;
    row["t"] = rat_to_json(ev.t);
    row["wall_kind"] = wall_kind_name(ev.wall_kind);
    row["center"] = class_to_json(ev.center);
    row["surgery"] = surgery_kind_name(ev.surgery);
    row["after"] = ev.after ? invariants_to_json(*ev.after) : Json(nullptr);
    evs.push_back(std::move(row));
  }
  j["events"] = std::move(evs);
  emit(j);
}

void cmd_rho(const std::string& literal, const std::string& basis_flag,
             const std::string& format) {
  require_json(format, "rho");
  check_basis_is(basis_flag, Basis::S, "rho");
  const PicClass L = parse_class_literal(literal, Basis::S);
  Json j;
  j["input"] = class_to_json(L);
  j["rho"] = class_to_json(rho(L));
  const bool half = rho_tilde_integral(L);
  j["half_integral"] = half;
  j["rho_tilde"] = half ? class_to_json(rho_tilde(L)) : Json(nullptr);
  emit(j);
}

void cmd_zeta(const std::string& literal, const std::string& basis_flag,
              const std::string& format) {
  require_json(format, "zeta");
  check_basis_is(basis_flag, Basis::XCurve, "zeta");
  const PicClass gamma = parse_class_literal(literal, Basis::XCurve);
  Json j;
  j["input"] = class_to_json(gamma);
  j["zeta"] = class_to_json(zeta(gamma));
  emit(j);
}

void cmd_bertini_x(const std::string& literal, const std::string& basis_flag,
                   const std::string& format) {
  require_json(format, "bertini-x");
  const Basis basis = parse_basis_flag(basis_flag, Basis::X);
  if (basis == Basis::XCurve)
    throw domain_error("bertini-x: divisor classes only (basis S or X)");
  const RatClass L = parse_rat_class_literal(literal, basis);
  Json j;
  j["input"] = class_to_json(L);
  j["image"] =
      class_to_json(basis == Basis::X ? bertini_on_X(L) : bertini_pullback(L));
  emit(j);
}

void cmd_fixed_divisors(const std::string& format) {
  struct Row {
    const char* type;
    PicClass source;
    PicClass divisor;
  };
  std::vector<Row> rows;
  rows.push_back(
      {"MINUS_K_X", Int(-2) * canonical_class(Basis::S), minus_K(Basis::X)});
  for (const PicClass& c : enumerate_classes(ClassKind::Conic))
    rows.push_back({"E_C", c, fixed_divisor_class(c)});
  for (const PicClass& ell : enumerate_classes(ClassKind::MinusOne))
    rows.push_back({"D_ELL", ell, d_ell_class(ell)});

  if (format == "csv") {
    std::cout << "type,source_d,source_m1,source_m2,source_m3,source_m4,"
                 "source_m5,source_m6,source_m7,source_m8,class_d,class_m1,"
                 "class_m2,class_m3,class_m4,class_m5,class_m6,class_m7,"
                 "class_m8\n";
    for (const Row& r : rows)
      std::cout << r.type << "," << csv_class_fields(r.source) << ","
                << csv_class_fields(r.divisor) << "\n";
    return;
  }
  Json j;
  j["count"] = rows.size();
  Json out = Json::array();
  for (const Row& r : rows) {
    Json row;
    row["type"] = r.type;
    row["source"] = class_to_json(r.source);
    row["class"] = class_to_json(r.divisor);
    out.push_back(std::move(row));
  }
  j["rows"] = std::move(out);
  emit(j);
}

void cmd_associate(const std::string& points_file, std::uint64_t seed,
                   const std::string& format) {
  require_json(format, "associate");
  PointConfiguration q;
  Json meta;
  if (!points_file.empty()) {
    std::ifstream in(points_file);
    if (!in) throw domain_error("associate: cannot open '" + points_file + "'");
    Json parsed;
    try {
      parsed = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw domain_error("associate: malformed point file: " +
                         std::string(e.what()));
    }
    q = config_from_json(parsed);
    meta["points_file"] = points_file;
  } else {
    q = random_del_pezzo_config(seed);
    meta["seed"] = seed;
  }
  const Correspondence corr = build_correspondence(q);
  const MinorIdentityReport rep = verify_minor_identity(corr.q, corr.p);
  if (!rep.ok)
    throw verification_error(
        "associate: the exchange identity between complementary minors failed");
  Json j = std::move(meta);
  j["q"] = config_to_json(corr.q);
  j["p"] = config_to_json(corr.p);
  j["convention"] = corr.convention;
  j["general_position_q"] = general_linear_position(corr.q);
  j["general_position_p"] = general_linear_position(corr.p);
  j["minor_identity"] = report_to_json(rep);
  emit(j);
}

int cmd_verify_all(const std::string& format) {
  const auto results = run_acceptance_suite();
  if (format == "json") {
    Json rows = Json::array();
    for (const CriterionResult& r : results) {
      Json row;
      row["number"] = r.number;
      row["name"] = r.name;
      row["passed"] = r.passed;
      row["detail"] = r.detail;
      rows.push_back(std::move(row));
    }
    emit(rows);
  } else {
    std::cout << format_acceptance_table(results);
  }
  return all_passed(results) ? 0 : 2;
}

void cmd_surface_profile(const std::string& hmark_lit, const std::string& ell_lit,
                         const std::string& basis_flag, const std::string& format) {
  require_json(format, "surface-profile");
  check_basis_is(basis_flag, Basis::S, "surface-profile");
  const PicClass hmark = parse_class_literal(hmark_lit, Basis::S);
  const PicClass ell = parse_class_literal(ell_lit, Basis::S);
  const SurfaceProfile prof = special_surface_profile(hmark, ell);
  Json j;
  j["hmark"] = class_to_json(hmark);
  j["ell"] = class_to_json(ell);
  j["marking_degree"] = intv(prof.marking_degree);
  j["degree"] = intv(prof.degree);
  j["description"] = prof.description;
  Json sing = Json::array();
  for (const SingularityNote& s : prof.singularities) {
    Json row;
    row["tag"] = singularity_tag_name(s.tag);
    row["count"] = s.count;
    row["descriptor"] = s.descriptor;
    sing.push_back(std::move(row));
  }
  j["singularities"] = std::move(sing);
  if (prof.ledger) {
    Json ledger;
    ledger["head"] = intv(prof.ledger->first);
    Json mults = Json::array();
    for (const Int& m : prof.ledger->second) mults.push_back(intv(m));
    ledger["multiplicities"] = std::move(mults);
    j["ledger"] = std::move(ledger);
  } else {
    j["ledger"] = nullptr;
  }
  emit(j);
}

void cmd_bertini_factorization(const std::string& format) {
  require_json(format, "bertini-factorization");
  const FactorizationRecord rec = bertini_factorization();
  Json j;
  auto class_list = [](const std::vector<PicClass>& v) {
    Json out = Json::array();
    for (const PicClass& c : v) out.push_back(class_to_json(c));
    return out;
  };
  j["first_flip_centers"] = class_list(rec.first_flip_centers);
  j["second_flip_centers"] = class_list(rec.second_flip_centers);
  j["contracted_classes"] = class_list(rec.contracted_classes);
  j["map_degree"] = intv(rec.map_degree);
  j["multiplicity"] = intv(rec.multiplicity);
  j["linear_system_dim"] = rec.linear_system_dim;
  j["contracted_degree"] = intv(rec.contracted_degree);
  Json fams = Json::array();
  for (const auto& fam : rec.base_surfaces) {
    Json row;
    row["count"] = fam.count;
    row["degree"] = intv(fam.degree);
    fams.push_back(std::move(row));
  }
  j["base_surfaces"] = std::move(fams);
  emit(j);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic toolkit for the Picard lattice of a degree-1 del "
      "Pezzo surface and the induced geometry on a blow-up of P^4 at eight "
      "points"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string basis_flag;
  std::uint64_t seed = 1;
  std::size_t orbit_cap = 0;
  app.add_option("--format", format, "Output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--basis", basis_flag,
                 "Basis of class literals (S, X or XCURVE); each subcommand "
                 "has a natural default");
  app.add_option("--seed", seed, "Seed for the deterministic configurations");
  app.add_option("--orbit-cap", orbit_cap,
                 "enumerate: produce the classes as a Weyl orbit, failing if "
                 "the orbit exceeds this size");

  std::string kind_flag;
  CLI::App* enumerate_cmd = app.add_subcommand("enumerate",
                                               "List a class family on S");
  enumerate_cmd
      ->add_option("--kind", kind_flag,
                   "roots, minus-ones, conics or cubics")
      ->required();

  CLI::App* walls_cmd = app.add_subcommand("walls", "List all 19680 walls");

  std::string chamber_lit;
  CLI::App* chamber_cmd =
      app.add_subcommand("chamber", "Chamber label and moduli status of an "
                                    "ample class on S");
  chamber_cmd->add_option("class", chamber_lit, "class literal [d,m1..m8]")
      ->required();

  std::string path_lit0, path_lit1;
  CLI::App* path_cmd =
      app.add_subcommand("path", "Exact wall-crossing schedule of a segment");
  path_cmd->add_option("from", path_lit0, "class literal")->required();
  path_cmd->add_option("to", path_lit1, "class literal")->required();

  std::string walk_lit0, walk_lit1;
  CLI::App* walk_cmd = app.add_subcommand(
      "walk", "Replay the surgeries along a segment, tracking invariants");
  walk_cmd->add_option("from", walk_lit0, "class literal")->required();
  walk_cmd->add_option("to", walk_lit1, "class literal")->required();

  std::string rho_lit;
  CLI::App* rho_cmd = app.add_subcommand(
      "rho", "Determinant line bridge of a divisor class on S");
  rho_cmd->add_option("class", rho_lit, "class literal")->required();

  std::string zeta_lit;
  CLI::App* zeta_cmd =
      app.add_subcommand("zeta", "Adjoint transport of a curve class on X");
  zeta_cmd->add_option("class", zeta_lit, "curve class literal")->required();

  std::string bx_lit;
  CLI::App* bx_cmd = app.add_subcommand(
      "bertini-x", "Bertini involution action on divisor classes");
  bx_cmd->add_option("class", bx_lit, "class literal")->required();

  CLI::App* fd_cmd = app.add_subcommand(
      "fixed-divisors", "The 2401 effective divisor classes of degree 3");

  std::string points_file;
  CLI::App* assoc_cmd = app.add_subcommand(
      "associate", "Gale association of an 8-point configuration");
  assoc_cmd->add_option("--points", points_file,
                        "JSON file with an exact-rational configuration");

  CLI::App* verify_cmd =
      app.add_subcommand("verify-all", "Run the full acceptance suite");

  std::string sp_hmark, sp_ell;
  CLI::App* sp_cmd = app.add_subcommand(
      "surface-profile", "Profile of the special surface attached to a "
                         "marking and a (-1)-class");
  sp_cmd->add_option("hmark", sp_hmark, "cubic class literal")->required();
  sp_cmd->add_option("ell", sp_ell, "(-1)-class literal")->required();

  CLI::App* bf_cmd = app.add_subcommand(
      "bertini-factorization", "Flip/contraction ledger of the involution on X");

  for (CLI::App* sub :
       {enumerate_cmd, walls_cmd, chamber_cmd, path_cmd, walk_cmd, rho_cmd,
        zeta_cmd, bx_cmd, fd_cmd, assoc_cmd, verify_cmd, sp_cmd, bf_cmd})
    sub->fallthrough();

  int exit_code = 0;
  enumerate_cmd->callback(
      [&] { cmd_enumerate(kind_flag, format, orbit_cap); });
  walls_cmd->callback([&] { cmd_walls(format); });
  chamber_cmd->callback([&] { cmd_chamber(chamber_lit, basis_flag, format); });
  path_cmd->callback(
      [&] { cmd_path(path_lit0, path_lit1, basis_flag, format); });
  walk_cmd->callback(
      [&] { cmd_walk(walk_lit0, walk_lit1, basis_flag, format); });
  rho_cmd->callback([&] { cmd_rho(rho_lit, basis_flag, format); });
  zeta_cmd->callback([&] { cmd_zeta(zeta_lit, basis_flag, format); });
  bx_cmd->callback([&] { cmd_bertini_x(bx_lit, basis_flag, format); });
  fd_cmd->callback([&] { cmd_fixed_divisors(format); });
  assoc_cmd->callback([&] { cmd_associate(points_file, seed, format); });
  verify_cmd->callback([&] { exit_code = cmd_verify_all(format); });
  sp_cmd->callback(
      [&] { cmd_surface_profile(sp_hmark, sp_ell, basis_flag, format); });
  bf_cmd->callback([&] { cmd_bertini_factorization(format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
