#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dp1/gale.hpp"
#include "dp1/lattice.hpp"

using namespace dp1;

namespace {

PointConfiguration plane_config(const std::vector<std::array<long, 3>>& pts) {
  PointConfiguration q;
  q.k = 2;
  q.n = static_cast<int>(pts.size());
  q.m = QMat(3, QRow(pts.size()));
  for (std::size_t c = 0; c < pts.size(); ++c)
    for (int r = 0; r < 3; ++r) q.m[static_cast<std::size_t>(r)][c] = Rat(pts[c][static_cast<std::size_t>(r)]);
  return q;
}

// Three coordinate points plus five points (1, 2^k, 3^k), k = 0..4.  Every
// maximal minor reduces to a generalized Vandermonde determinant with
// distinct positive bases, so no minor vanishes.
PointConfiguration hand_config() {
  return plane_config({{1, 0, 0},
                       {0, 1, 0},
                       {0, 0, 1},
                       {1, 1, 1},
                       {1, 2, 3},
                       {1, 4, 9},
                       {1, 8, 27},
                       {1, 16, 81}});
}

// Row rank by plain fraction elimination, written out independently of the
// library's rref so the rank assertions do not lean on the code under test.
int hand_rank(QMat m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[row][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

QMat permute_columns(const QMat& m, const std::vector<int>& perm) {
  QMat out(m.size(), QRow(perm.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < perm.size(); ++c)
      out[r][c] = m[r][static_cast<std::size_t>(perm[c])];
  return out;
}

template <typename Fn>
std::string domain_error_message(Fn&& fn) {
  try {
    fn();
  } catch (const domain_error& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("gale association of a hand configuration") {
  const PointConfiguration a = hand_config();
  REQUIRE(a.k == 2);
  REQUIRE(a.n == 8);
  CHECK(general_linear_position(a));

  const PointConfiguration b = associate(a);
  CHECK(b.k == 4);
  CHECK(b.n == 8);
  REQUIRE(b.m.size() == 5);
  for (const QRow& row : b.m) REQUIRE(row.size() == 8);

  // Exact orthogonality A . B^t = 0, entry by entry.
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 5; ++s) {
      Rat dot(0);
      for (int c = 0; c < 8; ++c)
        dot += a.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
               b.m[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)];
      CHECK(dot == 0);
    }

  // The returned kernel basis is already in reduced echelon form.
  CHECK(b.m == rref(b.m));
  CHECK(hand_rank(b.m) == 5);

  // Minor duality transfers general position to the associated points.
  CHECK(general_linear_position(b));

  const MinorIdentityReport rep = verify_minor_identity(a, b);
  CHECK(rep.ok);
  CHECK(rep.orthogonality_violations == 0);
  CHECK(rep.pairs_checked == 840);
  CHECK(rep.plus_pairs_checked == 480);
  CHECK(rep.signed_violations == 0);
  CHECK(rep.plus_violations == 0);
  CHECK(rep.duality_constant_ok);
  CHECK(rep.vanishing_mismatches == 0);
}

TEST_CASE("double association recovers the row space") {
  const PointConfiguration a = hand_config();
  const PointConfiguration b = associate(a);
  const PointConfiguration aa = associate(b);
  CHECK(aa.k == 2);
  CHECK(aa.n == 8);
  CHECK(aa.m == rref(a.m));

  // Independent row-space check: stacking the original rows on top of the
  // doubly associated rows does not raise the rank.
  QMat stacked = a.m;
  for (const QRow& row : aa.m) stacked.push_back(row);
  CHECK(hand_rank(a.m) == 3);
  CHECK(hand_rank(stacked) == 3);
}

TEST_CASE("association is equivariant under column permutation") {
  const PointConfiguration a = hand_config();
  const PointConfiguration b = associate(a);

  const std::vector<int> perm = {0, 1, 5, 3, 4, 2, 6, 7}; // swap columns 3 and 6
  PointConfiguration ap = a;
  ap.m = permute_columns(a.m, perm);

  const PointConfiguration bp = associate(ap);
  CHECK(bp.m == rref(permute_columns(b.m, perm)));
}

TEST_CASE("associate rejects degenerate configurations") {
  // Two proportional columns: repeated point in P^2.
  PointConfiguration rep = hand_config();
  for (int r = 0; r < 3; ++r)
    rep.m[static_cast<std::size_t>(r)][1] = Rat(2) * rep.m[static_cast<std::size_t>(r)][0];
  std::string msg = domain_error_message([&] { (void)associate(rep); });
  CHECK(msg.find("columns 1 and 2 are proportional") != std::string::npos);

  // Rank-deficient: all eight points on the line z = 0.
  std::vector<std::array<long, 3>> flat;
  for (long i = 0; i < 8; ++i) flat.push_back({1, i, 0});
  msg = domain_error_message([&] { (void)associate(plane_config(flat)); });
  CHECK(msg.find("rank < 3") != std::string::npos);
}

TEST_CASE("general linear position flags a vanishing minor") {
  PointConfiguration q = hand_config();
  // Move the last point onto the line through the first two coordinate
  // points; the triple {1, 2, 8} then spans only a line.
  q.m[0][7] = Rat(1);
  q.m[1][7] = Rat(1);
  q.m[2][7] = Rat(0);
  CHECK_FALSE(general_linear_position(q));
}

TEST_CASE("position diagnostics report the first collinear triple") {
  const PointConfiguration q = plane_config({{1, 0, 0},
                                             {0, 1, 0},
                                             {1, 1, 0},
                                             {1, 1, 1},
                                             {1, 2, 3},
                                             {1, 4, 9},
                                             {1, 8, 27},
                                             {1, 16, 81}});
  const PositionDiagnostics diag = del_pezzo_position(q);
  CHECK_FALSE(diag.ok);
  CHECK(diag.first_violation == "collinear {1,2,3}");

  std::string msg = domain_error_message([&] { (void)build_correspondence(q); });
  CHECK(msg.find("position") != std::string::npos);
  CHECK(msg.find("collinear {1,2,3}") != std::string::npos);
}

TEST_CASE("position diagnostics detect six points on a conic") {
  // Points (1, t, t^2) for t = 1..6 lie on the conic y^2 = x z; the two
  // extra points avoid that conic and create no collinear triple.
  const PointConfiguration q = plane_config({{1, 1, 1},
                                             {1, 2, 4},
                                             {1, 3, 9},
                                             {1, 4, 16},
                                             {1, 5, 25},
                                             {1, 6, 36},
                                             {0, 1, 0},
                                             {1, 1, 2}});
  const PositionDiagnostics diag = del_pezzo_position(q);
  CHECK_FALSE(diag.ok);
  CHECK(diag.first_violation == "conic through {1,2,3,4,5,6}");
}

TEST_CASE("position diagnostics detect a cubic singular at a marked point") {
  // The nodal cubic z y^2 = x^3 + x^2 z passes through its node (0,0,1) and
  // the seven points (t^2 - 1, t (t^2 - 1), 1), t = 2..8.  On this curve
  // three parameters are collinear only when t1 t2 + t1 t3 + t2 t3 = -1 and
  // six lie on a conic only when an odd symmetric function vanishes, so the
  // positive parameters rule out every earlier check.
  std::vector<std::array<long, 3>> pts = {{0, 0, 1}};
  for (long t = 2; t <= 8; ++t) pts.push_back({t * t - 1, t * (t * t - 1), 1});
  const PositionDiagnostics diag = del_pezzo_position(plane_config(pts));
  CHECK_FALSE(diag.ok);
  CHECK(diag.first_violation == "cubic through all 8 points singular at point 1");
}

TEST_CASE("seeded configurations are deterministic") {
  const PointConfiguration q1 = random_rational_config(7);
  const PointConfiguration q2 = random_rational_config(7);
  CHECK(q1.m == q2.m);
  CHECK(q1.k == 2);
  CHECK(q1.n == 8);
  for (int c = 0; c < 8; ++c) {
    CHECK(q1.m[2][static_cast<std::size_t>(c)] == 1);
    for (int r = 0; r < 2; ++r) {
      const Rat& v = q1.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      CHECK(Rat(-30) <= v);
      CHECK(v <= Rat(30));
    }
  }
  CHECK(random_rational_config(8).m != q1.m);

  const PointConfiguration d1 = random_del_pezzo_config(1);
  const PointConfiguration d2 = random_del_pezzo_config(1);
  CHECK(d1.m == d2.m);
  CHECK(del_pezzo_position(d1).ok);
  for (int c = 0; c < 8; ++c) CHECK(d1.m[2][static_cast<std::size_t>(c)] == 1);
}

TEST_CASE("minor exchange identities hold for seeded correspondences") {
  for (std::uint64_t seed : {1, 2, 3}) {
    CAPTURE(seed);
    const Correspondence corr = build_correspondence(random_del_pezzo_config(seed));
    CHECK(corr.q.k == 2);
    CHECK(corr.p.k == 4);
    CHECK(corr.convention.find("column") != std::string::npos);

    const MinorIdentityReport rep = verify_minor_identity(corr.q, corr.p);
    CHECK(rep.ok);
    CHECK(rep.orthogonality_violations == 0);
    CHECK(rep.pairs_checked == 840);
    CHECK(rep.plus_pairs_checked == 480);
    CHECK(rep.signed_violations == 0);
    CHECK(rep.plus_violations == 0);
    CHECK(rep.duality_constant_ok);
    CHECK(rep.vanishing_mismatches == 0);
  }
}

TEST_CASE("perturbing the associated points breaks the identities") {
  const Correspondence corr = build_correspondence(random_del_pezzo_config(2));
  PointConfiguration p = corr.p;
  p.m[0][0] += 1;
  const MinorIdentityReport rep = verify_minor_identity(corr.q, p);
  CHECK_FALSE(rep.ok);
  CHECK(rep.orthogonality_violations > 0);
}

TEST_CASE("verify_minor_identity enforces configuration shapes") {
  const PointConfiguration a = hand_config();
  const std::string msg =
      domain_error_message([&] { (void)verify_minor_identity(a, a); });
  CHECK(msg.find("5x8") != std::string::npos);
}

TEST_CASE("config_minor matches hand determinants") {
  const PointConfiguration a = hand_config();
  CHECK(config_minor(a, {0, 1, 3}) == 1);
  CHECK(config_minor(a, {3, 4, 5}) == 2);  // Vandermonde-type block
  CHECK(config_minor(a, {0, 1, 2}) == 1);  // coordinate triangle
}
