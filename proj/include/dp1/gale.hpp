#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dp1/lattice.hpp"

namespace dp1 {

// An ordered configuration of n points in P^k: columns of an exact-rational
// (k+1) x n matrix of homogeneous coordinates.
struct PointConfiguration {
  int k{};
  int n{};
  QMat m;
};

// Gale association: for a full-rank configuration A of n points in P^k
// (with no two points equal), returns the n-point configuration in
// P^{n-k-2} whose coordinate matrix B is the canonical (reduced-echelon)
// basis of ker A, so that A . B^t = 0 exactly.  Applying it twice returns
// the reduced echelon form of A, i.e. recovers the row space.
PointConfiguration associate(const PointConfiguration& a);

// Every maximal minor of the coordinate matrix is nonzero.
bool general_linear_position(const PointConfiguration& p);

// Position checks for the blow-up of P^2 at 8 points to be a del Pezzo
// surface of degree 1: no 3 points collinear, no 6 on a conic, and no cubic
// through all 8 points that is singular at one of them. These conditions are
// the standard characterization and are not derived in this codebase.
struct PositionDiagnostics {
  bool ok{};
  std::string first_violation; // empty when ok
};
PositionDiagnostics del_pezzo_position(const PointConfiguration& q);

// Exchange identities between the 3x3 minors a_I of A and the complementary
// 5x5 minors b_I of B (b_I = minor on the columns NOT in I):
//   - a_I = c * (-1)^{sum I} * b_I for a single nonzero constant c;
//   - for |I| = |J| = 3 with |I cap J| = 2, I = E+{z}, J = E+{w}:
//       a_I b_J + (-1)^{z+w+1} a_J b_I = 0,
//     which reduces to a_I b_J + a_J b_I = 0 when z + w is odd. The unsigned
//     form cannot hold for every exchange: requiring it on all pairs of a
//     triple of indices forces a contradiction of signs.
struct MinorIdentityReport {
  bool ok{};
  std::size_t orthogonality_violations{}; // entries of A . B^t that are nonzero
  std::size_t pairs_checked{};            // ordered qualifying (I, J) pairs
  std::size_t signed_violations{};
  std::size_t plus_pairs_checked{};       // opposite-parity exchanges
  std::size_t plus_violations{};
  bool duality_constant_ok{};
  std::size_t vanishing_mismatches{};     // a_I = 0 xor b_I = 0
};
MinorIdentityReport verify_minor_identity(const PointConfiguration& a,
                                          const PointConfiguration& b);

// The ordered association record used to pass between (S, h) and X.
struct Correspondence {
  PointConfiguration q; // 8 points in P^2
  PointConfiguration p; // 8 points in P^4
  std::string convention;
};
Correspondence build_correspondence(const PointConfiguration& q);

// Deterministic seeded configurations with small integer coordinates.
PointConfiguration random_rational_config(std::uint64_t seed);
// Redraws until del_pezzo_position passes.
PointConfiguration random_del_pezzo_config(std::uint64_t seed);

// Exact minor of the coordinate matrix on the given 0-based columns
// (ascending), using as many rows as columns starting from row 0.
Rat config_minor(const PointConfiguration& c, const std::vector<int>& cols);

} // namespace dp1
