#include "dp1/gale.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "dp1/arith.hpp"

namespace dp1 {

namespace {

void require_shape(const PointConfiguration& c, int k, int n, const char* what) {
  if (c.k != k || c.n != n || c.m.size() != static_cast<std::size_t>(k + 1))
    throw domain_error(std::string(what) + ": expected a " + std::to_string(k + 1) +
                       "x" + std::to_string(n) + " configuration");
  for (const QRow& row : c.m)
    if (row.size() != static_cast<std::size_t>(n))
      throw domain_error(std::string(what) + ": ragged coordinate matrix");
}

Rat det_square(QMat m) {
  const std::size_t n = m.size();
  Rat d(1);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    d *= m[c][c];
    Rat inv = Rat(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return sign > 0 ? d : -d;
}

std::vector<std::vector<int>> subsets_of_size(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::string set_to_string(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    os << (i ? "," : "") << (s[i] + 1);
  os << "}";
  return os.str();
}

// The ten cubic monomials in (x, y, z), fixed order.
constexpr int kCubicExp[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0},
                                  {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1},
                                  {0, 1, 2}, {0, 0, 3}};

Rat pow_rat(const Rat& b, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

} // namespace

Rat config_minor(const PointConfiguration& c, const std::vector<int>& cols) {
  QMat sub(cols.size(), QRow(cols.size()));
  for (std::size_t r = 0; r < cols.size(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      sub[r][j] = c.m[r][cols[j]];
  return det_square(std::move(sub));
}

PointConfiguration associate(const PointConfiguration& a) {
  const int rows = a.k + 1;        // rank the configuration must have
  const int dual_k = a.n - a.k - 2;
  if (a.k < 1 || dual_k < 1)
    throw domain_error("associate: need n points in P^k with 1 <= k <= n - 3");
  if (a.m.size() != static_cast<std::size_t>(rows))
    throw domain_error("associate: malformed configuration matrix");
  for (const QRow& row : a.m)
    if (row.size() != static_cast<std::size_t>(a.n))
      throw domain_error("associate: malformed configuration matrix");
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j) {
      bool proportional = true;
      for (int r = 0; r < rows && proportional; ++r)
        for (int s = r + 1; s < rows && proportional; ++s)
          if (a.m[r][i] * a.m[s][j] != a.m[r][j] * a.m[s][i]) proportional = false;
      if (proportional)
        throw domain_error("associate: columns " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1) + " are proportional");
    }

  int rank = 0;
  QMat red = rref(a.m, &rank);
  if (rank != rows)
    throw domain_error("associate: configuration matrix has rank < " +
                       std::to_string(rows));

  std::vector<int> pivots;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < a.n; ++c)
      if (red[r][c] != 0) {
        pivots.push_back(c);
        break;
      }
  std::vector<int> free_cols;
  for (int c = 0; c < a.n; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
      free_cols.push_back(c);

  const std::size_t ker_dim = static_cast<std::size_t>(dual_k + 1);
  QMat b(ker_dim, QRow(static_cast<std::size_t>(a.n), Rat(0)));
  for (std::size_t r = 0; r < ker_dim; ++r) {
    b[r][static_cast<std::size_t>(free_cols[r])] = 1;
    for (int i = 0; i < rows; ++i)
      b[r][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] =
          -red[static_cast<std::size_t>(i)][static_cast<std::size_t>(free_cols[r])];
  }
  int brank = 0;
  QMat bred = rref(b, &brank);
  if (brank != static_cast<int>(ker_dim))
    throw verification_error("associate: kernel basis is rank-deficient");

  for (int r = 0; r < rows; ++r)
    for (std::size_t s = 0; s < ker_dim; ++s) {
      Rat dot(0);
      for (int c = 0; c < a.n; ++c) dot += a.m[r][c] * bred[s][c];
      if (dot != 0)
        throw verification_error("associate: A . B^t != 0 after reduction");
    }
  return PointConfiguration{dual_k, a.n, std::move(bred)};
}

bool general_linear_position(const PointConfiguration& p) {
  const int r = p.k + 1;
  if (p.m.size() != static_cast<std::size_t>(r))
    throw domain_error("general_linear_position: malformed configuration");
  for (const std::vector<int>& cols : subsets_of_size(p.n, r))
    if (config_minor(p, cols) == 0) return false;
  return true;
}

PositionDiagnostics del_pezzo_position(const PointConfiguration& q) {
  require_shape(q, 2, 8, "del_pezzo_position");
  PositionDiagnostics diag;

  for (const std::vector<int>& cols : subsets_of_size(8, 3))
    if (config_minor(q, cols) == 0) {
      diag.ok = false;
      diag.first_violation = "collinear " + set_to_string(cols);
      return diag;
    }

  for (const std::vector<int>& cols : subsets_of_size(8, 6)) {
    QMat ver(6, QRow(6));
    for (int r = 0; r < 6; ++r) {
      const Rat& x = q.m[0][cols[r]];
      const Rat& y = q.m[1][cols[r]];
      const Rat& z = q.m[2][cols[r]];
      ver[r] = {x * x, x * y, y * y, x * z, y * z, z * z};
    }
    if (det_square(std::move(ver)) == 0) {
      diag.ok = false;
      diag.first_violation = "conic through " + set_to_string(cols);
      return diag;
    }
  }

  for (int i = 0; i < 8; ++i) {
    // A cubic singular at q_i vanishes there automatically (Euler relation),
    // so the conditions are: through the other 7 points, all three partial
    // derivatives zero at q_i. 10 linear conditions on the 10 coefficients.
    QMat sys(10, QRow(10));
    int row = 0;
    for (int j = 0; j < 8; ++j) {
      if (j == i) continue;
      for (int mcol = 0; mcol < 10; ++mcol)
        sys[row][mcol] = pow_rat(q.m[0][j], kCubicExp[mcol][0]) *
                         pow_rat(q.m[1][j], kCubicExp[mcol][1]) *
                         pow_rat(q.m[2][j], kCubicExp[mcol][2]);
      ++row;
    }
    for (int var = 0; var < 3; ++var) {
      for (int mcol = 0; mcol < 10; ++mcol) {
        int e[3] = {kCubicExp[mcol][0], kCubicExp[mcol][1], kCubicExp[mcol][2]};
        if (e[var] == 0) {
          sys[row][mcol] = 0;
          continue;
        }
        Rat coef(e[var]);
        --e[var];
        sys[row][mcol] = coef * pow_rat(q.m[0][i], e[0]) *
                         pow_rat(q.m[1][i], e[1]) * pow_rat(q.m[2][i], e[2]);
      }
      ++row;
    }
    if (det_square(std::move(sys)) == 0) {
      diag.ok = false;
      diag.first_violation =
          "cubic through all 8 points singular at point " + std::to_string(i + 1);
      return diag;
    }
  }

  diag.ok = true;
  return diag;
}

MinorIdentityReport verify_minor_identity(const PointConfiguration& a,
                                          const PointConfiguration& b) {
  require_shape(a, 2, 8, "verify_minor_identity");
  require_shape(b, 4, 8, "verify_minor_identity");
  MinorIdentityReport rep;

  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 5; ++s) {
      Rat dot(0);
      for (int c = 0; c < 8; ++c) dot += a.m[r][c] * b.m[s][c];
      if (dot != 0) ++rep.orthogonality_violations;
    }

  const auto triples = subsets_of_size(8, 3);
  std::vector<Rat> aI(triples.size()), bI(triples.size());
  std::vector<int> parity(triples.size());
  auto index_of = [&](const std::vector<int>& t) {
    // triples are generated in lexicographic order; find by binary search
    auto it = std::lower_bound(triples.begin(), triples.end(), t);
    return static_cast<std::size_t>(it - triples.begin());
  };
  for (std::size_t s = 0; s < triples.size(); ++s) {
    const std::vector<int>& I = triples[s];
    aI[s] = config_minor(a, I);
    std::vector<int> comp;
    for (int c = 0; c < 8; ++c)
      if (std::find(I.begin(), I.end(), c) == I.end()) comp.push_back(c);
    bI[s] = config_minor(b, comp);
    parity[s] = (I[0] + I[1] + I[2]) & 1;
  }

  // a_I = c * (-1)^{sum I} * b_I for one constant c.
  rep.duality_constant_ok = true;
  bool have_c = false;
  Rat cconst(0);
  for (std::size_t s = 0; s < triples.size(); ++s) {
    if ((aI[s] == 0) != (bI[s] == 0)) {
      ++rep.vanishing_mismatches;
      rep.duality_constant_ok = false;
      continue;
    }
    if (bI[s] == 0) continue;
    Rat ratio = aI[s] / bI[s];
    if (parity[s]) ratio = -ratio;
    if (!have_c) {
      cconst = ratio;
      have_c = true;
    } else if (ratio != cconst) {
      rep.duality_constant_ok = false;
    }
  }
  if (!have_c) rep.duality_constant_ok = false;

  for (std::size_t s = 0; s < triples.size(); ++s) {
    const std::vector<int>& I = triples[s];
    for (int z : I) {
      for (int w = 0; w < 8; ++w) {
        if (std::find(I.begin(), I.end(), w) != I.end()) continue;
        std::vector<int> J;
        for (int x : I)
          if (x != z) J.push_back(x);
        J.push_back(w);
        std::sort(J.begin(), J.end());
        std::size_t sj = index_of(J);
        ++rep.pairs_checked;
        Rat lhs = aI[s] * bI[sj];
        Rat rhs = aI[sj] * bI[s];
        // a_I b_J + (-1)^{z+w+1} a_J b_I
        Rat total = ((z + w) & 1) ? Rat(lhs + rhs) : Rat(lhs - rhs);
        if (total != 0) ++rep.signed_violations;
        if ((z + w) & 1) {
          ++rep.plus_pairs_checked;
          if (lhs + rhs != 0) ++rep.plus_violations;
        }
      }
    }
  }

  rep.ok = rep.orthogonality_violations == 0 && rep.signed_violations == 0 &&
           rep.plus_violations == 0 && rep.duality_constant_ok &&
           rep.vanishing_mismatches == 0;
  return rep;
}

Correspondence build_correspondence(const PointConfiguration& q) {
  PositionDiagnostics diag = del_pezzo_position(q);
  if (!diag.ok)
    throw domain_error("build_correspondence: configuration fails the position "
                       "checks (" + diag.first_violation + ")");
  Correspondence corr;
  corr.q = q;
  corr.p = associate(q);
  corr.convention = "associated as ordered sets of points; column i of the "
                    "P^4 matrix corresponds to column i of the P^2 matrix";
  return corr;
}

PointConfiguration random_rational_config(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  PointConfiguration q;
  q.k = 2;
  q.n = 8;
  q.m = QMat(3, QRow(8));
  for (int c = 0; c < 8; ++c) {
    // Affine chart z = 1; entries are small integers drawn portably
    // (no std::uniform_int_distribution, whose output is unspecified).
    q.m[0][c] = Rat(static_cast<std::int64_t>(gen() % 61) - 30);
    q.m[1][c] = Rat(static_cast<std::int64_t>(gen() % 61) - 30);
    q.m[2][c] = 1;
  }
  return q;
}

PointConfiguration random_del_pezzo_config(std::uint64_t seed) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PointConfiguration q =
        random_rational_config(seed + 0x9e3779b97f4a7c15ULL * attempt);
    if (del_pezzo_position(q).ok) return q;
  }
  throw verification_error("random_del_pezzo_config: no valid configuration "
                           "after 1000 redraws");
}

} // namespace dp1
