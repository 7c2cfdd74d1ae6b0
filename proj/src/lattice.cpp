#include "dp1/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dp1 {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::S: return "S";
    case Basis::X: return "X";
    case Basis::XCurve: return "XCurve";
  }
  return "?";
}

bool PicClass::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
}

bool RatClass::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& v) { return v == 0; });
}

int cmp(const PicClass& a, const PicClass& b) {
  if (a.basis != b.basis)
    return static_cast<int>(a.basis) < static_cast<int>(b.basis) ? -1 : 1;
  for (std::size_t i = 0; i < 9; ++i) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
  }
  return 0;
}

namespace {

void require_same_basis(Basis a, Basis b, const char* op) {
  if (a != b) {
    throw domain_error(std::string(op) + ": mixed bases " + basis_name(a) + " and " +
                       basis_name(b));
  }
}

} // namespace

PicClass operator+(const PicClass& a, const PicClass& b) {
  require_same_basis(a.basis, b.basis, "operator+");
  PicClass r;
  r.basis = a.basis;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

PicClass operator-(const PicClass& a, const PicClass& b) {
  require_same_basis(a.basis, b.basis, "operator-");
  PicClass r;
  r.basis = a.basis;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

PicClass operator-(const PicClass& a) {
  PicClass r;
  r.basis = a.basis;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = -a.c[i];
  return r;
}

PicClass operator*(const Int& k, const PicClass& a) {
  PicClass r;
  r.basis = a.basis;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = k * a.c[i];
  return r;
}

RatClass::RatClass(const PicClass& p) : basis(p.basis) {
  for (std::size_t i = 0; i < 9; ++i) c[i] = Rat(p.c[i]);
}

RatClass operator+(const RatClass& a, const RatClass& b) {
  require_same_basis(a.basis, b.basis, "operator+");
  RatClass r;
  r.basis = a.basis;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

RatClass operator-(const RatClass& a, const RatClass& b) {
  require_same_basis(a.basis, b.basis, "operator-");
  RatClass r;
  r.basis = a.basis;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

RatClass operator-(const RatClass& a) {
  RatClass r;
  r.basis = a.basis;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = -a.c[i];
  return r;
}

RatClass operator*(const Rat& k, const RatClass& a) {
  RatClass r;
  r.basis = a.basis;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = k * a.c[i];
  return r;
}

std::optional<PicClass> to_integral(const RatClass& r) {
  PicClass p;
  p.basis = r.basis;
  for (std::size_t i = 0; i < 9; ++i) {
    if (!is_integral(r.c[i])) return std::nullopt;
    p.c[i] = num(r.c[i]);
  }
  return p;
}

PicClass primitive_ray(const RatClass& r) {
  if (r.is_zero()) throw domain_error("primitive_ray: zero class has no ray");
  Int lcm_den = 1;
  for (const auto& v : r.c) lcm_den = boost::multiprecision::lcm(lcm_den, den(v));
  PicClass p;
  p.basis = r.basis;
  for (std::size_t i = 0; i < 9; ++i) p.c[i] = num(r.c[i]) * (lcm_den / den(r.c[i]));
  Int g = 0;
  for (const auto& v : p.c) g = boost::multiprecision::gcd(g, v);
  for (auto& v : p.c) v /= g;
  for (const auto& v : p.c) {
    if (v != 0) {
      if (v < 0)
        for (auto& w : p.c) w = -w;
      break;
    }
  }
  return p;
}

PicClass primitive_ray(const PicClass& p) { return primitive_ray(RatClass(p)); }

namespace {

Int head_weight(Basis b) { return b == Basis::X ? Int(3) : Int(1); }

[[noreturn]] void bad_pairing(Basis a, Basis b) {
  throw domain_error(std::string("pair: no pairing between basis ") + basis_name(a) +
                     " and basis " + basis_name(b));
}

} // namespace

// Returns the head weight for the (possibly mixed) pairing, or throws.
Int pairing_head_weight(Basis a, Basis b) {
  if (a == b) {
    if (a == Basis::XCurve) bad_pairing(a, b); // no curve x curve form
    return head_weight(a);
  }
  const bool mixed_X = (a == Basis::X && b == Basis::XCurve) ||
                       (a == Basis::XCurve && b == Basis::X);
  if (mixed_X) return 1; // divisor . curve on X has head weight 1
  bad_pairing(a, b);
}

Int pair(const PicClass& a, const PicClass& b) {
  const Int w = pairing_head_weight(a.basis, b.basis);
  Int acc = w * a.c[0] * b.c[0];
  for (std::size_t i = 1; i < 9; ++i) acc -= a.c[i] * b.c[i];
  return acc;
}

Rat pair(const RatClass& a, const RatClass& b) {
  const Int w = pairing_head_weight(a.basis, b.basis);
  Rat acc = Rat(w) * a.c[0] * b.c[0];
  for (std::size_t i = 1; i < 9; ++i) acc -= a.c[i] * b.c[i];
  return acc;
}

namespace {

PicClass unit_class(Basis b, int slot, Int value) {
  PicClass p;
  p.basis = b;
  p.c[static_cast<std::size_t>(slot)] = std::move(value);
  return p;
}

void check_exceptional_index(int i) {
  if (i < 1 || i > 8) throw domain_error("exceptional index out of range 1..8");
}

} // namespace

PicClass h_class() { return unit_class(Basis::S, 0, 1); }

PicClass e_class(int i) {
  check_exceptional_index(i);
  // e_i = 0*h - (-1)*e_i, so m_i = -1 in the (d; m) convention.
  return unit_class(Basis::S, i, -1);
}

PicClass H_class() { return unit_class(Basis::X, 0, 1); }

PicClass E_class(int i) {
  check_exceptional_index(i);
  return unit_class(Basis::X, i, -1);
}

PicClass Htilde_class() { return unit_class(Basis::XCurve, 0, 1); }

PicClass Etilde_class(int i) {
  check_exceptional_index(i);
  return unit_class(Basis::XCurve, i, -1);
}

PicClass e_sum() {
  PicClass p;
  p.basis = Basis::S;
  for (std::size_t i = 1; i < 9; ++i) p.c[i] = -1;
  return p;
}

PicClass canonical_class(Basis b) {
  PicClass p;
  switch (b) {
    case Basis::S:
      // K_S = -3h + sum e_i  ->  (d; m) = (-3; -1,...,-1)
      p.basis = Basis::S;
      p.c[0] = -3;
      for (std::size_t i = 1; i < 9; ++i) p.c[i] = -1;
      return p;
    case Basis::X:
      // K_X = -5H + 3 sum E_i  ->  (d; m) = (-5; -3,...,-3)
      p.basis = Basis::X;
      p.c[0] = -5;
      for (std::size_t i = 1; i < 9; ++i) p.c[i] = -3;
      return p;
    case Basis::XCurve:
      throw domain_error("canonical_class: XCurve has no canonical class");
  }
  throw domain_error("canonical_class: unknown basis");
}

PicClass minus_K(Basis b) { return -canonical_class(b); }

Int anticanonical_degree(const PicClass& x) { return pair(minus_K(x.basis), x); }

PicClass bertini_pullback(const PicClass& g) {
  if (g.basis != Basis::S) throw domain_error("bertini_pullback: basis S only");
  const PicClass K = canonical_class(Basis::S);
  return Int(2) * pair(g, K) * K - g;
}

RatClass bertini_pullback(const RatClass& g) {
  if (g.basis != Basis::S) throw domain_error("bertini_pullback: basis S only");
  const RatClass K = RatClass(canonical_class(Basis::S));
  return Rat(2) * pair(g, K) * K - g;
}

PicClass adjoint_twist(const PicClass& g) {
  if (g.basis != Basis::S) throw domain_error("adjoint_twist: basis S only");
  const PicClass K = canonical_class(Basis::S);
  return g + pair(g, K) * K;
}

RatClass adjoint_twist(const RatClass& g) {
  if (g.basis != Basis::S) throw domain_error("adjoint_twist: basis S only");
  const RatClass K = RatClass(canonical_class(Basis::S));
  return g + pair(g, K) * K;
}

FixedSubspace involution_fixed_subspace() {
  // Matrix of the involution acting on (d; m) coefficient vectors, columns =
  // images of the 9 basis coefficient vectors.
  QMat iota_minus_id(9, QRow(9, Rat(0)));
  QMat iota_plus_id(9, QRow(9, Rat(0)));
  for (int j = 0; j < 9; ++j) {
    PicClass basis_vec;
    basis_vec.basis = Basis::S;
    basis_vec.c[static_cast<std::size_t>(j)] = 1;
    const PicClass img = bertini_pullback(basis_vec);
    for (int i = 0; i < 9; ++i) {
      const Rat entry(img.c[static_cast<std::size_t>(i)]);
      iota_minus_id[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          entry - (i == j ? 1 : 0);
      iota_plus_id[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          entry + (i == j ? 1 : 0);
    }
  }
  FixedSubspace out;
  out.rank_iota_minus_id = rank_of(iota_minus_id);
  out.plus_eigenvalue_count = 9 - out.rank_iota_minus_id;
  out.minus_eigenvalue_count = 9 - rank_of(iota_plus_id);

  // Kernel basis of (iota - id) from the RREF: free columns parameterize it.
  int rank = 0;
  const QMat R = rref(iota_minus_id, &rank);
  std::vector<int> pivot_col_of_row(static_cast<std::size_t>(rank), -1);
  std::vector<bool> is_pivot(9, false);
  for (int r = 0; r < rank; ++r) {
    for (int j = 0; j < 9; ++j) {
      if (R[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] != 0) {
        pivot_col_of_row[static_cast<std::size_t>(r)] = j;
        is_pivot[static_cast<std::size_t>(j)] = true;
        break;
      }
    }
  }
  for (int j = 0; j < 9; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    RatClass v;
    v.basis = Basis::S;
    v.c[static_cast<std::size_t>(j)] = 1;
    for (int r = 0; r < rank; ++r) {
      const int pc = pivot_col_of_row[static_cast<std::size_t>(r)];
      v.c[static_cast<std::size_t>(pc)] =
          -R[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    out.basis.push_back(primitive_ray(v));
  }
  return out;
}

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << num(r);
  if (!is_integral(r)) os << "/" << den(r);
  return os.str();
}

std::string to_string(const PicClass& p) {
  std::ostringstream os;
  os << "(" << p.c[0] << ";";
  for (std::size_t i = 1; i < 9; ++i) os << " " << p.c[i] << (i + 1 < 9 ? "," : "");
  os << ")@" << basis_name(p.basis);
  return os.str();
}

std::string to_string(const RatClass& r) {
  std::ostringstream os;
  os << "(" << to_string(r.c[0]) << ";";
  for (std::size_t i = 1; i < 9; ++i)
    os << " " << to_string(r.c[i]) << (i + 1 < 9 ? "," : "");
  os << ")@" << basis_name(r.basis);
  return os.str();
}

QMat rref(QMat m, int* rank_out) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t lead = 0;
  std::size_t r = 0;
  for (; r < rows && lead < cols; ++lead) {
    std::size_t piv = r;
    while (piv < rows && m[piv][lead] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Rat inv = m[r][lead];
    for (std::size_t j = lead; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][lead] == 0) continue;
      const Rat f = m[i][lead];
      for (std::size_t j = lead; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  if (rank_out) *rank_out = static_cast<int>(r);
  return m;
}

int rank_of(const QMat& m) {
  int rank = 0;
  rref(m, &rank);
  return rank;
}

Rat det(QMat m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw domain_error("det: matrix not square");
  }
  Rat result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      result = -result;
    }
    result *= m[col][col];
    const Rat inv = m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const Rat f = m[i][col] / inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return result;
}

} // namespace dp1
