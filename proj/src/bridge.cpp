#include "dp1/bridge.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "dp1/kernels.hpp"
#include "dp1/parallel.hpp"

namespace dp1 {

namespace {

const PicClass& rho_h() {
  static const PicClass v{Basis::X, {-1, -1, -1, -1, -1, -1, -1, -1, -1}};
  return v;
}

PicClass rho_e(int i) {
  PicClass v{Basis::X, {-1, -1, -1, -1, -1, -1, -1, -1, -1}};
  v.c[i] = 1;
  return v;
}

// 9x9 coefficient matrix of rho and its inverse, cached.
struct RhoMatrices {
  QMat r;    // integral, stored rationally
  QMat rinv;
};

QMat invert9(const QMat& a) {
  QMat aug(9, QRow(18, Rat(0)));
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) aug[i][j] = a[i][j];
    aug[i][9 + i] = 1;
  }
  int rank = 0;
  QMat red = rref(aug, &rank);
  if (rank != 9) throw verification_error("bridge: rho matrix is singular");
  QMat inv(9, QRow(9, Rat(0)));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) inv[i][j] = red[i][9 + j];
  return inv;
}

const RhoMatrices& rho_matrices() {
  static const RhoMatrices mats = [] {
    RhoMatrices m;
    m.r = QMat(9, QRow(9, Rat(0)));
    for (int j = 0; j < 9; ++j) {
      PicClass unit{Basis::S, {}};
      unit.c[j] = 1;
      PicClass img = rho(unit);
      for (int i = 0; i < 9; ++i) m.r[i][j] = Rat(img.c[i]);
    }
    m.rinv = invert9(m.r);
    return m;
  }();
  return mats;
}

std::array<Rat, 9> mat_apply(const QMat& m, const std::array<Rat, 9>& x) {
  std::array<Rat, 9> y{};
  for (int i = 0; i < 9; ++i) {
    Rat acc(0);
    for (int j = 0; j < 9; ++j) acc += m[i][j] * x[j];
    y[i] = acc;
  }
  return y;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  QMat c(9, QRow(9, Rat(0)));
  for (int i = 0; i < 9; ++i)
    for (int k = 0; k < 9; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < 9; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

PicClass scale_primitive_keep_sign(const std::array<Rat, 9>& v, Basis basis) {
  Int lcm_den = 1;
  for (const auto& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, den(q));
  std::array<Int, 9> w{};
  Int content = 0;
  for (int i = 0; i < 9; ++i) {
    w[i] = num(v[i] * lcm_den);
    content = boost::multiprecision::gcd(content, w[i]);
  }
  if (content == 0) throw domain_error("bridge: cannot scale the zero vector");
  PicClass out{basis, {}};
  for (int i = 0; i < 9; ++i) out.c[i] = w[i] / content;
  return out;
}

} // namespace

PicClass rho(const PicClass& g) {
  if (g.basis != Basis::S)
    throw domain_error("rho expects a class in the S divisor basis");
  PicClass acc{Basis::X, {}};
  acc = acc + g.c[0] * rho_h();
  for (int i = 1; i <= 8; ++i) acc = acc - g.c[i] * rho_e(i);
  return acc;
}

RatClass rho(const RatClass& g) {
  if (g.basis != Basis::S)
    throw domain_error("rho expects a class in the S divisor basis");
  const QMat& r = rho_matrices().r;
  RatClass out{Basis::X, mat_apply(r, g.c)};
  return out;
}

RatClass rho_inverse(const RatClass& x) {
  if (x.basis != Basis::X)
    throw domain_error("rho_inverse expects a class in the X divisor basis");
  const QMat& rinv = rho_matrices().rinv;
  RatClass out{Basis::S, mat_apply(rinv, x.c)};
  return out;
}

bool rho_tilde_integral(const PicClass& g) {
  if (g.basis != Basis::S)
    throw domain_error("rho_tilde_integral expects a class in the S divisor basis");
  Int p = pair(g, canonical_class(Basis::S));
  return (p % 2) == 0;
}

PicClass rho_tilde(const PicClass& g) {
  if (!rho_tilde_integral(g))
    throw domain_error("rho_tilde: class pairs oddly with the canonical class; "
                       "rho(g)/2 is not integral");
  PicClass two = rho(g);
  PicClass out{Basis::X, {}};
  for (int i = 0; i < 9; ++i) {
    // rho(g) has even coefficients exactly when K_S . g is even.
    if ((two.c[i] % 2) != 0)
      throw verification_error("rho_tilde: parity predicate disagrees with coefficients");
    out.c[i] = two.c[i] / 2;
  }
  return out;
}

PicClass zeta(const PicClass& curve) {
  if (curve.basis != Basis::XCurve)
    throw domain_error("zeta expects a class in the X curve basis");
  const PicClass k = canonical_class(Basis::S);
  const PicClass zh = 2 * h_class() + k;
  PicClass acc{Basis::S, {}};
  acc = acc + curve.c[0] * zh;
  for (int i = 1; i <= 8; ++i) {
    PicClass ze = 2 * (h_class() - e_class(i)) + k;
    acc = acc - curve.c[i] * ze;
  }
  return acc;
}

Mat9 weyl_transfer(const WeylElement& w) {
  const RhoMatrices& rm = rho_matrices();
  QMat wm(9, QRow(9, Rat(0)));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) wm[i][j] = Rat(w.m[i][j]);
  QMat prod = mat_mul(mat_mul(rm.r, wm), rm.rinv);
  Mat9 out{};
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      if (den(prod[i][j]) != 1)
        throw verification_error("weyl_transfer: conjugated matrix is not integral");
      out[i][j] = num(prod[i][j]);
    }
  return out;
}

PicClass apply_mat9(const Mat9& m, const PicClass& x) {
  PicClass y{x.basis, {}};
  for (int i = 0; i < 9; ++i) {
    Int acc = 0;
    for (int j = 0; j < 9; ++j) acc += m[i][j] * x.c[j];
    y.c[i] = acc;
  }
  return y;
}

bool mat9_preserves_X_form(const Mat9& m) {
  // G = diag(3, -1, ..., -1) in coefficient coordinates; check M^T G M == G.
  for (int j = 0; j < 9; ++j)
    for (int k = j; k < 9; ++k) {
      Int acc = 0;
      for (int i = 0; i < 9; ++i) {
        Int weight = (i == 0) ? Int(3) : Int(-1);
        acc += weight * m[i][j] * m[i][k];
      }
      Int expect = (j == k) ? ((j == 0) ? Int(3) : Int(-1)) : Int(0);
      if (acc != expect) return false;
    }
  return true;
}

PicClass bertini_on_X(const PicClass& d) {
  RatClass img = bertini_on_X(RatClass(d));
  std::optional<PicClass> out = to_integral(img);
  if (!out)
    throw verification_error("bertini_on_X produced a non-integral image of an "
                             "integral class");
  return *out;
}

RatClass bertini_on_X(const RatClass& d) {
  if (d.basis != Basis::X)
    throw domain_error("bertini_on_X expects a class in the X divisor basis");
  return rho(bertini_pullback(rho_inverse(d)));
}

PicClass fixed_divisor_class(const PicClass& conic) {
  if (classify(conic) != ClassKind::Conic)
    throw domain_error("fixed_divisor_class expects a conic class");
  return rho_tilde(conic);
}

PicClass d_ell_class(const PicClass& ell) {
  if (classify(ell) != ClassKind::MinusOne)
    throw domain_error("d_ell_class expects a (-1)-class");
  return rho_tilde(minus_K(Basis::S) + ell);
}

PicClass h_Y_class(const PicClass& cubic) {
  if (classify(cubic) != ClassKind::Cubic)
    throw domain_error("h_Y_class expects a cubic class");
  return rho_tilde(minus_K(Basis::S) + 3 * cubic);
}

std::vector<PicClass> effective_semigroup_generators() {
  static std::mutex mtx;
  static std::vector<PicClass> cache;
  std::scoped_lock lock(mtx);
  if (!cache.empty()) return cache;

  std::vector<PicClass> gens;
  gens.reserve(2401);
  gens.push_back(minus_K(Basis::X));
  for (const PicClass& c : enumerate_classes(ClassKind::Conic))
    gens.push_back(fixed_divisor_class(c));
  for (const PicClass& l : enumerate_classes(ClassKind::MinusOne))
    gens.push_back(d_ell_class(l));
  std::sort(gens.begin(), gens.end());
  if (std::adjacent_find(gens.begin(), gens.end()) != gens.end())
    throw verification_error("effective semigroup generators are not distinct");
  if (gens.size() != 2401)
    throw verification_error("expected 2401 effective semigroup generators");
  const PicClass mkx = minus_K(Basis::X);
  for (const PicClass& g : gens)
    if (pair(mkx, g) != 3)
      throw verification_error("effective semigroup generator of anticanonical degree != 3");
  cache = std::move(gens);
  return cache;
}

bool verify_bianticanonical_involution() {
  const PicClass m2kx = 2 * minus_K(Basis::X);
  for (const PicClass& c : enumerate_classes(ClassKind::Conic)) {
    PicClass lhs = fixed_divisor_class(bertini_pullback(c));
    PicClass rhs = m2kx - fixed_divisor_class(c);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

PicClass transport_normal_S_to_X(const PicClass& w) {
  if (w.basis != Basis::S)
    throw domain_error("transport_normal_S_to_X expects a normal in the S basis");
  const QMat& rinv = rho_matrices().rinv;
  // f = G_S w, v = R^{-T} f, w' = G_X^{-1} v; all in coefficient coordinates
  // where G_S = diag(1, -1^8) and G_X = diag(3, -1^8).
  std::array<Rat, 9> f{};
  f[0] = Rat(w.c[0]);
  for (int i = 1; i <= 8; ++i) f[i] = Rat(-w.c[i]);
  std::array<Rat, 9> v{};
  for (int j = 0; j < 9; ++j) {
    Rat acc(0);
    for (int k = 0; k < 9; ++k) acc += rinv[k][j] * f[k];
    v[j] = acc;
  }
  std::array<Rat, 9> wp{};
  wp[0] = v[0] / 3;
  for (int i = 1; i <= 8; ++i) wp[i] = -v[i];
  return scale_primitive_keep_sign(wp, Basis::X);
}

std::vector<PicClass> adapted_minus_ones(const PicClass& cubic) {
  if (classify(cubic) != ClassKind::Cubic)
    throw domain_error("adapted_minus_ones expects a cubic class");
  const auto& mones = enumerate_classes(ClassKind::MinusOne);
  const PackedClasses& packed = packed_classes(ClassKind::MinusOne);
  std::vector<Int> vals = packed.pair_all(cubic);
  std::vector<PicClass> out;
  for (std::size_t i = 0; i < mones.size(); ++i)
    if (vals[i] == 0) out.push_back(mones[i]);
  if (out.size() != 8)
    throw verification_error("expected exactly 8 (-1)-classes orthogonal to a cubic");
  return out;
}

PicClass gamma_tilde_class(const PicClass& ell, const PicClass& hmark) {
  if (classify(ell) != ClassKind::MinusOne)
    throw domain_error("gamma_tilde_class expects a (-1)-class");
  if (classify(hmark) != ClassKind::Cubic)
    throw domain_error("gamma_tilde_class expects a cubic marking");
  Int dp = pair(ell, hmark);
  if (dp <= 1)
    throw domain_error("gamma_tilde_class requires degree l . hmark >= 2 "
                       "against the marking");
  std::vector<PicClass> adapted = adapted_minus_ones(hmark);
  Int msum = 0;
  std::array<Int, 8> mp{};
  for (int i = 0; i < 8; ++i) {
    mp[i] = pair(ell, adapted[i]);
    msum += mp[i];
  }
  PicClass out = (6 * dp - 5 - msum) * hmark;
  for (int i = 0; i < 8; ++i) out = out - (dp - mp[i] - 1) * adapted[i];
  return out;
}

const XConeDictionary& cone_dictionary() {
  static const XConeDictionary dict = [] {
    XConeDictionary d;

    // E_C = rho(C)/2 keeps the effective orientation; primitive_ray would
    // normalize the leading sign and flip rays such as rho(h - e_i) = 2 E_i.
    for (const PicClass& c : enumerate_classes(ClassKind::Conic))
      d.eff_x_rays.push_back(fixed_divisor_class(c));
    std::sort(d.eff_x_rays.begin(), d.eff_x_rays.end());

    const ConeSpec& pi = build_cone(ConeName::Pi);
    for (const PicClass& w : pi.inequality_normals)
      d.mov_x_normals.push_back(transport_normal_S_to_X(w));

    for (int i = 1; i <= 8; ++i) d.nef_x_curve_normals.push_back(Etilde_class(i));
    for (int i = 1; i <= 8; ++i)
      for (int j = i + 1; j <= 8; ++j)
        d.nef_x_curve_normals.push_back(Htilde_class() - Etilde_class(i) -
                                        Etilde_class(j));
    std::sort(d.nef_x_curve_normals.begin(), d.nef_x_curve_normals.end());

    const ConeSpec& n = build_cone(ConeName::N);
    std::set<PicClass> nef_y;
    for (const PicClass& g : n.generators) nef_y.insert(primitive_ray(rho(g)));
    d.nef_y_rays.assign(nef_y.begin(), nef_y.end());
    if (d.nef_y_rays.size() != n.generators.size())
      throw verification_error("cone_dictionary: rho collapsed N generators");
    return d;
  }();
  return dict;
}

bool verify_nef_x_facets() {
  // The 36 supporting walls of the closed h-marked chamber of the second
  // kind transport to the mixed-pairing functionals of the 36 curve classes
  // E~_i and H~ - E~_i - E~_j.
  std::vector<PicClass> divisor_basis;
  divisor_basis.push_back(H_class());
  for (int i = 1; i <= 8; ++i) divisor_basis.push_back(E_class(i));

  const PicClass k = canonical_class(Basis::S);
  auto matches = [&](const PicClass& transported, const PicClass& curve) {
    // Proportionality with a positive constant, checked on a basis.
    Rat ratio(0);
    bool ratio_set = false;
    for (const PicClass& dvec : divisor_basis) {
      Int lhs = pair(transported, dvec);
      Int rhs = pair(dvec, curve);
      if (rhs == 0) {
        if (lhs != 0) return false;
        continue;
      }
      // Divide instead of using the (num, den) constructor: cpp_rational
      // rejects negative denominators rather than normalizing the sign.
      Rat q = Rat(lhs) / Rat(rhs);
      if (!ratio_set) {
        ratio = q;
        ratio_set = true;
      } else if (ratio != q) {
        return false;
      }
    }
    return ratio_set && ratio > 0;
  };

  for (int i = 1; i <= 8; ++i) {
    PicClass wall = 2 * (h_class() - e_class(i)) + k; // positive side
    if (!matches(transport_normal_S_to_X(wall), Etilde_class(i))) return false;
  }
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) {
      PicClass ell = h_class() - e_class(i) - e_class(j);
      PicClass wall = -(2 * ell + k); // the chamber lies on the negative side
      PicClass curve = Htilde_class() - Etilde_class(i) - Etilde_class(j);
      if (!matches(transport_normal_S_to_X(wall), curve)) return false;
    }
  return true;
}

} // namespace dp1
