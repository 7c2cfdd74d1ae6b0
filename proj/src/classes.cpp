#include "dp1/classes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <sstream>

namespace dp1 {

const char* kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Root: return "ROOT";
    case ClassKind::MinusOne: return "MINUS_ONE";
    case ClassKind::Conic: return "CONIC";
    case ClassKind::Cubic: return "CUBIC";
  }
  return "?";
}

const KindTraits& kind_traits(ClassKind k) {
  // Seeds: a root (e1 - e2), a (-1)-class (e1), a conic (h - e1), a cubic (h).
  static const KindTraits root{Int(-2), Int(0), 8,
                               PicClass(Basis::S, {0, -1, 1, 0, 0, 0, 0, 0, 0}), 240};
  static const KindTraits mone{Int(-1), Int(-1), 6,
                               PicClass(Basis::S, {0, -1, 0, 0, 0, 0, 0, 0, 0}), 240};
  static const KindTraits conic{Int(0), Int(-2), 11,
                                PicClass(Basis::S, {1, 1, 0, 0, 0, 0, 0, 0, 0}), 2160};
  static const KindTraits cubic{Int(1), Int(-3), 17,
                                PicClass(Basis::S, {1, 0, 0, 0, 0, 0, 0, 0, 0}), 17280};
  switch (k) {
    case ClassKind::Root: return root;
    case ClassKind::MinusOne: return mone;
    case ClassKind::Conic: return conic;
    case ClassKind::Cubic: return cubic;
  }
  throw domain_error("kind_traits: unknown kind");
}

namespace {

// x decomposes as (x.K_S) K_S + v with v in K_S-perp (K_S^2 = 1).  Family
// membership requires v to be a primitive lattice vector; the condition is
// nontrivial only for the Cubic signature, where v^2 = -8 also admits the
// doubled roots v = 2 alpha.
bool k_perp_part_primitive(const PicClass& x, const Int& kdeg) {
  const PicClass K = canonical_class(Basis::S);
  Int g = 0;
  for (std::size_t i = 0; i < 9; ++i)
    g = boost::multiprecision::gcd(g, Int(x.c[i] - kdeg * K.c[i]));
  return g == 1;
}

} // namespace

std::optional<ClassKind> classify(const PicClass& x) {
  if (x.basis != Basis::S) return std::nullopt;
  const Int self = pair(x, x);
  const Int kd = pair(x, canonical_class(Basis::S));
  for (ClassKind k : {ClassKind::Root, ClassKind::MinusOne, ClassKind::Conic,
                      ClassKind::Cubic}) {
    const auto& t = kind_traits(k);
    if (self == t.self && kd == t.k_degree) {
      if (!k_perp_part_primitive(x, kd)) return std::nullopt;
      return k;
    }
  }
  return std::nullopt;
}

namespace {

using I64 = std::int64_t;

I64 isqrt64(I64 v) {
  if (v <= 0) return 0;
  auto r = static_cast<I64>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Enumerate all (m1..m8) with sum m_i = sum_target and sum m_i^2 = sq_target.
// Prunes with the Cauchy–Schwarz bound (sum over r slots)^2 <= r * (square
// sum over r slots) at every level, so impossible branches die immediately.
template <typename Emit>
void tuples_rec(int slot, I64 sum_left, I64 sq_left, bool nonneg,
                std::array<I64, 8>& m, const Emit& emit) {
  if (sq_left < 0) return;
  const int r = 8 - slot;
  if (r == 0) {
    if (sum_left == 0 && sq_left == 0) emit(m);
    return;
  }
  if (sum_left * sum_left > static_cast<I64>(r) * sq_left) return;
  const I64 bound = isqrt64(sq_left);
  const I64 lo = nonneg ? 0 : -bound;
  for (I64 v = lo; v <= bound; ++v) {
    m[static_cast<std::size_t>(slot)] = v;
    tuples_rec(slot + 1, sum_left - v, sq_left - v * v, nonneg, m, emit);
  }
  m[static_cast<std::size_t>(slot)] = 0;
}

PicClass make_class(I64 d, const std::array<I64, 8>& m) {
  PicClass p;
  p.basis = Basis::S;
  p.c[0] = d;
  for (std::size_t i = 0; i < 8; ++i) p.c[i + 1] = m[i];
  return p;
}

// Diophantine side: all x = (d; m) with x.x = self and x.K_S = k_degree in
// the head window.  x.K_S = sum m_i - 3d and x.x = d^2 - sum m_i^2, so we
// need sum m = 3d + k_degree and sum m^2 = d^2 - self.
std::vector<PicClass> enumerate_signature(const KindTraits& t) {
  std::vector<PicClass> out;
  const auto self = static_cast<I64>(t.self);
  const auto kdeg = static_cast<I64>(t.k_degree);
  for (I64 d = -t.head_window; d <= t.head_window; ++d) {
    const I64 sum_target = 3 * d + kdeg;
    const I64 sq_target = d * d - self;
    if (sq_target < 0) continue;
    std::array<I64, 8> m{};
    tuples_rec(0, sum_target, sq_target, /*nonneg=*/false, m,
               [&](const std::array<I64, 8>& mm) {
                 PicClass x = make_class(d, mm);
                 if (k_perp_part_primitive(x, t.k_degree))
                   out.push_back(std::move(x));
               });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string preview(const std::vector<PicClass>& v, std::size_t limit = 8) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  if (v.size() > limit) os << ", ... (" << v.size() << " total)";
  return os.str();
}

} // namespace

const std::array<PicClass, 8>& simple_roots() {
  static const std::array<PicClass, 8> roots = [] {
    std::array<PicClass, 8> r;
    for (int i = 1; i <= 7; ++i) r[static_cast<std::size_t>(i - 1)] = e_class(i) - e_class(i + 1);
    r[7] = h_class() - e_class(1) - e_class(2) - e_class(3);
    return r;
  }();
  return roots;
}

PicClass reflect(const PicClass& alpha, const PicClass& x) {
  if (classify(alpha) != ClassKind::Root)
    throw domain_error("reflect: alpha is not a root (need alpha^2=-2, alpha.K=0)");
  if (x.basis != Basis::S) throw domain_error("reflect: x must live in basis S");
  return x + pair(x, alpha) * alpha;
}

std::vector<PicClass> weyl_orbit(const PicClass& seed, std::size_t cap) {
  if (seed.basis != Basis::S) throw domain_error("weyl_orbit: seed must live in basis S");
  const auto& roots = simple_roots();
  std::set<PicClass> visited{seed};
  std::queue<PicClass> todo;
  todo.push(seed);
  while (!todo.empty()) {
    const PicClass x = todo.front();
    todo.pop();
    for (const auto& alpha : roots) {
      PicClass y = x + pair(x, alpha) * alpha;
      auto [it, inserted] = visited.insert(std::move(y));
      if (inserted) {
        if (visited.size() > cap) {
          std::ostringstream os;
          os << "weyl_orbit: orbit of " << to_string(seed) << " exceeds cap " << cap;
          throw domain_error(os.str());
        }
        todo.push(*it);
      }
    }
  }
  return {visited.begin(), visited.end()};
}

const std::vector<PicClass>& enumerate_classes(ClassKind k) {
  static std::mutex mu;
  static std::map<ClassKind, std::vector<PicClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  const auto& t = kind_traits(k);
  std::vector<PicClass> dio = enumerate_signature(t);
  std::vector<PicClass> orb = weyl_orbit(t.orbit_seed);
  if (dio != orb) {
    std::vector<PicClass> only_dio, only_orb;
    std::set_difference(dio.begin(), dio.end(), orb.begin(), orb.end(),
                        std::back_inserter(only_dio));
    std::set_difference(orb.begin(), orb.end(), dio.begin(), dio.end(),
                        std::back_inserter(only_orb));
    std::ostringstream os;
    os << "enumerate_classes(" << kind_name(k)
       << "): signature enumeration and Weyl orbit disagree; only in enumeration: ["
       << preview(only_dio) << "]; only in orbit: [" << preview(only_orb) << "]";
    throw verification_error(os.str());
  }
  if (dio.size() != t.expected_count) {
    std::ostringstream os;
    os << "enumerate_classes(" << kind_name(k) << "): got " << dio.size()
       << " classes, expected " << t.expected_count;
    throw verification_error(os.str());
  }
  return cache.emplace(k, std::move(dio)).first->second;
}

const PackedClasses& packed_classes(ClassKind k) {
  static std::mutex mu;
  static std::map<ClassKind, PackedClasses> cache;
  const auto& list = enumerate_classes(k); // outside the lock: may itself lock
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  return cache.emplace(k, PackedClasses(list)).first->second;
}

WeylElement WeylElement::identity() {
  WeylElement w;
  for (std::size_t i = 0; i < 9; ++i) w.m[i][i] = 1;
  return w;
}

WeylElement WeylElement::reflection(const PicClass& root) {
  if (classify(root) != ClassKind::Root)
    throw domain_error("WeylElement::reflection: not a root");
  // s_alpha(x) = x + (x.alpha) alpha = (I + alpha (G alpha)^T) x in (d; m)
  // coordinates, G = diag(1, -1^8).
  WeylElement w = identity();
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      const Int g_alpha_j = (j == 0) ? root.c[0] : -root.c[j];
      w.m[i][j] += root.c[i] * g_alpha_j;
    }
  }
  return w;
}

PicClass WeylElement::apply(const PicClass& x) const {
  if (x.basis != Basis::S) throw domain_error("WeylElement::apply: basis S only");
  PicClass y;
  y.basis = Basis::S;
  for (std::size_t i = 0; i < 9; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < 9; ++j) acc += m[i][j] * x.c[j];
    y.c[i] = acc;
  }
  return y;
}

WeylElement WeylElement::compose(const WeylElement& rhs) const {
  WeylElement out;
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < 9; ++k) acc += m[i][k] * rhs.m[k][j];
      out.m[i][j] = acc;
    }
  }
  return out;
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      if (m[i][j] != Int(i == j ? 1 : 0)) return false;
  return true;
}

bool WeylElement::preserves_form() const {
  // (M^T G M)[i][j] = sum_k M[k][i] G_k M[k][j], G = diag(1, -1^8).
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < 9; ++k) {
        const Int term = m[k][i] * m[k][j];
        acc += (k == 0) ? term : -term;
      }
      const Int expected = (i == j) ? Int(i == 0 ? 1 : -1) : Int(0);
      if (acc != expected) return false;
    }
  }
  return true;
}

bool WeylElement::fixes_canonical() const {
  const PicClass K = canonical_class(Basis::S);
  return apply(K) == K;
}

WeylElement weyl_from_word(std::span<const int> word) {
  WeylElement out = WeylElement::identity();
  for (int idx : word) {
    if (idx < 0 || idx > 7) throw domain_error("weyl_from_word: index out of range 0..7");
    out = out.compose(WeylElement::reflection(simple_roots()[static_cast<std::size_t>(idx)]));
  }
  return out;
}

std::vector<PicClass> conics_disjoint_from(const PicClass& ell) {
  if (classify(ell) != ClassKind::MinusOne)
    throw domain_error("conics_disjoint_from: argument must be a (-1)-class");
  const auto& conics = packed_classes(ClassKind::Conic);
  const auto signs = conics.sign_all(ell);
  std::vector<PicClass> out;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] == 0) out.push_back(conics[i]);
  return out;
}

std::vector<PicClass> minus_one_components_of(const PicClass& conic) {
  if (classify(conic) != ClassKind::Conic)
    throw domain_error("minus_one_components_of: argument must be a conic class");
  const auto& mones = packed_classes(ClassKind::MinusOne);
  const auto signs = mones.sign_all(conic);
  std::vector<PicClass> out;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] == 0) out.push_back(mones[i]);
  return out;
}

LocusIntersection locus_intersection_count(const PicClass& ell1, const PicClass& ell2) {
  if (classify(ell1) != ClassKind::MinusOne || classify(ell2) != ClassKind::MinusOne)
    throw domain_error("locus_intersection_count: both arguments must be (-1)-classes");
  if (ell1 == ell2)
    throw domain_error("locus_intersection_count: classes must be distinct");
  const Int p = pair(ell1, ell2);
  if (p < 0 || p > 3) {
    std::ostringstream os;
    os << "locus_intersection_count: impossible pairing " << p << " between "
       << to_string(ell1) << " and " << to_string(ell2);
    throw verification_error(os.str());
  }
  if (p == 3) {
    if (bertini_pullback(ell1) != ell2) {
      std::ostringstream os;
      os << "locus_intersection_count: pairing 3 should force the involution image, "
         << "but iota(" << to_string(ell1) << ") != " << to_string(ell2);
      throw verification_error(os.str());
    }
    return {3, true};
  }
  if (p == 2) return {1, false};
  return {0, false};
}

std::vector<PicClass> nef_classes_of_anticanonical_degree_two() {
  // L nef with -K.L = 2 means sum m = 3d - 2 (from L.K = -2), L^2 = d^2 -
  // sum m^2 in [0, 4] (L^2 >= 0 for nef; L^2 <= (L.K)^2 / K^2 = 4 by the
  // Hodge index bound), and m_i = L.e_i >= 0.  Cauchy–Schwarz then gives
  // (3d-2)^2 <= 8 sum m^2 <= 8 d^2, so d <= 11.
  std::vector<PicClass> candidates;
  for (I64 d = 0; d <= 11; ++d) {
    const I64 sum_target = 3 * d - 2;
    if (sum_target < 0) continue;
    for (I64 self = 0; self <= 4; ++self) {
      const I64 sq_target = d * d - self;
      if (sq_target < 0) continue;
      std::array<I64, 8> m{};
      tuples_rec(0, sum_target, sq_target, /*nonneg=*/true, m,
                 [&](const std::array<I64, 8>& mm) {
                   candidates.push_back(make_class(d, mm));
                 });
    }
  }
  const auto& mones = packed_classes(ClassKind::MinusOne);
  std::vector<PicClass> out;
  for (const auto& L : candidates) {
    const auto signs = mones.sign_all(L);
    if (std::all_of(signs.begin(), signs.end(), [](int s) { return s >= 0; }))
      out.push_back(L);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace dp1
