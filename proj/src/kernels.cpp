#include "dp1/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

namespace dp1::kern {

void dot9_scalar(const std::int32_t* soa, std::size_t n, const std::int64_t q[9],
                 std::int64_t* out) {
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < 9; ++j)
      acc += q[j] * static_cast<std::int64_t>(soa[j * n + k]);
    out[k] = acc;
  }
}

bool impl_available(Impl impl) {
  if (impl == Impl::Scalar) return true;
#if defined(DP1_HAVE_AVX2_TU) && defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

Impl pick_impl() {
  Impl choice = impl_available(Impl::Avx2) ? Impl::Avx2 : Impl::Scalar;
  if (const char* env = std::getenv("DP1_KERNEL")) {
    const std::string want(env);
    if (want == "scalar") choice = Impl::Scalar;
    else if (want == "avx2" && impl_available(Impl::Avx2)) choice = Impl::Avx2;
  }
  return choice;
}

Impl active_impl() {
  static const Impl impl = pick_impl();
  return impl;
}

} // namespace

const char* active_impl_name() {
  return active_impl() == Impl::Avx2 ? "avx2" : "scalar";
}

void dot9(Impl impl, const std::int32_t* soa, std::size_t n, const std::int64_t q[9],
          std::int64_t* out) {
  if (!impl_available(impl)) throw domain_error("kernel implementation unavailable");
  switch (impl) {
    case Impl::Scalar:
      dot9_scalar(soa, n, q, out);
      return;
    case Impl::Avx2:
#if defined(DP1_HAVE_AVX2_TU)
      dot9_avx2(soa, n, q, out);
      return;
#else
      throw domain_error("kernel implementation unavailable");
#endif
  }
}

void dot9_auto(const std::int32_t* soa, std::size_t n, const std::int64_t q[9],
               std::int64_t* out) {
  dot9(active_impl(), soa, n, q, out);
}

} // namespace dp1::kern

namespace dp1 {

PackedClasses::PackedClasses(std::vector<PicClass> items) : items_(std::move(items)) {
  if (items_.empty()) return;
  basis_ = items_.front().basis;
  for (const auto& it : items_) {
    if (it.basis != basis_)
      throw domain_error("PackedClasses: items must share one basis");
  }
  const std::size_t n = items_.size();
  std::vector<std::int32_t> soa(9 * n);
  std::int64_t max_abs = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < 9; ++j) {
      const Int& v = items_[k].c[j];
      if (v < std::numeric_limits<std::int32_t>::min() ||
          v > std::numeric_limits<std::int32_t>::max()) {
        return; // leave soa_ empty: exact fallback only
      }
      const auto w = static_cast<std::int32_t>(v);
      soa[j * n + k] = w;
      const std::int64_t a = std::llabs(static_cast<std::int64_t>(w));
      if (a > max_abs) max_abs = a;
    }
  }
  soa_ = std::move(soa);
  max_abs_ = max_abs;
}

std::vector<Int> PackedClasses::fold_query(const PicClass& q) const {
  // pair(q, x) = w*q0*x0 - sum q_i x_i  ==  sum_j f[j] * x[j]
  const Int w = pairing_head_weight(q.basis, basis_);
  std::vector<Int> f(9);
  f[0] = w * q.c[0];
  for (std::size_t j = 1; j < 9; ++j) f[j] = -q.c[j];
  return f;
}

bool PackedClasses::fast_path_ok(const PicClass& q) const {
  if (soa_.empty()) return false;
  const auto f = fold_query(q);
  Int bound = 0;
  for (const auto& v : f) {
    if (v < std::numeric_limits<std::int32_t>::min() ||
        v > std::numeric_limits<std::int32_t>::max())
      return false; // AVX2 widening path needs int32 query entries
    bound += boost::multiprecision::abs(v) * max_abs_;
  }
  return bound < Int(std::numeric_limits<std::int64_t>::max());
}

std::vector<Int> PackedClasses::pair_all(const PicClass& q) const {
  const std::size_t n = items_.size();
  std::vector<Int> out(n);
  if (n == 0) return out;
  if (fast_path_ok(q)) {
    const auto f = fold_query(q);
    std::int64_t q64[9];
    for (std::size_t j = 0; j < 9; ++j) q64[j] = static_cast<std::int64_t>(f[j]);
    std::vector<std::int64_t> res(n);
    kern::dot9_auto(soa_.data(), n, q64, res.data());
    for (std::size_t k = 0; k < n; ++k) out[k] = res[k];
    return out;
  }
  for (std::size_t k = 0; k < n; ++k) out[k] = pair(q, items_[k]);
  return out;
}

std::vector<Int> PackedClasses::pair_all_forced(const PicClass& q, kern::Impl impl) const {
  const std::size_t n = items_.size();
  if (n == 0) return {};
  if (!fast_path_ok(q))
    throw domain_error("pair_all_forced: query outside the int64 fast-path contract");
  const auto f = fold_query(q);
  std::int64_t q64[9];
  for (std::size_t j = 0; j < 9; ++j) q64[j] = static_cast<std::int64_t>(f[j]);
  std::vector<std::int64_t> res(n);
  kern::dot9(impl, soa_.data(), n, q64, res.data());
  std::vector<Int> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = res[k];
  return out;
}

std::vector<int> PackedClasses::sign_all(const PicClass& q) const {
  const auto vals = pair_all(q);
  std::vector<int> s(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) s[i] = sign_of(vals[i]);
  return s;
}

std::vector<int> PackedClasses::sign_all(const RatClass& q) const {
  if (items_.empty()) return {};
  // Scale by the (positive) lcm of denominators; signs are unchanged.
  Int lcm_den = 1;
  for (const auto& v : q.c) lcm_den = boost::multiprecision::lcm(lcm_den, den(v));
  PicClass scaled;
  scaled.basis = q.basis;
  for (std::size_t i = 0; i < 9; ++i) scaled.c[i] = num(q.c[i]) * (lcm_den / den(q.c[i]));
  return sign_all(scaled);
}

std::vector<Rat> PackedClasses::pair_all(const RatClass& q) const {
  std::vector<Rat> out(items_.size());
  for (std::size_t k = 0; k < items_.size(); ++k) out[k] = pair(q, RatClass(items_[k]));
  return out;
}

} // namespace dp1
