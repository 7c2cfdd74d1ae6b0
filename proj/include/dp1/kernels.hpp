#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dp1/lattice.hpp"

namespace dp1::kern {

// Low-level batched 9-term dot products:
//   out[k] = sum_{j=0..8} q[j] * soa[j*n + k]        for k in [0, n)
// over a structure-of-arrays int32 layout (component j is contiguous).
//
// Contract for the int64 fast path (checked by the PackedClasses wrapper,
// not by the kernels themselves): sum_j |q[j]| * max_k |soa[j*n+k]| < 2^63,
// and for the AVX2 variant additionally |q[j]| < 2^31 (it widens 32x32->64).
void dot9_scalar(const std::int32_t* soa, std::size_t n, const std::int64_t q[9],
                 std::int64_t* out);

enum class Impl { Scalar, Avx2 };

// Whether the implementation can run on this build/CPU.
bool impl_available(Impl impl);

// Name of the implementation auto-dispatch would pick ("avx2" or "scalar").
// The DP1_KERNEL environment variable ("scalar" / "avx2") overrides the
// automatic choice; requesting an unavailable implementation falls back to
// scalar.
const char* active_impl_name();

// Run a specific implementation (throws domain_error if unavailable).
void dot9(Impl impl, const std::int32_t* soa, std::size_t n, const std::int64_t q[9],
          std::int64_t* out);

// Best available implementation (honors DP1_KERNEL override).
void dot9_auto(const std::int32_t* soa, std::size_t n, const std::int64_t q[9],
               std::int64_t* out);

#if defined(DP1_HAVE_AVX2_TU)
void dot9_avx2(const std::int32_t* soa, std::size_t n, const std::int64_t q[9],
               std::int64_t* out);
#endif

} // namespace dp1::kern

namespace dp1 {

// A family of lattice classes packed for fast exact pairing queries.  All
// results are exact: the int64 SIMD/scalar fast path is only taken when the
// no-overflow contract provably holds, otherwise the arbitrary-precision
// fallback runs.  Both paths are equivalence-tested against each other.
class PackedClasses {
public:
  PackedClasses() = default;
  explicit PackedClasses(std::vector<PicClass> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Basis basis() const { return basis_; }
  const std::vector<PicClass>& items() const { return items_; }
  const PicClass& operator[](std::size_t i) const { return items_[i]; }

  // Exact pairing of q against every item (in item order).
  std::vector<Int> pair_all(const PicClass& q) const;

  // Signs of pair(q, item): -1, 0, +1.  The rational overload scales q by a
  // positive integer first, which does not change signs.
  std::vector<int> sign_all(const PicClass& q) const;
  std::vector<int> sign_all(const RatClass& q) const;

  // Exact pairing values against a rational query.
  std::vector<Rat> pair_all(const RatClass& q) const;

  // For tests: force a specific low-level implementation (still exact; throws
  // domain_error if the query does not satisfy the int64 contract or the
  // implementation is unavailable).
  std::vector<Int> pair_all_forced(const PicClass& q, kern::Impl impl) const;

  // Whether the int64 fast path can serve this query.
  bool fast_path_ok(const PicClass& q) const;

private:
  std::vector<Int> fold_query(const PicClass& q) const;
  std::vector<PicClass> items_;
  Basis basis_{Basis::S};
  std::vector<std::int32_t> soa_; // empty if some coefficient exceeds int32
  std::int64_t max_abs_ = 0;
};

} // namespace dp1
