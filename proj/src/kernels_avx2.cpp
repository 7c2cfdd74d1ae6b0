// AVX2 variant of the batched 9-term dot product.  Compiled with -mavx2 in
// its own translation unit; callers reach it only through the runtime
// dispatcher, which checks CPU support first.
//
// Exactness: items are int32; the query entries are guaranteed (by the
// caller contract) to fit in int32 and the full sum to fit in int64.
// _mm256_mul_epi32 multiplies the sign-extended low 32 bits of each 64-bit
// lane, so each product is an exact int64 and the int64 lane additions
// cannot wrap under the contract.

#include "dp1/kernels.hpp"

#if defined(DP1_HAVE_AVX2_TU)

#include <immintrin.h>

namespace dp1::kern {

void dot9_avx2(const std::int32_t* soa, std::size_t n, const std::int64_t q[9],
               std::int64_t* out) {
  __m256i qv[9];
  for (std::size_t j = 0; j < 9; ++j) qv[j] = _mm256_set1_epi64x(q[j]);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t j = 0; j < 9; ++j) {
      const __m128i x32 =
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(soa + j * n + k));
      const __m256i x64 = _mm256_cvtepi32_epi64(x32);
      acc = _mm256_add_epi64(acc, _mm256_mul_epi32(x64, qv[j]));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), acc);
  }
  for (; k < n; ++k) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < 9; ++j)
      acc += q[j] * static_cast<std::int64_t>(soa[j * n + k]);
    out[k] = acc;
  }
}

} // namespace dp1::kern

#endif // DP1_HAVE_AVX2_TU
