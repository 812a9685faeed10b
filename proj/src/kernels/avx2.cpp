// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "gwt/kernels.hpp"

namespace gwt::kernels::avx2 {

void mul_acc_u64(std::uint64_t* acc, std::uint32_t s, const std::uint32_t* x,
                 std::size_t len) {
  const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(s));
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m128i x32 =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
    const __m256i x64 = _mm256_cvtepu32_epi64(x32);
    const __m256i prod = _mm256_mul_epu32(x64, vs);
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    a = _mm256_add_epi64(a, prod);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
  }
  scalar::mul_acc_u64(acc + i, s, x + i, len - i);
}

void binomial_parity(const std::int64_t* n, const std::int64_t* k,
                     std::uint8_t* out, std::size_t len) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256i vn = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(n + i));
    const __m256i vk = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(k + i));
    const __m256i diff = _mm256_sub_epi64(vn, vk);
    const __m256i carries = _mm256_and_si256(vk, diff);
    const __m256i no_carry = _mm256_cmpeq_epi64(carries, zero);
    // k < 0 or n - k < 0 means the binomial is zero.
    const __m256i k_neg = _mm256_cmpgt_epi64(zero, vk);
    const __m256i d_neg = _mm256_cmpgt_epi64(zero, diff);
    const __m256i bad = _mm256_or_si256(k_neg, d_neg);
    const __m256i odd = _mm256_andnot_si256(bad, no_carry);
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(odd));
    out[i] = static_cast<std::uint8_t>(mask & 1);
    out[i + 1] = static_cast<std::uint8_t>((mask >> 1) & 1);
    out[i + 2] = static_cast<std::uint8_t>((mask >> 2) & 1);
    out[i + 3] = static_cast<std::uint8_t>((mask >> 3) & 1);
  }
  scalar::binomial_parity(n + i, k + i, out + i, len - i);
}

}  // namespace gwt::kernels::avx2
