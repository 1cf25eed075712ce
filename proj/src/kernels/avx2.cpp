// Compiled with -mavx2; only reached when the CPU reports AVX2.
#include "monocheck/kernels.hpp"

#include <immintrin.h>

namespace monocheck::kernels::avx2 {

namespace {
inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}
}  // namespace

void mul_acc(std::uint64_t* acc, const std::uint64_t* src, std::size_t n, std::uint64_t s) {
  // _mm256_mul_epu32 multiplies the low 32 bits of each lane; operands are < 2^32.
  const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(s));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a0 = load(acc + i);
    __m256i a1 = load(acc + i + 4);
    a0 = _mm256_add_epi64(a0, _mm256_mul_epu32(load(src + i), vs));
    a1 = _mm256_add_epi64(a1, _mm256_mul_epu32(load(src + i + 4), vs));
    store(acc + i, a0);
    store(acc + i + 4, a1);
  }
  for (; i + 4 <= n; i += 4)
    store(acc + i, _mm256_add_epi64(load(acc + i), _mm256_mul_epu32(load(src + i), vs)));
  for (; i < n; ++i) acc[i] += s * src[i];
}

void add_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m) {
  // The sum can exceed 2^63, so compare unsigned by flipping the sign bit.
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i flip = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
  const __m256i vm_flipped = _mm256_xor_si256(vm, flip);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i t = _mm256_add_epi64(load(a + i), load(b + i));
    __m256i lt = _mm256_cmpgt_epi64(vm_flipped, _mm256_xor_si256(t, flip));
    t = _mm256_sub_epi64(t, _mm256_andnot_si256(lt, vm));
    store(a + i, t);
  }
  for (; i < n; ++i) {
    std::uint64_t t = a[i] + b[i];
    a[i] = t >= m ? t - m : t;
  }
}

void sub_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m) {
  // Both operands are < 2^63, so a signed compare is exact.
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = load(a + i);
    __m256i y = load(b + i);
    __m256i borrow = _mm256_cmpgt_epi64(y, x);
    __m256i d = _mm256_add_epi64(_mm256_sub_epi64(x, y), _mm256_and_si256(borrow, vm));
    store(a + i, d);
  }
  for (; i < n; ++i) a[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + (m - b[i]);
}

}  // namespace monocheck::kernels::avx2
