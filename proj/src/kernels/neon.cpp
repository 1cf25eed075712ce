#include "monocheck/kernels.hpp"

#include <arm_neon.h>

namespace monocheck::kernels::neon {

void mul_acc(std::uint64_t* acc, const std::uint64_t* src, std::size_t n, std::uint64_t s) {
  const auto s32 = static_cast<std::uint32_t>(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t a = vld1q_u64(acc + i);
    uint32x2_t x = vmovn_u64(vld1q_u64(src + i));
    vst1q_u64(acc + i, vmlal_n_u32(a, x, s32));
  }
  for (; i < n; ++i) acc[i] += s * src[i];
}

void add_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m) {
  const uint64x2_t vm = vdupq_n_u64(m);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t t = vaddq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    t = vsubq_u64(t, vandq_u64(vcgeq_u64(t, vm), vm));
    vst1q_u64(a + i, t);
  }
  for (; i < n; ++i) {
    std::uint64_t t = a[i] + b[i];
    a[i] = t >= m ? t - m : t;
  }
}

void sub_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m) {
  const uint64x2_t vm = vdupq_n_u64(m);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t x = vld1q_u64(a + i);
    uint64x2_t y = vld1q_u64(b + i);
    uint64x2_t d = vaddq_u64(vsubq_u64(x, y), vandq_u64(vcltq_u64(x, y), vm));
    vst1q_u64(a + i, d);
  }
  for (; i < n; ++i) a[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + (m - b[i]);
}

}  // namespace monocheck::kernels::neon
