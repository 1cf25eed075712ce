#include "monocheck/kernels.hpp"

namespace monocheck::kernels::scalar {

void mul_acc(std::uint64_t* acc, const std::uint64_t* src, std::size_t n, std::uint64_t s) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += s * src[i];
}

void add_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t t = a[i] + b[i];
    a[i] = t >= m ? t - m : t;
  }
}

void sub_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m) {
  for (std::size_t i = 0; i < n; ++i) a[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + (m - b[i]);
}

}  // namespace monocheck::kernels::scalar
