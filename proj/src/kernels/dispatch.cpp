#include "monocheck/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace monocheck::kernels {

namespace {

struct Table {
  Isa isa;
  void (*mul_acc)(std::uint64_t*, const std::uint64_t*, std::size_t, std::uint64_t);
  void (*add_mod)(std::uint64_t*, const std::uint64_t*, std::size_t, std::uint64_t);
  void (*sub_mod)(std::uint64_t*, const std::uint64_t*, std::size_t, std::uint64_t);
};

constexpr Table kScalar{Isa::Scalar, scalar::mul_acc, scalar::add_mod, scalar::sub_mod};
#if defined(MONOCHECK_HAVE_AVX2_TU)
constexpr Table kAvx2{Isa::Avx2, avx2::mul_acc, avx2::add_mod, avx2::sub_mod};
#endif
#if defined(MONOCHECK_HAVE_NEON_TU)
constexpr Table kNeon{Isa::Neon, neon::mul_acc, neon::add_mod, neon::sub_mod};
#endif

const Table* table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &kScalar;
    case Isa::Avx2:
#if defined(MONOCHECK_HAVE_AVX2_TU)
      return isa_supported(Isa::Avx2) ? &kAvx2 : nullptr;
#else
      return nullptr;
#endif
    case Isa::Neon:
#if defined(MONOCHECK_HAVE_NEON_TU)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const Table* initial_table() {
  if (const char* env = std::getenv("MONOCHECK_ISA")) {
    std::string name(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
      if (name == isa_name(isa))
        if (const Table* t = table_for(isa)) return t;
  }
  return table_for(detected_isa());
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> t{initial_table()};
  return t;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(MONOCHECK_HAVE_AVX2_TU)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(MONOCHECK_HAVE_NEON_TU)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() { return current().load(std::memory_order_relaxed)->isa; }

void set_active_isa(Isa isa) {
  const Table* t = table_for(isa);
  if (!t) throw std::invalid_argument("ISA not available: " + std::string(isa_name(isa)));
  current().store(t, std::memory_order_relaxed);
}

void mul_acc(std::span<std::uint64_t> acc, std::span<const std::uint64_t> src,
             std::uint64_t scalar) {
  current().load(std::memory_order_relaxed)->mul_acc(acc.data(), src.data(),
                                                     std::min(acc.size(), src.size()), scalar);
}

void add_mod(std::span<std::uint64_t> a, std::span<const std::uint64_t> b, std::uint64_t m) {
  current().load(std::memory_order_relaxed)->add_mod(a.data(), b.data(),
                                                     std::min(a.size(), b.size()), m);
}

void sub_mod(std::span<std::uint64_t> a, std::span<const std::uint64_t> b, std::uint64_t m) {
  current().load(std::memory_order_relaxed)->sub_mod(a.data(), b.data(),
                                                     std::min(a.size(), b.size()), m);
}

void reduce(std::span<std::uint64_t> acc, std::uint64_t m) {
  for (auto& v : acc) v %= m;
}

}  // namespace monocheck::kernels
