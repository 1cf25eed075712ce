#pragma once

// Residue-vector kernels used by ModPoly arithmetic. Each kernel has a scalar
// reference and, where the target allows, a vector variant; the active
// variant is chosen once at startup from the CPU and can be overridden with
// MONOCHECK_ISA=scalar|avx2|neon or set_active_isa().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace monocheck::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa detected_isa();
Isa active_isa();
/// Throws std::invalid_argument if the ISA is not available on this machine.
void set_active_isa(Isa isa);

/// acc[i] += scalar * src[i] without reduction.
/// Requires scalar < 2^32, src[i] < 2^32, and that no accumulator overflows;
/// callers bound the number of accumulations between reductions.
void mul_acc(std::span<std::uint64_t> acc, std::span<const std::uint64_t> src,
             std::uint64_t scalar);

/// a[i] = (a[i] + b[i]) mod m, inputs already reduced, m < 2^63.
void add_mod(std::span<std::uint64_t> a, std::span<const std::uint64_t> b, std::uint64_t m);

/// a[i] = (a[i] - b[i]) mod m, inputs already reduced, m < 2^63.
void sub_mod(std::span<std::uint64_t> a, std::span<const std::uint64_t> b, std::uint64_t m);

/// acc[i] %= m.
void reduce(std::span<std::uint64_t> acc, std::uint64_t m);

// Direct entry points, exposed for equivalence testing.
namespace scalar {
void mul_acc(std::uint64_t* acc, const std::uint64_t* src, std::size_t n, std::uint64_t s);
void add_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m);
void sub_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m);
}  // namespace scalar

namespace avx2 {
void mul_acc(std::uint64_t* acc, const std::uint64_t* src, std::size_t n, std::uint64_t s);
void add_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m);
void sub_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m);
}  // namespace avx2

namespace neon {
void mul_acc(std::uint64_t* acc, const std::uint64_t* src, std::size_t n, std::uint64_t s);
void add_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m);
void sub_mod(std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m);
}  // namespace neon

}  // namespace monocheck::kernels
