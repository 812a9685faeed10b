#pragma once
// Data-parallel inner loops with a scalar reference and an AVX2 variant.
// The active variant is chosen once at startup from the host CPU; tests can
// pin either variant with set_isa().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace gwt::kernels {

enum class Isa { scalar, avx2 };

Isa active_isa();
bool isa_available(Isa isa);
// Throws std::invalid_argument if the host cannot run `isa`.
void set_isa(Isa isa);
std::string_view isa_name(Isa isa);

// acc[i] += s * x[i] in 64-bit lanes, no reduction. Caller bounds the
// number of accumulations so nothing wraps.
void mul_acc_u64(std::span<std::uint64_t> acc, std::uint32_t s,
                 std::span<const std::uint32_t> x);

// out[i] = 1 iff binomial(n[i], k[i]) is odd. k < 0 or k > n gives 0
// (the binomial vanishes). n must be >= 0.
void binomial_parity(std::span<const std::int64_t> n,
                     std::span<const std::int64_t> k,
                     std::span<std::uint8_t> out);

namespace scalar {
void mul_acc_u64(std::uint64_t* acc, std::uint32_t s, const std::uint32_t* x,
                 std::size_t len);
void binomial_parity(const std::int64_t* n, const std::int64_t* k,
                     std::uint8_t* out, std::size_t len);
}  // namespace scalar

namespace avx2 {
void mul_acc_u64(std::uint64_t* acc, std::uint32_t s, const std::uint32_t* x,
                 std::size_t len);
void binomial_parity(const std::int64_t* n, const std::int64_t* k,
                     std::uint8_t* out, std::size_t len);
}  // namespace avx2

// Schoolbook product of two residue vectors modulo an odd prime p < 2^31.
// Inputs must already be reduced. out.size() == a.size() + b.size() - 1.
void convolve_mod(std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out, std::uint32_t p);

}  // namespace gwt::kernels
