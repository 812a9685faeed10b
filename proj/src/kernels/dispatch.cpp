#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwt/kernels.hpp"

namespace gwt::kernels {
namespace {

bool host_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("GWT_ISA")) {
    if (std::string(env) == "scalar") return Isa::scalar;
  }
  return host_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool isa_available(Isa isa) {
  return isa == Isa::scalar || host_has_avx2();
}

void set_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("instruction set not available on this host");
  }
  current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

void mul_acc_u64(std::span<std::uint64_t> acc, std::uint32_t s,
                 std::span<const std::uint32_t> x) {
  if (acc.size() < x.size()) throw std::invalid_argument("mul_acc_u64: size");
  if (active_isa() == Isa::avx2) {
    avx2::mul_acc_u64(acc.data(), s, x.data(), x.size());
  } else {
    scalar::mul_acc_u64(acc.data(), s, x.data(), x.size());
  }
}

void binomial_parity(std::span<const std::int64_t> n,
                     std::span<const std::int64_t> k,
                     std::span<std::uint8_t> out) {
  if (n.size() != k.size() || out.size() < n.size()) {
    throw std::invalid_argument("binomial_parity: size");
  }
  if (active_isa() == Isa::avx2) {
    avx2::binomial_parity(n.data(), k.data(), out.data(), n.size());
  } else {
    scalar::binomial_parity(n.data(), k.data(), out.data(), n.size());
  }
}

void convolve_mod(std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out, std::uint32_t p) {
  if (a.empty() || b.empty()) return;
  if (out.size() != a.size() + b.size() - 1) {
    throw std::invalid_argument("convolve_mod: output size");
  }
  // Rows accumulated between reductions without wrapping 64 bits.
  const std::uint64_t pm1 = p - 1;
  const std::uint64_t room = std::numeric_limits<std::uint64_t>::max() - p;
  const std::uint64_t budget = pm1 == 0 ? a.size() : room / (pm1 * pm1);
  const std::size_t batch =
      static_cast<std::size_t>(std::min<std::uint64_t>(budget, a.size()));

  thread_local std::vector<std::uint64_t> acc;
  acc.assign(out.size(), 0);
  std::size_t pending = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) {
      mul_acc_u64(std::span(acc).subspan(i, b.size()), a[i], b);
      if (++pending == batch) {
        for (auto& v : acc) v %= p;
        pending = 0;
      }
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(acc[i] % p);
  }
}

}  // namespace gwt::kernels
