#include "gwt/kernels.hpp"

namespace gwt::kernels::scalar {

void mul_acc_u64(std::uint64_t* acc, std::uint32_t s, const std::uint32_t* x,
                 std::size_t len) {
  const std::uint64_t s64 = s;
  for (std::size_t i = 0; i < len; ++i) acc[i] += s64 * x[i];
}

// Lucas: C(n,k) is odd iff the binary digits of k are a subset of those of n,
// i.e. adding k and n-k produces no carries.
void binomial_parity(const std::int64_t* n, const std::int64_t* k,
                     std::uint8_t* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (k[i] < 0 || k[i] > n[i]) {
      out[i] = 0;
      continue;
    }
    out[i] = (k[i] & (n[i] - k[i])) == 0 ? 1 : 0;
  }
}

}  // namespace gwt::kernels::scalar
