#pragma once
// Rank and determinant of the jet bundle E_m on the flag variety of pointed
// r-planes in P^n, the relative orientability test, and the tuple scan.

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gwt/gw.hpp"

namespace gwt {

// The constraint on d imposed by the O_Phi parity condition.
enum class DParity { even, odd, any, none };
std::string to_string(DParity p);

struct OrientabilityReport {
  long d = 0, r = 0, m = 0, n = 0;
  bool rank_ok = false;
  DParity parity_phi = DParity::none;
  bool phi_ok = false;  // parity_phi admits the given d
  bool parity_g = false;
  std::pair<mpz_class, mpz_class> det_exponents;

  bool orientable() const { return rank_ok && phi_ok && parity_g; }
};

mpz_class rank_Em(long r, long m);
// (A, B) with det E_m = O_Phi(A) (x) pi^* O_G(B).
std::pair<mpz_class, mpz_class> det_exponents(long d, long r, long m);
// Exponents of det E_m (x) omega_Phi, using omega_Phi = O_Phi(-r-1) (x) pi^* O_G(-n).
std::pair<mpz_class, mpz_class> twisted_exponents(long d, long r, long m, long n);

OrientabilityReport check_conditions(long d, long r, long m, long n);

struct ScanTuple {
  long r, m, n;
  DParity d;
  auto operator<=>(const ScanTuple&) const = default;
};

// All (r, m, n) with r < n, each coordinate within its bound, that satisfy the
// three conditions for some d. Sorted ascending. jobs <= 0 picks the hardware
// concurrency.
std::vector<ScanTuple> scan(long max_r, long max_m, long max_n, int jobs = 1);

// (ctop / 2) H over f. Throws std::invalid_argument for odd or negative ctop.
GWClass hyperbolic_euler(const Field& f, const mpz_class& ctop);

}  // namespace gwt
