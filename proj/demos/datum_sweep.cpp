// Lattice criteria over parameter families of group data.
// Usage: datum_sweep [max_n]   (default 40)

#include <cstdlib>
#include <iostream>
#include <numeric>

#include "hopfkit/datum.hpp"

using namespace hopfkit;

int main(int argc, char** argv) {
  const long max_n = argc > 1 ? std::atol(argv[1]) : 40;
  std::cout << "H(w,n), group Z_2n x Z_2n: determinant conditions\n";
  for (long n = 2; n <= max_n; ++n) {
    Report r = determinant_conditions(h_omega_datum(n), 2 * n);
    std::cout << "  n = " << n << ": " << (r.ok() ? "holds" : "fails") << "  gcd(n,21) = " << std::gcd(n, 21L) << "\n";
  }
  std::cout << "K(alpha,n), group Z_3n x Z_3n: unique-solution condition\n";
  for (long n = 2; n <= max_n; ++n) {
    auto D = k_alpha_datum(n);
    PairingSystem ps = reduced_pairing_system(D);
    auto sol = unique_solution_check(ZModSystem(ps.M, ps.n));
    std::cout << "  n = " << n << ": " << (reduced_datum_conditions(D).ok() ? "holds" : "fails") << "  kernel size "
              << sol.count.get_str() << "\n";
  }
  return 0;
}
