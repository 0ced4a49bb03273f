#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tpro/orbits.hpp"
#include "tpro/polynomial.hpp"

namespace tpro {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int size() const noexcept;
  // b(lambda) = sum_i (i - 1) lambda_i
  int b_statistic() const noexcept;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Throws Error(InvalidArgument) unless parts are positive and weakly decreasing.
Partition make_partition(std::vector<int> parts);

// All partitions of N in lexicographically decreasing order; N = 0 gives the
// empty partition.
std::vector<Partition> partitions_of(int N);

// Hook lengths row by row.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

struct Tableau {
  std::vector<std::vector<int>> rows;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

std::vector<Tableau> standard_tableaux(const Partition& lambda);

// Entries i such that i + 1 sits in a strictly lower row.
std::vector<int> descents(const Tableau& t);
int maj(const Tableau& t);

// Sum over SYT(lambda) of q^maj.
IntPolynomial f_poly_maj(const Partition& lambda);
// q^{b(lambda)} [N]_q! / prod [h]_q by exact division.
IntPolynomial f_poly_hook(const Partition& lambda);
// Both of the above; throws Error(InternalMismatch) if they differ.
IntPolynomial f_poly(const Partition& lambda);

// (1/N) sum_{j<N} p(e^{2 pi i j / N})
std::complex<double> root_of_unity_average(const IntPolynomial& p, int N);

inline constexpr double kRootOfUnityTolerance = 1e-6;

// Number of SYT of shape lambda whose major index is divisible by N, checked
// against the root-of-unity average; throws Error(RootOfUnityMismatch).
std::int64_t f_div_count(const Partition& lambda, int N);

// 2 n^2 (n-1) sum_{lambda |- n-1} f^lambda_{n-1|maj} f^lambda(q), for even n >= 4.
IntPolynomial csp_polynomial(int n);

inline constexpr int kMaxGammaDegree = 8;

// |{xi in S_M : c^k xi c^j = xi for some j in [0, M-1]}| with c = (1 2 ... M),
// by enumeration. Throws Error(CapacityExceeded) for M > kMaxGammaDegree.
std::uint64_t gamma_count(int M, int k);

struct CspEntry {
  int k = 0;
  std::uint64_t fixed = 0;          // states fixed by Theta^{k n (n-1)}
  std::complex<double> f_at_root;   // F(e^{2 pi i k / (n-1)})
  std::uint64_t gamma_fixed = 0;    // 2 n n gamma_count(n-1, k)
  bool match = false;
};

struct CspReport {
  int n = 0;
  IntPolynomial polynomial;
  std::vector<CspEntry> entries;
  std::uint64_t order = 0;           // order of Theta^{n(n-1)}
  std::uint64_t expected_order = 0;  // 1 for n = 4, n - 1 otherwise
  bool sizes_divisible = false;      // every orbit size divisible by n(n-1)
  bool ok = false;
};

// Checks the cyclic sieving statement on the all-refraction n-cycle. Throws
// Error(InvalidArgument) for odd n or n < 4 and Error(CapacityExceeded) for
// n > kMaxEnumerationVertices.
CspReport verify_csp(int n, int threads = 1);

}  // namespace tpro
