#include "tpro/sieving.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "tpro/error.hpp"

namespace tpro {

namespace {

std::complex<double> root_of_unity(long long j, int N) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(j % N) / N;
  return std::polar(1.0, angle);
}

bool near_integer(std::complex<double> z, std::int64_t target) {
  return std::abs(z.imag()) <= kRootOfUnityTolerance &&
         std::abs(z.real() - static_cast<double>(target)) <= kRootOfUnityTolerance;
}

}  // namespace

std::complex<double> root_of_unity_average(const IntPolynomial& p, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  std::complex<double> sum = 0.0;
  for (int j = 0; j < N; ++j) sum += p.evaluate(root_of_unity(j, N));
  return sum / static_cast<double>(N);
}

std::int64_t f_div_count(const Partition& lambda, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  std::int64_t direct = 0;
  for (const Tableau& t : standard_tableaux(lambda)) direct += maj(t) % N == 0;
  const std::complex<double> avg = root_of_unity_average(f_poly(lambda), N);
  if (!near_integer(avg, direct)) {
    throw Error(ErrorKind::RootOfUnityMismatch,
                fmt::format("direct count {} vs root-of-unity average {:.9f}{:+.9f}i", direct,
                            avg.real(), avg.imag()));
  }
  return direct;
}

IntPolynomial csp_polynomial(int n) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("n = {} must be even and at least 4", n));
  }
  IntPolynomial sum;
  for (const Partition& lambda : partitions_of(n - 1)) {
    const std::int64_t weight = f_div_count(lambda, n - 1);
    if (weight != 0) sum += f_poly(lambda) * weight;
  }
  const std::int64_t nn = n;
  return sum * (2 * nn * nn * (nn - 1));
}

std::uint64_t gamma_count(int M, int k) {
  if (M < 1) throw Error(ErrorKind::InvalidArgument, "M must be positive");
  if (M > kMaxGammaDegree) {
    throw Error(ErrorKind::CapacityExceeded,
                fmt::format("gamma_count enumerates S_M only for M <= {}", kMaxGammaDegree));
  }
  const int shift = ((k % M) + M) % M;
  std::vector<int> xi(M);
  std::iota(xi.begin(), xi.end(), 0);
  std::uint64_t count = 0;
  // c^k xi c^j = xi  <=>  xi(x + j) + k = xi(x)  (mod M) for every x.
  do {
    for (int j = 0; j < M; ++j) {
      bool ok = true;
      for (int x = 0; x < M && ok; ++x) ok = (xi[(x + j) % M] + shift) % M == xi[x];
      if (ok) {
        ++count;
        break;
      }
    }
  } while (std::next_permutation(xi.begin(), xi.end()));
  return count;
}

CspReport verify_csp(int n, int threads) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("n = {} must be even and at least 4", n));
  }
  if (n > kMaxEnumerationVertices) {
    throw Error(ErrorKind::CapacityExceeded,
                fmt::format("n = {} exceeds the enumeration limit {}", n, kMaxEnumerationVertices));
  }
  CspReport report;
  report.n = n;
  report.polynomial = csp_polynomial(n);
  const BilliardsGraph g = BilliardsGraph::cycle(n, Material::Refract);
  const OrbitReport orbits = orbit_decomposition(g, threads);
  const auto period = static_cast<std::uint64_t>(n) * (n - 1);

  report.sizes_divisible = std::all_of(orbits.orbits.begin(), orbits.orbits.end(),
                                       [&](const OrbitClass& c) { return c.size % period == 0; });
  report.order = power_order(orbits, period);
  report.expected_order = n == 4 ? 1 : static_cast<std::uint64_t>(n - 1);

  bool all_match = true;
  for (int k = 0; k <= n - 2; ++k) {
    CspEntry e;
    e.k = k;
    e.fixed = fixed_point_count(orbits, k * period);
    e.f_at_root = report.polynomial.evaluate(root_of_unity(k, n - 1));
    e.gamma_fixed = 2ull * n * n * gamma_count(n - 1, k);
    e.match = near_integer(e.f_at_root, static_cast<std::int64_t>(e.fixed)) &&
              e.gamma_fixed == e.fixed;
    all_match = all_match && e.match;
    report.entries.push_back(e);
  }
  report.ok = all_match && report.sizes_divisible && report.order == report.expected_order;
  return report;
}

}  // namespace tpro
