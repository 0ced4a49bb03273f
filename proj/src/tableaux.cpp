#include <algorithm>
#include <functional>
#include <numeric>

#include <fmt/format.h>

#include "tpro/error.hpp"
#include "tpro/sieving.hpp"

namespace tpro {

int Partition::size() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::b_statistic() const noexcept {
  int b = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) b += static_cast<int>(i) * parts[i];
  return b;
}

Partition make_partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "parts must be positive and weakly decreasing");
    }
  }
  return Partition{std::move(parts)};
}

std::vector<Partition> partitions_of(int N) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition{current});
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(N, N);
  return out;
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
  const auto& rows = lambda.parts;
  std::vector<std::vector<int>> hooks(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < rows[r]; ++c) {
      int arm = rows[r] - c - 1;
      int leg = 0;
      for (std::size_t below = r + 1; below < rows.size() && rows[below] > c; ++below) ++leg;
      hooks[r].push_back(arm + leg + 1);
    }
  }
  return hooks;
}

// Places 1..N one at a time; value k may go at the end of row r when the row
// is not full and the row above is strictly longer.
std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  const auto& shape = lambda.parts;
  const int N = lambda.size();
  std::vector<Tableau> out;
  Tableau current;
  current.rows.assign(shape.size(), {});
  std::function<void(int)> place = [&](int value) {
    if (value > N) {
      out.push_back(current);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      const auto len = static_cast<int>(current.rows[r].size());
      if (len >= shape[r]) continue;
      if (r > 0 && static_cast<int>(current.rows[r - 1].size()) <= len) continue;
      current.rows[r].push_back(value);
      place(value + 1);
      current.rows[r].pop_back();
    }
  };
  place(1);
  return out;
}

std::vector<int> descents(const Tableau& t) {
  int N = 0;
  for (const auto& row : t.rows) N += static_cast<int>(row.size());
  std::vector<int> row_of(N + 2, -1);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (int x : t.rows[r]) row_of[x] = static_cast<int>(r);
  }
  std::vector<int> out;
  for (int i = 1; i < N; ++i) {
    if (row_of[i + 1] > row_of[i]) out.push_back(i);
  }
  return out;
}

int maj(const Tableau& t) {
  auto d = descents(t);
  return std::accumulate(d.begin(), d.end(), 0);
}

IntPolynomial f_poly_maj(const Partition& lambda) {
  std::vector<std::int64_t> coeffs;
  for (const Tableau& t : standard_tableaux(lambda)) {
    const int m = maj(t);
    if (static_cast<int>(coeffs.size()) <= m) coeffs.resize(m + 1, 0);
    ++coeffs[m];
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial f_poly_hook(const Partition& lambda) {
  IntPolynomial numerator = IntPolynomial::q_factorial(lambda.size()) *
                            IntPolynomial::monomial(lambda.b_statistic());
  for (const auto& row : hook_lengths(lambda)) {
    for (int h : row) numerator = numerator.divide_exact(IntPolynomial::q_integer(h));
  }
  return numerator;
}

IntPolynomial f_poly(const Partition& lambda) {
  IntPolynomial by_maj = f_poly_maj(lambda);
  IntPolynomial by_hook = f_poly_hook(lambda);
  if (!(by_maj == by_hook)) {
    throw Error(ErrorKind::InternalMismatch,
                "major-index generating function disagrees with the hook-length product");
  }
  return by_maj;
}

}  // namespace tpro
