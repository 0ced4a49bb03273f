#include "tpro/polynomial.hpp"

#include <fmt/format.h>

#include "tpro/error.hpp"

namespace tpro {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "polynomial coefficient");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "polynomial coefficient");
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {
  trim();
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t c) {
  std::vector<std::int64_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::q_integer(int k) {
  return IntPolynomial(std::vector<std::int64_t>(k, 1));
}

IntPolynomial IntPolynomial::q_factorial(int k) {
  IntPolynomial out = constant(1);
  for (int j = 2; j <= k; ++j) out *= q_integer(j);
  return out;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, x), *it);
  }
  return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + static_cast<double>(*it);
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) {
    coeffs_[d] = checked_add(coeffs_[d], rhs.coeffs_[d]);
  }
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<std::int64_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(std::int64_t c) {
  for (auto& x : coeffs_) x = checked_mul(x, c);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "divisor must be monic");
  }
  if (is_zero()) return {};
  const int dd = divisor.degree();
  if (degree() < dd) {
    throw Error(ErrorKind::InternalMismatch, "division leaves a nonzero remainder");
  }
  std::vector<std::int64_t> rem = coeffs_;
  std::vector<std::int64_t> quot(degree() - dd + 1, 0);
  for (int k = degree() - dd; k >= 0; --k) {
    const std::int64_t c = rem[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[k + j] = checked_add(rem[k + j], -checked_mul(c, divisor.coeffs_[j]));
    }
  }
  for (int d = 0; d < dd; ++d) {
    if (rem[d] != 0) {
      throw Error(ErrorKind::InternalMismatch,
                  fmt::format("division leaves remainder coefficient {} at q^{}", rem[d], d));
    }
  }
  return IntPolynomial(std::move(quot));
}

}  // namespace tpro
