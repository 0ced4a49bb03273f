#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tpro {

// Polynomial in q with exact 64-bit integer coefficients, stored in
// ascending degree with no trailing zeros. Arithmetic throws Error(Overflow)
// instead of wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
  static IntPolynomial monomial(int degree, std::int64_t c = 1);
  // [k]_q = 1 + q + ... + q^{k-1}
  static IntPolynomial q_integer(int k);
  // [k]_q! = [k]_q [k-1]_q ... [1]_q
  static IntPolynomial q_factorial(int k);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](int d) const noexcept {
    return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : 0;
  }

  std::int64_t evaluate(std::int64_t x) const;
  std::complex<double> evaluate(std::complex<double> z) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(std::int64_t c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, std::int64_t c) { return a *= c; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Exact division by a monic divisor; throws Error(InternalMismatch) when the
  // remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace tpro
