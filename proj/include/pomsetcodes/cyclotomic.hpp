#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace pomsetcodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Coefficients of the m-th cyclotomic polynomial, ascending degree, computed
// by exact division of x^m - 1 by the product of the proper-divisor
// cyclotomics. Cached per modulus; concurrent reads are safe.
const std::vector<BigInt>& cyclotomic_polynomial(int m);

// Exact element of Q(omega_m), omega_m = exp(2*pi*i/m), stored as rational
// coordinates in the power basis 1, omega, ..., omega^{phi(m)-1}. The
// representation is canonical: two values are equal iff their coordinate
// lists are equal.
class CycloNum {
 public:
  static CycloNum zero(int m);
  static CycloNum from_rational(int m, const BigRational& value);
  static CycloNum root_power(int m, long long power);  // omega^power

  int modulus() const { return m_; }
  const std::vector<BigRational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  BigRational as_rational() const;
  // The value as a rational integer; throws when any non-constant coordinate
  // is nonzero or the constant is not integral.
  BigInt as_integer() const;

  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum operator-() const;
  CycloNum scaled(const BigRational& factor) const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend bool operator==(const CycloNum&, const CycloNum&) = default;

 private:
  CycloNum(int m, std::size_t dim) : m_(m), coords_(dim) {}

  int m_;
  std::vector<BigRational> coords_;
};

// omega_m^power.
CycloNum cyclo(int m, long long power);

// Exact value of cos(2*pi*c/m) = (omega^c + omega^{-c}) / 2.
CycloNum exact_cosine(int c, int m);

// Exact value of sum_{t=-j}^{j} omega^{u t} = 1 + 2 sum_{t=1}^{j} cos(2*pi*u*t/m).
CycloNum kernel_sum(int u, int j, int m);

}  // namespace pomsetcodes
