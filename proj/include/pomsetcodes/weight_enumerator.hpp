#pragma once

#include <string>
#include <vector>

namespace pomsetcodes {

// Homogeneous bivariate polynomial of fixed degree, stored as the integer
// coefficient list A_0..A_degree where A_w multiplies x^{degree-w} y^w.
class WeightEnumerator {
 public:
  explicit WeightEnumerator(int degree);
  WeightEnumerator(int degree, std::vector<long long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int w) const;
  void add(int w, long long value);
  const std::vector<long long>& coeffs() const { return coeffs_; }
  long long total() const;

  // Multiply by x^k / y^k / an integer scalar.
  WeightEnumerator padded(int k) const;
  WeightEnumerator shifted(int k) const;
  WeightEnumerator scaled(long long factor) const;

  std::string to_string() const;   // "x^4 + x^2y^2 + 8xy^3 + 6y^4"
  std::string coeff_list() const;  // "[1, 0, 1, 8, 6]"

  friend WeightEnumerator operator+(const WeightEnumerator& a, const WeightEnumerator& b);
  friend WeightEnumerator operator-(const WeightEnumerator& a, const WeightEnumerator& b);
  // Polynomial product; degrees add.
  friend WeightEnumerator operator*(const WeightEnumerator& a, const WeightEnumerator& b);
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

 private:
  std::vector<long long> coeffs_;
};

// Index of the first differing coefficient, or -1 when equal. A degree
// mismatch reports position 0.
int first_difference(const WeightEnumerator& a, const WeightEnumerator& b);

}  // namespace pomsetcodes
