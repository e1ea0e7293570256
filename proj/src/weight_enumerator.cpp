#include "pomsetcodes/weight_enumerator.hpp"

#include <stdexcept>

namespace pomsetcodes {

WeightEnumerator::WeightEnumerator(int degree) {
  if (degree < 0) throw std::invalid_argument("WeightEnumerator: negative degree");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
}

WeightEnumerator::WeightEnumerator(int degree, std::vector<long long> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("WeightEnumerator: coefficient list size mismatch");
}

long long WeightEnumerator::coeff(int w) const {
  if (w < 0 || w > degree())
    throw std::invalid_argument("WeightEnumerator: weight out of range");
  return coeffs_[w];
}

void WeightEnumerator::add(int w, long long value) {
  if (w < 0 || w > degree())
    throw std::invalid_argument("WeightEnumerator: weight out of range");
  coeffs_[w] += value;
}

long long WeightEnumerator::total() const {
  long long t = 0;
  for (long long c : coeffs_) t += c;
  return t;
}

WeightEnumerator WeightEnumerator::padded(int k) const {
  if (k < 0) throw std::invalid_argument("WeightEnumerator: negative pad");
  WeightEnumerator out(degree() + k);
  for (int w = 0; w <= degree(); ++w) out.coeffs_[w] = coeffs_[w];
  return out;
}

WeightEnumerator WeightEnumerator::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("WeightEnumerator: negative shift");
  WeightEnumerator out(degree() + k);
  for (int w = 0; w <= degree(); ++w) out.coeffs_[w + k] = coeffs_[w];
  return out;
}

WeightEnumerator WeightEnumerator::scaled(long long factor) const {
  WeightEnumerator out(degree());
  for (int w = 0; w <= degree(); ++w) out.coeffs_[w] = coeffs_[w] * factor;
  return out;
}

WeightEnumerator operator+(const WeightEnumerator& a, const WeightEnumerator& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("WeightEnumerator: degree mismatch");
  WeightEnumerator out(a.degree());
  for (int w = 0; w <= a.degree(); ++w) out.coeffs_[w] = a.coeffs_[w] + b.coeffs_[w];
  return out;
}

WeightEnumerator operator-(const WeightEnumerator& a, const WeightEnumerator& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("WeightEnumerator: degree mismatch");
  WeightEnumerator out(a.degree());
  for (int w = 0; w <= a.degree(); ++w) out.coeffs_[w] = a.coeffs_[w] - b.coeffs_[w];
  return out;
}

WeightEnumerator operator*(const WeightEnumerator& a, const WeightEnumerator& b) {
  WeightEnumerator out(a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

namespace {

std::string monomial(const char* var, int exponent) {
  if (exponent == 0) return "";
  std::string out = var;
  if (exponent > 1) out += "^" + std::to_string(exponent);
  return out;
}

}  // namespace

std::string WeightEnumerator::to_string() const {
  std::string out;
  for (int w = 0; w <= degree(); ++w) {
    const long long c = coeffs_[w];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const long long mag = c < 0 ? -c : c;
    std::string mono = monomial("x", degree() - w) + monomial("y", w);
    if (mag != 1 || mono.empty()) out += std::to_string(mag);
    out += mono;
  }
  return out.empty() ? "0" : out;
}

std::string WeightEnumerator::coeff_list() const {
  std::string out = "[";
  for (int w = 0; w <= degree(); ++w) {
    if (w > 0) out += ", ";
    out += std::to_string(coeffs_[w]);
  }
  return out + "]";
}

int first_difference(const WeightEnumerator& a, const WeightEnumerator& b) {
  if (a.degree() != b.degree()) return 0;
  for (int w = 0; w <= a.degree(); ++w)
    if (a.coeff(w) != b.coeff(w)) return w;
  return -1;
}

}  // namespace pomsetcodes
