#include "pomsetcodes/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace pomsetcodes {

namespace {

using Poly = std::vector<BigInt>;  // ascending coefficients

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// Exact division in Z[x] by a monic divisor; throws if the division leaves a
// remainder.
Poly divide_exact(Poly numerator, const Poly& divisor) {
  const int dn = poly_degree(numerator);
  const int dd = poly_degree(divisor);
  if (divisor.empty() || divisor.back() != 1)
    throw std::logic_error("divide_exact: divisor must be monic");
  if (dn < dd) throw std::logic_error("divide_exact: degree underflow");
  Poly quotient(dn - dd + 1, BigInt(0));
  for (int k = dn - dd; k >= 0; --k) {
    BigInt q = numerator[k + dd];
    quotient[k] = q;
    if (q == 0) continue;
    for (int i = 0; i <= dd; ++i) numerator[k + i] -= q * divisor[i];
  }
  for (const BigInt& c : numerator)
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return quotient;
}

Poly compute_cyclotomic(int m, const std::map<int, Poly>& cache) {
  // x^m - 1 divided by the product of Phi_d over proper divisors d | m.
  Poly p(m + 1, BigInt(0));
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    p = divide_exact(std::move(p), cache.at(d));
  }
  return p;
}

std::mutex g_cyclo_mutex;
std::map<int, std::unique_ptr<Poly>> g_cyclo_cache;

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: modulus must be positive");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto it = g_cyclo_cache.find(m);
  if (it != g_cyclo_cache.end()) return *it->second;
  // Fill every divisor bottom-up so compute_cyclotomic sees its inputs.
  std::map<int, Poly> local;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    auto cached = g_cyclo_cache.find(d);
    if (cached != g_cyclo_cache.end()) {
      local.emplace(d, *cached->second);
      continue;
    }
    Poly p = compute_cyclotomic(d, local);
    local.emplace(d, p);
    g_cyclo_cache.emplace(d, std::make_unique<Poly>(std::move(p)));
  }
  return *g_cyclo_cache.at(m);
}

CycloNum CycloNum::zero(int m) {
  if (m < 2) throw std::invalid_argument("CycloNum: modulus must be at least 2");
  const std::size_t dim = cyclotomic_polynomial(m).size() - 1;
  return CycloNum(m, dim);
}

CycloNum CycloNum::from_rational(int m, const BigRational& value) {
  CycloNum out = zero(m);
  out.coords_[0] = value;
  return out;
}

CycloNum CycloNum::root_power(int m, long long power) {
  CycloNum out = zero(m);
  const auto& phi = cyclotomic_polynomial(m);
  const int dim = static_cast<int>(phi.size()) - 1;
  long long e = power % m;
  if (e < 0) e += m;
  if (e < dim) {
    out.coords_[static_cast<std::size_t>(e)] = 1;
    return out;
  }
  // Reduce x^e modulo Phi_m by repeated substitution of the leading term.
  std::vector<BigRational> work(static_cast<std::size_t>(e) + 1);
  work.back() = 1;
  for (int k = static_cast<int>(e); k >= dim; --k) {
    BigRational lead = work[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    work[static_cast<std::size_t>(k)] = 0;
    for (int i = 0; i < dim; ++i)
      work[static_cast<std::size_t>(k - dim + i)] -= lead * BigRational(phi[i]);
  }
  for (int i = 0; i < dim; ++i) out.coords_[i] = work[i];
  return out;
}

bool CycloNum::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

BigRational CycloNum::as_rational() const {
  if (!is_rational())
    throw std::logic_error("CycloNum: value is not rational");
  return coords_[0];
}

BigInt CycloNum::as_integer() const {
  const BigRational r = as_rational();
  if (denominator(r) != 1)
    throw std::logic_error("CycloNum: value is not an integer");
  return numerator(r);
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  if (m_ != rhs.m_) throw std::invalid_argument("CycloNum: modulus mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
  if (m_ != rhs.m_) throw std::invalid_argument("CycloNum: modulus mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  if (m_ != rhs.m_) throw std::invalid_argument("CycloNum: modulus mismatch");
  const auto& phi = cyclotomic_polynomial(m_);
  const int dim = static_cast<int>(coords_.size());
  std::vector<BigRational> prod(static_cast<std::size_t>(2 * dim - 1));
  for (int i = 0; i < dim; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (rhs.coords_[j] == 0) continue;
      prod[static_cast<std::size_t>(i + j)] += coords_[i] * rhs.coords_[j];
    }
  }
  for (int k = 2 * dim - 2; k >= dim; --k) {
    BigRational lead = prod[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    prod[static_cast<std::size_t>(k)] = 0;
    for (int i = 0; i < dim; ++i)
      prod[static_cast<std::size_t>(k - dim + i)] -= lead * BigRational(phi[i]);
  }
  for (int i = 0; i < dim; ++i) coords_[i] = prod[i];
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

CycloNum CycloNum::scaled(const BigRational& factor) const {
  CycloNum out = *this;
  for (auto& c : out.coords_) c *= factor;
  return out;
}

CycloNum cyclo(int m, long long power) { return CycloNum::root_power(m, power); }

CycloNum exact_cosine(int c, int m) {
  CycloNum sum = cyclo(m, c) + cyclo(m, -c);
  return sum.scaled(BigRational(1, 2));
}

CycloNum kernel_sum(int u, int j, int m) {
  if (m < 2) throw std::invalid_argument("kernel_sum: modulus must be at least 2");
  if (u < 0 || u >= m) throw std::invalid_argument("kernel_sum: residue out of range");
  if (j < 0 || j > m / 2) throw std::invalid_argument("kernel_sum: order out of range");
  CycloNum sum = CycloNum::from_rational(m, 1);
  for (int t = 1; t <= j; ++t) {
    sum += cyclo(m, static_cast<long long>(u) * t);
    sum += cyclo(m, -static_cast<long long>(u) * t);
  }
  return sum;
}

}  // namespace pomsetcodes
