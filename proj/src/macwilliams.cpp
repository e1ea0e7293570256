#include "pomsetcodes/macwilliams.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace pomsetcodes {

namespace {

long long ipow(long long base, int exp) {
  long long out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

BigInt bigpow(int base, int exp) {
  BigInt out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

bool is_odd_prime(int m) {
  if (m < 3 || m % 2 == 0) return false;
  for (int d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

// Re-orders the blocks so the chain relation becomes the ascending one; the
// dual enumerator is label-independent, so the identity can then run on the
// standard chain.
LinearCode normalize_to_ascending_chain(const LinearCode& code, const Pomset& p) {
  const BlockStructure& b = code.structure();
  if (p.modulus() != b.modulus() || p.point_count() != b.block_count())
    throw std::invalid_argument("pomset/block structure mismatch");
  const int s = p.point_count();
  if (p == Pomset::chain(s, p.modulus())) return code;
  if (!p.is_chain()) throw std::invalid_argument("identity requires a chain pomset");

  std::vector<int> order(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::sort(order.begin(), order.end(),
            [&](int a, int c) { return a != c && p.related(a, c); });
  std::vector<int> rank(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) rank[static_cast<std::size_t>(order[i] - 1)] = i + 1;
  if (!(p.relabeled(rank) == Pomset::chain(s, p.modulus())))
    throw std::invalid_argument("identity requires a chain pomset");

  std::vector<int> dims;
  for (int i = 1; i <= s; ++i) dims.push_back(b.dim(order[i - 1]));
  const BlockStructure sorted(b.modulus(), dims);
  std::vector<CodeVector> generators;
  for (const CodeVector& g : code.minimal_generators()) {
    CodeVector moved;
    for (int i = 1; i <= s; ++i) {
      const auto block = b.block(g, order[i - 1]);
      moved.insert(moved.end(), block.begin(), block.end());
    }
    generators.push_back(std::move(moved));
  }
  return LinearCode::span(sorted, generators);
}

long long to_longlong(const BigInt& v) { return v.convert_to<long long>(); }

// Exact integer extraction with the 1/|C| style scaling already applied.
long long integer_coefficient(const CycloNum& value, const BigRational& factor) {
  return to_longlong(value.scaled(factor).as_integer());
}

}  // namespace

ChainCoefficients chain_coefficients(int j, int block_dim, int m) {
  if (m < 2) throw std::invalid_argument("chain_coefficients: modulus must be at least 2");
  if (j < 1 || j > m / 2) throw std::invalid_argument("chain_coefficients: level out of range");
  if (block_dim < 1) throw std::invalid_argument("chain_coefficients: block width must be positive");
  const long long beta2 = ipow(2 * j + 1, block_dim) - ipow(2 * j - 1, block_dim);
  return {beta2 / 2, ipow(m, block_dim) - ipow(m - 1, block_dim)};
}

CycloNum lw_term(const std::vector<CodeVector>& boundary, int block_index, int j,
                 const BlockStructure& b) {
  const int m = b.modulus();
  if (j < 1 || j > m / 2) throw std::invalid_argument("lw_term: level out of range");
  const int s = b.block_count();
  const int width = b.dim(block_index);
  const bool top_level = (m % 2 == 0 && j == m / 2);

  CycloNum total = CycloNum::zero(m);
  for (const CodeVector& u : boundary) {
    const auto block = b.block(u, block_index);
    if (lee_block_weight(block, m) == 0)
      throw std::invalid_argument("lw_term: boundary word has zero block");
    for (int k = block_index + 1; k <= s; ++k)
      for (int e : b.block(u, k))
        if (e != 0) throw std::invalid_argument("lw_term: boundary word has nonzero tail");

    for (int a = 0; a < width; ++a) {
      CycloNum term = top_level
                          ? CycloNum::from_rational(m, block[a] % 2 ? -1 : 1)
                          : exact_cosine(block[a] * j, m);
      for (int i = 0; i < a; ++i) term *= kernel_sum(block[i], j - 1, m);
      for (int i = a + 1; i < width; ++i) {
        if (top_level) {
          CycloNum factor = kernel_sum(block[i], m / 2 - 1, m);
          factor += CycloNum::from_rational(m, block[i] % 2 ? -1 : 1);
          term *= factor;
        } else {
          term *= kernel_sum(block[i], j, m);
        }
      }
      total += term;
    }
  }
  return total;
}

WeightEnumerator chain_dual_enumerator(const LinearCode& code, const Pomset& p) {
  require_standard_chain(code, p);
  const BlockStructure& b = code.structure();
  const int m = b.modulus();
  const int s = b.block_count();
  const int level_cap = m / 2;

  WeightEnumerator out(s * level_cap);
  out.add(0, 1);
  int tail_len = 0;
  for (int i = s; i >= 1; --i) {
    const ChainStratum stratum = chain_strata(code, i);
    const long long inner_size = stratum.inner.size();
    const BigInt tail_count = bigpow(m, tail_len);
    for (int j = 1; j <= level_cap; ++j) {
      const ChainCoefficients coeff = chain_coefficients(j, b.dim(i), m);
      const CycloNum lw = lw_term(stratum.boundary, i, j, b);
      CycloNum sum = CycloNum::zero(m);
      BigRational factor;
      if (m % 2 == 0 && j == m / 2) {
        sum = lw + CycloNum::from_rational(m, BigRational(coeff.gamma) * inner_size);
        factor = BigRational(tail_count, code.size());
      } else {
        sum = lw + CycloNum::from_rational(m, BigRational(coeff.beta) * inner_size);
        factor = BigRational(2 * tail_count, code.size());
      }
      out.add((s - i) * level_cap + j, integer_coefficient(sum, factor));
    }
    tail_len += b.dim(i);
  }
  return out;
}

int classify_block_dim2(int t, int j, int m) {
  if (!is_odd_prime(m))
    throw std::invalid_argument("classify_block_dim2: modulus must be an odd prime");
  if (j < 1 || j > m / 2)
    throw std::invalid_argument("classify_block_dim2: level out of range");
  t = ((t % m) + m) % m;
  // Solutions of the two exponent congruences from the scalar-orbit sum; each
  // window is shorter than m, so each congruence has at most one solution.
  int hits = 0;
  for (int a = -j; a <= j; ++a) {
    if (((a * t + j) % m + m) % m == 0) {
      ++hits;
      break;
    }
  }
  const int k0 = ((j * (1 - t)) % m + m) % m;
  if (1 <= k0 && k0 <= 2 * j - 1) ++hits;
  if (hits == 2) return 1;
  if (hits == 0) return 2;
  return 3;
}

CycloNum dim2_orbit_sum(int first, int second, int j, int m) {
  if (!is_odd_prime(m))
    throw std::invalid_argument("dim2_orbit_sum: modulus must be an odd prime");
  if (j < 1 || j > m / 2) throw std::invalid_argument("dim2_orbit_sum: level out of range");
  CycloNum total = CycloNum::zero(m);
  for (int r = 1; r < m; ++r) {
    const int c1 = (first * r % m + m) % m;
    const int c2 = (second * r % m + m) % m;
    total += exact_cosine(c1 * j, m) * kernel_sum(c2, j, m);
    total += exact_cosine(c2 * j, m) * kernel_sum(c1, j - 1, m);
  }
  return total;
}

std::array<std::vector<CodeVector>, 3> dim2_class_sets(const LinearCode& code, int i, int j) {
  const BlockStructure& b = code.structure();
  const int m = b.modulus();
  if (b.dim(i) != 2) throw std::invalid_argument("dim2_class_sets: block width must be 2");
  std::array<std::vector<CodeVector>, 3> sets;
  for (const CodeVector& u : chain_strata(code, i).boundary) {
    const auto block = b.block(u, i);
    if (block[0] == 1) {
      sets[static_cast<std::size_t>(classify_block_dim2(block[1], j, m) - 1)].push_back(u);
    } else if (block[0] == 0 && block[1] == 1) {
      sets[2].push_back(u);
    }
  }
  return sets;
}

WeightEnumerator field_dim2_dual_enumerator(const LinearCode& code, const Pomset& p) {
  require_standard_chain(code, p);
  const BlockStructure& b = code.structure();
  const int m = b.modulus();
  const int s = b.block_count();
  if (!is_odd_prime(m))
    throw std::invalid_argument("field_dim2_dual_enumerator: modulus must be an odd prime");
  for (int i = 1; i <= s; ++i)
    if (b.dim(i) != 2)
      throw std::invalid_argument("field_dim2_dual_enumerator: every block width must be 2");

  const int level_cap = m / 2;
  WeightEnumerator out(s * level_cap);
  out.add(0, 1);
  for (int i = 1; i <= s; ++i) {
    const long long inner_size = chain_strata(code, i).inner.size();
    for (int j = 1; j <= level_cap; ++j) {
      const auto sets = dim2_class_sets(code, i, j);
      BigRational value = BigRational(4 * j) * inner_size;
      value += BigRational(2 * m - 4 * j) * static_cast<long long>(sets[0].size());
      value -= BigRational(4 * j) * static_cast<long long>(sets[1].size());
      value += BigRational(m - 4 * j) * static_cast<long long>(sets[2].size());
      value *= BigRational(2 * bigpow(m, 2 * (s - i)), code.size());
      if (denominator(value) != 1)
        throw std::logic_error("field_dim2_dual_enumerator: non-integral coefficient");
      out.add((s - i) * level_cap + j, to_longlong(numerator(value)));
    }
  }
  return out;
}

WeightEnumerator pomset_metric_dual_enumerator(const LinearCode& code, const Pomset& p) {
  require_standard_chain(code, p);
  const BlockStructure& b = code.structure();
  const int m = b.modulus();
  const int s = b.block_count();
  for (int i = 1; i <= s; ++i)
    if (b.dim(i) != 1)
      throw std::invalid_argument("pomset_metric_dual_enumerator: every block width must be 1");

  const int level_cap = m / 2;
  WeightEnumerator out(s * level_cap);
  out.add(0, 1);
  for (int i = 1; i <= s; ++i) {
    const ChainStratum stratum = chain_strata(code, i);
    const int coord = b.offset(i);
    const BigInt tail_count = bigpow(m, s - i);
    if (m % 2 == 1) {
      // Boundary words grouped by the Lee weight of the live coordinate.
      std::vector<long long> by_lee(static_cast<std::size_t>(level_cap) + 1, 0);
      for (const CodeVector& u : stratum.boundary) ++by_lee[lee_weight(u[coord], m)];
      for (int j = 1; j <= level_cap; ++j) {
        CycloNum sum = CycloNum::from_rational(m, stratum.inner.size());
        for (int l = 1; l <= level_cap; ++l)
          sum += exact_cosine(l * j, m).scaled(by_lee[l]);
        out.add((s - i) * level_cap + j,
                integer_coefficient(sum, BigRational(2 * tail_count, code.size())));
      }
    } else {
      for (int j = 1; j < level_cap; ++j) {
        CycloNum sum = CycloNum::from_rational(m, 2 * stratum.inner.size());
        for (const CodeVector& u : stratum.boundary)
          sum += exact_cosine(u[coord] * j, m).scaled(2);
        out.add((s - i) * level_cap + j,
                integer_coefficient(sum, BigRational(tail_count, code.size())));
      }
      CycloNum top = CycloNum::from_rational(m, stratum.inner.size());
      for (const CodeVector& u : stratum.boundary)
        top += CycloNum::from_rational(m, u[coord] % 2 ? -1 : 1);
      out.add((s - i) * level_cap + level_cap,
              integer_coefficient(top, BigRational(tail_count, code.size())));
    }
  }
  return out;
}

WeightEnumerator sum_dual_enumerator(const std::vector<SumPart>& parts, SumMode mode, int m) {
  if (parts.size() < 2)
    throw std::invalid_argument("sum_dual_enumerator: need at least two parts");
  if (m < 2) throw std::invalid_argument("sum_dual_enumerator: modulus must be at least 2");
  const int level_cap = m / 2;
  for (const SumPart& part : parts) {
    if (part.dual_enumerator.degree() != part.point_count * level_cap)
      throw std::invalid_argument("sum_dual_enumerator: part degree mismatch");
    if (part.code_size < 1 || part.length < 1 || part.point_count < 1)
      throw std::invalid_argument("sum_dual_enumerator: bad part parameters");
  }

  if (mode == SumMode::direct) {
    WeightEnumerator out = parts.front().dual_enumerator;
    for (std::size_t k = 1; k < parts.size(); ++k) out = out * parts[k].dual_enumerator;
    return out;
  }

  // Ordinal: fold the two-part identity right-associatively.
  SumPart acc = parts.back();
  for (std::size_t k = parts.size() - 1; k-- > 0;) {
    const SumPart& head = parts[k];
    const BigInt numer = bigpow(m, acc.length);
    if (numer % acc.code_size != 0)
      throw std::logic_error("sum_dual_enumerator: tail code size does not divide the space");
    const long long scale = to_longlong(numer / acc.code_size);

    WeightEnumerator deleted_origin = head.dual_enumerator;
    deleted_origin.add(0, -1);
    WeightEnumerator combined =
        acc.dual_enumerator.padded(head.point_count * level_cap) +
        deleted_origin.shifted(acc.point_count * level_cap).scaled(scale);
    acc = SumPart{std::move(combined), head.code_size * acc.code_size,
                  head.length + acc.length, head.point_count + acc.point_count};
  }
  return acc.dual_enumerator;
}

WeightEnumerator fourier_dual_enumerator(const LinearCode& code, const Pomset& p,
                                         long long budget) {
  const BlockStructure& b = code.structure();
  if (p.modulus() != b.modulus() || p.point_count() != b.block_count())
    throw std::invalid_argument("pomset/block structure mismatch");
  const int m = b.modulus();
  space_size_checked(m, b.length(), budget);

  const Pomset reversed = p.dual();
  const int degree = p.point_count() * p.uniform_count();
  // count[w][e]: vectors of reversed-pomset weight w whose dot product with a
  // codeword lands on residue e, over all (codeword, vector) pairs.
  std::vector<std::vector<long long>> count(static_cast<std::size_t>(degree) + 1,
                                            std::vector<long long>(static_cast<std::size_t>(m), 0));
  for_each_vector(m, b.length(), [&](const CodeVector& v) {
    const int w = pomset_block_weight(v, reversed, b);
    auto& row = count[static_cast<std::size_t>(w)];
    for (const CodeVector& u : code.words()) {
      long long dot = 0;
      for (std::size_t k = 0; k < v.size(); ++k) dot += static_cast<long long>(u[k]) * v[k];
      ++row[static_cast<std::size_t>(dot % m)];
    }
  });

  std::vector<CycloNum> roots;
  roots.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) roots.push_back(cyclo(m, e));

  WeightEnumerator out(degree);
  const BigRational factor(1, code.size());
  for (int w = 0; w <= degree; ++w) {
    CycloNum sum = CycloNum::zero(m);
    for (int e = 0; e < m; ++e) {
      if (count[w][e] == 0) continue;
      sum += roots[static_cast<std::size_t>(e)].scaled(count[w][e]);
    }
    out.add(w, integer_coefficient(sum, factor));
  }
  return out;
}

IdentityReport make_identity_report(std::string code_summary, std::string method,
                                    WeightEnumerator identity, WeightEnumerator brute) {
  const int diff = first_difference(identity, brute);
  return {std::move(code_summary), std::move(method), std::move(identity), std::move(brute),
          diff < 0, diff};
}

ProbeReport macwilliams_probe(const Pomset& p, const BlockStructure& b, int trials,
                              std::uint64_t seed, long long budget) {
  if (p.modulus() != b.modulus() || p.point_count() != b.block_count())
    throw std::invalid_argument("pomset/block structure mismatch");
  if (trials < 0) throw std::invalid_argument("macwilliams_probe: negative trial count");
  const int m = b.modulus();
  const int n = b.length();
  space_size_checked(m, n, budget);

  const Pomset reversed = p.dual();
  std::mt19937_64 rng(seed);
  ProbeReport report;

  struct Entry {
    std::vector<CodeVector> words;
    std::vector<long long> dual_coeffs;
  };
  std::map<std::vector<long long>, std::vector<Entry>> groups;
  std::set<std::vector<CodeVector>> seen;

  for (int t = 0; t < trials; ++t) {
    ++report.trials;
    const int gen_count = 1 + static_cast<int>(rng() % 2);
    std::vector<CodeVector> gens;
    for (int g = 0; g < gen_count; ++g) {
      CodeVector v(static_cast<std::size_t>(n));
      for (auto& e : v) e = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
      gens.push_back(std::move(v));
    }
    const LinearCode code = LinearCode::span(b, gens);
    if (!seen.insert(code.words()).second) continue;
    ++report.distinct_codes;

    const std::vector<long long> enum_coeffs = weight_enumerator(code, p).coeffs();
    const std::vector<long long> dual_coeffs =
        weight_enumerator(code.dual(budget), reversed).coeffs();
    for (const Entry& other : groups[enum_coeffs]) {
      ++report.pairs_compared;
      if (other.dual_coeffs != dual_coeffs) {
        ProbeWitness witness;
        witness.code_a = other.words;
        witness.code_b = code.words();
        witness.shared_enumerator = enum_coeffs;
        witness.dual_enumerator_a = other.dual_coeffs;
        witness.dual_enumerator_b = dual_coeffs;
        witness.first_difference = 0;
        while (other.dual_coeffs[static_cast<std::size_t>(witness.first_difference)] ==
               dual_coeffs[static_cast<std::size_t>(witness.first_difference)])
          ++witness.first_difference;
        report.witness = std::move(witness);
        return report;
      }
    }
    groups[enum_coeffs].push_back({code.words(), dual_coeffs});
  }
  return report;
}

}  // namespace pomsetcodes
