#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pomsetcodes/cyclotomic.hpp"
#include "pomsetcodes/linear_code.hpp"

namespace pomsetcodes {

// Closed-form stratum coefficients of the chain identity:
//   beta  = ((2j+1)^k - (2j-1)^k) / 2
//   gamma = m^k - (m-1)^k
// for a block of width k.
struct ChainCoefficients {
  long long beta;
  long long gamma;
};
ChainCoefficients chain_coefficients(int j, int block_dim, int m);

// Exact character-sum weight of one chain stratum boundary at level j. The
// generic branch applies for 1 <= j <= floor((m-1)/2); the even-modulus top
// level j = m/2 uses the alternating-sign branch.
CycloNum lw_term(const std::vector<CodeVector>& boundary, int block_index, int j,
                 const BlockStructure& b);

// Dual weight enumerator (under the reversed chain) computed from the code
// alone via the chain identity. Requires the ascending chain pomset.
WeightEnumerator chain_dual_enumerator(const LinearCode& code, const Pomset& p);

// Classification of a width-2 block of normalized form (1, t) over a prime
// field at level j. Class 1/2/3 correspond to scalar-orbit sums 2m-4j, -4j
// and m-4j.
int classify_block_dim2(int t, int j, int m);

// Exact scalar-orbit sum sum_{r=1}^{m-1} Z_j(r*first, r*second), evaluated
// directly in Q(omega_m); the independent oracle for the classification.
CycloNum dim2_orbit_sum(int first, int second, int j, int m);

// The three classification sets at block i, level j: normalized-form words
// of the boundary stratum, grouped by class.
std::array<std::vector<CodeVector>, 3> dim2_class_sets(const LinearCode& code, int i, int j);

// Dual enumerator via the prime-field width-2 identity: stratum sizes and
// classification-set sizes weighted by 4j, 2m-4j, -4j and m-4j.
WeightEnumerator field_dim2_dual_enumerator(const LinearCode& code, const Pomset& p);

// Dual enumerator for the all-width-1 chain, transcribed from the plain
// pomset-metric identity; agrees with chain_dual_enumerator on width-1
// structures.
WeightEnumerator pomset_metric_dual_enumerator(const LinearCode& code, const Pomset& p);

// One component of a direct or ordinal sum: the component dual's enumerator
// under its reversed pomset plus the component code's parameters.
struct SumPart {
  WeightEnumerator dual_enumerator;
  long long code_size;
  int length;       // coordinates of the component space
  int point_count;  // points of the component pomset
};

// Dual enumerator of a component-wise code under the direct or ordinal sum
// of the component pomsets. Direct mode is the polynomial product; ordinal
// mode folds the two-part identity right-associatively.
WeightEnumerator sum_dual_enumerator(const std::vector<SumPart>& parts, SumMode mode, int m);

// Identity-independent oracle: the dual enumerator computed from the Fourier
// transform of the weight indicator, valid for any pomset.
WeightEnumerator fourier_dual_enumerator(const LinearCode& code, const Pomset& p,
                                         long long budget = kDefaultEnumerationBudget);

struct IdentityReport {
  std::string code_summary;
  std::string method;
  WeightEnumerator via_identity;
  WeightEnumerator via_brute_force;
  bool equal;
  int first_difference;  // -1 when equal
};
IdentityReport make_identity_report(std::string code_summary, std::string method,
                                    WeightEnumerator identity, WeightEnumerator brute);

struct ProbeWitness {
  std::vector<CodeVector> code_a;
  std::vector<CodeVector> code_b;
  std::vector<long long> shared_enumerator;
  std::vector<long long> dual_enumerator_a;
  std::vector<long long> dual_enumerator_b;
  int first_difference;
};

struct ProbeReport {
  int trials = 0;
  int distinct_codes = 0;
  long long pairs_compared = 0;
  std::optional<ProbeWitness> witness;
};

// Samples random linear codes, groups them by their weight enumerator under
// p, and searches the groups for a pair whose dual enumerators (under the
// reversed pomset) differ. A witness refutes a MacWilliams-type identity for
// p; finding none proves nothing. Deterministic for a fixed seed.
ProbeReport macwilliams_probe(const Pomset& p, const BlockStructure& b, int trials,
                              std::uint64_t seed,
                              long long budget = kDefaultEnumerationBudget);

}  // namespace pomsetcodes
