#pragma once

#include <stdexcept>
#include <vector>

#include "pomsetcodes/block_structure.hpp"
#include "pomsetcodes/weight_enumerator.hpp"

namespace pomsetcodes {

inline constexpr long long kDefaultEnumerationBudget = 10'000'000;

// Thrown when an exhaustive scan would have to visit more than the configured
// number of vectors.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Linear code over Z_m stored as its explicit, sorted codeword set.
class LinearCode {
 public:
  // Validates that the given words form a submodule (zero vector included,
  // closed under addition and scalar multiplication).
  LinearCode(BlockStructure structure, std::vector<CodeVector> words);

  static LinearCode span(const BlockStructure& structure,
                         const std::vector<CodeVector>& generators);
  static LinearCode zero(const BlockStructure& structure);

  const BlockStructure& structure() const { return structure_; }
  const std::vector<CodeVector>& words() const { return words_; }
  long long size() const { return static_cast<long long>(words_.size()); }
  bool contains(const CodeVector& u) const;

  // A small generating set, extracted greedily.
  std::vector<CodeVector> minimal_generators() const;

  // Dual code by exhaustive orthogonality scan over Z_m^n.
  LinearCode dual(long long budget = kDefaultEnumerationBudget) const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  LinearCode(BlockStructure structure, std::vector<CodeVector> words, bool trusted);

  BlockStructure structure_;
  std::vector<CodeVector> words_;
};

// Number of vectors in Z_m^n; throws BudgetExceeded when that exceeds budget.
long long space_size_checked(int m, int n, long long budget);

// Visits every vector of Z_m^n in lexicographic order.
template <typename Fn>
void for_each_vector(int m, int n, Fn&& fn) {
  CodeVector u(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(const_cast<const CodeVector&>(u));
    int k = n - 1;
    while (k >= 0 && u[k] == m - 1) u[k--] = 0;
    if (k < 0) return;
    ++u[k];
  }
}

WeightEnumerator weight_enumerator(const LinearCode& code, const Pomset& p);
int min_distance(const LinearCode& code, const Pomset& p);

// The two chain strata at block i: `inner` holds the words whose blocks
// i..s are all zero; `boundary` holds the words with block i nonzero and
// blocks i+1..s zero.
struct ChainStratum {
  LinearCode inner;
  std::vector<CodeVector> boundary;
};
ChainStratum chain_strata(const LinearCode& code, int i);

}  // namespace pomsetcodes
