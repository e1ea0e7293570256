#include "pomsetcodes/linear_code.hpp"

#include <algorithm>
#include <set>

namespace pomsetcodes {

namespace {

CodeVector add_mod(const CodeVector& a, const CodeVector& b, int m) {
  CodeVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = (a[k] + b[k]) % m;
  return out;
}

bool orthogonal(const CodeVector& a, const CodeVector& b, int m) {
  long long dot = 0;
  for (std::size_t k = 0; k < a.size(); ++k) dot += static_cast<long long>(a[k]) * b[k];
  return dot % m == 0;
}

std::set<CodeVector> closure(const BlockStructure& structure,
                             const std::vector<CodeVector>& generators) {
  const int m = structure.modulus();
  std::set<CodeVector> words;
  words.insert(CodeVector(static_cast<std::size_t>(structure.length()), 0));
  std::vector<CodeVector> frontier(words.begin(), words.end());
  std::vector<CodeVector> gens;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != structure.length())
      throw std::invalid_argument("LinearCode: generator length mismatch");
    gens.push_back(canonical_vector(g, m));
  }
  while (!frontier.empty()) {
    std::vector<CodeVector> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        CodeVector sum = add_mod(w, g, m);
        if (words.insert(sum).second) next.push_back(std::move(sum));
      }
    }
    frontier = std::move(next);
  }
  return words;
}

}  // namespace

LinearCode::LinearCode(BlockStructure structure, std::vector<CodeVector> words, bool)
    : structure_(std::move(structure)), words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
}

LinearCode::LinearCode(BlockStructure structure, std::vector<CodeVector> words)
    : structure_(std::move(structure)) {
  const int m = structure_.modulus();
  std::set<CodeVector> set;
  for (auto& w : words) {
    if (static_cast<int>(w.size()) != structure_.length())
      throw std::invalid_argument("LinearCode: word length mismatch");
    set.insert(canonical_vector(std::move(w), m));
  }
  if (set.find(CodeVector(static_cast<std::size_t>(structure_.length()), 0)) == set.end())
    throw std::invalid_argument("LinearCode: zero vector missing");
  for (const auto& a : set) {
    for (const auto& b : set)
      if (set.find(add_mod(a, b, m)) == set.end())
        throw std::invalid_argument("LinearCode: word set is not closed under addition");
  }
  words_.assign(set.begin(), set.end());
}

LinearCode LinearCode::span(const BlockStructure& structure,
                            const std::vector<CodeVector>& generators) {
  std::set<CodeVector> words = closure(structure, generators);
  return LinearCode(structure, std::vector<CodeVector>(words.begin(), words.end()), true);
}

LinearCode LinearCode::zero(const BlockStructure& structure) {
  return span(structure, {});
}

bool LinearCode::contains(const CodeVector& u) const {
  return std::binary_search(words_.begin(), words_.end(), u);
}

std::vector<CodeVector> LinearCode::minimal_generators() const {
  std::vector<CodeVector> gens;
  std::set<CodeVector> spanned = closure(structure_, {});
  for (const auto& w : words_) {
    if (spanned.size() == words_.size()) break;
    if (spanned.find(w) != spanned.end()) continue;
    gens.push_back(w);
    spanned = closure(structure_, gens);
  }
  return gens;
}

long long space_size_checked(int m, int n, long long budget) {
  long long size = 1;
  for (int k = 0; k < n; ++k) {
    size *= m;
    if (size > budget)
      throw BudgetExceeded("enumeration budget exceeded: |Z_" + std::to_string(m) +
                           "^" + std::to_string(n) + "| > " + std::to_string(budget));
  }
  return size;
}

LinearCode LinearCode::dual(long long budget) const {
  const int m = structure_.modulus();
  const int n = structure_.length();
  space_size_checked(m, n, budget);
  const std::vector<CodeVector> gens = minimal_generators();
  std::vector<CodeVector> words;
  for_each_vector(m, n, [&](const CodeVector& v) {
    for (const auto& g : gens)
      if (!orthogonal(g, v, m)) return;
    words.push_back(v);
  });
  return LinearCode(structure_, std::move(words), true);
}

WeightEnumerator weight_enumerator(const LinearCode& code, const Pomset& p) {
  const BlockStructure& b = code.structure();
  WeightEnumerator w(p.point_count() * p.uniform_count());
  for (const auto& u : code.words()) w.add(pomset_block_weight(u, p, b), 1);
  return w;
}

int min_distance(const LinearCode& code, const Pomset& p) {
  if (code.size() < 2)
    throw std::invalid_argument("min_distance: code must have at least two words");
  const BlockStructure& b = code.structure();
  int best = -1;
  for (const auto& u : code.words()) {
    const int w = pomset_block_weight(u, p, b);
    if (w == 0) continue;
    if (best < 0 || w < best) best = w;
  }
  return best;
}

ChainStratum chain_strata(const LinearCode& code, int i) {
  const BlockStructure& b = code.structure();
  const int s = b.block_count();
  if (i < 1 || i > s) throw std::invalid_argument("chain_strata: block index out of range");
  const auto zero_from = [&](const CodeVector& u, int first) {
    for (int k = first; k <= s; ++k)
      for (int e : b.block(u, k))
        if (e != 0) return false;
    return true;
  };
  std::vector<CodeVector> inner, boundary;
  for (const auto& u : code.words()) {
    if (!zero_from(u, i + 1)) continue;
    if (zero_from(u, i)) inner.push_back(u);
    else boundary.push_back(u);
  }
  return {LinearCode(b, std::move(inner)), std::move(boundary)};
}

}  // namespace pomsetcodes
