#pragma once

#include <span>
#include <string>
#include <vector>

#include "pomsetcodes/mset.hpp"
#include "pomsetcodes/pomset.hpp"

namespace pomsetcodes {

// A codeword of Z_m^n with entries stored canonically in [0, m-1].
using CodeVector = std::vector<int>;

// Partition of the n coordinates of Z_m^n into s blocks of widths dims[i].
class BlockStructure {
 public:
  BlockStructure(int m, std::vector<int> dims);

  int modulus() const { return m_; }
  int block_count() const { return static_cast<int>(dims_.size()); }
  int length() const { return n_; }
  int dim(int i) const;     // 1-indexed block width
  int offset(int i) const;  // start of block i in the flat vector

  std::span<const int> block(const CodeVector& u, int i) const;

  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;

 private:
  int m_;
  std::vector<int> dims_;
  std::vector<int> offsets_;
  int n_;
};

// Lee weight min(a, m-a) of a canonical residue.
int lee_weight(int a, int m);

// Reduces arbitrary integer entries into canonical residues.
CodeVector canonical_vector(std::vector<int> entries, int m);

// Max Lee weight over the entries of one block.
int lee_block_weight(std::span<const int> block, int m);

// Mset over the block indices recording, per nonzero block, its max Lee
// weight; zero blocks are omitted.
Mset lee_block_support(const CodeVector& u, const BlockStructure& b);

int pomset_block_weight(const CodeVector& u, const Pomset& p, const BlockStructure& b);
int pomset_block_distance(const CodeVector& u, const CodeVector& v, const Pomset& p,
                          const BlockStructure& b);

// Concatenated digits when every entry is a single digit ("112"), else
// comma-separated.
std::string format_vector(const CodeVector& u);

}  // namespace pomsetcodes
